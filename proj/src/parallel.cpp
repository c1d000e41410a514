#include "sandwich/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace sandwich {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  int n = std::max(1, std::min(hw, 8));
  if (const char* env = std::getenv("SANDWICH_WORKERS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) n = v;
    } catch (const std::exception&) {
    }
  }
  return n;
}

}  // namespace sandwich
