#pragma once

#include <stdexcept>
#include <string>

namespace sandwich {

enum class ErrorKind {
  InvalidInput,
  InvalidMonodromy,
  DisconnectedCover,
  GroupMismatch,
  NotApplicable,
  Capability,
  InternalConsistency,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

// exit-code contract of the command line front end
inline int exit_code_for(ErrorKind k) {
  return k == ErrorKind::InternalConsistency ? 2 : 1;
}

}  // namespace sandwich
