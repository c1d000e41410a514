#include "sandwich/classifier.hpp"

#include "sandwich/atlas.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace sandwich {

bool LinearForm::operator<(const LinearForm& o) const {
  if (slope != o.slope) return slope < o.slope;
  return intercept < o.intercept;
}

namespace {

std::string rat_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace

std::string format_linear(const LinearForm& f, long long shift, const std::string& var) {
  // in terms of var = p_g + shift
  Rational c = f.intercept - f.slope * shift;
  std::string s;
  if (f.slope == Rational(0)) return rat_str(c);
  if (f.slope == Rational(1)) s = var;
  else if (f.slope == Rational(-1)) s = "-" + var;
  else if (f.slope.denominator() == 1) s = rat_str(f.slope) + var;
  else s = "(" + rat_str(f.slope) + ")" + var;
  if (c > 0) s += "+" + rat_str(c);
  else if (c < 0) s += rat_str(c);
  return s;
}

namespace {

struct Constraint {
  int char_index;
  long long limit;  // in units of 1/E
};

std::vector<int> killed_characters(const EigenProfile& v1, int chi0) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(v1.dims.size()); ++i)
    if (v1.dims[i] > 0 && i != chi0) out.push_back(i);
  return out;
}

using PairKey = std::pair<BranchKey, BranchKey>;

PairKey canonical_pair_key(const CoverData& F, const CoverData& D) {
  const Group& g = F.group;
  PairKey best;
  bool first = true;
  for (const auto& phi : automorphisms(g)) {
    PairKey k{branch_key(g, F.branch, phi), branch_key(g, D.branch, phi)};
    if (first || k < best) {
      best = std::move(k);
      first = false;
    }
  }
  return best;
}

}  // namespace

std::vector<Solution> solutions_for(const CoverData& F, int b, int pg) {
  const Group& g = F.group;
  const int E = g.exponent();
  const auto elems = g.nonzero_elements();
  const int ne = static_cast<int>(elems.size());
  const EigenProfile v1 = eigen_profile(F);
  std::vector<Solution> out;
  if (b < 0 || b > 1 || pg < 2) return out;

  for (int chi0 = 1; chi0 < g.order(); ++chi0) {
    if (v1.dims[chi0] != 1) continue;
    auto killed = killed_characters(v1, chi0);
    if (b > 0 && !killed.empty() && killed.front() == 0) continue;

    std::vector<Constraint> cons;
    for (int k : killed)
      if (k != 0) cons.push_back({k, b == 0 ? static_cast<long long>(E) : 0LL});
    const long long target = static_cast<long long>(b == 0 ? pg + 1 : pg) * E;
    cons.push_back({chi0, target});

    std::vector<std::vector<long long>> w(cons.size(), std::vector<long long>(ne));
    for (std::size_t c = 0; c < cons.size(); ++c)
      for (int i = 0; i < ne; ++i)
        w[c][i] = static_cast<long long>(g.restriction_exponent(g.element(cons[c].char_index), elems[i])) *
                  (E / g.element_order(elems[i]));
    for (int i = 0; i < ne; ++i) {
      bool pos = false;
      for (std::size_t c = 0; c < cons.size(); ++c) pos |= w[c][i] > 0;
      if (!pos) fail(ErrorKind::Capability, "F-action is not faithful on 1-forms; D search unbounded");
    }

    std::vector<long long> acc(cons.size(), 0);
    std::vector<int> mult(ne, 0);
    auto leaf = [&]() {
      if (acc.back() != target) return;
      std::vector<BranchEntry> br;
      Elem sum = g.zero();
      int points = 0;
      for (int i = 0; i < ne; ++i)
        if (mult[i]) {
          br.push_back({elems[i], mult[i]});
          sum = g.add(sum, g.scale(mult[i], elems[i]));
          points += mult[i];
        }
      if (g.index(sum) != 0) return;
      std::vector<Elem> be;
      for (const auto& e : br) be.push_back(e.elem);
      std::vector<Elem> twist;
      if (b == 0) {
        if (points < 2 || !g.generates(be)) return;
      } else {
        auto tw = canonical_twist(g, be, b);
        if (!tw) return;
        twist = *tw;
      }
      CoverData D = make_cover(g, b, br, twist);
      if (genus(D) < 2) return;
      SandwichSurface s = make_sandwich(F, D);
      auto chi = canonical_character(s);
      if (!chi || g.index(*chi) != chi0 || geometric_genus(s) != pg)
        fail(ErrorKind::InternalConsistency, "degree constraints admitted a non-canonical sandwich");
      Solution sol{F, std::move(D), *chi, invariants(s)};
      out.push_back(std::move(sol));
    };
    auto rec = [&](auto&& self, int i) -> void {
      if (i == ne) {
        leaf();
        return;
      }
      int m = 0;
      for (;;) {
        mult[i] = m;
        self(self, i + 1);
        ++m;
        bool over = false;
        for (std::size_t c = 0; c < cons.size(); ++c) {
          acc[c] += w[c][i];
          over |= acc[c] > cons[c].limit;
        }
        if (over) break;
      }
      for (std::size_t c = 0; c < cons.size(); ++c) acc[c] -= w[c][i] * m;
      mult[i] = 0;
    };
    rec(rec, 0);
  }
  return out;
}

std::vector<Solution> search_solutions(const ClassifyRequest& req) {
  if (req.genus_f < 2 || req.genus_f > 5) fail(ErrorKind::InvalidInput, "genus of F must be in 2..5");
  if (req.pg_lo > req.pg_hi) fail(ErrorKind::InvalidInput, "empty p_g range");
  if (req.pg_lo < 2) fail(ErrorKind::InvalidInput, "the canonical criterion needs p_g >= 2");
  if (req.base_a && (*req.base_a < 0 || *req.base_a > req.genus_f))
    fail(ErrorKind::InvalidInput, "base genus a out of range");
  if (req.base_b && *req.base_b < 0) fail(ErrorKind::InvalidInput, "base genus b out of range");

  std::vector<Group> groups = req.groups;
  if (groups.empty()) groups = abelian_groups_up_to(4 * req.genus_f + 4);
  for (const auto& grp : groups)
    if (grp.trivial()) fail(ErrorKind::InvalidInput, "the trivial group has no canonical pencils");

  std::vector<int> as, bs;
  if (req.base_a) as.push_back(*req.base_a);
  else
    for (int a = 0; a <= req.genus_f; ++a) as.push_back(a);
  // a base of genus >= 2 never carries the pencil
  if (req.base_b) {
    if (*req.base_b <= 1) bs.push_back(*req.base_b);
  } else {
    bs = {0, 1};
  }

  std::vector<CoverData> Fs;
  for (int a : as)
    for (auto& c : all_actions(req.genus_f, a, groups, req.workers)) Fs.push_back(std::move(c));

  struct Cell {
    std::size_t f;
    int b;
    int pg;
  };
  std::vector<Cell> cells;
  for (std::size_t f = 0; f < Fs.size(); ++f)
    for (int b : bs)
      for (int pg = req.pg_lo; pg <= req.pg_hi; ++pg) cells.push_back({f, b, pg});

  auto parts = parallel_map(cells.size(), [&](std::size_t i) {
    auto sols = solutions_for(Fs[cells[i].f], cells[i].b, cells[i].pg);
    std::map<PairKey, Solution> uniq;
    for (auto& s : sols) {
      auto key = canonical_pair_key(s.F, s.D);
      uniq.emplace(std::move(key), std::move(s));
    }
    std::vector<std::pair<PairKey, Solution>> v(uniq.begin(), uniq.end());
    return v;
  }, req.workers);

  std::vector<std::pair<PairKey, Solution>> all;
  for (auto& p : parts)
    for (auto& s : p) all.push_back(std::move(s));
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    const auto& sx = x.second;
    const auto& sy = y.second;
    return std::make_tuple(sx.F.group, sx.F.base_genus, sx.D.base_genus, sx.report.p_g, std::cref(x.first)) <
           std::make_tuple(sy.F.group, sy.F.base_genus, sy.D.base_genus, sy.report.p_g, std::cref(y.first));
  });
  std::vector<Solution> out;
  for (auto& p : all) out.push_back(std::move(p.second));
  return out;
}

FitResult fit_linear(const std::vector<std::pair<long long, long long>>& pts) {
  FitResult r;
  std::set<long long> xs;
  for (const auto& p : pts) xs.insert(p.first);
  if (xs.size() < 3 || xs.size() != pts.size()) return r;
  const auto& p0 = pts.front();
  const auto& p1 = pts[1];
  Rational slope(p1.second - p0.second, p1.first - p0.first);
  Rational icpt = Rational(p0.second) - slope * p0.first;
  for (const auto& p : pts)
    if (slope * p.first + icpt != Rational(p.second)) return r;
  r.ok = true;
  r.form = {slope, icpt};
  return r;
}

namespace {

struct ShapeKey {
  std::vector<int> group;
  int a, b;
  BranchKey f;
  int chi0;
  BranchKey d;
  bool operator<(const ShapeKey& o) const {
    return std::tie(group, a, b, f, chi0, d) < std::tie(o.group, o.a, o.b, o.f, o.chi0, o.d);
  }
};

ShapeKey shape_key(const Solution& s) {
  const Group& g = s.F.group;
  const EigenProfile v1 = eigen_profile(s.F);
  const int chi0 = g.index(s.chi0);
  auto killed = killed_characters(v1, chi0);
  // elements invisible to every killed character
  auto in_k0 = [&](const Elem& h) {
    for (int k : killed)
      if (k != 0 && g.restriction_exponent(g.element(k), h) != 0) return false;
    return true;
  };
  int grow = -1, best = 0, ties = 0;
  for (int i = 0; i < static_cast<int>(s.D.branch.size()); ++i) {
    const auto& e = s.D.branch[i];
    if (!in_k0(e.elem)) continue;
    if (e.mult > best) {
      best = e.mult;
      grow = i;
      ties = 1;
    } else if (e.mult == best) {
      ++ties;
    }
  }
  if (ties > 1) grow = -1;
  std::vector<BranchEntry> masked = s.D.branch;
  if (grow >= 0) masked[grow].mult = -1;

  ShapeKey best_key;
  bool first = true;
  for (const auto& phi : automorphisms(g)) {
    ShapeKey k{g.factors(), s.F.base_genus, s.D.base_genus, branch_key(g, s.F.branch, phi),
               g.index(dual_apply(g, phi, s.chi0)), branch_key(g, masked, phi)};
    if (first || k < best_key) {
      best_key = std::move(k);
      first = false;
    }
  }
  return best_key;
}

FamilyPoint point_of(const Solution& s) {
  const auto& r = s.report;
  return {static_cast<int>(r.p_g), r.g_D, r.K2, r.t_z, r.chi, r.euler_e, r.sing};
}

std::vector<std::pair<int, int>> sing_types_of(const std::vector<Solution>& members) {
  std::set<std::pair<int, int>> t;
  for (const auto& m : members)
    for (const auto& r : m.report.sing) t.insert({r.n, r.q});
  return {t.begin(), t.end()};
}

using RowKey = std::tuple<std::vector<int>, int, int, int, bool, std::vector<LinearForm>,
                          std::vector<std::tuple<int, int, long long, long long>>, std::vector<std::pair<int, int>>>;

}  // namespace

std::vector<FamilyRow> fit_families(const std::vector<Solution>& sols, int pg_hi) {
  std::map<ShapeKey, std::vector<const Solution*>> shapes;
  for (const auto& s : sols) shapes[shape_key(s)].push_back(&s);

  std::map<RowKey, FamilyRow> rows;
  for (auto& [key, members] : shapes) {
    std::sort(members.begin(), members.end(),
              [](const Solution* x, const Solution* y) { return x->report.p_g < y->report.p_g; });
    std::vector<std::pair<long long, long long>> gd, k2, tz;
    for (const auto* m : members) {
      gd.emplace_back(m->report.p_g, m->report.g_D);
      k2.emplace_back(m->report.p_g, m->report.K2);
      tz.emplace_back(m->report.p_g, m->report.t_z);
    }
    auto fg = fit_linear(gd), fk = fit_linear(k2), ft = fit_linear(tz);
    const bool fitted = fg.ok && fk.ok && ft.ok;
    std::vector<Solution> ms;
    for (const auto* m : members) ms.push_back(*m);
    const Solution& first = *members.front();

    RowKey rk{first.F.group.factors(), first.F.base_genus, first.D.base_genus, first.report.g_F, fitted, {}, {}, sing_types_of(ms)};
    if (fitted) {
      std::get<5>(rk) = {fg.form, fk.form, ft.form};
    } else {
      for (const auto* m : members)
        std::get<6>(rk).emplace_back(static_cast<int>(m->report.p_g), m->report.g_D, m->report.K2, m->report.t_z);
    }
    auto it = rows.find(rk);
    if (it == rows.end()) {
      FamilyRow row;
      row.group = first.F.group;
      row.a = first.F.base_genus;
      row.b = first.D.base_genus;
      row.g_F = first.report.g_F;
      row.fitted = fitted;
      if (fitted) {
        row.g_D = fg.form;
        row.K2 = fk.form;
        row.t_z = ft.form;
      }
      row.sing_types = std::get<7>(rk);
      it = rows.emplace(rk, std::move(row)).first;
    }
    FamilyRow& row = it->second;
    for (const auto* m : members) {
      bool have = false;
      for (const auto& p : row.points) have |= p.p_g == m->report.p_g;
      if (!have) row.points.push_back(point_of(*m));
      row.reaches_top |= m->report.p_g == pg_hi;
    }
    std::sort(row.points.begin(), row.points.end(),
              [](const FamilyPoint& x, const FamilyPoint& y) { return x.p_g < y.p_g; });
    row.realizations.push_back({first.F, first.chi0, std::move(ms)});
  }

  std::vector<FamilyRow> out;
  for (auto& [k, r] : rows) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(), [](const FamilyRow& x, const FamilyRow& y) {
    if (!(x.group == y.group)) return x.group < y.group;
    if (x.g_F != y.g_F) return x.g_F < y.g_F;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.fitted != y.fitted) return x.fitted;
    if (x.fitted) {
      if (!(x.g_D == y.g_D)) return y.g_D < x.g_D;
      if (!(x.K2 == y.K2)) return y.K2 < x.K2;
      return x.t_z < y.t_z;
    }
    auto key = [](const FamilyRow& r) {
      std::vector<std::tuple<int, int, long long, long long>> v;
      for (const auto& p : r.points) v.emplace_back(p.p_g, p.g_D, p.K2, p.t_z);
      return v;
    };
    return key(x) < key(y);
  });
  return out;
}

std::vector<FamilyRow> classify(const ClassifyRequest& req) {
  return fit_families(search_solutions(req), req.pg_hi);
}

namespace {

std::string form_m(const AffineForm& f) { return format_form(f, "m"); }

// engine form rewritten in the table's m, where m = p_g + shift
AffineForm to_table_param(const LinearForm& f, long long shift, bool& integral) {
  Rational c = f.intercept - f.slope * shift;
  integral = f.slope.denominator() == 1 && c.denominator() == 1;
  return {f.slope.numerator() / f.slope.denominator(), c.numerator() / c.denominator()};
}

std::string delta_str(const AffineForm& computed, const AffineForm& paper) {
  return format_form({computed.slope - paper.slope, computed.intercept - paper.intercept}, "m");
}

struct Candidate {
  long long shift = 0;
  std::vector<std::string> mismatched;
  std::vector<DiscrepancyReport> records;
};

Candidate evaluate(const ReferenceFamilyRow& ref, const FamilyRow& row, const std::string& table) {
  Candidate c;
  // anchor the parameter on g(D) when the slopes agree, else on p_g
  const LinearForm& gd = row.g_D;
  bool anchored = false;
  if (gd.slope.denominator() == 1 && gd.slope.numerator() == ref.g_D.slope && ref.g_D.slope != 0) {
    Rational s = (gd.intercept - Rational(ref.g_D.intercept)) / Rational(ref.g_D.slope);
    if (s.denominator() == 1) {
      c.shift = s.numerator();
      anchored = true;
    }
  }
  if (!anchored) c.shift = -ref.p_g.intercept;  // table p_g = m + k, so m = p_g - k

  auto check = [&](const std::string& field, const AffineForm& paper, const LinearForm& engine) {
    bool integral = true;
    AffineForm comp = to_table_param(engine, c.shift, integral);
    if (integral && comp == paper) return;
    c.mismatched.push_back(field);
    c.records.push_back({table, ref.row, field, form_m(paper),
                         integral ? form_m(comp) : format_linear(engine, c.shift, "m"),
                         integral ? delta_str(comp, paper) : "non-integral"});
  };
  check("p_g", ref.p_g, LinearForm{1, 0});
  check("g_D", ref.g_D, row.g_D);
  check("K2", ref.K2, row.K2);
  if (ref.t_z) check("t_z", *ref.t_z, row.t_z);
  return c;
}

bool in_scope(const ReferenceFamilyTable& t, const FamilyRow& r) {
  for (const auto& ref : t.rows)
    if (ref.group == r.group && ref.g_F == r.g_F && ref.a == r.a && ref.b == r.b) return true;
  return false;
}

}  // namespace

std::vector<RowMatch> match_reference_rows(const std::vector<FamilyRow>& rows, const ReferenceFamilyTable& table,
                                           std::vector<int>* extras) {
  struct Pair {
    std::size_t mism;
    int ref;
    int eng;
    Candidate cand;
  };
  std::vector<Pair> pairs;
  for (int ri = 0; ri < static_cast<int>(table.rows.size()); ++ri) {
    const auto& ref = table.rows[ri];
    for (int ei = 0; ei < static_cast<int>(rows.size()); ++ei) {
      const auto& r = rows[ei];
      if (!r.fitted || !(r.group == ref.group) || r.a != ref.a || r.b != ref.b || r.g_F != ref.g_F) continue;
      Candidate c = evaluate(ref, r, table.id);
      pairs.push_back({c.mismatched.size(), ri, ei, std::move(c)});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) {
    return std::tie(x.mism, x.ref, x.eng) < std::tie(y.mism, y.ref, y.eng);
  });
  std::vector<RowMatch> out(table.rows.size());
  std::vector<char> ref_used(table.rows.size(), 0), eng_used(rows.size(), 0);
  for (int ri = 0; ri < static_cast<int>(table.rows.size()); ++ri) out[ri].ref_row = table.rows[ri].row;
  for (auto& p : pairs) {
    if (ref_used[p.ref] || eng_used[p.eng]) continue;
    ref_used[p.ref] = eng_used[p.eng] = 1;
    out[p.ref].engine_index = p.eng;
    out[p.ref].shift = p.cand.shift;
    out[p.ref].mismatched_fields = p.cand.mismatched;
  }
  if (extras) {
    extras->clear();
    for (int ei = 0; ei < static_cast<int>(rows.size()); ++ei)
      if (!eng_used[ei] && in_scope(table, rows[ei])) extras->push_back(ei);
  }
  return out;
}

bool in_request_scope(const ClassifyRequest& req, const ReferenceFamilyRow& row) {
  if (row.g_F != req.genus_f) return false;
  if (req.base_a && *req.base_a != row.a) return false;
  if (req.base_b && *req.base_b != row.b) return false;
  if (req.groups.empty()) return row.group.order() <= 4 * req.genus_f + 4;
  return std::find(req.groups.begin(), req.groups.end(), row.group) != req.groups.end();
}

std::vector<DiscrepancyReport> compare_with_reference(const std::vector<FamilyRow>& rows, const std::string& table_id,
                                                      const ClassifyRequest* scope) {
  const ReferenceFamilyTable* found = find_family_table(table_id);
  if (!found) {
    if (find_action_table(table_id))
      fail(ErrorKind::InvalidInput, "table '" + table_id + "' lists actions; compare it against the atlas");
    fail(ErrorKind::InvalidInput, "unknown table id '" + table_id + "'");
  }
  ReferenceFamilyTable table_in_scope = *found;
  if (scope)
    table_in_scope.rows.erase(std::remove_if(table_in_scope.rows.begin(), table_in_scope.rows.end(),
                                             [&](const ReferenceFamilyRow& r) { return !in_request_scope(*scope, r); }),
                              table_in_scope.rows.end());
  const ReferenceFamilyTable* table = &table_in_scope;
  std::vector<int> extras;
  auto matches = match_reference_rows(rows, *table, &extras);
  std::vector<DiscrepancyReport> out;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    const auto& m = matches[i];
    const auto& ref = table->rows[i];
    if (m.engine_index < 0) {
      out.push_back({table->id, ref.row, "row", ref.group.name() + " g_D=" + form_m(ref.g_D) + " K2=" + form_m(ref.K2),
                     "missing", "missing"});
      continue;
    }
    Candidate c = evaluate(ref, rows[m.engine_index], table->id);
    for (auto& r : c.records) out.push_back(std::move(r));
  }
  for (int ei : extras) {
    const auto& r = rows[ei];
    std::string desc = r.group.name() + " a=" + std::to_string(r.a) + " b=" + std::to_string(r.b);
    if (r.fitted)
      desc += " g_D=" + format_linear(r.g_D, 0, "p_g") + " K2=" + format_linear(r.K2, 0, "p_g") +
              " t_z=" + format_linear(r.t_z, 0, "p_g");
    else
      desc += " sporadic at p_g=" + std::to_string(r.points.front().p_g);
    out.push_back({table->id, 0, "row", "absent", desc, "extra"});
  }
  return out;
}

std::vector<DiscrepancyReport> compare_atlas_with_reference(const std::vector<AtlasRow>& rows, const std::string& table_id) {
  const ReferenceActionTable* table = find_action_table(table_id);
  if (!table) fail(ErrorKind::InvalidInput, "unknown action table id '" + table_id + "'");
  std::vector<DiscrepancyReport> out;
  std::set<std::string> matched;
  for (const auto& r : rows)
    if (r.in_reference) matched.insert(r.reference);
  for (const auto& ref : table->rows) {
    std::string label = ref.table + " row " + std::to_string(ref.row);
    if (matched.count(label)) continue;
    std::string sup;
    for (const auto& c : ref.support) sup += (sup.empty() ? "" : " ") + format_tuple(c);
    out.push_back({table->id, ref.row, "row", ref.group.name() + " a=" + std::to_string(ref.a) + " {" + sup + "}",
                   "missing", "missing"});
  }
  for (const auto& r : rows) {
    if (r.in_reference) continue;
    std::string sup;
    for (const auto& c : r.profile.support()) sup += (sup.empty() ? "" : " ") + format_tuple(c);
    out.push_back({table->id, 0, "row", "absent",
                   r.group.name() + " a=" + std::to_string(r.quotient_genus) + " {" + sup + "}", "extra"});
  }
  return out;
}

}  // namespace sandwich
