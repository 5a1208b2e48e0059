#include "klsc/validate.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <sstream>

#include "klsc/bmsheaf.hpp"
#include "klsc/errors.hpp"
#include "klsc/fan.hpp"
#include "klsc/matroid.hpp"

namespace klsc {

bool DeskReport::ok() const {
  for (const auto& c : criteria)
    if (!c.ok) return false;
  return !criteria.empty();
}

namespace {

Vec<Rational> vec(std::initializer_list<long long> xs) {
  Vec<Rational> out(static_cast<Index>(xs.size()));
  Index k = 0;
  for (long long x : xs) out[k++] = Rational(x);
  return out;
}

struct NamedPolytope {
  std::string name;
  std::vector<Vec<Rational>> vertices;
};

std::vector<NamedPolytope> polytope_corpus() {
  std::vector<NamedPolytope> out;
  for (int d = 1; d <= 4; ++d) {
    NamedPolytope s{"simplex" + std::to_string(d), {}};
    for (int k = 0; k <= d; ++k) {
      Vec<Rational> x = Vec<Rational>::Zero(d);
      if (k < d) x[k] = Rational(1);
      s.vertices.push_back(x);
    }
    out.push_back(std::move(s));
  }
  out.push_back({"square", {vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})}});
  NamedPolytope cube{"cube", {}};
  for (int m = 0; m < 8; ++m) cube.vertices.push_back(vec({m & 1, m >> 1 & 1, m >> 2 & 1}));
  out.push_back(std::move(cube));
  out.push_back({"pyramid", {vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 2, 0}), vec({2, 2, 0}), vec({1, 1, 1})}});
  out.push_back({"prism",
                 {vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({1, 0, 1}), vec({0, 1, 1})}});
  return out;
}

struct NamedMatroid {
  std::string name;
  Matroid M;
};

std::vector<NamedMatroid> matroid_corpus() {
  std::vector<NamedMatroid> out;
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) out.push_back({"U" + std::to_string(k) + "," + std::to_string(n), Matroid::uniform(k, n)});
  for (int n = 1; n <= 5; ++n) out.push_back({"B" + std::to_string(n), Matroid::boolean(n)});
  out.push_back({"C4", Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})});
  out.push_back({"K4", Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})});
  out.push_back({"Fano", Matroid::projective_plane(2)});
  return out;
}

const char* kBruhatTypes[] = {"A2", "A3", "B2"};

/// Counts sheaf computations over Q and degree-contract violations.
struct ContractLog {
  long long runs = 0;
  long long violations = 0;
  std::string first;
};

template <class F>
auto over_q(ContractLog& log, const std::string& what, F&& f) -> decltype(f()) {
  ++log.runs;
  try {
    return f();
  } catch (const DegreeBoundError& e) {
    if (log.violations++ == 0) log.first = what + ": " + e.what();
    throw;
  }
}

bool palindromic(const UniPoly& f, int r) { return f.degree() <= r && f.reversed(r) == f; }

/// One sheaf-vs-recursion comparison on a Bruhat interval.
struct BruhatCase {
  std::string name;
  BruhatInterval interval;
  KLSTable table;
  std::vector<UniPoly> stalks;
};

struct MatroidCase {
  std::string name;
  std::shared_ptr<const RankedPoset> L;
  KLSTable table;
  MatroidIH ih;
};

struct PolytopeCase {
  std::string name;
  std::shared_ptr<const Fan> fan;
  KLSTable table;
  std::vector<UniPoly> stalks;
};

struct Corpus {
  std::vector<BruhatCase> bruhat;
  std::vector<MatroidCase> matroids;
  std::vector<PolytopeCase> polytopes;
};

class Timer {
 public:
  Timer() : t0_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

/// Records the first failure of a criterion.
class Failures {
 public:
  void fail(const std::string& msg) {
    if (count_++ == 0) first_ = msg;
  }
  void check(bool ok, const std::string& msg) {
    if (!ok) fail(msg);
  }
  bool ok() const { return count_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    std::string out = std::to_string(count_) + " failure(s); first: " + first_;
    return success.empty() ? out : out + "; " + success;
  }

 private:
  long long count_ = 0;
  std::string first_;
};

CriterionResult run(const std::string& id, const std::string& title, double budget,
                    const std::function<std::string(Failures&)>& body) {
  CriterionResult r{id, title, false, "", 0, budget};
  Failures f;
  Timer t;
  try {
    r.detail = f.summary(body(f));
  } catch (const std::exception& e) {
    f.fail(e.what());
    r.detail = f.summary("");
  }
  r.seconds = t.seconds();
  r.ok = f.ok() && (budget <= 0 || r.seconds <= budget);
  if (f.ok() && !r.ok) r.detail += "; over the time budget";
  return r;
}

std::string str(const UniPoly& f) { return f.str(); }

// AC1
std::string square_g(Failures& F, ContractLog& log) {
  const auto sq = polytope_corpus()[4];
  const UniPoly g = over_q(log, "square", [&] { return g_polynomial(sq.vertices); });
  F.check(g == UniPoly{1, 1}, "fan sheaf g = " + str(g));
  Fan fan = cone_over_polytope(sq.vertices);
  KLSTable T = solve_kls(eulerian_kernel(fan.poset()));
  const UniPoly r = T(fan.max_cone(0), fan.zero_cone());
  F.check(r == UniPoly{1, 1}, "recursion g = " + str(r));
  return "sheaf " + str(g) + ", recursion " + str(r);
}

// AC2
std::string four_orthants(Failures& F) {
  Fan fan = Fan::from_cones(2, {vec({1, 0}), vec({0, 1}), vec({-1, 0}), vec({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  std::vector<int> all(static_cast<std::size_t>(fan.size()));
  for (int c = 0; c < fan.size(); ++c) all[static_cast<std::size_t>(c)] = c;
  ConewiseSections A = structure_sections(fan, all, 4);
  F.check(A.shape == FreeModuleShape({0, 1, 1, 2}), "shape " + A.shape.str());
  // Free of that shape over K[x, y].
  GradedDims expect;
  for (long long i = 0; i <= 4; ++i) expect.push_back((i + 1) + 2 * i + (i >= 1 ? i - 1 : 0));
  F.check(A.dims == expect, "dimensions do not match a free module");
  return "generators " + A.shape.str();
}

// AC3
std::string square_cone_boundary(Failures& F, ContractLog& log) {
  Fan sq = face_lattice(3, {vec({1, 0, 1}), vec({-1, 0, 1}), vec({0, 1, 1}), vec({0, -1, 1})});
  PosetSheaf<Rational> sh = over_q(log, "square cone", [&] { return fan_ih(sq); });
  GradedModule<Rational> M = sh.boundary_module(sq.max_cone(0));
  const FreeModuleShape g = minimal_generator_degrees(M);
  F.check(M.is_consistent(), "boundary module not closed under the ring action");
  F.check(g == FreeModuleShape({0, 1}), "generators " + g.str());
  return "generators " + g.str();
}

// AC4
std::string u34(Failures& F, ContractLog& log) {
  Matroid M = Matroid::uniform(3, 4);
  MatroidIH ih = over_q(log, "U3,4", [&] { return compute_matroid_ih(M, FieldSpec::rationals()); });
  KLSTable T = solve_kls(matroid_kernel(M.lattice()));
  const UniPoly P = ih.stalks[static_cast<std::size_t>(M.bottom())];
  F.check(P == UniPoly{1, 2}, "sheaf P = " + str(P));
  F.check(ih.stalk_shapes[static_cast<std::size_t>(M.bottom())] == FreeModuleShape({0, 1, 1}), "stalk shape");
  F.check(ih.Z == UniPoly({1, 6, 6, 1}), "sheaf Z = " + str(ih.Z));
  F.check(T(M.bottom(), M.top()) == P, "recursion P = " + str(T(M.bottom(), M.top())));
  F.check(z_polynomial(T, M.bottom(), M.top()) == ih.Z, "recursion Z differs");
  return "P = " + str(P) + ", Z = " + str(ih.Z);
}

// AC5
std::string single_element(Failures& F, ContractLog& log) {
  Matroid M = Matroid::uniform(1, 1);
  MatroidIH ih = over_q(log, "U1,1", [&] { return compute_matroid_ih(M, FieldSpec::rationals()); });
  F.check(ih.global_shape == FreeModuleShape({0, 1}), "global shape " + ih.global_shape.str());
  return "global generators " + ih.global_shape.str();
}

// AC6: builds the corpus and compares routes.
std::string sweep(Failures& F, ContractLog& log, Corpus& C) {
  long long compared = 0;
  for (const char* type : kBruhatTypes) {
    auto W = std::make_shared<const CoxeterGroup>(CartanDatum::named(type));
    // The whole group: everything below the longest element.
    CoxElement w0 = W->identity();
    for (bool grew = true; grew;) {
      grew = false;
      for (int s = 0; s < W->rank(); ++s)
        if (!W->is_left_descent(s, w0)) {
          w0 = W->left_multiply(s, w0);
          grew = true;
        }
    }
    BruhatInterval all = enumerate_interval(W, W->identity(), w0);
    for (const CoxElement& w : all.elements)
      for (const CoxElement& v : all.elements) {
        if (!W->leq(v, w)) continue;
        BruhatCase bc{std::string(type) + " [" + CoxeterGroup::word_name(v.word) + "," +
                          CoxeterGroup::word_name(w.word) + "]",
                      enumerate_interval(W, v, w), {}, {}};
        bc.table = solve_kls(coxeter_R_kernel(bc.interval));
        auto G = std::make_shared<const MomentGraph>(bruhat_graph(bc.interval));
        PosetSheaf<Rational> sh = over_q(log, bc.name, [&] { return bm_sheaf<Rational>(G, FieldSpec::rationals()); });
        for (int x = 0; x < bc.interval.size(); ++x) {
          bc.stalks.push_back(sh.stalk_poincare(x));
          F.check(bc.stalks.back() == bc.table(x, bc.interval.top),
                  bc.name + " at " + bc.interval.poset->name(x) + ": sheaf " + str(bc.stalks.back()) + ", recursion " +
                      str(bc.table(x, bc.interval.top)));
          ++compared;
        }
        C.bruhat.push_back(std::move(bc));
      }
  }
  const long long bruhat = compared;
  for (auto& [name, M] : matroid_corpus()) {
    MatroidCase mc{name, M.lattice(), solve_kls(matroid_kernel(M.lattice())), {}};
    mc.ih = over_q(log, name, [&] { return compute_matroid_ih(M, FieldSpec::rationals()); });
    for (int f = 0; f < mc.L->size(); ++f) {
      F.check(mc.ih.stalks[static_cast<std::size_t>(f)] == mc.table(f, M.top()),
              name + " at flat " + mc.L->name(f) + ": sheaf " + str(mc.ih.stalks[static_cast<std::size_t>(f)]) +
                  ", recursion " + str(mc.table(f, M.top())));
      ++compared;
    }
    F.check(mc.ih.Z == z_polynomial(mc.table, M.bottom(), M.top()), name + ": Z differs");
    C.matroids.push_back(std::move(mc));
  }
  const long long matroids = compared - bruhat;
  for (auto& [name, verts] : polytope_corpus()) {
    auto fan = std::make_shared<const Fan>(cone_over_polytope(verts));
    PolytopeCase pc{name, fan, solve_kls(eulerian_kernel(fan->poset())), {}};
    PosetSheaf<Rational> sh = over_q(log, name, [&] { return fan_ih(*fan); });
    for (int c = 0; c < fan->size(); ++c) {
      pc.stalks.push_back(sh.stalk_poincare(c));
      F.check(pc.stalks.back() == pc.table(c, fan->zero_cone()),
              name + " at cone " + std::to_string(c) + ": sheaf " + str(pc.stalks.back()) + ", recursion " +
                  str(pc.table(c, fan->zero_cone())));
      ++compared;
    }
    C.polytopes.push_back(std::move(pc));
  }
  std::ostringstream os;
  os << C.bruhat.size() << " Bruhat intervals (" << bruhat << " stalks), " << C.matroids.size() << " matroids ("
     << matroids << " flats), " << C.polytopes.size() << " polytopes (" << compared - bruhat - matroids
     << " cones) agree";
  return os.str();
}

std::string triple(const RankedPoset& P, const TripleViolation& v) {
  return P.name(v.x) + " <= " + P.name(v.y) + " <= " + P.name(v.z);
}

bool top_heavy(const std::vector<long long>& h) {
  const int d = static_cast<int>(h.size()) - 1;
  for (int j = 0; j <= d; ++j)
    for (int k = j; k <= d - j; ++k)
      if (h[static_cast<std::size_t>(j)] > h[static_cast<std::size_t>(k)]) return false;
  return true;
}

// AC7
std::string properties(Failures& F, const Corpus& C) {
  long long checks = 0;
  for (const MatroidCase& mc : C.matroids) {
    const RankedPoset& L = *mc.L;
    const int top = L.size() - 1, rk = L.rank(top);
    for (int f = 0; f < L.size(); ++f)
      for (int h : L.upper_set(f)) {
        F.check(palindromic(z_polynomial(mc.table, f, h), L.rank(h) - L.rank(f)),
                mc.name + ": Z not palindromic on [" + L.name(f) + "," + L.name(h) + "]");
        ++checks;
      }
    F.check(mc.ih.stalk_shapes[static_cast<std::size_t>(top)] == FreeModuleShape({0}), mc.name + ": top stalk");
    F.check(palindromic(mc.ih.global_shape.poincare(), rk), mc.name + ": global sections not palindromic");
    FreeModuleShape lifted;
    for (int f = 0; f < L.size(); ++f) {
      const FreeModuleShape s = mc.ih.stalk_shapes[static_cast<std::size_t>(f)].shifted(L.rank(f));
      for (int d : s.degrees()) lifted.add(d);
    }
    F.check(lifted == mc.ih.global_shape, mc.name + ": global shape " + mc.ih.global_shape.str() + " vs " + lifted.str());
    TripleViolation m = monotonicity_check(mc.table);
    F.check(m.ok, mc.name + ": monotonicity fails at " + (m.ok ? "" : triple(L, m)));
    F.check(top_heavy(rank_sizes(L)), mc.name + ": lattice not top-heavy");
    checks += 4;
  }
  for (const PolytopeCase& pc : C.polytopes) {
    TripleViolation m = monotonicity_check(pc.table);
    F.check(m.ok, pc.name + ": monotonicity fails at " + (m.ok ? "" : triple(*pc.fan->poset(), m)));
    TripleViolation k = kalai_check(pc.table);
    F.check(k.ok, pc.name + ": Kalai fails at " + (k.ok ? "" : triple(*pc.fan->poset(), k)));
    checks += 2;
  }
  long long lower = 0, lower_bad = 0, other = 0, other_bad = 0;
  for (const BruhatCase& bc : C.bruhat) {
    TripleViolation m = monotonicity_check(bc.table);
    F.check(m.ok, bc.name + ": monotonicity fails at " + (m.ok ? "" : triple(*bc.interval.poset, m)));
    const int base = bc.interval.elements[static_cast<std::size_t>(bc.interval.bottom)].length();
    std::vector<long long> h(static_cast<std::size_t>(bc.interval.elements.back().length() - base + 1), 0);
    for (const CoxElement& x : bc.interval.elements) ++h[static_cast<std::size_t>(x.length() - base)];
    const bool th = top_heavy(h);
    (base == 0 ? lower : other) += 1;
    (base == 0 ? lower_bad : other_bad) += !th;
    std::string hs;
    for (long long c : h) hs += (hs.empty() ? "" : ",") + std::to_string(c);
    F.check(th, bc.name + ": rank sizes " + hs + " not top-heavy");
    checks += 2;
  }
  std::ostringstream os;
  os << checks << " property checks; top-heavy violations: " << lower_bad << " of " << lower
     << " lower Bruhat intervals, " << other_bad << " of " << other << " other Bruhat intervals";
  return os.str();
}

// AC8
std::string char_p(Failures& F) {
  Matroid fano = Matroid::projective_plane(2);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const UniPoly P = compute_matroid_ih(fano, FieldSpec::prime(p)).stalks[static_cast<std::size_t>(fano.bottom())];
    F.check((P == UniPoly{1}) == (p != 2), "Fano mod " + std::to_string(p) + ": P = " + str(P));
  }
  long long agree = 0;
  for (auto& [name, M] : matroid_corpus())
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const MatroidIH ih = compute_matroid_ih(M, FieldSpec::prime(p));
      const RankedPoset& L = *M.lattice();
      bool trivial = true;
      UniPoly z;
      for (int f = 0; f < L.size(); ++f) {
        trivial = trivial && ih.stalk_shapes[static_cast<std::size_t>(f)] == FreeModuleShape({0});
        z += ih.stalks[static_cast<std::size_t>(f)].shifted(L.rank(f));
      }
      const std::string at = name + " mod " + std::to_string(p);
      F.check(trivial == p_trivial_criterion(L, static_cast<int>(p)), at + ": criterion disagrees with the sheaf");
      F.check(ih.Z == z, at + ": Z = " + str(ih.Z) + " but the stalk sum is " + str(z));
      F.check(palindromic(ih.Z, M.rank()), at + ": Z not palindromic");
      ++agree;
    }
  return "Fano: P = 1 exactly for p = 3, 5; " + std::to_string(agree) + " matroid/prime pairs consistent";
}

}  // namespace

DeskReport run_desk_suite() {
  DeskReport R;
  ContractLog log;
  Corpus C;
  R.criteria.push_back(run("AC1", "square: g = 1 + t by fan sheaf and Eulerian recursion", 1,
                           [&](Failures& f) { return square_g(f, log); }));
  R.criteria.push_back(run("AC2", "four orthants: structure sections free with shape {0,1,1,2}", 1,
                           [&](Failures& f) { return four_orthants(f); }));
  R.criteria.push_back(run("AC3", "square cone: boundary module generated in degrees {0,1}", 1,
                           [&](Failures& f) { return square_cone_boundary(f, log); }));
  R.criteria.push_back(run("AC4", "U(3,4): P = 1 + 2t, Z = 1 + 6t + 6t^2 + t^3, routes agree", 1,
                           [&](Failures& f) { return u34(f, log); }));
  R.criteria.push_back(run("AC5", "one-element matroid: global sections generated in {0,1}", 1,
                           [&](Failures& f) { return single_element(f, log); }));
  R.criteria.push_back(run("AC6", "sheaf = recursion on Bruhat intervals, matroids and polytopes", 300,
                           [&](Failures& f) { return sweep(f, log, C); }));
  R.criteria.push_back(
      run("AC7", "property suites on the corpus", 0, [&](Failures& f) { return properties(f, C); }));
  R.criteria.push_back(run("AC8", "characteristic p matroid checks", 60, [&](Failures& f) { return char_p(f); }));
  R.criteria.push_back(run("AC9", "degree contract over Q", 0, [&](Failures& f) {
    f.check(log.runs > 0, "no sheaf computations ran");
    f.check(log.violations == 0, std::to_string(log.violations) + " violation(s); first: " + log.first);
    return std::to_string(log.runs) + " sheaf computations over Q, no degree-bound errors";
  }));
  return R;
}

}  // namespace klsc
