// klsc: command-line front end. Reports are JSON on stdout (or --output);
// exit 0 on success, 1 when routes disagree or a check fails, 2 on bad input.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>

#include <CLI11.hpp>

#include "klsc/bmsheaf.hpp"
#include "klsc/errors.hpp"
#include "klsc/io.hpp"
#include "klsc/validate.hpp"

using namespace klsc;
using io::Json;

namespace {

struct Common {
  std::string input;
  long long characteristic = 0;
  int degree_bound = -1;
  bool compare = false;
  std::string output;
  bool pretty = false;
  bool timings = false;

  FieldSpec field() const {
    if (characteristic == 0) return FieldSpec::rationals();
    if (characteristic < 2 || characteristic > 0x7fffffff || !is_prime(static_cast<std::uint32_t>(characteristic)))
      throw InputError("char", std::to_string(characteristic) + " is neither 0 nor a prime");
    return FieldSpec::prime(static_cast<std::uint32_t>(characteristic));
  }
  BuildOptions build() const {
    BuildOptions o;
    o.degree_bound = degree_bound;
    return o;
  }
  void require_char0_for_compare() const {
    if (compare && characteristic != 0)
      throw InputError("compare-recursion", "the recursion is a characteristic 0 computation; drop --char");
  }
};

void add_common(CLI::App* app, Common& c, bool input_required = true) {
  auto* in = app->add_option("--input", c.input, "input JSON file");
  if (input_required) in->required();
  app->add_option("--char", c.characteristic, "coefficient characteristic: 0 or a prime");
  app->add_option("--degree-bound", c.degree_bound, "top half-degree computed by the sheaf route");
  app->add_flag("--compare-recursion", c.compare, "compare with the KLS recursion");
  app->add_option("--output", c.output, "write the report to a file");
  app->add_flag("--pretty", c.pretty, "human-readable table instead of JSON");
  app->add_flag("--timings", c.timings, "include wall-clock timings");
}

/// Report under construction; `ok` goes false on any failed check.
struct Report {
  Json checks = Json::object();
  bool ok = true;

  void check(const std::string& name, bool pass, Json detail = Json::object()) {
    detail["ok"] = pass;
    checks[name] = std::move(detail);
    ok = ok && pass;
  }
};

std::string str_poly(const Json& p) {
  std::vector<long long> c;
  for (const auto& a : p["coeffs"]) c.push_back(a.get<long long>());
  return UniPoly(c).str();
}

bool is_poly(const Json& j) { return j.is_object() && j.contains("coeffs") && j.contains("convention"); }

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (is_poly(j)) {
    rows.emplace_back(prefix, str_poly(j));
  } else if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

std::string pretty_table(const Json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(w - k.size() + 2, ' ') + v + "\n";
  return out;
}

int emit(const Common& c, const Json& doc) {
  const std::string text = c.pretty ? pretty_table(doc) : doc.dump(2) + "\n";
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    if (!out) throw InputError("output", "cannot write " + c.output);
    out << text;
  }
  return 0;
}

Json pair_entry(const RankedPoset& P, int x, int y, const UniPoly& f) {
  return Json{{"x", P.name(x)}, {"y", P.name(y)}, {"poly", io::poly_json(f)}};
}

/// "x,y" as two indices or two element names.
std::pair<int, int> parse_pair(const RankedPoset& P, const std::string& s) {
  auto find = [&](const std::string& name) {
    for (int x = 0; x < P.size(); ++x)
      if (P.name(x) == name) return x;
    return -1;
  };
  for (std::size_t k = s.find(','); k != std::string::npos; k = s.find(',', k + 1)) {
    const std::string a = s.substr(0, k), b = s.substr(k + 1);
    int x = find(a), y = find(b);
    if (x < 0 && y < 0 && !a.empty() && !b.empty() && a.find_first_not_of("0123456789") == std::string::npos &&
        b.find_first_not_of("0123456789") == std::string::npos) {
      x = std::stoi(a);
      y = std::stoi(b);
      if (x >= P.size() || y >= P.size()) throw InputError("pair", "element index out of range");
    }
    if (x >= 0 && y >= 0) {
      if (!P.leq(x, y)) throw InputError("pair", "elements are not ordered x <= y");
      return {x, y};
    }
  }
  throw InputError("pair", "expected \"x,y\" with element names or indices");
}

bool palindromic(const UniPoly& f, int r) { return f.degree() <= r && f.reversed(r) == f; }

std::string triple(const RankedPoset& P, const TripleViolation& v) {
  return P.name(v.x) + " <= " + P.name(v.y) + " <= " + P.name(v.z);
}

bool is_fan_json(const Json& j) { return j.is_object() && (j.contains("rays") || j.contains("polytope_vertices")); }
bool is_matroid_json(const Json& j) {
  if (!j.is_object()) return false;
  for (const char* k : {"bases", "flats", "matrix", "uniform", "boolean", "graphic", "projective_plane"})
    if (j.contains(k)) return true;
  return false;
}

std::shared_ptr<const CoxeterGroup> group_of(const Json& j) {
  return std::make_shared<const CoxeterGroup>(io::cartan_from_json(j));
}

BruhatInterval interval_of(const Json& j, int max_size) {
  auto W = group_of(j);
  if (!j.contains("w")) throw InputError("w", "missing field");
  const CoxElement w = io::element_from_json(*W, j["w"], "w");
  const CoxElement v = j.contains("v") ? io::element_from_json(*W, j["v"], "v") : W->identity();
  return enumerate_interval(W, v, w, max_size);
}

// kls --------------------------------------------------------------------

struct KlsArgs {
  Common c;
  std::string kernel;
  std::string pair;
  int max_interval = kDefaultIntervalBound;
};

Json run_kls(const KlsArgs& a, Report& R, Json& input) {
  input = io::read_json_file(a.c.input);
  std::shared_ptr<const RankedPoset> P;
  Kernel K;
  std::optional<BruhatInterval> bruhat;
  if (a.kernel == "eulerian") {
    P = is_fan_json(input) ? io::fan_from_json(input).poset() : io::poset_from_json(input);
    K = eulerian_kernel(P);
  } else if (a.kernel == "matroid") {
    P = is_matroid_json(input) ? io::matroid_from_json(input).lattice() : io::poset_from_json(input);
    K = matroid_kernel(P);
  } else {
    bruhat = interval_of(input, a.max_interval);
    P = bruhat->poset;
    K = coxeter_R_kernel(*bruhat);
  }
  const KernelCheck kc = verify_kernel(K);
  R.check("kernel_axioms", kc.ok, kc.ok ? Json::object() : Json{{"axiom", kc.axiom}, {"x", P->name(kc.x)}, {"z", P->name(kc.z)}});
  const KLSTable T = solve_kls(K);

  std::vector<std::pair<int, int>> pairs;
  if (!a.pair.empty()) {
    pairs.push_back(parse_pair(*P, a.pair));
  } else {
    for (int x = 0; x < P->size(); ++x)
      for (int y : P->upper_set(x)) pairs.emplace_back(x, y);
  }
  Json f = Json::array(), z = Json::array();
  bool pal = true;
  for (auto [x, y] : pairs) {
    f.push_back(pair_entry(*P, x, y, T(x, y)));
    const UniPoly Z = z_polynomial(T, x, y);
    z.push_back(pair_entry(*P, x, y, Z));
    pal = pal && palindromic(Z, P->rank(y) - P->rank(x));
  }
  R.check("nonnegative", nonnegative(T));
  const TripleViolation mono = monotonicity_check(T);
  R.check("monotonicity", mono.ok, mono.ok ? Json::object() : Json{{"at", triple(*P, mono)}});
  if (a.kernel == "eulerian") {
    const TripleViolation kal = kalai_check(T);
    R.check("kalai", kal.ok, kal.ok ? Json::object() : Json{{"at", triple(*P, kal)}});
  }
  if (a.kernel == "matroid") {
    R.check("z_palindromic", pal);
    const TopHeavyResult th = top_heavy_check(*P);
    R.check("top_heavy", th.ok, th.ok ? Json::object() : Json{{"j", th.j}, {"k", th.k}});
  }
  if (bruhat && bruhat->elements[static_cast<std::size_t>(bruhat->bottom)].length() == 0) {
    const TopHeavyResult th = top_heavy_check(*P);
    R.check("top_heavy", th.ok, th.ok ? Json::object() : Json{{"j", th.j}, {"k", th.k}});
  }
  return Json{{"kernel", a.kernel}, {"elements", P->size()}, {"f", std::move(f)}, {"Z", std::move(z)}};
}

// fan --------------------------------------------------------------------

struct FanArgs {
  Common c;
  std::optional<int> cone;
  bool sections = false;
};

Json cone_json(const Fan& F, int c) {
  Json rays = Json::array();
  for (int r = 0; r < 64; ++r)
    if (F.cone_rays(c) >> r & 1) rays.push_back(r);
  return Json{{"element", c}, {"rays", std::move(rays)}, {"dim", F.cone_dim(c)}};
}

/// Compares stalks with the Eulerian recursion on the face poset of each
/// maximal cone.
void compare_fan(const Fan& F, const PosetSheaf<Rational>& sh, const std::vector<int>& cones, Report& R) {
  bool agree = true;
  Json first = Json::object();
  for (int c : cones) {
    auto [sub, idx] = F.poset()->induced(F.poset()->upper_set(c));
    auto Q = std::make_shared<const RankedPoset>(std::move(sub));
    const KLSTable T = solve_kls(eulerian_kernel(Q));
    const int top = *Q->top();
    for (int k = 0; k < Q->size(); ++k) {
      const int x = idx[static_cast<std::size_t>(k)];
      if (T(k, top) == sh.stalk_poincare(x)) continue;
      if (agree)
        first = Json{{"element", x}, {"sheaf", io::poly_json(sh.stalk_poincare(x))}, {"recursion", io::poly_json(T(k, top))}};
      agree = false;
    }
  }
  R.check("recursion_agrees", agree, first);
}

Json run_fan_g(const FanArgs& a, Report& R, Json& input) {
  input = io::read_json_file(a.c.input);
  const Fan F = io::fan_from_json(input);
  if (F.max_cone_count() != 1)
    throw InputError("max_cones", "g needs a single maximal cone; use `fan ih --cone`");
  const PosetSheaf<Rational> sh = fan_ih(F, a.c.build());
  const int c = F.max_cone(0);
  if (a.c.compare) compare_fan(F, sh, {c}, R);
  return Json{{"g", io::poly_json(sh.stalk_poincare(c))}, {"shape", io::shape_json(sh.stalk_shape(c))}};
}

Json run_fan_ih(const FanArgs& a, Report& R, Json& input) {
  input = io::read_json_file(a.c.input);
  const Fan F = io::fan_from_json(input);
  const PosetSheaf<Rational> sh = fan_ih(F, a.c.build());
  std::vector<int> cones;
  if (a.cone) {
    if (*a.cone < 0 || *a.cone >= static_cast<int>(F.max_cone_count()))
      throw InputError("cone", "index out of range (0.." + std::to_string(F.max_cone_count() - 1) + ")");
    cones.push_back(F.max_cone(static_cast<std::size_t>(*a.cone)));
  } else {
    for (std::size_t k = 0; k < F.max_cone_count(); ++k) cones.push_back(F.max_cone(k));
  }
  Json out = Json::object();
  Json stalks = Json::array();
  for (int c : a.cone ? F.poset()->upper_set(cones.front()) : [&] {
         std::vector<int> all(static_cast<std::size_t>(F.size()));
         std::iota(all.begin(), all.end(), 0);
         return all;
       }()) {
    Json e = cone_json(F, c);
    e["shape"] = io::shape_json(sh.stalk_shape(c));
    e["poly"] = io::poly_json(sh.stalk_poincare(c));
    stalks.push_back(std::move(e));
  }
  if (a.cone) out["cone"] = *a.cone;
  out["stalks"] = std::move(stalks);
  if (a.sections) {
    std::vector<int> all(static_cast<std::size_t>(F.size()));
    std::iota(all.begin(), all.end(), 0);
    out["global_shape"] = io::shape_json(sh.sections_shape(all));
  }
  if (a.c.compare) compare_fan(F, sh, cones, R);
  return out;
}

// matroid ----------------------------------------------------------------

struct MatroidArgs {
  Common c;
  bool all_flats = false;
};

Json run_matroid(const MatroidArgs& a, bool z, Report& R, Json& input) {
  input = io::read_json_file(a.c.input);
  a.c.require_char0_for_compare();
  const Matroid M = io::matroid_from_json(input);
  const FieldSpec field = a.c.field();
  BuildOptions opts = a.c.build();
  const MatroidIH ih = compute_matroid_ih(M, field, opts);
  const RankedPoset& L = *M.lattice();
  Json out{{"field", field.name()}, {"rank", M.rank()}, {"flats", L.size()}};
  std::optional<KLSTable> T;
  if (a.c.compare) T = solve_kls(matroid_kernel(M.lattice()));
  if (z) {
    out["Z"] = io::poly_json(ih.Z);
    out["global_shape"] = io::shape_json(ih.global_shape);
    R.check("z_palindromic", palindromic(ih.Z, M.rank()));
    if (T) {
      const UniPoly r = z_polynomial(*T, M.bottom(), M.top());
      R.check("recursion_agrees", r == ih.Z, Json{{"recursion", io::poly_json(r)}});
    }
  } else {
    out["P"] = io::poly_json(ih.stalks[static_cast<std::size_t>(M.bottom())]);
    out["shape"] = io::shape_json(ih.stalk_shapes[static_cast<std::size_t>(M.bottom())]);
  }
  if (a.all_flats) {
    Json fl = Json::array();
    for (int f = 0; f < L.size(); ++f)
      fl.push_back(Json{{"flat", L.name(f)},
                        {"rank", L.rank(f)},
                        {"shape", io::shape_json(ih.stalk_shapes[static_cast<std::size_t>(f)])},
                        {"poly", io::poly_json(ih.stalks[static_cast<std::size_t>(f)])}});
    out["all_flats"] = std::move(fl);
  }
  if (T && !z) {
    bool agree = true;
    Json first = Json::object();
    for (int f = 0; f < L.size(); ++f)
      if ((*T)(f, M.top()) != ih.stalks[static_cast<std::size_t>(f)]) {
        if (agree) first = Json{{"flat", L.name(f)}, {"recursion", io::poly_json((*T)(f, M.top()))}};
        agree = false;
      }
    R.check("recursion_agrees", agree, first);
  }
  if (!field.is_rational()) {
    bool trivial = true;
    for (const auto& s : ih.stalk_shapes) trivial = trivial && s == FreeModuleShape({0});
    const bool crit = p_trivial_criterion(L, static_cast<int>(field.characteristic));
    R.check("p_trivial_criterion", crit == trivial, Json{{"criterion", crit}, {"all_stalks_trivial", trivial}});
  }
  return out;
}

// coxeter ----------------------------------------------------------------

struct CoxeterArgs {
  Common c;
  std::string type;
  std::string cartan;
  std::string w, v;
  bool all = false;
  int max_interval = kDefaultIntervalBound;
};

Json run_coxeter(const CoxeterArgs& a, Report& R, Json& input) {
  a.c.require_char0_for_compare();
  if (!a.c.input.empty()) input = io::read_json_file(a.c.input);
  if (!a.type.empty()) input["type"] = a.type;
  if (!a.cartan.empty()) input["cartan"] = io::parse_json(a.cartan, "cartan");
  if (!a.w.empty()) input["w"] = a.w;
  if (!a.v.empty()) input["v"] = a.v;
  if (!input.contains("type") && !input.contains("cartan"))
    throw InputError("type", "give --type, --cartan or an --input file");
  if (input.contains("type") && input.contains("cartan")) throw InputError("type", "give either a type or a Cartan matrix");
  if (!input.contains("w")) throw InputError("w", "missing element; use --w");

  const FieldSpec field = a.c.field();
  BruhatInterval I = interval_of(input, a.max_interval);
  auto G = std::make_shared<const MomentGraph>(bruhat_graph(I));
  std::vector<FreeModuleShape> shapes;
  if (field.is_rational()) {
    const auto sh = bm_sheaf<Rational>(G, field, a.c.build());
    for (int x = 0; x < I.size(); ++x) shapes.push_back(sh.stalk_shape(x));
  } else {
    const auto sh = bm_sheaf<Fp>(G, field, a.c.build());
    for (int x = 0; x < I.size(); ++x) shapes.push_back(sh.stalk_shape(x));
  }
  const RankedPoset& P = *I.poset;
  Json out{{"type", I.W->datum().name()},
           {"v", P.name(I.bottom)},
           {"w", P.name(I.top)},
           {"field", field.name()},
           {"interval_size", I.size()},
           {"P", io::poly_json(shapes[static_cast<std::size_t>(I.bottom)].poincare())}};
  if (a.all) {
    Json st = Json::array();
    for (int x = 0; x < I.size(); ++x)
      st.push_back(Json{{"x", P.name(x)},
                        {"shape", io::shape_json(shapes[static_cast<std::size_t>(x)])},
                        {"poly", io::poly_json(shapes[static_cast<std::size_t>(x)].poincare())}});
    out["stalks"] = std::move(st);
  }
  if (a.c.compare) {
    const KLSTable T = solve_kls(coxeter_R_kernel(I));
    bool agree = true;
    Json first = Json::object();
    for (int x = 0; x < I.size(); ++x)
      if (T(x, I.top) != shapes[static_cast<std::size_t>(x)].poincare()) {
        if (agree) first = Json{{"x", P.name(x)}, {"recursion", io::poly_json(T(x, I.top))}};
        agree = false;
      }
    R.check("recursion_agrees", agree, first);
  }
  return out;
}

// validate ---------------------------------------------------------------

Json run_validate(const std::string& suite, Report& R, Json& input, bool timings) {
  if (suite != "desk") throw InputError("suite", "unknown suite " + suite + " (available: desk)");
  input = Json{{"suite", suite}};
  const DeskReport D = run_desk_suite();
  Json crit = Json::array();
  for (const auto& c : D.criteria) {
    Json e{{"id", c.id}, {"title", c.title}, {"ok", c.ok}, {"detail", c.detail}};
    if (timings) e["seconds"] = c.seconds;
    crit.push_back(std::move(e));
    R.check(c.id, c.ok);
  }
  return Json{{"criteria", std::move(crit)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig-Stanley polynomials by recursion and by sheaves"};
  app.require_subcommand(1);

  KlsArgs kls;
  auto* kls_cmd = app.add_subcommand("kls", "KLS polynomials from a P-kernel");
  add_common(kls_cmd, kls.c);
  kls_cmd->add_option("--kernel", kls.kernel, "eulerian, matroid or coxeter")
      ->required()
      ->check(CLI::IsMember({"eulerian", "matroid", "coxeter"}));
  kls_cmd->add_option("--pair", kls.pair, "only the pair x,y (names or indices)");
  kls_cmd->add_option("--max-interval", kls.max_interval, "largest Bruhat interval accepted");

  FanArgs fan;
  auto* fan_cmd = app.add_subcommand("fan", "fan intersection cohomology");
  fan_cmd->require_subcommand(1);
  auto* fan_g = fan_cmd->add_subcommand("g", "g-polynomial of a polytope or a single cone");
  add_common(fan_g, fan.c);
  auto* fan_ih_cmd = fan_cmd->add_subcommand("ih", "stalks of the fan IH sheaf");
  add_common(fan_ih_cmd, fan.c);
  fan_ih_cmd->add_option("--cone", fan.cone, "index of a maximal cone");
  fan_ih_cmd->add_flag("--sections", fan.sections, "also report the global section shape");

  MatroidArgs mat;
  auto* mat_cmd = app.add_subcommand("matroid", "matroid intersection cohomology");
  mat_cmd->require_subcommand(1);
  auto* mat_kl = mat_cmd->add_subcommand("kl", "Kazhdan-Lusztig polynomial (stalk at the bottom flat)");
  add_common(mat_kl, mat.c);
  mat_kl->add_flag("--all-flats", mat.all_flats, "report the stalk at every flat");
  auto* mat_z = mat_cmd->add_subcommand("z", "Z-polynomial (global sections)");
  add_common(mat_z, mat.c);
  mat_z->add_flag("--all-flats", mat.all_flats, "report the stalk at every flat");

  CoxeterArgs cox;
  auto* cox_cmd = app.add_subcommand("coxeter", "Braden-MacPherson sheaves on Bruhat graphs");
  cox_cmd->require_subcommand(1);
  auto* cox_kl = cox_cmd->add_subcommand("kl", "Kazhdan-Lusztig polynomials P_{x,w} for v <= x <= w");
  add_common(cox_kl, cox.c, false);
  cox_kl->add_option("--type", cox.type, "Cartan type such as A3");
  cox_kl->add_option("--cartan", cox.cartan, "Cartan matrix as JSON");
  cox_kl->add_option("--w", cox.w, "e, s1s2s1, 1,2,1 or a type A permutation such as 3412");
  cox_kl->add_option("--v", cox.v, "lower element (default e)");
  cox_kl->add_flag("--all", cox.all, "report the stalk at every x in [v, w]");
  cox_kl->add_option("--max-interval", cox.max_interval, "largest interval accepted");

  std::string suite;
  Common val;
  auto* val_cmd = app.add_subcommand("validate", "run a built-in acceptance suite");
  val_cmd->add_option("--suite", suite, "suite name")->required();
  val_cmd->add_option("--output", val.output, "write the report to a file");
  val_cmd->add_flag("--pretty", val.pretty, "human-readable table instead of JSON");
  val_cmd->add_flag("--timings", val.timings, "include wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const Common* common = nullptr;
  std::string command;
  const auto t0 = std::chrono::steady_clock::now();
  Report R;
  Json input;
  try {
    Json result;
    if (*kls_cmd) {
      command = "kls", common = &kls.c;
      result = run_kls(kls, R, input);
    } else if (*fan_g) {
      command = "fan g", common = &fan.c;
      result = run_fan_g(fan, R, input);
    } else if (*fan_ih_cmd) {
      command = "fan ih", common = &fan.c;
      result = run_fan_ih(fan, R, input);
    } else if (*mat_kl || *mat_z) {
      command = *mat_kl ? "matroid kl" : "matroid z", common = &mat.c;
      result = run_matroid(mat, static_cast<bool>(*mat_z), R, input);
    } else if (*cox_kl) {
      command = "coxeter kl", common = &cox.c;
      result = run_coxeter(cox, R, input);
    } else {
      command = "validate", common = &val;
      result = run_validate(suite, R, input, val.timings);
    }
    Json doc{{"command", command}, {"input_digest", io::digest(input)}, {"ok", R.ok}, {"result", std::move(result)}};
    if (!R.checks.empty()) doc["checks"] = R.checks;
    if (common->timings)
      doc["timings"] = Json{{"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
    emit(*common, doc);
    return R.ok ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "klsc: input error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "klsc: " << e.what() << "\n";
    return 2;
  } catch (const DegreeBoundError& e) {
    Json doc{{"command", command},
             {"input_digest", io::digest(input)},
             {"ok", false},
             {"error", Json{{"kind", "degree_bound"}, {"message", e.what()}, {"half_degree", e.degree}, {"rank_gap", e.rank_gap}}}};
    try {
      emit(*common, doc);
    } catch (const std::exception&) {
    }
    return 1;
  } catch (const ConsistencyError& e) {
    std::cerr << "klsc: consistency check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "klsc: invalid input: " << e.what() << "\n";
    return 2;
  }
}
