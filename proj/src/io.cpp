#include "klsc/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "klsc/errors.hpp"

namespace klsc::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }
std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw InputError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(at(where, key), "missing field");
  return *it;
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array");
  return j;
}

long long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where, "expected an integer");
  return j.get<long long>();
}

int small_int(const Json& j, const std::string& where, long long lo, long long hi) {
  const long long v = integer(j, where);
  if (v < lo || v > hi) throw InputError(where, "value " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& where, long long lo, long long hi) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(small_int(j[i], at(where, i), lo, hi));
  return out;
}

std::vector<Vec<Rational>> rational_rows(const Json& j, const std::string& where, int width) {
  std::vector<Vec<Rational>> rows;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    const std::string wi = at(where, i);
    const Json& r = array(j[i], wi);
    if (width < 0) width = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != width) throw InputError(wi, "expected " + std::to_string(width) + " entries");
    Vec<Rational> v(width);
    for (int c = 0; c < width; ++c) v[c] = parse_rational(r[static_cast<std::size_t>(c)], at(wi, static_cast<std::size_t>(c)));
    rows.push_back(std::move(v));
  }
  return rows;
}

// Library constructors report malformed structure with std::invalid_argument.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(where, e.what());
  } catch (const std::domain_error& e) {
    throw InputError(where, e.what());
  }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(where, std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("input", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), "input");
}

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError(where, "expected an integer or a \"p/q\" string");
  const std::string s = j.get<std::string>();
  try {
    return Rational::parse(s);
  } catch (const std::exception&) {
    throw InputError(where, "malformed rational \"" + s + "\"");
  }
}

std::string rational_str(const Rational& q) { return q.str(); }

std::shared_ptr<const RankedPoset> poset_from_json(const Json& j) {
  const Json& el = array(field(j, "elements", ""), "elements");
  std::vector<std::string> names;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < el.size(); ++i) {
    const Json& e = el[i];
    std::string name = e.is_string() ? e.get<std::string>() : e.dump();
    if (!index.emplace(name, static_cast<int>(i)).second) throw InputError(at("elements", i), "duplicate name " + name);
    names.push_back(std::move(name));
  }
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InputError("elements", "empty poset");
  std::vector<int> rank = int_list(field(j, "rank", ""), "rank", 0, 1 << 20);
  if (static_cast<int>(rank.size()) != n) throw InputError("rank", "one rank per element required");
  std::vector<std::pair<int, int>> rel;
  const Json& cv = array(field(j, "covers", ""), "covers");
  for (std::size_t i = 0; i < cv.size(); ++i) {
    const std::string wi = at("covers", i);
    if (!cv[i].is_array() || cv[i].size() != 2) throw InputError(wi, "expected a pair");
    int ends[2];
    for (std::size_t k = 0; k < 2; ++k) {
      const Json& e = cv[i][k];
      if (e.is_string()) {
        auto it = index.find(e.get<std::string>());
        if (it == index.end()) throw InputError(at(wi, k), "unknown element " + e.get<std::string>());
        ends[k] = it->second;
      } else {
        ends[k] = small_int(e, at(wi, k), 0, n - 1);
      }
    }
    rel.emplace_back(ends[0], ends[1]);
  }
  return located("covers", [&] { return std::make_shared<const RankedPoset>(names, rank, rel); });
}

Matroid matroid_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("", "expected an object");
  if (j.contains("bases")) {
    const int n = small_int(field(j, "ground_set", ""), "ground_set", 0, 63);
    std::vector<std::vector<int>> bases;
    const Json& b = array(j["bases"], "bases");
    for (std::size_t i = 0; i < b.size(); ++i) bases.push_back(int_list(b[i], at("bases", i), 0, n - 1));
    return located("bases", [&] { return Matroid::from_bases(n, bases); });
  }
  if (j.contains("flats")) {
    std::vector<Matroid::Flat> flats;
    int n = 0;
    const Json& f = array(j["flats"], "flats");
    for (std::size_t i = 0; i < f.size(); ++i) {
      const std::string wi = at("flats", i);
      ElementSet s = 0;
      for (int e : int_list(field(f[i], "set", wi), at(wi, "set"), 0, 63)) {
        s |= ElementSet{1} << e;
        n = std::max(n, e + 1);
      }
      flats.push_back({s, small_int(field(f[i], "rank", wi), at(wi, "rank"), 0, 63)});
    }
    if (j.contains("ground_set")) {
      const int m = small_int(j["ground_set"], "ground_set", 0, 63);
      if (m < n) throw InputError("ground_set", "smaller than the largest element in a flat");
      n = m;
    }
    return located("flats", [&] { return Matroid::from_flats(n, flats); });
  }
  if (j.contains("matrix")) {
    auto rows = rational_rows(j["matrix"], "matrix", -1);
    if (rows.empty() || rows[0].size() == 0) throw InputError("matrix", "empty matrix");
    if (rows[0].size() > 63) throw InputError("matrix", "at most 63 columns supported");
    Mat<Rational> M(static_cast<Index>(rows.size()), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) M.row(static_cast<Index>(r)) = rows[r].transpose();
    return located("matrix", [&] { return Matroid::from_matrix(M); });
  }
  if (j.contains("uniform")) {
    auto kn = int_list(j["uniform"], "uniform", 0, 63);
    if (kn.size() != 2) throw InputError("uniform", "expected [k, n]");
    if (kn[0] < 1 || kn[0] > kn[1]) throw InputError("uniform", "need 1 <= k <= n");
    return Matroid::uniform(kn[0], kn[1]);
  }
  if (j.contains("boolean")) return Matroid::boolean(small_int(j["boolean"], "boolean", 1, 20));
  if (j.contains("graphic")) {
    const Json& g = j["graphic"];
    const int v = small_int(field(g, "vertices", "graphic"), "graphic.vertices", 1, 64);
    std::vector<std::pair<int, int>> edges;
    const Json& e = array(field(g, "edges", "graphic"), "graphic.edges");
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto ab = int_list(e[i], at("graphic.edges", i), 0, v - 1);
      if (ab.size() != 2) throw InputError(at("graphic.edges", i), "expected a pair");
      edges.emplace_back(ab[0], ab[1]);
    }
    return located("graphic", [&] { return Matroid::graphic(v, edges); });
  }
  if (j.contains("projective_plane")) {
    const int q = small_int(j["projective_plane"], "projective_plane", 2, 7);
    return located("projective_plane", [&] { return Matroid::projective_plane(q); });
  }
  throw InputError("", "expected one of bases, flats, matrix, uniform, boolean, graphic, projective_plane");
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("", "expected an object");
  if (j.contains("polytope_vertices")) {
    const Json& v = array(j["polytope_vertices"], "polytope_vertices");
    if (v.empty()) throw InputError("polytope_vertices", "empty vertex list");
    auto verts = rational_rows(v, "polytope_vertices", -1);
    return located("polytope_vertices", [&] { return cone_over_polytope(verts); });
  }
  const int d = small_int(field(j, "dim", ""), "dim", 0, 16);
  auto rays = rational_rows(field(j, "rays", ""), "rays", d);
  if (rays.size() > 64) throw InputError("rays", "at most 64 rays supported");
  std::vector<std::vector<int>> cones;
  const Json& mc = array(field(j, "max_cones", ""), "max_cones");
  for (std::size_t i = 0; i < mc.size(); ++i)
    cones.push_back(int_list(mc[i], at("max_cones", i), 0, static_cast<long long>(rays.size()) - 1));
  return located("max_cones", [&] { return Fan::from_cones(d, rays, cones); });
}

CartanDatum cartan_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("", "expected an object");
  if (j.contains("type")) {
    if (!j["type"].is_string()) throw InputError("type", "expected a string such as \"A3\"");
    return located("type", [&] { return CartanDatum::named(j["type"].get<std::string>()); });
  }
  if (j.contains("cartan")) {
    std::vector<std::vector<int>> a;
    const Json& m = array(j["cartan"], "cartan");
    for (std::size_t i = 0; i < m.size(); ++i) a.push_back(int_list(m[i], at("cartan", i), -1000, 1000));
    return located("cartan", [&] { return CartanDatum::from_matrix(a); });
  }
  throw InputError("", "expected \"type\" or \"cartan\"");
}

CoxElement parse_element(const CoxeterGroup& W, const std::string& text, const std::string& where) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "e" || s.empty()) return W.identity();
  auto word_from = [&](const std::vector<int>& one_based) {
    std::vector<int> w;
    for (int g : one_based) {
      if (g < 1 || g > W.rank()) throw InputError(where, "generator " + std::to_string(g) + " out of range");
      w.push_back(g - 1);
    }
    return W.from_word(w);
  };
  const bool digits_only = s.find_first_not_of("0123456789") == std::string::npos;
  if (digits_only) {
    if (W.datum().family() != 'A' || static_cast<int>(s.size()) != W.rank() + 1)
      throw InputError(where, "bare digit strings are type-A permutations; write words as \"s1s2\" or \"1,2\"");
    std::vector<int> p;
    for (char c : s) p.push_back(c - '0');
    return located(where, [&] { return W.from_permutation(p); });
  }
  std::vector<int> gens;
  std::size_t i = 0;
  const bool s_form = s[0] == 's';
  while (i < s.size()) {
    if (s_form) {
      if (s[i] != 's') throw InputError(where, "malformed word \"" + text + "\"");
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i || j - i > 3) throw InputError(where, "malformed word \"" + text + "\"");
    gens.push_back(std::stoi(s.substr(i, j - i)));
    i = j;
    if (!s_form && i < s.size()) {
      if (s[i] != ',') throw InputError(where, "malformed word \"" + text + "\"");
      if (++i == s.size()) throw InputError(where, "malformed word \"" + text + "\"");
    }
  }
  return word_from(gens);
}

CoxElement element_from_json(const CoxeterGroup& W, const Json& j, const std::string& where) {
  if (j.is_string()) return parse_element(W, j.get<std::string>(), where);
  std::vector<int> w;
  for (int g : int_list(j, where, 1, W.rank())) w.push_back(g - 1);
  return W.from_word(w);
}

Json poly_json(const UniPoly& f) {
  Json c = Json::array();
  for (long long a : f.coeffs()) c.push_back(a);
  return Json{{"coeffs", std::move(c)}, {"convention", "half-degree"}};
}

Json shape_json(const FreeModuleShape& s) {
  Json a = Json::array();
  for (int d : s.degrees()) a.push_back(d);
  return a;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest(const Json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(j.dump())));
  return std::string("fnv1a64:") + buf;
}

}  // namespace klsc::io
