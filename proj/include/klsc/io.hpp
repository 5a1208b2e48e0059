#ifndef KLSC_IO_HPP
#define KLSC_IO_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "klsc/coxeter.hpp"
#include "klsc/fan.hpp"
#include "klsc/matroid.hpp"

namespace klsc::io {

using Json = nlohmann::ordered_json;

/// Parses a file; syntax errors become InputError("input", ...).
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& where = "input");

/// Integer or "p/q" string.
Rational parse_rational(const Json& j, const std::string& where);
std::string rational_str(const Rational& q);

/// {"elements": [names], "rank": [ints], "covers": [[i, j]]}; cover entries
/// are indices or element names.
std::shared_ptr<const RankedPoset> poset_from_json(const Json& j);

/// {"ground_set": n, "bases": [[...]]}, {"flats": [{"set": [...], "rank": r}]},
/// {"matrix": [[...]]}, {"uniform": [k, n]}, {"boolean": n},
/// {"graphic": {"vertices": n, "edges": [[a, b]]}} or {"projective_plane": q}.
/// Ground set elements are 0-based.
Matroid matroid_from_json(const Json& j);

/// {"dim": d, "rays": [[...]], "max_cones": [[...]]} or
/// {"polytope_vertices": [[...]]}; the latter yields the cone over the polytope.
Fan fan_from_json(const Json& j);

/// {"type": "A3"} or {"cartan": [[...]]}.
CartanDatum cartan_from_json(const Json& j);

/// Group element from a JSON array of 1-based generators or a string.
///
/// Strings: "e", "s1s2s1", "1,2,1" (words, 1-based), or in type A_{n-1} a
/// permutation of 1..n in one-line notation such as "3412".
CoxElement element_from_json(const CoxeterGroup& W, const Json& j, const std::string& where);
CoxElement parse_element(const CoxeterGroup& W, const std::string& text, const std::string& where);

/// {"coeffs": [...], "convention": "half-degree"}.
Json poly_json(const UniPoly& f);
Json shape_json(const FreeModuleShape& s);

std::uint64_t fnv1a(std::string_view bytes);
/// "fnv1a64:" followed by 16 hex digits of the canonical dump.
std::string digest(const Json& j);

}  // namespace klsc::io

#endif  // KLSC_IO_HPP
