// Small hand-built posets used as independent oracles in the unit tests.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klsc/poset.hpp"

namespace oracle {

// Face poset of the square cone ordered by reverse inclusion: the cone
// (rank 0), four facets, four rays, the origin (rank 3).
inline std::shared_ptr<const klsc::RankedPoset> square_cone_faces() {
  std::vector<std::string> names = {"sigma", "F02", "F21", "F13", "F30", "r0", "r1", "r2", "r3", "0"};
  std::vector<int> rank = {0, 1, 1, 1, 1, 2, 2, 2, 2, 3};
  std::vector<std::pair<int, int>> rel;
  for (int f = 1; f <= 4; ++f) rel.emplace_back(0, f);
  int facet_rays[4][2] = {{0, 2}, {2, 1}, {1, 3}, {3, 0}};
  for (int f = 0; f < 4; ++f)
    for (int r : facet_rays[f]) rel.emplace_back(1 + f, 5 + r);
  for (int r = 0; r < 4; ++r) rel.emplace_back(5 + r, 9);
  return std::make_shared<klsc::RankedPoset>(names, rank, rel);
}

// Lattice of flats of a uniform matroid U_{k,n} by brute force: subsets of
// size < k, plus the ground set.
inline std::shared_ptr<const klsc::RankedPoset> uniform_flats(int k, int n) {
  std::vector<int> sets;
  for (int s = 0; s < (1 << n); ++s)
    if (__builtin_popcount(s) < k) sets.push_back(s);
  sets.push_back((1 << n) - 1);
  std::vector<std::string> names;
  std::vector<int> rank;
  for (int s : sets) {
    names.push_back(std::to_string(s));
    rank.push_back(s == (1 << n) - 1 ? k : __builtin_popcount(s));
  }
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = 0; b < sets.size(); ++b)
      if (a != b && (sets[a] & sets[b]) == sets[a]) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return std::make_shared<klsc::RankedPoset>(names, rank, rel);
}

}  // namespace oracle
