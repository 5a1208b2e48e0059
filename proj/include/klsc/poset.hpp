#ifndef KLSC_POSET_HPP
#define KLSC_POSET_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "klsc/poly.hpp"

namespace klsc {

/// Finite poset with a rank function that strictly increases along the order.
///
/// Built from generating relations (which need not be covers); the order is
/// their transitive closure, stored as dense reachability bitsets.
class RankedPoset {
 public:
  RankedPoset(std::vector<std::string> names, std::vector<int> rank,
              const std::vector<std::pair<int, int>>& relations);

  int size() const { return n_; }
  const std::string& name(int x) const { return names_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& names() const { return names_; }
  int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }
  int max_rank() const;

  bool leq(int x, int y) const {
    return (up_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y) >> 6] >> (y & 63)) & 1u;
  }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  const std::vector<int>& upper_covers(int x) const { return up_covers_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& lower_covers(int x) const { return down_covers_[static_cast<std::size_t>(x)]; }
  std::vector<std::pair<int, int>> covers() const;

  /// Elements of [x, y] ordered by (rank, index); empty if x is not <= y.
  std::vector<int> interval(int x, int y) const;
  /// P_x = {y : x <= y}.
  std::vector<int> upper_set(int x) const;
  /// {y : x < y}.
  std::vector<int> strict_upper_set(int x) const;
  bool is_upper_set(const std::vector<int>& q) const;
  std::vector<int> upper_closure(const std::vector<int>& q) const;

  /// Elements ordered by decreasing rank, ascending index within a rank.
  std::vector<int> top_down_order() const;

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  std::optional<int> bottom() const;
  std::optional<int> top() const;

  std::optional<int> join(int x, int y) const;
  std::optional<int> meet(int x, int y) const;
  bool is_lattice() const;

  /// Möbius function; throws std::invalid_argument unless x <= y.
  long long mobius(int x, int y) const;

  /// The induced subposet on `elems` (ranks unchanged), with the
  /// original index of each new element.
  std::pair<RankedPoset, std::vector<int>> induced(const std::vector<int>& elems) const;

 private:
  const std::vector<long long>& mobius_row(int x) const;

  int n_;
  std::vector<std::string> names_;
  std::vector<int> rank_;
  std::vector<std::vector<std::uint64_t>> up_;
  std::vector<std::vector<int>> up_covers_;
  std::vector<std::vector<int>> down_covers_;

  std::vector<std::vector<std::uint64_t>> down_;

  // Lazily filled Möbius rows; shared between copies of the same poset.
  struct MobiusCache {
    std::mutex mu;
    std::vector<std::unique_ptr<std::vector<long long>>> rows;
  };
  std::shared_ptr<MobiusCache> mobius_;
};

/// Every interval [x,y], x < y, has as many elements of even as of odd rank.
/// False unless P has a unique minimum and maximum.
bool is_eulerian(const RankedPoset& P);

/// h_j = number of elements of rank j, for j = 0..max rank.
std::vector<long long> rank_sizes(const RankedPoset& P);

struct TopHeavyResult {
  bool ok = true;
  int j = -1;
  int k = -1;
};
/// h_j <= h_k whenever j <= k <= d - j.
TopHeavyResult top_heavy_check(const RankedPoset& P);

/// chi_{xy}(t) = sum_{x <= z <= y} mu(x,z) t^{rk y - rk z}.
UniPoly characteristic_polynomial(const RankedPoset& P, int x, int y);

/// Lattice, graded by covers, atomic and semimodular.
bool is_geometric_lattice(const RankedPoset& P);

/// Chain 0 < 1 < ... < len.
RankedPoset chain(int len);
/// Subsets of {1..n} under inclusion.
RankedPoset boolean_lattice(int n);

}  // namespace klsc

#endif  // KLSC_POSET_HPP
