#ifndef KLSC_KLS_HPP
#define KLSC_KLS_HPP

#include <memory>
#include <string>
#include <vector>

#include "klsc/poset.hpp"

namespace klsc {

/// Polynomial attached to every comparable pair x <= y of a poset.
class PairTable {
 public:
  PairTable() = default;
  explicit PairTable(std::shared_ptr<const RankedPoset> P)
      : P_(std::move(P)), data_(static_cast<std::size_t>(P_->size() * P_->size())) {}

  const RankedPoset& poset() const { return *P_; }
  std::shared_ptr<const RankedPoset> poset_ptr() const { return P_; }

  const UniPoly& operator()(int x, int y) const { return data_[idx(x, y)]; }
  UniPoly& operator()(int x, int y) { return data_[idx(x, y)]; }

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x * P_->size() + y); }
  std::shared_ptr<const RankedPoset> P_;
  std::vector<UniPoly> data_;
};

/// kappa_{xy} for x <= y.
using Kernel = PairTable;
/// f_{xy} for x <= y.
using KLSTable = PairTable;

struct KernelCheck {
  bool ok = true;
  std::string axiom;  // "normalization", "degree" or "inversion"
  int x = -1;
  int z = -1;
};

/// Checks kappa_xx = 1, deg kappa_xy <= r_xy and, for every x < z,
/// sum_{x<=y<=z} t^{r_xy} kappa_xy(1/t) kappa_yz(t) = 0.
KernelCheck verify_kernel(const Kernel& K);

/// Unique solution of the KLS recursion. Throws ConsistencyError if the
/// kernel admits none. `order` optionally fixes the processing order of
/// lower endpoints; it must list every element with ranks non-increasing.
KLSTable solve_kls(const Kernel& K, const std::vector<int>* order = nullptr);

/// Z_{xz} = sum_{x<=y<=z} t^{r_xy} f_yz.
UniPoly z_polynomial(const KLSTable& T, int x, int z);

/// (t-1)^{r_xy}; rejects non-Eulerian posets.
Kernel eulerian_kernel(std::shared_ptr<const RankedPoset> P);

/// Characteristic polynomials of intervals; rejects non-geometric lattices.
Kernel matroid_kernel(std::shared_ptr<const RankedPoset> L);

struct TripleViolation {
  bool ok = true;
  int x = -1;
  int y = -1;
  int z = -1;
};

/// f_yz <= f_xz coefficientwise for all x <= y <= z: the stalk at the
/// smaller element surjects onto the stalk at the larger one.
TripleViolation monotonicity_check(const KLSTable& T);

/// f_xz >= f_xy f_yz coefficientwise for all x <= y <= z (every interval of
/// a cone's face poset is again such a poset, so all triples are checked).
TripleViolation kalai_check(const KLSTable& T);

/// Every f_xy has non-negative coefficients.
bool nonnegative(const KLSTable& T);

}  // namespace klsc

#endif  // KLSC_KLS_HPP
