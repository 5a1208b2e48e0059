#ifndef KLSC_MATROID_HPP
#define KLSC_MATROID_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "klsc/kls.hpp"
#include "klsc/sheaf.hpp"

namespace klsc {

using ElementSet = std::uint64_t;  // bitmask over the ground set {0..n-1}

std::string set_name(ElementSet s);

/// Loopless matroid on {0..n-1} with its lattice of flats.
class Matroid {
 public:
  struct Flat {
    ElementSet set;
    int rank;
  };

  static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases);
  /// Column matroid of a rational matrix.
  static Matroid from_matrix(const Mat<Rational>& M);
  /// Flats given explicitly; the lattice must be geometric.
  static Matroid from_flats(int n, std::vector<Flat> flats);

  static Matroid uniform(int k, int n);
  static Matroid boolean(int n);
  /// Cycle matroid of a simple graph on `vertices` vertices.
  static Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);
  /// Lattice of subspaces of F_q^3 realized by the points of PG(2, q), q prime.
  static Matroid projective_plane(int q);

  int ground_size() const { return n_; }
  int rank() const { return flats_.back().rank; }
  const std::vector<Flat>& flats() const { return flats_; }
  /// Index of a flat in `flats()` (and in the lattice), or -1.
  int flat_index(ElementSet s) const;
  int bottom() const { return 0; }
  int top() const { return static_cast<int>(flats_.size()) - 1; }

  /// Lattice of flats ordered by inclusion, ranked by matroid rank. Flats
  /// are sorted by (rank, bitmask), so index 0 is the closure of the empty
  /// set and the last index is the ground set.
  std::shared_ptr<const RankedPoset> lattice() const { return lattice_; }

  /// Contraction at a flat: the matroid whose lattice is [F, E].
  Matroid contraction(int flat) const;

 private:
  Matroid(int n, std::vector<Flat> flats);
  static Matroid from_rank_oracle(int n, const std::function<int(ElementSet)>& rk);

  int n_ = 0;
  std::vector<Flat> flats_;
  std::shared_ptr<const RankedPoset> lattice_;
};

/// y_F y_G = hbar^{rk F + rk G - rk(F v G)} y_{F v G}.
struct MobiusTerm {
  int hbar_power;
  int flat;  // index in the lattice
};
MobiusTerm mobius_product(const Matroid& M, int F, int G);

/// Restriction to the fixed point of F: y_G -> hbar^{rk G} if G <= F, else 0
/// (nullopt).
std::vector<std::optional<int>> rho(const Matroid& M, int F);

/// Restriction to the contraction at F: y_G -> hbar^{rk F + rk G - rk(F v G)} y_{F v G},
/// where F v G is read as the flat (F v G) \ F of the contraction.
std::vector<MobiusTerm> phi(const Matroid& M, int F);

/// Every interval has as many atoms as coatoms, and every rank-2 interval
/// has a number of middle elements not congruent to 1 mod p.
bool p_trivial_criterion(const RankedPoset& L, int p);

/// Local model of the matroid intersection cohomology sheaf over K[hbar].
template <class S>
class MatroidModel : public LocalModel<S> {
 public:
  MatroidModel(std::shared_ptr<const RankedPoset> L, FieldSpec field);

  std::shared_ptr<const RankedPoset> poset() const override { return L_; }
  FieldSpec field() const override { return field_; }
  int nvars(int) const override { return 1; }
  int global_nvars() const override { return 1; }
  LinearForm<S> action(int, int, int) const override { return one_form(); }
  LinearForm<S> global_action(int, int) const override { return one_form(); }
  std::vector<int> boundary_support(int x) const override { return L_->strict_upper_set(x); }
  Boundary<S> boundary(int x, int degree, const SupportView<S>& view) const override;

 private:
  LinearForm<S> one_form() const {
    LinearForm<S> f(1);
    f[0] = scalar_from_int<S>(1, field_);
    return f;
  }
  std::shared_ptr<const RankedPoset> L_;
  FieldSpec field_;
};

/// Results of the sheaf route for a matroid.
struct MatroidIH {
  std::vector<UniPoly> stalks;  // P_{L_F} for every flat F (index as in the lattice)
  UniPoly Z;                    // reduced global sections
  std::vector<FreeModuleShape> stalk_shapes;
  FreeModuleShape global_shape;
};

template <class S>
MatroidIH matroid_ih(const Matroid& M, FieldSpec field, const BuildOptions& opts = {});

/// Runs over Q or F_p according to `field`.
MatroidIH compute_matroid_ih(const Matroid& M, FieldSpec field, const BuildOptions& opts = {});

}  // namespace klsc

#endif  // KLSC_MATROID_HPP
