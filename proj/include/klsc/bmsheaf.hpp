#ifndef KLSC_BMSHEAF_HPP
#define KLSC_BMSHEAF_HPP

#include <memory>
#include <vector>

#include "klsc/coxeter.hpp"
#include "klsc/sheaf.hpp"

namespace klsc {

/// Moment graph sheaf on a Bruhat interval [v, w], R = K[x_1..x_n] with n the
/// rank of the Cartan datum.
///
/// The stalk at u has the edge quotients M_u / alpha_E M_u for the edges E
/// from lower vertices; the boundary module at x is the image of the sections
/// over {u > x} in the sum of M_u / alpha_E M_u over the edges x -- u.
template <class S>
class BMModel : public LocalModel<S> {
 public:
  BMModel(std::shared_ptr<const MomentGraph> G, FieldSpec field);

  std::shared_ptr<const RankedPoset> poset() const override { return G_->interval.poset; }
  FieldSpec field() const override { return field_; }
  int nvars(int) const override { return n_; }
  int global_nvars() const override { return n_; }
  LinearForm<S> action(int x, int var, int y) const override;
  LinearForm<S> global_action(int var, int y) const override { return action(y, var, y); }
  std::vector<int> boundary_support(int x) const override;
  Boundary<S> boundary(int x, int degree, const SupportView<S>& view) const override;
  /// ceil(r/2) over Q with r = l(w) - l(v): enough for every stalk under the
  /// degree contract. 2 l(w) over F_p. Global sections need a larger bound.
  int default_degree_bound() const override;

 private:
  std::shared_ptr<const MomentGraph> G_;
  FieldSpec field_;
  int n_;
  std::vector<std::vector<int>> up_;             // [x]: neighbours above x, sorted
  std::vector<std::vector<LinearForm<S>>> lab_;  // [x][k]: label of the edge x -- up_[x][k]
  std::vector<std::vector<Mat<S>>> sub_;         // [x][k]: R -> R / alpha_E as a substitution
};

struct BMSheaf {
  std::shared_ptr<const MomentGraph> graph;
  FieldSpec field;
  int top_degree = 0;
  std::vector<FreeModuleShape> stalk_shapes;  // [vertex]
  GradedDims global_dims;                     // sections over the whole graph, up to top_degree
};

/// Requires the p-GKM condition over F_p (InputError otherwise).
template <class S>
PosetSheaf<S> bm_sheaf(std::shared_ptr<const MomentGraph> G, FieldSpec field, const BuildOptions& opts = {});

BMSheaf compute_bm(std::shared_ptr<const MomentGraph> G, FieldSpec field, const BuildOptions& opts = {});

/// Poincaré polynomial of the reduced stalk at v: the KL polynomial f_{v,w}.
UniPoly kl_from_sheaf(const BMSheaf& S, int v);

/// Dimensions of the degree-i parts, i <= D, of the tuples of polynomials
/// (f_u) with f_u = f_v mod alpha_E along every edge.
GradedDims structure_sections(const MomentGraph& G, int degree_bound);

}  // namespace klsc

#endif  // KLSC_BMSHEAF_HPP
