#ifndef KLSC_FAN_HPP
#define KLSC_FAN_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "klsc/kls.hpp"
#include "klsc/sheaf.hpp"

namespace klsc {

using RaySet = std::uint64_t;  // bitmask over ray indices

/// Rational polyhedral fan given by rays and maximal cones.
///
/// Cones are identified with their sets of rays. The poset view orders cones
/// by reverse inclusion and ranks them by maxdim - dim, so the largest cones
/// sit at the bottom and the zero cone at the top.
class Fan {
 public:
  /// Rays are rescaled to primitive integer vectors. Every listed cone must
  /// be pointed with all its rays extreme, and any two listed cones must meet
  /// in a common face (checked on ray sets).
  static Fan from_cones(int dim, std::vector<Vec<Rational>> rays, const std::vector<std::vector<int>>& max_cones);

  int ambient_dim() const { return d_; }
  const std::vector<Vec<Rational>>& rays() const { return rays_; }
  int size() const { return static_cast<int>(cones_.size()); }
  RaySet cone_rays(int c) const { return cones_[static_cast<std::size_t>(c)]; }
  int cone_dim(int c) const { return dims_[static_cast<std::size_t>(c)]; }
  /// Columns: independent rays of the cone spanning its linear span.
  const Mat<Rational>& span_basis(int c) const { return bases_[static_cast<std::size_t>(c)]; }
  /// Element index of the k-th input cone.
  int max_cone(std::size_t k) const { return max_[k]; }
  std::size_t max_cone_count() const { return max_.size(); }
  int zero_cone() const { return zero_; }
  int index_of(RaySet s) const;
  bool is_simplicial() const;

  std::shared_ptr<const RankedPoset> poset() const { return P_; }

  /// Matrix N with B_c N = B_f for a face f of c: coordinates on span(f)
  /// in terms of coordinates on span(c).
  Mat<Rational> restriction(int c, int f) const;

 private:
  int d_ = 0;
  std::vector<Vec<Rational>> rays_;
  std::vector<RaySet> cones_;
  std::vector<int> dims_;
  std::vector<Mat<Rational>> bases_;
  std::vector<int> max_;
  int zero_ = -1;
  std::shared_ptr<const RankedPoset> P_;
};

/// Faces of the cone spanned by `rays`, as ray subsets including the empty
/// set (the zero cone). Throws InputError for non-pointed cones or rays that
/// are not extreme.
std::vector<RaySet> cone_faces(const std::vector<Vec<Rational>>& rays, RaySet cone);

/// The cone generated by `rays` together with all its faces.
Fan face_lattice(int dim, std::vector<Vec<Rational>> rays);

/// Cone over P x {1} for a polytope given by its vertices.
Fan cone_over_polytope(const std::vector<Vec<Rational>>& vertices);

/// Conewise polynomial functions on a subfan (an upper set of the poset).
struct ConewiseSections {
  GradedDims dims;
  FreeModuleShape shape;  // generators over the ambient polynomial ring
  /// [degree]: basis columns in the coordinates of the maximal cones of the
  /// subfan, concatenated in `max_cones` order.
  std::vector<Mat<Rational>> bases;
  std::vector<int> max_cones;
};

ConewiseSections structure_sections(const Fan& F, const std::vector<int>& subfan, int degree_bound);

/// Fan IH sheaf model: R_tau = polynomial functions on span(tau), boundary
/// module = sections on the proper faces.
class FanModel : public LocalModel<Rational> {
 public:
  explicit FanModel(std::shared_ptr<const Fan> F);

  std::shared_ptr<const RankedPoset> poset() const override { return F_->poset(); }
  FieldSpec field() const override { return FieldSpec::rationals(); }
  int nvars(int x) const override { return F_->cone_dim(x); }
  int global_nvars() const override { return F_->ambient_dim(); }
  LinearForm<Rational> action(int x, int var, int y) const override;
  LinearForm<Rational> global_action(int var, int y) const override;
  std::vector<int> boundary_support(int x) const override;
  Boundary<Rational> boundary(int x, int degree, const SupportView<Rational>& view) const override;

 private:
  std::shared_ptr<const Fan> F_;
  std::vector<Mat<Rational>> restriction_;  // [x * size + y] for y a face of x
};

PosetSheaf<Rational> fan_ih(const Fan& F, const BuildOptions& opts = {});

/// g-polynomial of a polytope: the stalk at the full cone of the cone over it.
UniPoly g_polynomial(const std::vector<Vec<Rational>>& vertices, const BuildOptions& opts = {});

}  // namespace klsc

#endif  // KLSC_FAN_HPP
