#ifndef KLSC_GRADED_HPP
#define KLSC_GRADED_HPP

#include <vector>

#include "klsc/errors.hpp"
#include "klsc/poly.hpp"

namespace klsc {

/// Dimension in each half-degree, starting at 0.
using GradedDims = std::vector<long long>;

UniPoly poincare(const GradedDims& dims);

/// Multiset of generator half-degrees, kept sorted.
class FreeModuleShape {
 public:
  FreeModuleShape() = default;
  explicit FreeModuleShape(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  bool empty() const { return degrees_.empty(); }
  void add(int degree);
  /// Generating function of the generators: sum t^{d_g}.
  UniPoly poincare() const;
  FreeModuleShape shifted(int k) const;
  std::string str() const;

  friend bool operator==(const FreeModuleShape& a, const FreeModuleShape& b) {
    return a.degrees_ == b.degrees_;
  }
  friend bool operator!=(const FreeModuleShape& a, const FreeModuleShape& b) { return !(a == b); }

 private:
  std::vector<int> degrees_;
};

/// Coordinates of a free module over K[x_1..x_n] in one degree: generator
/// blocks in shape order, each holding the monomials of degree i - d_g.
struct FreeLayout {
  int nvars = 0;
  FreeModuleShape shape;

  Index dim(int i) const;
  Index offset(std::size_t g, int i) const;
};

/// Finitely generated graded module over K[x_1..x_n], realized degreewise
/// as a subspace of an ambient coordinate space up to a truncation degree.
template <class S>
class GradedModule {
 public:
  GradedModule(int nvars, FieldSpec field, int top_degree);

  /// Free module with the given shape in monomial coordinates.
  static GradedModule free(int nvars, FieldSpec field, const FreeModuleShape& shape, int top_degree);

  int nvars() const { return nvars_; }
  const FieldSpec& field() const { return field_; }
  int top_degree() const { return top_; }

  /// Columns of `basis` span the degree-i part inside K^{basis.rows()}.
  void set_degree(int i, Mat<S> basis);
  /// Action of variable v from ambient degree i to ambient degree i + 1.
  void set_action(int v, int i, SparseMat<S> map);

  Index ambient_dim(int i) const { return basis_[static_cast<std::size_t>(i)].rows(); }
  const Mat<S>& basis(int i) const { return basis_[static_cast<std::size_t>(i)]; }
  const SparseMat<S>& action(int v, int i) const {
    return actions_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
  }

  GradedDims dims() const;
  /// Every x_v maps the degree-i subspace into the degree-(i+1) subspace.
  bool is_consistent() const;

 private:
  int nvars_;
  FieldSpec field_;
  int top_;
  std::vector<Mat<S>> basis_;
  std::vector<std::vector<SparseMat<S>>> actions_;
};

/// Shape of the minimal free cover: dim M_i / sum_v x_v M_{i-1} for each i.
/// Throws TruncationError if a generator sits at the top degree.
template <class S>
FreeModuleShape minimal_generator_degrees(const GradedModule<S>& M);

}  // namespace klsc

#endif  // KLSC_GRADED_HPP
