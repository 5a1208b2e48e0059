#ifndef KLSC_SHEAF_HPP
#define KLSC_SHEAF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "klsc/graded.hpp"
#include "klsc/poset.hpp"

namespace klsc {

/// Degree-i data of the support of an element, handed to a LocalModel.
///
/// Support coordinates are the concatenation, over `elements()`, of the
/// degree-i coordinates of each stalk (free module, monomial basis).
template <class S>
class SupportView {
 public:
  const std::vector<int>& elements() const { return elements_; }
  const FreeLayout& layout(std::size_t k) const { return layouts_[k]; }
  Index offset(std::size_t k, int degree) const { return offsets_[static_cast<std::size_t>(degree)][k]; }
  Index dim(int degree) const { return offsets_[static_cast<std::size_t>(degree)].back(); }
  /// Independent spanning set of the sections over the support's upper
  /// closure, restricted to support coordinates.
  const std::vector<Vec<S>>& sections(int degree) const { return sections_[static_cast<std::size_t>(degree)]; }
  /// Element at which each section was created; the section vanishes outside
  /// the elements below it.
  const std::vector<int>& owners(int degree) const { return owners_[static_cast<std::size_t>(degree)]; }

 private:
  template <class>
  friend class SheafBuilder;
  std::vector<int> elements_;
  std::vector<FreeLayout> layouts_;
  std::vector<std::vector<Index>> offsets_;  // [degree][k], with a trailing total
  std::vector<std::vector<Vec<S>>> sections_;
  std::vector<std::vector<int>> owners_;
};

/// The boundary module in one degree: beta maps support coordinates onto
/// boundary coordinates, and `relations` span the part to be divided out.
template <class S>
struct Boundary {
  bool identity = true;  // beta = id on support coordinates
  SparseMat<S> beta;
  std::vector<Vec<S>> relations;
};

/// Per-instantiation data for the generic element-by-element construction.
template <class S>
class LocalModel {
 public:
  virtual ~LocalModel() = default;

  virtual std::shared_ptr<const RankedPoset> poset() const = 0;
  virtual FieldSpec field() const = 0;
  /// Number of variables of the base ring R_x.
  virtual int nvars(int x) const = 0;
  virtual int global_nvars() const = 0;
  /// Variable `var` of R_x acting on the stalk at y > x, as a linear form in
  /// the variables of R_y.
  virtual LinearForm<S> action(int x, int var, int y) const = 0;
  /// Global variable `var` acting on the stalk at y.
  virtual LinearForm<S> global_action(int var, int y) const = 0;
  /// Elements whose stalks determine the boundary module at x (all > x).
  virtual std::vector<int> boundary_support(int x) const = 0;
  virtual Boundary<S> boundary(int x, int degree, const SupportView<S>& view) const = 0;
  /// Top half-degree computed when the caller does not choose one.
  virtual int default_degree_bound() const;
};

struct BuildOptions {
  int degree_bound = -1;  // -1: model default
  /// Raise DegreeBoundError for generators in half-degree h with 2h >= r.
  /// Defaults to on over Q and off over F_p.
  std::optional<bool> enforce_degree_contract;
  /// Permute same-rank elements with this seed instead of ascending index.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Sheaf on a ranked poset built by minimal free covers and kernel gluing.
template <class S>
class PosetSheaf {
 public:
  const RankedPoset& poset() const { return *P_; }
  FieldSpec field() const { return field_; }
  int top_degree() const { return top_; }
  const std::vector<int>& processing_order() const { return order_; }

  const FreeModuleShape& stalk_shape(int x) const { return data_[static_cast<std::size_t>(x)].layout.shape; }
  /// Poincaré polynomial of the reduced stalk (half-degrees).
  UniPoly stalk_poincare(int x) const { return stalk_shape(x).poincare(); }
  Index stalk_dim(int x, int degree) const { return data_[static_cast<std::size_t>(x)].layout.dim(degree); }

  /// Basis of F(Q)_degree as columns in the coordinates of the stalks of Q
  /// (in the given order). Q must be an upper set.
  Mat<S> sections(const std::vector<int>& Q, int degree) const;
  GradedDims sections_dims(const std::vector<int>& Q) const;
  /// Generator degrees of F(Q) as a module over the global ring.
  FreeModuleShape sections_shape(const std::vector<int>& Q) const;
  UniPoly sections_poincare(const std::vector<int>& Q) const { return sections_shape(Q).poincare(); }

  /// F(Q)_degree computed from scratch as the solution space of the local
  /// gluing conditions (independent of the stored flow-up basis).
  Mat<S> sections_direct(const std::vector<int>& Q, int degree) const;

  /// Boundary module at x as a module over R_x. Requires beta = id.
  GradedModule<S> boundary_module(int x) const;

 private:
  template <class>
  friend class SheafBuilder;

  struct Element {
    FreeLayout layout;
    std::vector<int> support;
    std::vector<Mat<S>> blocks;        // [degree]: values of section columns 0..cols-1
    std::vector<Boundary<S>> boundary;  // [degree]
    std::vector<Mat<S>> cover;          // [degree]: boundary image of each stalk coordinate
    std::vector<LinearForm<S>> global_forms;
    std::vector<std::vector<SparseMat<S>>> support_action;  // [var][degree] on support coords
  };

  SparseMat<S> stalk_global_action(int x, int var, int degree) const;
  Mat<S> restrict_columns(const std::vector<int>& Q, int degree) const;
  Mat<S> stack_blocks(const std::vector<int>& elems, int degree) const;
  std::vector<Index> owned_columns(const std::vector<int>& Q, int degree) const;

  std::shared_ptr<const RankedPoset> P_;
  FieldSpec field_;
  int top_ = 0;
  int global_nvars_ = 0;
  std::vector<int> order_;
  std::vector<Element> data_;
  std::vector<Index> total_cols_;               // [degree]
  std::vector<std::vector<int>> col_owner_;  // [degree][column]: element that created it
};

template <class S>
PosetSheaf<S> build_sheaf(const LocalModel<S>& model, const BuildOptions& opts = {});

/// Matrix of multiplication by a linear form on a free module, degree i -> i+1.
template <class S>
SparseMat<S> free_module_multiplication(const FreeLayout& lay, const LinearForm<S>& form, int i);

}  // namespace klsc

#endif  // KLSC_SHEAF_HPP
