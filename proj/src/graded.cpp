#include "klsc/graded.hpp"

#include <algorithm>
#include <sstream>

namespace klsc {

UniPoly poincare(const GradedDims& dims) { return UniPoly(std::vector<long long>(dims.begin(), dims.end())); }

FreeModuleShape::FreeModuleShape(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  for (int d : degrees_)
    if (d < 0) throw std::invalid_argument("FreeModuleShape: negative degree");
  std::sort(degrees_.begin(), degrees_.end());
}

void FreeModuleShape::add(int degree) {
  if (degree < 0) throw std::invalid_argument("FreeModuleShape: negative degree");
  degrees_.insert(std::upper_bound(degrees_.begin(), degrees_.end(), degree), degree);
}

UniPoly FreeModuleShape::poincare() const {
  UniPoly p;
  for (int d : degrees_) p += UniPoly::monomial(d);
  return p;
}

FreeModuleShape FreeModuleShape::shifted(int k) const {
  std::vector<int> d = degrees_;
  for (int& x : d) x += k;
  return FreeModuleShape(std::move(d));
}

std::string FreeModuleShape::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
  os << "}";
  return os.str();
}

Index FreeLayout::dim(int i) const {
  Index n = 0;
  for (int d : shape.degrees())
    if (d <= i) n += MonomialBasis::get(nvars, i - d).size();
  return n;
}

Index FreeLayout::offset(std::size_t g, int i) const {
  Index n = 0;
  for (std::size_t h = 0; h < g; ++h) {
    int d = shape.degrees()[h];
    if (d <= i) n += MonomialBasis::get(nvars, i - d).size();
  }
  return n;
}

template <class S>
GradedModule<S>::GradedModule(int nvars, FieldSpec field, int top_degree)
    : nvars_(nvars), field_(field), top_(top_degree),
      basis_(static_cast<std::size_t>(top_degree) + 1),
      actions_(static_cast<std::size_t>(nvars), std::vector<SparseMat<S>>(static_cast<std::size_t>(top_degree))) {}

template <class S>
GradedModule<S> GradedModule<S>::free(int nvars, FieldSpec field, const FreeModuleShape& shape, int top_degree) {
  GradedModule M(nvars, field, top_degree);
  FreeLayout lay{nvars, shape};
  for (int i = 0; i <= top_degree; ++i) {
    Index n = lay.dim(i);
    Mat<S> id = Mat<S>::Zero(n, n);
    for (Index k = 0; k < n; ++k) id(k, k) = scalar_from_int<S>(1, field);
    M.set_degree(i, std::move(id));
  }
  for (int v = 0; v < nvars; ++v) {
    LinearForm<S> e = LinearForm<S>::Zero(nvars);
    e[v] = scalar_from_int<S>(1, field);
    for (int i = 0; i < top_degree; ++i) {
      std::vector<Eigen::Triplet<S>> trip;
      for (std::size_t g = 0; g < shape.size(); ++g) {
        int d = shape.degrees()[g];
        if (d > i) continue;
        SparseMat<S> m = multiplication_matrix<S>(e, i - d);
        Index r0 = lay.offset(g, i + 1), c0 = lay.offset(g, i);
        for (Index r = 0; r < m.outerSize(); ++r)
          for (typename SparseMat<S>::InnerIterator it(m, r); it; ++it) trip.emplace_back(r0 + r, c0 + it.col(), it.value());
      }
      SparseMat<S> A(lay.dim(i + 1), lay.dim(i));
      A.setFromTriplets(trip.begin(), trip.end());
      M.set_action(v, i, std::move(A));
    }
  }
  return M;
}

template <class S>
void GradedModule<S>::set_degree(int i, Mat<S> basis) {
  if (i < 0 || i > top_) throw std::out_of_range("GradedModule: degree out of range");
  basis_[static_cast<std::size_t>(i)] = std::move(basis);
}

template <class S>
void GradedModule<S>::set_action(int v, int i, SparseMat<S> map) {
  if (v < 0 || v >= nvars_ || i < 0 || i >= top_) throw std::out_of_range("GradedModule: action index out of range");
  actions_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = std::move(map);
}

template <class S>
GradedDims GradedModule<S>::dims() const {
  GradedDims d;
  for (const auto& B : basis_) d.push_back(static_cast<long long>(rank(B)));
  return d;
}

template <class S>
bool GradedModule<S>::is_consistent() const {
  for (int i = 0; i < top_; ++i) {
    Echelon<S> target(ambient_dim(i + 1));
    const Mat<S>& B1 = basis(i + 1);
    for (Index j = 0; j < B1.cols(); ++j) target.insert(B1.col(j));
    const Mat<S>& B = basis(i);
    for (int v = 0; v < nvars_; ++v)
      for (Index j = 0; j < B.cols(); ++j)
        if (!target.contains(apply<S>(action(v, i), B.col(j)))) return false;
  }
  return true;
}

template <class S>
FreeModuleShape minimal_generator_degrees(const GradedModule<S>& M) {
  FreeModuleShape shape;
  for (int i = 0; i <= M.top_degree(); ++i) {
    Echelon<S> e(M.ambient_dim(i));
    if (i > 0) {
      const Mat<S>& prev = M.basis(i - 1);
      for (int v = 0; v < M.nvars(); ++v)
        for (Index j = 0; j < prev.cols(); ++j) e.insert(apply<S>(M.action(v, i - 1), prev.col(j)));
    }
    Index base = e.rank();
    const Mat<S>& B = M.basis(i);
    for (Index j = 0; j < B.cols(); ++j) e.insert(B.col(j));
    for (Index k = base; k < e.rank(); ++k) shape.add(i);
    if (e.rank() > base && i == M.top_degree())
      throw TruncationError("generator at truncation degree " + std::to_string(i) + "; raise the degree bound");
  }
  return shape;
}

template class GradedModule<Rational>;
template class GradedModule<Fp>;
template FreeModuleShape minimal_generator_degrees(const GradedModule<Rational>&);
template FreeModuleShape minimal_generator_degrees(const GradedModule<Fp>&);

}  // namespace klsc
