#ifndef KLSC_LINALG_HPP
#define KLSC_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "klsc/scalar.hpp"

namespace klsc {

template <class S>
using SparseVec = std::vector<std::pair<Index, S>>;

template <class S>
SparseVec<S> to_sparse(const Vec<S>& v) {
  SparseVec<S> out;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

template <class S>
Vec<S> to_dense(const SparseVec<S>& v, Index dim) {
  Vec<S> out = Vec<S>::Zero(dim);
  for (const auto& [i, a] : v) out[i] = a;
  return out;
}

/// Incremental row echelon form of a growing list of vectors.
///
/// Vectors are inserted one at a time and reduced against the basis kept so
/// far; a vector that reduces to zero is dependent. When inserted with a
/// source id the basis remembers which combination of tracked sources each
/// basis vector equals (untracked insertions contribute nothing), which gives
/// kernels of the tracked columns and solutions of `reduce` queries at the
/// same time.
template <class S>
class Echelon {
 public:
  static constexpr int kUntracked = -1;

  explicit Echelon(Index dim) : dim_(dim) {}

  Index dim() const { return dim_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Result of reducing a vector against the basis.
  struct Reduction {
    Vec<S> residual;
    SparseVec<S> combination;  // v = residual + sum_j combination_j * source_j (+ untracked part)
    bool in_span() const {
      for (Index i = 0; i < residual.size(); ++i)
        if (!is_zero(residual[i])) return false;
      return true;
    }
  };

  /// Inserts `v`; returns true if it was independent. For a dependent
  /// tracked vector the relation among tracked sources (including `source`)
  /// is available from `last_relation()`.
  bool insert(Vec<S> w, int source = kUntracked) {
    check_dim(w);
    SparseVec<S> comb;
    if (source != kUntracked) comb.emplace_back(source, S(1));
    reduce_in_place(w, &comb, /*sign=*/-1);
    Index piv = first_nonzero(w);
    if (piv < 0) {
      last_relation_ = std::move(comb);
      return false;
    }
    S inv = S(1) / w[piv];
    Row row;
    row.pivot = piv;
    for (Index i = piv; i < w.size(); ++i)
      if (!is_zero(w[i])) row.entries.emplace_back(i, w[i] * inv);
    for (auto& c : comb) c.second *= inv;
    row.combination = std::move(comb);
    rows_.push_back(std::move(row));
    last_relation_.clear();
    return true;
  }

  const SparseVec<S>& last_relation() const { return last_relation_; }

  /// Reduces `v` modulo the span; the combination expresses v minus the
  /// residual in terms of tracked sources.
  Reduction reduce(Vec<S> v) const {
    check_dim(v);
    Reduction r;
    r.residual = std::move(v);
    reduce_in_place(r.residual, &r.combination, /*sign=*/1);
    return r;
  }

  bool contains(Vec<S> w) const {
    check_dim(w);
    reduce_in_place(w, nullptr, 1);
    return first_nonzero(w) < 0;
  }

  /// Basis vectors in insertion order (pivot-normalized, not fully reduced).
  Mat<S> basis() const {
    Mat<S> B = Mat<S>::Zero(dim_, rank());
    for (Index k = 0; k < rank(); ++k)
      for (const auto& [i, a] : rows_[k].entries) B(i, k) = a;
    return B;
  }

 private:
  struct Row {
    Index pivot = 0;
    SparseVec<S> entries;
    SparseVec<S> combination;
  };

  void check_dim(const Vec<S>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("Echelon: dimension mismatch");
  }

  static Index first_nonzero(const Vec<S>& w) {
    for (Index i = 0; i < w.size(); ++i)
      if (!is_zero(w[i])) return i;
    return -1;
  }

  // Each row is reduced only against earlier rows, so sequential elimination
  // in insertion order clears every pivot position.
  void reduce_in_place(Vec<S>& w, SparseVec<S>* comb, int sign) const {
    std::vector<std::pair<std::size_t, S>> used;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Row& row = rows_[k];
      if (is_zero(w[row.pivot])) continue;
      S a = w[row.pivot];
      for (const auto& [i, b] : row.entries) w[i] -= a * b;
      if (comb && !row.combination.empty()) used.emplace_back(k, std::move(a));
    }
    if (!comb || used.empty()) return;
    // Accumulate combinations densely by source id.
    int max_src = -1;
    for (const auto& c : *comb) max_src = std::max<int>(max_src, static_cast<int>(c.first));
    for (const auto& [k, a] : used)
      for (const auto& c : rows_[k].combination) max_src = std::max<int>(max_src, static_cast<int>(c.first));
    std::vector<S> acc(static_cast<std::size_t>(max_src + 1), S(0));
    std::vector<char> touched(acc.size(), 0);
    for (const auto& [j, a] : *comb) {
      acc[j] += a;
      touched[j] = 1;
    }
    for (const auto& [k, a] : used)
      for (const auto& [j, b] : rows_[k].combination) {
        if (sign < 0) acc[j] -= a * b;
        else acc[j] += a * b;
        touched[j] = 1;
      }
    comb->clear();
    for (std::size_t j = 0; j < acc.size(); ++j)
      if (touched[j] && !is_zero(acc[j])) comb->emplace_back(static_cast<Index>(j), acc[j]);
  }

  Index dim_;
  std::vector<Row> rows_;
  SparseVec<S> last_relation_;
};

template <class S>
Index rank(const Mat<S>& A) {
  Echelon<S> e(A.rows());
  for (Index j = 0; j < A.cols(); ++j) e.insert(A.col(j));
  return e.rank();
}

/// Basis of the null space as columns; zero columns means the zero space.
template <class S>
Mat<S> kernel(const Mat<S>& A) {
  Echelon<S> e(A.rows());
  std::vector<SparseVec<S>> rels;
  for (Index j = 0; j < A.cols(); ++j)
    if (!e.insert(A.col(j), static_cast<int>(j))) rels.push_back(e.last_relation());
  Mat<S> K = Mat<S>::Zero(A.cols(), static_cast<Index>(rels.size()));
  for (std::size_t k = 0; k < rels.size(); ++k)
    for (const auto& [i, a] : rels[k]) K(i, static_cast<Index>(k)) = a;
  return K;
}

/// Basis of the column space, chosen among the columns of A.
template <class S>
Mat<S> image(const Mat<S>& A) {
  Echelon<S> e(A.rows());
  std::vector<Index> keep;
  for (Index j = 0; j < A.cols(); ++j)
    if (e.insert(A.col(j))) keep.push_back(j);
  Mat<S> B(A.rows(), static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) B.col(static_cast<Index>(k)) = A.col(keep[k]);
  return B;
}

/// Some x with A x = b, or nullopt if the system is inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Mat<S>& A, const Vec<S>& b) {
  Echelon<S> e(A.rows());
  for (Index j = 0; j < A.cols(); ++j) e.insert(A.col(j), static_cast<int>(j));
  auto red = e.reduce(b);
  if (!red.in_span()) return std::nullopt;
  Vec<S> x = Vec<S>::Zero(A.cols());
  for (const auto& [j, a] : red.combination) x[j] = a;
  return x;
}

/// y = M x for a row-major sparse M, skipping zero entries of x.
template <class S>
Vec<S> apply(const SparseMat<S>& M, const Vec<S>& x) {
  Vec<S> y = Vec<S>::Zero(M.rows());
  for (Index r = 0; r < M.outerSize(); ++r) {
    S acc(0);
    for (typename SparseMat<S>::InnerIterator it(M, r); it; ++it)
      if (!is_zero(x[it.col()])) acc += it.value() * x[it.col()];
    y[r] = acc;
  }
  return y;
}

template <class S>
bool is_zero_vec(const Vec<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return false;
  return true;
}

}  // namespace klsc

#endif  // KLSC_LINALG_HPP
