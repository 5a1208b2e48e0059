#include "klsc/sheaf.hpp"

#include <algorithm>
#include <climits>
#include <random>

#include "klsc/errors.hpp"

namespace klsc {

template <class S>
int LocalModel<S>::default_degree_bound() const {
  const RankedPoset& P = *poset();
  int lo = INT_MAX, hi = 0;
  for (int x = 0; x < P.size(); ++x) {
    lo = std::min(lo, P.rank(x));
    hi = std::max(hi, P.rank(x));
  }
  return P.size() == 0 ? 1 : hi - lo + 1;
}

template <class S>
SparseMat<S> free_module_multiplication(const FreeLayout& lay, const LinearForm<S>& form, int i) {
  std::vector<Eigen::Triplet<S>> trip;
  for (std::size_t g = 0; g < lay.shape.size(); ++g) {
    const int d = lay.shape.degrees()[g];
    if (d > i) continue;
    SparseMat<S> m = multiplication_matrix<S>(form, i - d);
    const Index r0 = lay.offset(g, i + 1), c0 = lay.offset(g, i);
    for (Index r = 0; r < m.outerSize(); ++r)
      for (typename SparseMat<S>::InnerIterator it(m, r); it; ++it) trip.emplace_back(r0 + r, c0 + it.col(), it.value());
  }
  SparseMat<S> M(lay.dim(i + 1), lay.dim(i));
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

namespace {

template <class S>
SparseMat<S> block_diagonal(const std::vector<SparseMat<S>>& blocks) {
  Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  std::vector<Eigen::Triplet<S>> trip;
  Index r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (Index r = 0; r < b.outerSize(); ++r)
      for (typename SparseMat<S>::InnerIterator it(b, r); it; ++it) trip.emplace_back(r0 + r, c0 + it.col(), it.value());
    r0 += b.rows();
    c0 += b.cols();
  }
  SparseMat<S> M(rows, cols);
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

template <class S>
SparseMat<S> to_sparse_mat(const Mat<S>& A) {
  std::vector<Eigen::Triplet<S>> trip;
  for (Index r = 0; r < A.rows(); ++r)
    for (Index c = 0; c < A.cols(); ++c)
      if (!is_zero(A(r, c))) trip.emplace_back(r, c, A(r, c));
  SparseMat<S> M(A.rows(), A.cols());
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

template <class S>
Vec<S> zero_vec(Index n) {
  return Vec<S>::Zero(n);
}

}  // namespace

template <class S>
class SheafBuilder {
 public:
  static PosetSheaf<S> run(const LocalModel<S>& model, const BuildOptions& opts);
};

template <class S>
PosetSheaf<S> SheafBuilder<S>::run(const LocalModel<S>& model, const BuildOptions& opts) {
  using Element = typename PosetSheaf<S>::Element;
  PosetSheaf<S> sh;
  sh.P_ = model.poset();
  const RankedPoset& P = *sh.P_;
  const int n = P.size();
  sh.field_ = model.field();
  FieldScope scope(sh.field_);
  sh.top_ = opts.degree_bound >= 0 ? opts.degree_bound : model.default_degree_bound();
  sh.global_nvars_ = model.global_nvars();
  const int D = sh.top_;
  const bool enforce = opts.enforce_degree_contract.value_or(sh.field_.is_rational());

  sh.order_ = P.top_down_order();
  if (opts.shuffle_seed) {
    std::mt19937_64 rng(*opts.shuffle_seed);
    for (std::size_t i = 0; i < sh.order_.size();) {
      std::size_t j = i;
      while (j < sh.order_.size() && P.rank(sh.order_[j]) == P.rank(sh.order_[i])) ++j;
      std::shuffle(sh.order_.begin() + static_cast<long>(i), sh.order_.begin() + static_cast<long>(j), rng);
      i = j;
    }
  }

  std::vector<int> gap(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (P.leq(x, y)) gap[static_cast<std::size_t>(x)] = std::max(gap[static_cast<std::size_t>(x)], P.rank(y) - P.rank(x));

  sh.data_.assign(static_cast<std::size_t>(n), Element{});
  sh.total_cols_.assign(static_cast<std::size_t>(D) + 1, 0);
  sh.col_owner_.assign(static_cast<std::size_t>(D) + 1, {});
  std::vector<char> done(static_cast<std::size_t>(n), 0);

  for (int x : sh.order_) {
    Element& ex = sh.data_[static_cast<std::size_t>(x)];
    const int nx = model.nvars(x);
    ex.layout.nvars = nx;
    ex.support = model.boundary_support(x);
    for (int y : ex.support)
      if (!P.less(x, y) || !done[static_cast<std::size_t>(y)])
        throw std::logic_error("boundary support of " + P.name(x) + " must consist of processed elements above it");
    for (int u = 0; u < sh.global_nvars_; ++u) ex.global_forms.push_back(model.global_action(u, x));

    // Support layout and restricted sections.
    SupportView<S> view;
    view.elements_ = ex.support;
    for (int y : ex.support) view.layouts_.push_back(sh.data_[static_cast<std::size_t>(y)].layout);
    view.offsets_.resize(static_cast<std::size_t>(D) + 1);
    view.sections_.resize(static_cast<std::size_t>(D) + 1);
    view.owners_.resize(static_cast<std::size_t>(D) + 1);
    // A column is nonzero only below the element that created it, so only
    // columns created strictly above x can be nonzero on the support. Those
    // are independent on the upper set (flow-up form), so no elimination is
    // needed when the support is the whole strict upper set.
    const std::vector<int> upper = P.strict_upper_set(x);
    std::vector<char> in_upper(static_cast<std::size_t>(n), 0);
    for (int y : upper) in_upper[static_cast<std::size_t>(y)] = 1;
    const bool full_support = upper.size() == ex.support.size();
    std::vector<std::vector<Index>> relevant(static_cast<std::size_t>(D) + 1);
    std::vector<std::vector<Vec<S>>> restricted(static_cast<std::size_t>(D) + 1);
    for (int i = 0; i <= D; ++i) {
      auto& off = view.offsets_[static_cast<std::size_t>(i)];
      off.push_back(0);
      for (const auto& lay : view.layouts_) off.push_back(off.back() + lay.dim(i));
      const Index sdim = off.back();
      const auto& owner = sh.col_owner_[static_cast<std::size_t>(i)];
      auto& rel = relevant[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < owner.size(); ++j)
        if (in_upper[static_cast<std::size_t>(owner[j])]) rel.push_back(static_cast<Index>(j));
      auto& rc = restricted[static_cast<std::size_t>(i)];
      rc.assign(rel.size(), zero_vec<S>(sdim));
      for (std::size_t k = 0; k < ex.support.size(); ++k) {
        const Mat<S>& blk = sh.data_[static_cast<std::size_t>(ex.support[k])].blocks[static_cast<std::size_t>(i)];
        for (std::size_t r = 0; r < rel.size(); ++r)
          if (rel[r] < blk.cols()) rc[r].segment(off[k], blk.rows()) = blk.col(rel[r]);
      }
      auto& secs = view.sections_[static_cast<std::size_t>(i)];
      auto& owns = view.owners_[static_cast<std::size_t>(i)];
      if (full_support) {
        secs = std::move(rc);
        for (Index j : rel) owns.push_back(owner[static_cast<std::size_t>(j)]);
      } else {
        Echelon<S> e(sdim);
        for (std::size_t r = 0; r < rc.size(); ++r)
          if (e.insert(rc[r])) {
            secs.push_back(rc[r]);
            owns.push_back(owner[static_cast<std::size_t>(rel[r])]);
          }
      }
    }

    // Action of R_x on support coordinates.
    ex.support_action.assign(static_cast<std::size_t>(nx), {});
    for (int v = 0; v < nx; ++v)
      for (int i = 0; i < D; ++i) {
        std::vector<SparseMat<S>> blocks;
        for (std::size_t k = 0; k < ex.support.size(); ++k)
          blocks.push_back(free_module_multiplication<S>(view.layouts_[k], model.action(x, v, ex.support[k]), i));
        ex.support_action[static_cast<std::size_t>(v)].push_back(block_diagonal(blocks));
      }

    // Generator lifts: lifts[g][k] holds mu * lift_g for monomials mu of degree k.
    std::vector<std::vector<std::vector<Vec<S>>>> lifts;
    std::vector<int> gen_deg;
    ex.boundary.resize(static_cast<std::size_t>(D) + 1);
    ex.cover.resize(static_cast<std::size_t>(D) + 1);
    ex.blocks.resize(static_cast<std::size_t>(D) + 1);

    for (int i = 0; i <= D; ++i) {
      const Index sdim = view.dim(i);
      Boundary<S> bd;
      if (!ex.support.empty()) bd = model.boundary(x, i, view);
      if (!bd.identity && (bd.beta.cols() != sdim)) throw std::logic_error("boundary map has wrong source dimension");
      const Index tdim = ex.support.empty() ? 0 : (bd.identity ? sdim : bd.beta.rows());
      auto beta = [&](Vec<S> s) -> Vec<S> {
        if (bd.identity) return s;
        return apply<S>(bd.beta, s);
      };

      // New generators in degree i.
      if (ex.support.empty()) {
        if (i == 0) {
          gen_deg.push_back(0);
          lifts.push_back({{zero_vec<S>(0)}});
        }
      } else {
        Echelon<S> E(tdim);
        for (const auto& y : bd.relations) E.insert(y);
        if (i > 0)
          for (int v = 0; v < nx; ++v)
            for (const auto& f : view.sections(i - 1))
              E.insert(beta(apply<S>(ex.support_action[static_cast<std::size_t>(v)][static_cast<std::size_t>(i - 1)], f)));
        for (const auto& f : view.sections(i)) {
          if (!E.insert(beta(f))) continue;
          const int r = gap[static_cast<std::size_t>(x)];
          if (enforce && r > 0 && 2 * i >= r)
            throw DegreeBoundError("boundary module at " + P.name(x) + " has a generator in half-degree " +
                                       std::to_string(i) + " but the rank gap is " + std::to_string(r),
                                   x, i, r);
          if (i == D)
            throw TruncationError("generator of the boundary module at " + P.name(x) +
                                  " found at the degree bound " + std::to_string(D) + "; raise the degree bound");
          gen_deg.push_back(i);
          lifts.push_back({{f}});
        }
      }
      ex.layout.shape = FreeModuleShape(gen_deg);

      // Extend lifts to degree i.
      for (std::size_t g = 0; g < lifts.size(); ++g) {
        const int k = i - gen_deg[g];
        if (k <= 0) continue;
        const auto& mono = MonomialBasis::get(nx, k);
        const auto& prev_mono = MonomialBasis::get(nx, k - 1);
        std::vector<Vec<S>> next;
        next.reserve(static_cast<std::size_t>(mono.size()));
        for (Index m = 0; m < mono.size(); ++m) {
          Exponent e = mono[m];
          int v = 0;
          while (e[static_cast<std::size_t>(v)] == 0) ++v;
          --e[static_cast<std::size_t>(v)];
          const Vec<S>& base = lifts[g][static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(prev_mono.index_of(e))];
          next.push_back(apply<S>(ex.support_action[static_cast<std::size_t>(v)][static_cast<std::size_t>(i - 1)], base));
        }
        lifts[g].push_back(std::move(next));
      }

      // Cover map in degree i, in stalk coordinate order.
      const Index mdim = ex.layout.dim(i);
      Mat<S> W(tdim, mdim);
      {
        Index c = 0;
        for (std::size_t g = 0; g < lifts.size(); ++g) {
          const int k = i - gen_deg[g];
          if (k < 0) continue;
          for (const auto& s : lifts[g][static_cast<std::size_t>(k)]) W.col(c++) = ex.support.empty() ? zero_vec<S>(0) : beta(s);
        }
      }

      // Glue: lift old columns, append the kernel of the cover modulo relations.
      Echelon<S> C(tdim);
      for (const auto& y : bd.relations) C.insert(y);
      std::vector<SparseVec<S>> kernel_rel;
      for (Index j = 0; j < mdim; ++j)
        if (!C.insert(W.col(j), static_cast<int>(j))) kernel_rel.push_back(C.last_relation());
      const Index old_cols = sh.total_cols_[static_cast<std::size_t>(i)];
      Mat<S> block = Mat<S>::Zero(mdim, old_cols + static_cast<Index>(kernel_rel.size()));
      const auto& rc = full_support ? view.sections(i) : restricted[static_cast<std::size_t>(i)];
      const auto& rel = relevant[static_cast<std::size_t>(i)];
      for (std::size_t r = 0; r < rel.size(); ++r) {
        const Vec<S>& s = rc[r];
        if (is_zero_vec(s)) continue;
        auto red = C.reduce(beta(s));
        if (!red.in_span())
          throw ConsistencyError("cover at " + P.name(x) + " does not surject onto the boundary in degree " +
                                 std::to_string(i));
        for (const auto& [idx, a] : red.combination) block(idx, rel[r]) = a;
      }
      for (std::size_t k = 0; k < kernel_rel.size(); ++k)
        for (const auto& [idx, a] : kernel_rel[k]) block(idx, old_cols + static_cast<Index>(k)) = a;
      sh.total_cols_[static_cast<std::size_t>(i)] += static_cast<Index>(kernel_rel.size());
      sh.col_owner_[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(sh.total_cols_[static_cast<std::size_t>(i)]), x);
      ex.blocks[static_cast<std::size_t>(i)] = std::move(block);
      ex.cover[static_cast<std::size_t>(i)] = std::move(W);
      ex.boundary[static_cast<std::size_t>(i)] = std::move(bd);
    }
    ex.layout.shape = FreeModuleShape(gen_deg);
    done[static_cast<std::size_t>(x)] = 1;
  }
  return sh;
}

template <class S>
PosetSheaf<S> build_sheaf(const LocalModel<S>& model, const BuildOptions& opts) {
  return SheafBuilder<S>::run(model, opts);
}

template <class S>
Mat<S> PosetSheaf<S>::restrict_columns(const std::vector<int>& Q, int degree) const {
  if (!P_->is_upper_set(Q)) throw std::invalid_argument("sections: not an upper set");
  if (degree < 0 || degree > top_) throw std::out_of_range("sections: degree beyond the computed range");
  return stack_blocks(Q, degree);
}

template <class S>
Mat<S> PosetSheaf<S>::stack_blocks(const std::vector<int>& Q, int degree) const {
  const Index cols = total_cols_[static_cast<std::size_t>(degree)];
  Index rows = 0;
  for (int y : Q) rows += stalk_dim(y, degree);
  Mat<S> M = Mat<S>::Zero(rows, cols);
  Index r0 = 0;
  for (int y : Q) {
    const Mat<S>& blk = data_[static_cast<std::size_t>(y)].blocks[static_cast<std::size_t>(degree)];
    M.block(r0, 0, blk.rows(), blk.cols()) = blk;
    r0 += blk.rows();
  }
  return M;
}

template <class S>
std::vector<Index> PosetSheaf<S>::owned_columns(const std::vector<int>& Q, int degree) const {
  std::vector<char> in(static_cast<std::size_t>(P_->size()), 0);
  for (int y : Q) in[static_cast<std::size_t>(y)] = 1;
  std::vector<Index> out;
  const auto& owner = col_owner_[static_cast<std::size_t>(degree)];
  for (std::size_t j = 0; j < owner.size(); ++j)
    if (in[static_cast<std::size_t>(owner[j])]) out.push_back(static_cast<Index>(j));
  return out;
}

// Columns created outside Q vanish on Q, and those created inside are
// triangular with respect to the processing order, so they form a basis.
template <class S>
Mat<S> PosetSheaf<S>::sections(const std::vector<int>& Q, int degree) const {
  FieldScope scope(field_);
  Mat<S> all = restrict_columns(Q, degree);
  const std::vector<Index> own = owned_columns(Q, degree);
  Mat<S> M(all.rows(), static_cast<Index>(own.size()));
  for (std::size_t k = 0; k < own.size(); ++k) M.col(static_cast<Index>(k)) = all.col(own[k]);
  return M;
}

template <class S>
GradedDims PosetSheaf<S>::sections_dims(const std::vector<int>& Q) const {
  FieldScope scope(field_);
  GradedDims d;
  if (!P_->is_upper_set(Q)) throw std::invalid_argument("sections: not an upper set");
  for (int i = 0; i <= top_; ++i) d.push_back(static_cast<long long>(owned_columns(Q, i).size()));
  return d;
}

template <class S>
SparseMat<S> PosetSheaf<S>::stalk_global_action(int x, int var, int degree) const {
  const Element& e = data_[static_cast<std::size_t>(x)];
  return free_module_multiplication<S>(e.layout, e.global_forms[static_cast<std::size_t>(var)], degree);
}

template <class S>
FreeModuleShape PosetSheaf<S>::sections_shape(const std::vector<int>& Q) const {
  FieldScope scope(field_);
  FreeModuleShape shape;
  Mat<S> prev;
  for (int i = 0; i <= top_; ++i) {
    Mat<S> cur = sections(Q, i);
    Echelon<S> E(cur.rows());
    if (i > 0) {
      for (int u = 0; u < global_nvars_; ++u) {
        std::vector<SparseMat<S>> blocks;
        for (int y : Q) blocks.push_back(stalk_global_action(y, u, i - 1));
        SparseMat<S> G = block_diagonal(blocks);
        for (Index j = 0; j < prev.cols(); ++j) E.insert(apply<S>(G, Vec<S>(prev.col(j))));
      }
    }
    const Index base = E.rank();
    for (Index j = 0; j < cur.cols(); ++j) E.insert(cur.col(j));
    for (Index k = base; k < E.rank(); ++k) shape.add(i);
    if (E.rank() > base && i == top_)
      throw TruncationError("section generator at the degree bound " + std::to_string(top_) + "; raise the degree bound");
    prev = std::move(cur);
  }
  return shape;
}

template <class S>
Mat<S> PosetSheaf<S>::sections_direct(const std::vector<int>& Q, int degree) const {
  FieldScope scope(field_);
  if (!P_->is_upper_set(Q)) throw std::invalid_argument("sections_direct: not an upper set");
  const int i = degree;
  std::vector<Index> moff(static_cast<std::size_t>(P_->size()), -1);
  Index mdim = 0;
  for (int y : Q) {
    moff[static_cast<std::size_t>(y)] = mdim;
    mdim += stalk_dim(y, i);
  }
  Index rows = 0, lambdas = 0;
  for (int y : Q) {
    const Element& e = data_[static_cast<std::size_t>(y)];
    rows += e.cover[static_cast<std::size_t>(i)].rows();
    lambdas += static_cast<Index>(e.boundary[static_cast<std::size_t>(i)].relations.size());
  }
  Mat<S> A = Mat<S>::Zero(rows, mdim + lambdas);
  Index r0 = 0, l0 = mdim;
  for (int y : Q) {
    const Element& e = data_[static_cast<std::size_t>(y)];
    const Mat<S>& W = e.cover[static_cast<std::size_t>(i)];
    const Boundary<S>& bd = e.boundary[static_cast<std::size_t>(i)];
    if (W.rows() == 0) continue;
    A.block(r0, moff[static_cast<std::size_t>(y)], W.rows(), W.cols()) = W;
    // Support coordinates -> positions of the support stalks in Q.
    std::vector<Index> scol;
    for (int s : e.support) {
      if (moff[static_cast<std::size_t>(s)] < 0) throw std::logic_error("sections_direct: support outside Q");
      for (Index k = 0; k < stalk_dim(s, i); ++k) scol.push_back(moff[static_cast<std::size_t>(s)] + k);
    }
    if (bd.identity) {
      for (std::size_t k = 0; k < scol.size(); ++k) A(r0 + static_cast<Index>(k), scol[k]) -= S(1);
    } else {
      for (Index r = 0; r < bd.beta.outerSize(); ++r)
        for (typename SparseMat<S>::InnerIterator it(bd.beta, r); it; ++it)
          A(r0 + r, scol[static_cast<std::size_t>(it.col())]) -= it.value();
    }
    for (const auto& y_rel : bd.relations) {
      A.block(r0, l0, W.rows(), 1) = -y_rel;
      ++l0;
    }
    r0 += W.rows();
  }
  Mat<S> K = kernel(A);
  return image(Mat<S>(K.topRows(mdim)));
}

template <class S>
GradedModule<S> PosetSheaf<S>::boundary_module(int x) const {
  FieldScope scope(field_);
  const Element& e = data_[static_cast<std::size_t>(x)];
  const int nx = e.layout.nvars;
  GradedModule<S> M(nx, field_, top_);
  std::vector<Mat<S>> proj;
  for (int i = 0; i <= top_; ++i) {
    const Boundary<S>& bd = e.boundary[static_cast<std::size_t>(i)];
    if (!bd.identity) throw std::logic_error("boundary_module: boundary map is not the identity");
    Index sdim = 0;
    for (int s : e.support) sdim += stalk_dim(s, i);
    // Projection with kernel spanned by the relations.
    Echelon<S> Y(sdim);
    for (const auto& y : bd.relations) Y.insert(y);
    Mat<S> Pm(sdim, sdim);
    for (Index k = 0; k < sdim; ++k) {
      Vec<S> unit = Vec<S>::Zero(sdim);
      unit[k] = S(1);
      Pm.col(k) = Y.reduce(unit).residual;
    }
    Mat<S> Fs = stack_blocks(e.support, i);
    M.set_degree(i, Pm * Fs);
    proj.push_back(std::move(Pm));
  }
  for (int v = 0; v < nx; ++v)
    for (int i = 0; i < top_; ++i) {
      Mat<S> A = proj[static_cast<std::size_t>(i) + 1] * Mat<S>(e.support_action[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)]);
      M.set_action(v, i, to_sparse_mat(A));
    }
  return M;
}

template class LocalModel<Rational>;
template class LocalModel<Fp>;
template class PosetSheaf<Rational>;
template class PosetSheaf<Fp>;
template PosetSheaf<Rational> build_sheaf(const LocalModel<Rational>&, const BuildOptions&);
template PosetSheaf<Fp> build_sheaf(const LocalModel<Fp>&, const BuildOptions&);
template SparseMat<Rational> free_module_multiplication(const FreeLayout&, const LinearForm<Rational>&, int);
template SparseMat<Fp> free_module_multiplication(const FreeLayout&, const LinearForm<Fp>&, int);

}  // namespace klsc
