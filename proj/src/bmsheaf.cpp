#include "klsc/bmsheaf.hpp"

#include <algorithm>
#include <numeric>

#include "klsc/errors.hpp"

namespace klsc {

namespace {

/// Ring map K[x_1..x_n] -> K[y_1..y_{n-1}] with kernel (alpha): x_j goes to
/// -sum_{l != j} (alpha_l / alpha_j) y_l for a pivot j, preferring alpha_j = +-1.
template <class S>
Mat<S> quotient_substitution(const LinearForm<S>& alpha, const FieldSpec& field) {
  const Index n = alpha.size();
  const S one = scalar_from_int<S>(1, field), minus_one = scalar_from_int<S>(-1, field);
  Index j = -1;
  for (Index l = 0; l < n && j < 0; ++l)
    if (alpha[l] == one || alpha[l] == minus_one) j = l;
  for (Index l = 0; l < n && j < 0; ++l)
    if (!is_zero(alpha[l])) j = l;
  if (j < 0) throw InputError("char", "edge label vanishes in the coefficient field");
  Mat<S> M = Mat<S>::Zero(n, n - 1);
  for (Index l = 0, c = 0; l < n; ++l) {
    if (l == j) continue;
    M(l, c) = one;
    M(j, c) = -alpha[l] / alpha[j];
    ++c;
  }
  return M;
}

}  // namespace

template <class S>
BMModel<S>::BMModel(std::shared_ptr<const MomentGraph> G, FieldSpec field)
    : G_(std::move(G)), field_(field), n_(G_->interval.W->rank()) {
  FieldScope scope(field_);
  up_.assign(static_cast<std::size_t>(G_->size()), {});
  lab_.assign(static_cast<std::size_t>(G_->size()), {});
  sub_.assign(static_cast<std::size_t>(G_->size()), {});
  for (int x = 0; x < G_->size(); ++x) {
    std::vector<int> es = G_->up_edges(x);
    std::sort(es.begin(), es.end(), [&](int a, int b) {
      return G_->edges[static_cast<std::size_t>(a)].hi < G_->edges[static_cast<std::size_t>(b)].hi;
    });
    for (int e : es) {
      const MomentEdge& E = G_->edges[static_cast<std::size_t>(e)];
      up_[static_cast<std::size_t>(x)].push_back(E.hi);
      LinearForm<S> f(n_);
      for (int j = 0; j < n_; ++j) f[j] = scalar_from_int<S>(E.label[static_cast<std::size_t>(j)], field_);
      sub_[static_cast<std::size_t>(x)].push_back(quotient_substitution(f, field_));
      lab_[static_cast<std::size_t>(x)].push_back(std::move(f));
    }
  }
}

template <class S>
LinearForm<S> BMModel<S>::action(int, int var, int) const {
  LinearForm<S> f(n_);
  for (int j = 0; j < n_; ++j) f[j] = scalar_from_int<S>(j == var ? 1 : 0, field_);
  return f;
}

template <class S>
std::vector<int> BMModel<S>::boundary_support(int x) const {
  return up_[static_cast<std::size_t>(x)];
}

template <class S>
Boundary<S> BMModel<S>::boundary(int x, int degree, const SupportView<S>& view) const {
  // M_u / alpha_E M_u is free over R / alpha_E; eliminating one variable
  // identifies it with a free module over the remaining ones.
  Boundary<S> bd;
  bd.identity = false;
  std::vector<Eigen::Triplet<S>> trip;
  Index r0 = 0;
  for (std::size_t k = 0; k < view.elements().size(); ++k) {
    const FreeLayout& lay = view.layout(k);
    const Mat<S>& sub = sub_[static_cast<std::size_t>(x)][k];
    for (std::size_t g = 0; g < lay.shape.size(); ++g) {
      const int d = lay.shape.degrees()[g];
      if (d > degree) continue;
      const SparseMat<S> m = substitution_matrix<S>(sub, degree - d);
      const Index c0 = view.offset(k, degree) + lay.offset(g, degree);
      for (Index r = 0; r < m.outerSize(); ++r)
        for (typename SparseMat<S>::InnerIterator it(m, r); it; ++it) trip.emplace_back(r0 + r, c0 + it.col(), it.value());
      r0 += m.rows();
    }
  }
  bd.beta = SparseMat<S>(r0, view.dim(degree));
  bd.beta.setFromTriplets(trip.begin(), trip.end());
  return bd;
}

template <class S>
int BMModel<S>::default_degree_bound() const {
  const BruhatInterval& I = G_->interval;
  const int top = I.elements[static_cast<std::size_t>(I.top)].length();
  if (!field_.is_rational()) return std::max(1, 2 * top);
  // A generator in half-degree h needs 2h < r, so one at ceil(r/2) already
  // raises DegreeBoundError.
  const int r = top - I.elements[static_cast<std::size_t>(I.bottom)].length();
  return std::max(1, (r + 1) / 2);
}

template <class S>
PosetSheaf<S> bm_sheaf(std::shared_ptr<const MomentGraph> G, FieldSpec field, const BuildOptions& opts) {
  if (!field.is_rational()) {
    GkmResult g = p_gkm_check(*G, field.characteristic);
    if (!g.ok)
      throw InputError("char", "moment graph is not " + std::to_string(field.characteristic) + "-GKM at vertex " +
                                   G->interval.poset->name(g.vertex));
  }
  BMModel<S> model(G, field);
  return build_sheaf<S>(model, opts);
}

namespace {

template <class S>
BMSheaf summarize(std::shared_ptr<const MomentGraph> G, const PosetSheaf<S>& sh) {
  BMSheaf out;
  out.graph = std::move(G);
  out.field = sh.field();
  out.top_degree = sh.top_degree();
  for (int x = 0; x < sh.poset().size(); ++x) out.stalk_shapes.push_back(sh.stalk_shape(x));
  std::vector<int> all(static_cast<std::size_t>(sh.poset().size()));
  std::iota(all.begin(), all.end(), 0);
  out.global_dims = sh.sections_dims(all);
  return out;
}

}  // namespace

BMSheaf compute_bm(std::shared_ptr<const MomentGraph> G, FieldSpec field, const BuildOptions& opts) {
  if (field.is_rational()) return summarize(G, bm_sheaf<Rational>(G, field, opts));
  return summarize(G, bm_sheaf<Fp>(G, field, opts));
}

UniPoly kl_from_sheaf(const BMSheaf& S, int v) { return S.stalk_shapes.at(static_cast<std::size_t>(v)).poincare(); }

GradedDims structure_sections(const MomentGraph& G, int degree_bound) {
  const int n = G.interval.W->rank();
  const Index V = G.size(), E = static_cast<Index>(G.edges.size());
  GradedDims out;
  for (int i = 0; i <= degree_bound; ++i) {
    // Unknowns: f_u in degree i for every vertex, g_E in degree i-1 for every
    // edge; equations f_hi - f_lo - alpha_E g_E = 0.
    const Index mi = MonomialBasis::get(n, i).size();
    const Index mp = i > 0 ? MonomialBasis::get(n, i - 1).size() : 0;
    Mat<Rational> A = Mat<Rational>::Zero(E * mi, V * mi + E * mp);
    for (Index e = 0; e < E; ++e) {
      const MomentEdge& ed = G.edges[static_cast<std::size_t>(e)];
      for (Index m = 0; m < mi; ++m) {
        A(e * mi + m, ed.hi * mi + m) += Rational(1);
        A(e * mi + m, ed.lo * mi + m) -= Rational(1);
      }
      if (i == 0) continue;
      LinearForm<Rational> a(n);
      for (int j = 0; j < n; ++j) a[j] = Rational(ed.label[static_cast<std::size_t>(j)]);
      SparseMat<Rational> mul = multiplication_matrix<Rational>(a, i - 1);
      for (Index r = 0; r < mul.outerSize(); ++r)
        for (SparseMat<Rational>::InnerIterator it(mul, r); it; ++it) A(e * mi + r, V * mi + e * mp + it.col()) -= it.value();
    }
    out.push_back(static_cast<long long>(A.cols() - rank(A)));
  }
  return out;
}

template class BMModel<Rational>;
template class BMModel<Fp>;
template PosetSheaf<Rational> bm_sheaf<Rational>(std::shared_ptr<const MomentGraph>, FieldSpec, const BuildOptions&);
template PosetSheaf<Fp> bm_sheaf<Fp>(std::shared_ptr<const MomentGraph>, FieldSpec, const BuildOptions&);

}  // namespace klsc
