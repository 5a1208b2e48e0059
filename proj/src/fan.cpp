#include "klsc/fan.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "klsc/errors.hpp"

namespace klsc {

namespace {

Vec<Rational> primitive(const Vec<Rational>& v, const std::string& where) {
  mpz_class l = 1, g = 0;
  for (Index k = 0; k < v.size(); ++k) {
    mpq_class q = v[k].to_mpq();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  for (Index k = 0; k < v.size(); ++k) {
    mpq_class q = v[k].to_mpq() * l;
    ints.push_back(q.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (g == 0) throw InputError(where, "zero vector");
  Vec<Rational> out(v.size());
  for (Index k = 0; k < v.size(); ++k) out[k] = Rational(mpq_class(ints[static_cast<std::size_t>(k)] / g));
  return out;
}

std::vector<int> members(RaySet s) {
  std::vector<int> out;
  for (int e = 0; e < 64; ++e)
    if (s >> e & 1) out.push_back(e);
  return out;
}

Mat<Rational> columns(const std::vector<Vec<Rational>>& rays, const std::vector<int>& idx) {
  const Index d = rays.empty() ? 0 : rays.front().size();
  Mat<Rational> M(d, static_cast<Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) M.col(static_cast<Index>(k)) = rays[static_cast<std::size_t>(idx[k])];
  return M;
}

Mat<Rational> independent_columns(const std::vector<Vec<Rational>>& rays, RaySet s, Index d) {
  Echelon<Rational> E(d);
  std::vector<int> chosen;
  for (int r : members(s))
    if (E.insert(rays[static_cast<std::size_t>(r)])) chosen.push_back(r);
  Mat<Rational> B(d, static_cast<Index>(chosen.size()));
  for (std::size_t k = 0; k < chosen.size(); ++k) B.col(static_cast<Index>(k)) = rays[static_cast<std::size_t>(chosen[k])];
  return B;
}

std::string ray_set_name(RaySet s) {
  std::string out = "{";
  bool first = true;
  for (int r : members(s)) {
    out += (first ? "" : ",") + std::to_string(r);
    first = false;
  }
  return out + "}";
}

class FaceEnumerator {
 public:
  explicit FaceEnumerator(const std::vector<Vec<Rational>>& rays) : rays_(rays) {}

  std::vector<RaySet> facets(RaySet cone) {
    auto it = memo_.find(cone);
    if (it != memo_.end()) return it->second;
    const std::vector<int> idx = members(cone);
    const Index d = rays_.empty() ? 0 : rays_.front().size();
    std::vector<RaySet> out;
    if (idx.empty()) return memo_[cone] = out;
    const Mat<Rational> B = independent_columns(rays_, cone, d);
    const Index k = B.cols();
    if (k == 1) {
      for (std::size_t a = 1; a < idx.size(); ++a) {
        const Vec<Rational>& u = rays_[static_cast<std::size_t>(idx[0])];
        const Vec<Rational>& v = rays_[static_cast<std::size_t>(idx[a])];
        if (u == v) throw InputError("rays", "rays " + std::to_string(idx[0]) + " and " + std::to_string(idx[a]) + " coincide");
        throw InputError("max_cones", "cone " + ray_set_name(cone) + " is not pointed");
      }
      out.push_back(0);
      return memo_[cone] = out;
    }
    std::set<RaySet> found;
    Mat<Rational> normals(0, k);
    std::vector<int> pick(static_cast<std::size_t>(k - 1));
    // Iterate over (k-1)-subsets of idx.
    std::vector<std::size_t> c(static_cast<std::size_t>(k - 1));
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = j;
    while (c.size() <= idx.size()) {
      for (std::size_t j = 0; j < c.size(); ++j) pick[j] = idx[c[j]];
      Mat<Rational> R = columns(rays_, pick);
      if (rank(R) == k - 1) {
        Mat<Rational> K = kernel(Mat<Rational>(R.transpose() * B));
        Vec<Rational> n = B * K.col(0);
        int pos = 0, neg = 0;
        RaySet zero = 0;
        for (int r : idx) {
          const int s = n.dot(rays_[static_cast<std::size_t>(r)]).sign();
          pos += s > 0;
          neg += s < 0;
          if (s == 0) zero |= RaySet{1} << r;
        }
        if ((pos == 0 || neg == 0) && found.insert(zero).second) {
          normals.conservativeResize(normals.rows() + 1, k);
          normals.row(normals.rows() - 1) = K.col(0).transpose();
        }
      }
      // Next combination.
      std::size_t j = c.size();
      while (j > 0 && c[j - 1] == idx.size() - c.size() + j - 1) --j;
      if (j == 0) break;
      ++c[j - 1];
      for (std::size_t l = j; l < c.size(); ++l) c[l] = c[l - 1] + 1;
    }
    if (found.empty() || rank(normals) < k) throw InputError("max_cones", "cone " + ray_set_name(cone) + " is not pointed");
    out.assign(found.begin(), found.end());
    return memo_[cone] = out;
  }

  std::vector<RaySet> faces(RaySet cone) {
    std::set<RaySet> seen{cone};
    std::vector<RaySet> stack{cone};
    while (!stack.empty()) {
      RaySet f = stack.back();
      stack.pop_back();
      for (RaySet g : facets(f))
        if (seen.insert(g).second) stack.push_back(g);
    }
    for (int r : members(cone))
      if (!seen.count(RaySet{1} << r))
        throw InputError("rays[" + std::to_string(r) + "]", "ray is not extreme in cone " + ray_set_name(cone));
    return {seen.begin(), seen.end()};
  }

 private:
  const std::vector<Vec<Rational>>& rays_;
  std::map<RaySet, std::vector<RaySet>> memo_;
};

}  // namespace

std::vector<RaySet> cone_faces(const std::vector<Vec<Rational>>& rays, RaySet cone) {
  FaceEnumerator fe(rays);
  return fe.faces(cone);
}

Fan Fan::from_cones(int dim, std::vector<Vec<Rational>> rays, const std::vector<std::vector<int>>& max_cones) {
  if (dim < 0) throw InputError("dim", "dimension must be non-negative");
  if (rays.size() > 64) throw InputError("rays", "at most 64 rays are supported");
  Fan F;
  F.d_ = dim;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    const std::string where = "rays[" + std::to_string(r) + "]";
    if (rays[r].size() != dim) throw InputError(where, "expected " + std::to_string(dim) + " coordinates");
    F.rays_.push_back(primitive(rays[r], where));
  }
  std::vector<RaySet> input;
  for (std::size_t k = 0; k < max_cones.size(); ++k) {
    RaySet s = 0;
    for (int r : max_cones[k]) {
      if (r < 0 || r >= static_cast<int>(rays.size()))
        throw InputError("max_cones[" + std::to_string(k) + "]", "ray index " + std::to_string(r) + " out of range");
      s |= RaySet{1} << r;
    }
    input.push_back(s);
  }
  RaySet used = 0;
  for (RaySet s : input) used |= s;
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (!(used >> r & 1)) throw InputError("rays[" + std::to_string(r) + "]", "ray is not contained in any cone");

  FaceEnumerator fe(F.rays_);
  std::vector<std::set<RaySet>> face_sets;
  std::set<RaySet> all;
  for (RaySet s : input) {
    auto f = fe.faces(s);
    face_sets.emplace_back(f.begin(), f.end());
    all.insert(f.begin(), f.end());
  }
  if (all.empty()) all.insert(0);
  for (std::size_t a = 0; a < input.size(); ++a)
    for (std::size_t b = a + 1; b < input.size(); ++b) {
      const RaySet I = input[a] & input[b];
      if (!face_sets[a].count(I) || !face_sets[b].count(I))
        throw InputError("max_cones", "cones " + std::to_string(a) + " and " + std::to_string(b) + " do not meet in a common face");
    }

  std::vector<std::pair<int, RaySet>> cones;
  int maxdim = 0;
  for (RaySet s : all) {
    const int k = static_cast<int>(rank(columns(F.rays_, members(s))));
    cones.emplace_back(k, s);
    maxdim = std::max(maxdim, k);
  }
  std::sort(cones.begin(), cones.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<std::string> names;
  std::vector<int> rk;
  for (const auto& [k, s] : cones) {
    F.cones_.push_back(s);
    F.dims_.push_back(k);
    F.bases_.push_back(independent_columns(F.rays_, s, dim));
    names.push_back(ray_set_name(s));
    rk.push_back(maxdim - k);
  }
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < F.size(); ++a)
    for (int b = 0; b < F.size(); ++b)
      if (a != b && (F.cones_[static_cast<std::size_t>(b)] & ~F.cones_[static_cast<std::size_t>(a)]) == 0) rel.emplace_back(a, b);
  F.P_ = std::make_shared<RankedPoset>(std::move(names), std::move(rk), rel);
  for (RaySet s : input) F.max_.push_back(F.index_of(s));
  F.zero_ = F.index_of(0);
  return F;
}

int Fan::index_of(RaySet s) const {
  for (std::size_t k = 0; k < cones_.size(); ++k)
    if (cones_[k] == s) return static_cast<int>(k);
  return -1;
}

bool Fan::is_simplicial() const {
  for (int c = 0; c < size(); ++c)
    if (std::popcount(cone_rays(c)) != cone_dim(c)) return false;
  return true;
}

Mat<Rational> Fan::restriction(int c, int f) const {
  const Mat<Rational>& Bc = span_basis(c);
  const Mat<Rational>& Bf = span_basis(f);
  Mat<Rational> N(Bc.cols(), Bf.cols());
  for (Index j = 0; j < Bf.cols(); ++j) {
    auto x = solve(Bc, Vec<Rational>(Bf.col(j)));
    if (!x) throw std::logic_error("restriction: not a face");
    N.col(j) = *x;
  }
  return N;
}

Fan face_lattice(int dim, std::vector<Vec<Rational>> rays) {
  std::vector<int> all;
  for (std::size_t r = 0; r < rays.size(); ++r) all.push_back(static_cast<int>(r));
  return Fan::from_cones(dim, std::move(rays), {all});
}

Fan cone_over_polytope(const std::vector<Vec<Rational>>& vertices) {
  if (vertices.empty()) throw InputError("polytope_vertices", "no vertices");
  const Index d = vertices.front().size() + 1;
  std::vector<Vec<Rational>> rays;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k].size() != d - 1)
      throw InputError("polytope_vertices[" + std::to_string(k) + "]", "inconsistent dimension");
    Vec<Rational> v(d);
    v.head(d - 1) = vertices[k];
    v[d - 1] = Rational(1);
    rays.push_back(v);
  }
  std::vector<int> idx(rays.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<int>(k);
  if (rank(columns(rays, idx)) != d) throw InputError("polytope_vertices", "vertices do not affinely span the ambient space");
  return face_lattice(static_cast<int>(d), std::move(rays));
}

ConewiseSections structure_sections(const Fan& F, const std::vector<int>& subfan, int degree_bound) {
  const RankedPoset& P = *F.poset();
  if (!P.is_upper_set(subfan)) throw std::invalid_argument("structure_sections: not a subfan");
  ConewiseSections out;
  for (int c : subfan) {
    bool maximal = true;
    for (int b : subfan) maximal &= !P.less(b, c);
    if (maximal) out.max_cones.push_back(c);
  }
  const auto& M = out.max_cones;
  for (int i = 0; i <= degree_bound; ++i) {
    std::vector<Index> off{0};
    for (int c : M) off.push_back(off.back() + monomial_space_dim(F.cone_dim(c), i));
    std::vector<Eigen::Triplet<Rational>> trip;
    Index rows = 0;
    for (std::size_t a = 0; a < M.size(); ++a)
      for (std::size_t b = a + 1; b < M.size(); ++b) {
        const int t = F.index_of(F.cone_rays(M[a]) & F.cone_rays(M[b]));
        SparseMat<Rational> Sa = substitution_matrix<Rational>(F.restriction(M[a], t), i);
        SparseMat<Rational> Sb = substitution_matrix<Rational>(F.restriction(M[b], t), i);
        for (Index r = 0; r < Sa.outerSize(); ++r) {
          for (SparseMat<Rational>::InnerIterator it(Sa, r); it; ++it) trip.emplace_back(rows + r, off[a] + it.col(), it.value());
          for (SparseMat<Rational>::InnerIterator it(Sb, r); it; ++it) trip.emplace_back(rows + r, off[b] + it.col(), -it.value());
        }
        rows += Sa.rows();
      }
    Mat<Rational> A = Mat<Rational>::Zero(rows, off.back());
    for (const auto& tr : trip) A(tr.row(), tr.col()) += tr.value();
    Mat<Rational> K = rows == 0 ? Mat<Rational>(Mat<Rational>::Identity(off.back(), off.back())) : kernel(A);
    out.dims.push_back(static_cast<long long>(K.cols()));

    Echelon<Rational> E(off.back());
    if (i > 0) {
      const Mat<Rational>& prev = out.bases.back();
      for (int u = 0; u < F.ambient_dim(); ++u) {
        Mat<Rational> G = Mat<Rational>::Zero(off.back(), prev.rows());
        Index pr = 0;
        for (std::size_t a = 0; a < M.size(); ++a) {
          const Mat<Rational>& B = F.span_basis(M[a]);
          LinearForm<Rational> form = B.row(u).transpose();
          SparseMat<Rational> mm = multiplication_matrix<Rational>(form, i - 1);
          G.block(off[a], pr, mm.rows(), mm.cols()) = Mat<Rational>(mm);
          pr += mm.cols();
        }
        for (Index j = 0; j < prev.cols(); ++j) E.insert(Vec<Rational>(G * prev.col(j)));
      }
    }
    const Index base = E.rank();
    for (Index j = 0; j < K.cols(); ++j) E.insert(K.col(j));
    for (Index k = base; k < E.rank(); ++k) out.shape.add(i);
    if (E.rank() > base && i == degree_bound && i > 0)
      throw TruncationError("conewise generator at the degree bound " + std::to_string(i) + "; raise the degree bound");
    out.bases.push_back(std::move(K));
  }
  return out;
}

FanModel::FanModel(std::shared_ptr<const Fan> F) : F_(std::move(F)) {
  const int n = F_->size();
  restriction_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (F_->poset()->less(x, y)) restriction_[static_cast<std::size_t>(x * n + y)] = F_->restriction(x, y);
}

LinearForm<Rational> FanModel::action(int x, int var, int y) const {
  return restriction_[static_cast<std::size_t>(x * F_->size() + y)].row(var).transpose();
}

LinearForm<Rational> FanModel::global_action(int var, int y) const {
  return F_->span_basis(y).row(var).transpose();
}

std::vector<int> FanModel::boundary_support(int x) const { return F_->poset()->strict_upper_set(x); }

Boundary<Rational> FanModel::boundary(int, int, const SupportView<Rational>&) const { return {}; }

PosetSheaf<Rational> fan_ih(const Fan& F, const BuildOptions& opts) {
  FanModel model(std::make_shared<Fan>(F));
  return build_sheaf<Rational>(model, opts);
}

UniPoly g_polynomial(const std::vector<Vec<Rational>>& vertices, const BuildOptions& opts) {
  Fan F = cone_over_polytope(vertices);
  return fan_ih(F, opts).stalk_poincare(F.max_cone(0));
}

}  // namespace klsc
