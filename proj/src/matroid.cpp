#include "klsc/matroid.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "klsc/errors.hpp"

namespace klsc {

std::string set_name(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e = 0; e < 64; ++e)
    if (s >> e & 1) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
  return out + "}";
}

Matroid::Matroid(int n, std::vector<Flat> flats) : n_(n), flats_(std::move(flats)) {
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.set < b.set;
  });
  for (std::size_t k = 1; k < flats_.size(); ++k)
    if (flats_[k].set == flats_[k - 1].set) throw InputError("flats", "duplicate flat " + set_name(flats_[k].set));
  std::vector<std::string> names;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> rel;
  const int m = static_cast<int>(flats_.size());
  for (int a = 0; a < m; ++a) {
    names.push_back(set_name(flats_[static_cast<std::size_t>(a)].set));
    ranks.push_back(flats_[static_cast<std::size_t>(a)].rank);
    for (int b = 0; b < m; ++b) {
      const auto& A = flats_[static_cast<std::size_t>(a)];
      const auto& B = flats_[static_cast<std::size_t>(b)];
      if (a != b && (A.set & ~B.set) == 0) {
        if (A.rank >= B.rank) throw InputError("flats", "rank does not increase from " + names.back() + " to " + set_name(B.set));
        if (B.rank == A.rank + 1) rel.emplace_back(a, b);
      }
    }
  }
  lattice_ = std::make_shared<RankedPoset>(std::move(names), std::move(ranks), rel);
  // Covers of consecutive rank generate the order only if the lattice is graded.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if ((flats_[static_cast<std::size_t>(a)].set & ~flats_[static_cast<std::size_t>(b)].set) == 0 && !lattice_->leq(a, b))
        throw InputError("flats", "flats do not form a graded lattice");
  if (!is_geometric_lattice(*lattice_)) throw InputError("flats", "flats do not form a geometric lattice");
}

int Matroid::flat_index(ElementSet s) const {
  for (std::size_t k = 0; k < flats_.size(); ++k)
    if (flats_[k].set == s) return static_cast<int>(k);
  return -1;
}

Matroid Matroid::from_rank_oracle(int n, const std::function<int(ElementSet)>& rk) {
  if (n < 0 || n > 63) throw InputError("ground_set", "ground set size must be between 0 and 63");
  for (int e = 0; e < n; ++e)
    if (rk(ElementSet{1} << e) == 0) throw InputError("ground_set", "element " + std::to_string(e) + " is a loop");
  auto closure = [&](ElementSet A) {
    const int r = rk(A);
    for (int e = 0; e < n; ++e)
      if (!(A >> e & 1) && rk(A | ElementSet{1} << e) == r) A |= ElementSet{1} << e;
    return A;
  };
  std::set<ElementSet> seen{0};
  std::vector<ElementSet> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const ElementSet F = queue[k];
    for (int e = 0; e < n; ++e) {
      if (F >> e & 1) continue;
      ElementSet G = closure(F | ElementSet{1} << e);
      if (seen.insert(G).second) queue.push_back(G);
    }
  }
  std::vector<Flat> flats;
  for (ElementSet F : seen) flats.push_back({F, rk(F)});
  return Matroid(n, std::move(flats));
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases) {
  if (n < 0 || n > 63) throw InputError("ground_set", "ground set size must be between 0 and 63");
  if (bases.empty()) throw InputError("bases", "at least one basis is required");
  std::vector<ElementSet> B;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    ElementSet s = 0;
    for (int e : bases[k]) {
      if (e < 0 || e >= n) throw InputError("bases[" + std::to_string(k) + "]", "element " + std::to_string(e) + " outside the ground set");
      if (s >> e & 1) throw InputError("bases[" + std::to_string(k) + "]", "repeated element");
      s |= ElementSet{1} << e;
    }
    if (std::popcount(s) != std::popcount(B.empty() ? s : B.front()))
      throw InputError("bases[" + std::to_string(k) + "]", "bases have different sizes");
    B.push_back(s);
  }
  std::sort(B.begin(), B.end());
  B.erase(std::unique(B.begin(), B.end()), B.end());
  // Basis exchange.
  for (std::size_t a = 0; a < B.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b)
      for (int x = 0; x < n; ++x) {
        if (!(B[a] >> x & 1) || (B[b] >> x & 1)) continue;
        bool ok = false;
        for (int y = 0; y < n && !ok; ++y)
          if ((B[b] >> y & 1) && !(B[a] >> y & 1))
            ok = std::binary_search(B.begin(), B.end(), (B[a] & ~(ElementSet{1} << x)) | ElementSet{1} << y);
        if (!ok) throw InputError("bases", "basis exchange fails for " + set_name(B[a]) + " and " + set_name(B[b]));
      }
  return from_rank_oracle(n, [B](ElementSet A) {
    int r = 0;
    for (ElementSet b : B) r = std::max(r, std::popcount(A & b));
    return r;
  });
}

Matroid Matroid::from_matrix(const Mat<Rational>& M) {
  const int n = static_cast<int>(M.cols());
  return from_rank_oracle(n, [M, n](ElementSet A) {
    std::vector<Index> cols;
    for (int e = 0; e < n; ++e)
      if (A >> e & 1) cols.push_back(e);
    Mat<Rational> sub(M.rows(), static_cast<Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) sub.col(static_cast<Index>(k)) = M.col(cols[k]);
    return static_cast<int>(klsc::rank(sub));
  });
}

Matroid Matroid::from_flats(int n, std::vector<Flat> flats) {
  if (n < 0 || n > 63) throw InputError("ground_set", "ground set size must be between 0 and 63");
  const ElementSet full = n == 0 ? 0 : (~ElementSet{0} >> (64 - n));
  bool has_empty = false, has_full = false;
  for (const auto& F : flats) {
    if (F.set & ~full) throw InputError("flats", "flat " + set_name(F.set) + " leaves the ground set");
    has_empty |= F.set == 0 && F.rank == 0;
    has_full |= F.set == full;
  }
  if (!has_empty) throw InputError("flats", "the empty set must be a flat of rank 0 (no loops)");
  if (!has_full) throw InputError("flats", "the ground set must be a flat");
  return Matroid(n, std::move(flats));
}

Matroid Matroid::uniform(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("uniform: need 0 <= k <= n");
  return from_rank_oracle(n, [k](ElementSet A) { return std::min(k, std::popcount(A)); });
}

Matroid Matroid::boolean(int n) { return uniform(n, n); }

Matroid Matroid::graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices || u == v) throw InputError("edges", "invalid edge");
  return from_rank_oracle(static_cast<int>(edges.size()), [vertices, edges](ElementSet A) {
    std::vector<int> parent(static_cast<std::size_t>(vertices));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      return v;
    };
    int r = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!(A >> e & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        ++r;
      }
    }
    return r;
  });
}

Matroid Matroid::projective_plane(int q) {
  if (!is_prime(static_cast<std::uint64_t>(q))) throw std::invalid_argument("projective_plane: q must be prime");
  const auto p = static_cast<std::uint32_t>(q);
  // Normalized representatives: first nonzero coordinate equal to 1.
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
  for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
  pts.push_back({0, 0, 1});
  const int n = static_cast<int>(pts.size());
  return from_rank_oracle(n, [pts, p, n](ElementSet A) {
    std::vector<Index> cols;
    for (int e = 0; e < n; ++e)
      if (A >> e & 1) cols.push_back(e);
    Mat<Fp> sub(3, static_cast<Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (int r = 0; r < 3; ++r) sub(r, static_cast<Index>(k)) = Fp(pts[static_cast<std::size_t>(cols[k])][static_cast<std::size_t>(r)], p);
    return static_cast<int>(klsc::rank(sub));
  });
}

Matroid Matroid::contraction(int flat) const {
  const ElementSet F = flats_[static_cast<std::size_t>(flat)].set;
  const int rF = flats_[static_cast<std::size_t>(flat)].rank;
  std::vector<int> newidx(static_cast<std::size_t>(n_), -1);
  int m = 0;
  for (int e = 0; e < n_; ++e)
    if (!(F >> e & 1)) newidx[static_cast<std::size_t>(e)] = m++;
  std::vector<Flat> out;
  for (const auto& G : flats_) {
    if ((F & ~G.set) != 0) continue;
    ElementSet s = 0;
    for (int e = 0; e < n_; ++e)
      if ((G.set >> e & 1) && !(F >> e & 1)) s |= ElementSet{1} << newidx[static_cast<std::size_t>(e)];
    out.push_back({s, G.rank - rF});
  }
  return Matroid(m, std::move(out));
}

MobiusTerm mobius_product(const Matroid& M, int F, int G) {
  const RankedPoset& L = *M.lattice();
  const int J = *L.join(F, G);
  return {L.rank(F) + L.rank(G) - L.rank(J), J};
}

std::vector<std::optional<int>> rho(const Matroid& M, int F) {
  const RankedPoset& L = *M.lattice();
  std::vector<std::optional<int>> out(static_cast<std::size_t>(L.size()));
  for (int G = 0; G < L.size(); ++G)
    if (L.leq(G, F)) out[static_cast<std::size_t>(G)] = L.rank(G);
  return out;
}

std::vector<MobiusTerm> phi(const Matroid& M, int F) {
  const RankedPoset& L = *M.lattice();
  std::vector<MobiusTerm> out;
  for (int G = 0; G < L.size(); ++G) out.push_back(mobius_product(M, F, G));
  return out;
}

bool p_trivial_criterion(const RankedPoset& L, int p) {
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) {
      if (!L.less(x, y)) continue;
      int atoms = 0, coatoms = 0;
      for (int a : L.upper_covers(x)) atoms += L.leq(a, y);
      for (int c : L.lower_covers(y)) coatoms += L.leq(x, c);
      if (atoms != coatoms) return false;
      if (L.rank(y) - L.rank(x) == 2 && ((atoms % p) + p) % p == 1 % p) return false;
    }
  return true;
}

template <class S>
MatroidModel<S>::MatroidModel(std::shared_ptr<const RankedPoset> L, FieldSpec field) : L_(std::move(L)), field_(field) {
  if (!is_geometric_lattice(*L_)) throw InputError("lattice", "not a geometric lattice");
}

template <class S>
Boundary<S> MatroidModel<S>::boundary(int x, int degree, const SupportView<S>& view) const {
  Boundary<S> bd;
  if (degree == 0) return bd;
  // y_a for the atoms a of [x, E] multiplies the stalk at H by hbar when
  // a <= H and kills it otherwise. With one variable the degree-(i-1) and
  // degree-i coordinates of a stalk share generator indices.
  const Index dim = view.dim(degree);
  const auto& secs = view.sections(degree - 1);
  const auto& owners = view.owners(degree - 1);
  for (int a : L_->upper_covers(x)) {
    for (std::size_t j = 0; j < secs.size(); ++j) {
      if (!L_->leq(a, owners[j])) continue;  // vanishes above a
      const Vec<S>& s = secs[j];
      Vec<S> out = Vec<S>::Zero(dim);
      for (std::size_t k = 0; k < view.elements().size(); ++k) {
        if (!L_->leq(a, view.elements()[k])) continue;
        const Index src = view.offset(k, degree - 1), dst = view.offset(k, degree);
        const Index len = view.layout(k).dim(degree - 1);
        out.segment(dst, len) = s.segment(src, len);
      }
      if (!is_zero_vec(out)) bd.relations.push_back(std::move(out));
    }
  }
  return bd;
}

template <class S>
MatroidIH matroid_ih(const Matroid& M, FieldSpec field, const BuildOptions& opts) {
  MatroidModel<S> model(M.lattice(), field);
  PosetSheaf<S> sh = build_sheaf(model, opts);
  MatroidIH out;
  const RankedPoset& L = *M.lattice();
  for (int F = 0; F < L.size(); ++F) {
    out.stalk_shapes.push_back(sh.stalk_shape(F));
    out.stalks.push_back(sh.stalk_poincare(F));
  }
  std::vector<int> all(static_cast<std::size_t>(L.size()));
  std::iota(all.begin(), all.end(), 0);
  out.global_shape = sh.sections_shape(all);
  out.Z = out.global_shape.poincare();
  return out;
}

MatroidIH compute_matroid_ih(const Matroid& M, FieldSpec field, const BuildOptions& opts) {
  return field.is_rational() ? matroid_ih<Rational>(M, field, opts) : matroid_ih<Fp>(M, field, opts);
}

template class MatroidModel<Rational>;
template class MatroidModel<Fp>;
template MatroidIH matroid_ih<Rational>(const Matroid&, FieldSpec, const BuildOptions&);
template MatroidIH matroid_ih<Fp>(const Matroid&, FieldSpec, const BuildOptions&);

}  // namespace klsc
