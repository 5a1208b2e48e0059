#include "klsc/kls.hpp"

#include <algorithm>

#include "klsc/errors.hpp"

namespace klsc {

KernelCheck verify_kernel(const Kernel& K) {
  const RankedPoset& P = K.poset();
  const int n = P.size();
  for (int x = 0; x < n; ++x)
    if (K(x, x) != UniPoly::constant(1)) return {false, "normalization", x, x};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (P.less(x, y) && K(x, y).degree() > P.rank(y) - P.rank(x)) return {false, "degree", x, y};
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      if (!P.less(x, z)) continue;
      UniPoly s;
      for (int y : P.interval(x, z)) s += K(x, y).reversed(P.rank(y) - P.rank(x)) * K(y, z);
      if (!s.is_zero()) return {false, "inversion", x, z};
    }
  return {};
}

KLSTable solve_kls(const Kernel& K, const std::vector<int>* order) {
  const RankedPoset& P = K.poset();
  const int n = P.size();
  std::vector<int> ord = order ? *order : P.top_down_order();
  if (static_cast<int>(ord.size()) != n) throw std::invalid_argument("solve_kls: order must list every element");
  for (std::size_t k = 1; k < ord.size(); ++k)
    if (P.rank(ord[k]) > P.rank(ord[k - 1])) throw std::invalid_argument("solve_kls: order must have non-increasing rank");

  KLSTable T(K.poset_ptr());
  for (int x = 0; x < n; ++x) T(x, x) = UniPoly::constant(1);
  for (int z = 0; z < n; ++z) {
    for (int x : ord) {
      if (!P.less(x, z)) continue;
      const int r = P.rank(z) - P.rank(x);
      UniPoly g;
      for (int y : P.interval(x, z))
        if (y != x) g += K(x, y) * T(y, z);
      std::vector<long long> f;
      for (int i = 0; 2 * i < r; ++i) f.push_back(g[r - i]);
      UniPoly fx(std::move(f));
      if (fx.reversed(r) - fx != g)
        throw ConsistencyError("KLS recursion has no solution at (" + P.name(x) + ", " + P.name(z) + ")");
      T(x, z) = std::move(fx);
    }
  }
  return T;
}

UniPoly z_polynomial(const KLSTable& T, int x, int z) {
  const RankedPoset& P = T.poset();
  if (!P.leq(x, z)) throw std::invalid_argument("z_polynomial: elements not ordered");
  UniPoly s;
  for (int y : P.interval(x, z)) s += T(y, z).shifted(P.rank(y) - P.rank(x));
  return s;
}

Kernel eulerian_kernel(std::shared_ptr<const RankedPoset> P) {
  if (!is_eulerian(*P)) throw std::invalid_argument("eulerian_kernel: poset is not Eulerian");
  Kernel K(P);
  for (int x = 0; x < P->size(); ++x)
    for (int y = 0; y < P->size(); ++y)
      if (P->leq(x, y)) K(x, y) = UniPoly::t_minus_one_pow(P->rank(y) - P->rank(x));
  return K;
}

Kernel matroid_kernel(std::shared_ptr<const RankedPoset> L) {
  if (!is_geometric_lattice(*L)) throw std::invalid_argument("matroid_kernel: not a geometric lattice");
  Kernel K(L);
  for (int x = 0; x < L->size(); ++x)
    for (int y = 0; y < L->size(); ++y)
      if (L->leq(x, y)) K(x, y) = characteristic_polynomial(*L, x, y);
  return K;
}

TripleViolation monotonicity_check(const KLSTable& T) {
  const RankedPoset& P = T.poset();
  for (int x = 0; x < P.size(); ++x)
    for (int z = 0; z < P.size(); ++z) {
      if (!P.leq(x, z)) continue;
      for (int y : P.interval(x, z))
        if (!dominated_by(T(y, z), T(x, z))) return {false, x, y, z};
    }
  return {};
}

TripleViolation kalai_check(const KLSTable& T) {
  const RankedPoset& P = T.poset();
  for (int x = 0; x < P.size(); ++x)
    for (int z = 0; z < P.size(); ++z) {
      if (!P.leq(x, z)) continue;
      for (int y : P.interval(x, z))
        if (!dominated_by(T(x, y) * T(y, z), T(x, z))) return {false, x, y, z};
    }
  return {};
}

bool nonnegative(const KLSTable& T) {
  const RankedPoset& P = T.poset();
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y)
      if (P.leq(x, y) && !T(x, y).nonnegative()) return false;
  return true;
}

}  // namespace klsc
