#include "klsc/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "klsc/errors.hpp"

namespace klsc {

namespace {

std::vector<std::vector<int>> identity_cartan(int n) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  return a;
}

void bond(std::vector<std::vector<int>>& a, int i, int j, int aij = -1, int aji = -1) {
  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
  a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
}

}  // namespace

CartanDatum CartanDatum::named(const std::string& type) {
  if (type.empty()) throw InputError("type", "empty type name");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  if (f == 'H' || f == 'I')
    throw InputError("type", "non-crystallographic type " + type +
                                 " needs irrational root coordinates; only integer Cartan data are supported");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(type.substr(1), &used);
    if (used + 1 != type.size()) throw std::invalid_argument(type);
  } catch (const std::exception&) {
    throw InputError("type", "cannot parse type name '" + type + "'");
  }
  auto bad = [&] { return InputError("type", "no finite type " + type); };
  if (n < 1) throw bad();
  auto a = identity_cartan(n);
  auto chain = [&](int len) {
    for (int i = 0; i + 1 < len; ++i) bond(a, i, i + 1);
  };
  switch (f) {
    case 'A':
      chain(n);
      break;
    case 'B':
      if (n < 2) throw bad();
      chain(n - 1);
      bond(a, n - 2, n - 1, -1, -2);  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw bad();
      chain(n - 1);
      bond(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      if (n < 4) throw bad();
      chain(n - 1);
      bond(a, n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      bond(a, 0, 2);
      bond(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1);
      break;
    case 'F':
      if (n != 4) throw bad();
      bond(a, 0, 1);
      bond(a, 1, 2, -1, -2);
      bond(a, 2, 3);
      break;
    case 'G':
      if (n != 2) throw bad();
      bond(a, 0, 1, -3, -1);  // alpha_1 short
      break;
    default:
      throw bad();
  }
  CartanDatum d = from_matrix(std::move(a));
  d.name_ = std::string(1, f) + std::to_string(n);
  d.family_ = f;
  return d;
}

CartanDatum CartanDatum::from_matrix(std::vector<std::vector<int>> a) {
  const std::size_t n = a.size();
  if (n == 0) throw InputError("cartan", "empty matrix");
  if (n > 32) throw InputError("cartan", "rank above 32 is not supported");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InputError("cartan", "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && a[i][j] != 2) throw InputError("cartan", "diagonal entries must be 2");
      if (i != j && a[i][j] > 0) throw InputError("cartan", "off-diagonal entries must be <= 0");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw InputError("cartan", "a_ij = 0 must imply a_ji = 0 (entry " + std::to_string(i) + "," + std::to_string(j) + ")");
  CartanDatum d;
  d.name_ = "cartan";
  d.a_ = std::move(a);
  return d;
}

std::vector<long long> CartanDatum::simple_root(int j) const {
  std::vector<long long> out(static_cast<std::size_t>(rank()));
  for (int i = 0; i < rank(); ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
  return out;
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::uint64_t h = 1469598103934665603ull;
  for (long long x : w) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

CoxeterGroup::CoxeterGroup(CartanDatum d) : d_(std::move(d)), rho_(static_cast<std::size_t>(d_.rank()), 1) {}

void CoxeterGroup::apply_simple(int s, Weight& lambda) const {
  const long long c = lambda[static_cast<std::size_t>(s)];
  if (c == 0) return;
  for (int j = 0; j < rank(); ++j) lambda[static_cast<std::size_t>(j)] -= c * d_(j, s);
}

CoxElement CoxeterGroup::identity() const { return {{}, rho_}; }

CoxElement CoxeterGroup::from_word(const std::vector<int>& word) const {
  Weight lambda = rho_;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank())
      throw InputError("word", "generator index " + std::to_string(*it) + " out of range for rank " + std::to_string(rank()));
    apply_simple(*it, lambda);
  }
  return from_weight(std::move(lambda));
}

CoxElement CoxeterGroup::from_weight(Weight lambda) const {
  CoxElement x;
  x.weight = lambda;
  for (;;) {
    int s = 0;
    while (s < rank() && lambda[static_cast<std::size_t>(s)] >= 0) ++s;
    if (s == rank()) break;
    x.word.push_back(s);
    apply_simple(s, lambda);
    if (x.word.size() > 1000000) throw std::logic_error("from_weight: weight is not in the orbit of rho");
  }
  if (lambda != rho_) throw std::logic_error("from_weight: weight is not in the orbit of rho");
  return x;
}

CoxElement CoxeterGroup::left_multiply(int s, const CoxElement& x) const {
  Weight lambda = x.weight;
  apply_simple(s, lambda);
  return from_weight(std::move(lambda));
}

CoxElement CoxeterGroup::multiply(const CoxElement& x, const CoxElement& y) const {
  std::vector<int> w = x.word;
  w.insert(w.end(), y.word.begin(), y.word.end());
  return from_word(w);
}

CoxElement CoxeterGroup::inverse(const CoxElement& x) const {
  return from_word(std::vector<int>(x.word.rbegin(), x.word.rend()));
}

bool CoxeterGroup::leq(const CoxElement& x, const CoxElement& y) const {
  if (x.length() > y.length()) return false;
  // For s a left descent of y: x <= y iff min(x, sx) <= sy.
  Weight lambda = x.weight;
  for (int s : y.word)
    if (lambda[static_cast<std::size_t>(s)] < 0) apply_simple(s, lambda);
  return lambda == rho_;
}

std::vector<Root> CoxeterGroup::left_inversions(const CoxElement& x) const {
  const int n = rank();
  std::vector<Root> out;
  for (std::size_t j = 0; j < x.word.size(); ++j) {
    Root b;
    b.coeffs.assign(static_cast<std::size_t>(n), 0);
    b.coroot.assign(static_cast<std::size_t>(n), 0);
    b.coeffs[static_cast<std::size_t>(x.word[j])] = 1;
    b.coroot[static_cast<std::size_t>(x.word[j])] = 1;
    for (std::size_t k = j; k-- > 0;) {
      const int s = x.word[k];
      long long pr = 0, pc = 0;
      for (int m = 0; m < n; ++m) {
        pr += d_(s, m) * b.coeffs[static_cast<std::size_t>(m)];
        pc += b.coroot[static_cast<std::size_t>(m)] * d_(m, s);
      }
      b.coeffs[static_cast<std::size_t>(s)] -= pr;
      b.coroot[static_cast<std::size_t>(s)] -= pc;
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<long long> CoxeterGroup::root_weight(const Root& beta) const {
  std::vector<long long> out(static_cast<std::size_t>(rank()), 0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) out[static_cast<std::size_t>(i)] += d_(i, j) * beta.coeffs[static_cast<std::size_t>(j)];
  return out;
}

CoxElement CoxeterGroup::reflect(const Root& beta, const CoxElement& x) const {
  const auto bw = root_weight(beta);
  Weight lambda = x.weight;
  long long pair = 0;
  for (int k = 0; k < rank(); ++k) pair += beta.coroot[static_cast<std::size_t>(k)] * lambda[static_cast<std::size_t>(k)];
  for (int k = 0; k < rank(); ++k) lambda[static_cast<std::size_t>(k)] -= pair * bw[static_cast<std::size_t>(k)];
  return from_weight(std::move(lambda));
}

CoxElement CoxeterGroup::reflection(const Root& beta) const { return reflect(beta, identity()); }

std::vector<int> CoxeterGroup::to_permutation(const CoxElement& x) const {
  if (d_.family() != 'A') throw InputError("type", "permutations are only defined in type A");
  std::vector<int> p(static_cast<std::size_t>(rank()) + 1);
  std::iota(p.begin(), p.end(), 1);
  for (int s : x.word) std::swap(p[static_cast<std::size_t>(s)], p[static_cast<std::size_t>(s) + 1]);
  return p;
}

CoxElement CoxeterGroup::from_permutation(const std::vector<int>& p) const {
  if (d_.family() != 'A') throw InputError("type", "permutations are only defined in type A");
  const std::size_t n = static_cast<std::size_t>(rank()) + 1;
  std::vector<int> q = p, sorted = p;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ident(n);
  std::iota(ident.begin(), ident.end(), 1);
  if (sorted != ident) throw InputError("w", "not a permutation of 1.." + std::to_string(n));
  std::vector<int> rev;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (q[j] > q[j + 1]) {
        std::swap(q[j], q[j + 1]);
        rev.push_back(static_cast<int>(j));
        changed = true;
      }
  }
  return from_word(std::vector<int>(rev.rbegin(), rev.rend()));
}

std::vector<long long> CoxeterGroup::epsilon_coordinates(const Root& beta) const {
  if (d_.family() != 'A') throw InputError("type", "epsilon coordinates are only defined in type A");
  std::vector<long long> e(static_cast<std::size_t>(rank()) + 1, 0);
  for (std::size_t k = 0; k < beta.coeffs.size(); ++k) {
    e[k] += beta.coeffs[k];
    e[k + 1] -= beta.coeffs[k];
  }
  return e;
}

std::string CoxeterGroup::word_name(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int g : word) s += "s" + std::to_string(g + 1);
  return s;
}

int BruhatInterval::index_of(const CoxElement& x) const {
  auto it = index_.find(x.weight);
  return it == index_.end() ? -1 : it->second;
}

BruhatInterval enumerate_interval(std::shared_ptr<const CoxeterGroup> W, const CoxElement& v, const CoxElement& w,
                                  int max_size) {
  if (!W->leq(v, w))
    throw InputError("v", CoxeterGroup::word_name(v.word) + " is not below " + CoxeterGroup::word_name(w.word) +
                              " in Bruhat order");
  // Every element of [v, w] is reached from w by lower covers inside the
  // interval, and every lower cover of x is t x for a left inversion t.
  std::vector<CoxElement> found{w};
  std::unordered_map<Weight, int, WeightHash> seen{{w.weight, 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const CoxElement x = found[static_cast<std::size_t>(queue.front())];
    queue.pop_front();
    for (const Root& b : W->left_inversions(x)) {
      CoxElement u = W->reflect(b, x);
      if (u.length() != x.length() - 1 || seen.count(u.weight) || !W->leq(v, u)) continue;
      seen.emplace(u.weight, static_cast<int>(found.size()));
      queue.push_back(static_cast<int>(found.size()));
      found.push_back(std::move(u));
      if (static_cast<int>(found.size()) > max_size)
        throw InputError("interval", "Bruhat interval exceeds " + std::to_string(max_size) + " elements");
    }
  }
  std::sort(found.begin(), found.end(), [](const CoxElement& a, const CoxElement& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.word < b.word;
  });

  BruhatInterval I;
  I.W = W;
  I.elements = std::move(found);
  for (int k = 0; k < I.size(); ++k) I.index_.emplace(I.elements[static_cast<std::size_t>(k)].weight, k);
  std::vector<std::string> names;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> covers;
  for (int k = 0; k < I.size(); ++k) {
    const CoxElement& x = I.elements[static_cast<std::size_t>(k)];
    names.push_back(CoxeterGroup::word_name(x.word));
    ranks.push_back(x.length());
    for (const Root& b : W->left_inversions(x)) {
      CoxElement u = W->reflect(b, x);
      if (u.length() != x.length() - 1) continue;
      const int j = I.index_of(u);
      if (j >= 0) covers.emplace_back(j, k);
    }
  }
  I.poset = std::make_shared<RankedPoset>(std::move(names), std::move(ranks), covers);
  I.bottom = I.index_of(v);
  I.top = I.index_of(w);
  return I;
}

std::vector<int> MomentGraph::up_edges(int x) const {
  std::vector<int> out;
  for (int e : incident[static_cast<std::size_t>(x)])
    if (edges[static_cast<std::size_t>(e)].lo == x) out.push_back(e);
  return out;
}

MomentGraph bruhat_graph(const BruhatInterval& I) {
  MomentGraph G;
  G.interval = I;
  G.incident.assign(static_cast<std::size_t>(I.size()), {});
  const CoxeterGroup& W = *I.W;
  for (int k = 0; k < I.size(); ++k) {
    const CoxElement& x = I.elements[static_cast<std::size_t>(k)];
    for (Root& b : W.left_inversions(x)) {
      const int j = I.index_of(W.reflect(b, x));
      if (j < 0) continue;
      MomentEdge e;
      e.lo = j;
      e.hi = k;
      e.label = W.root_weight(b);
      e.reflection = W.reflection(b);
      e.root = std::move(b);
      G.incident[static_cast<std::size_t>(j)].push_back(static_cast<int>(G.edges.size()));
      G.incident[static_cast<std::size_t>(k)].push_back(static_cast<int>(G.edges.size()));
      G.edges.push_back(std::move(e));
    }
  }
  return G;
}

OpenSubgraph gamma_gt(const MomentGraph& G, int v) {
  OpenSubgraph out;
  const RankedPoset& P = *G.interval.poset;
  std::vector<char> in(static_cast<std::size_t>(G.size()), 0);
  for (int u = 0; u < G.size(); ++u)
    if (P.less(v, u)) {
      in[static_cast<std::size_t>(u)] = 1;
      out.vertices.push_back(u);
    }
  for (std::size_t e = 0; e < G.edges.size(); ++e)
    if (in[static_cast<std::size_t>(G.edges[e].lo)] || in[static_cast<std::size_t>(G.edges[e].hi)])
      out.edges.push_back(static_cast<int>(e));
  return out;
}

GkmResult p_gkm_check(const MomentGraph& G, std::uint32_t p) {
  auto reduce = [p](const std::vector<long long>& v) {
    std::vector<std::uint64_t> out;
    for (long long a : v) {
      long long r = a % static_cast<long long>(p);
      out.push_back(static_cast<std::uint64_t>(r < 0 ? r + p : r));
    }
    return out;
  };
  for (int x = 0; x < G.size(); ++x) {
    const auto& inc = G.incident[static_cast<std::size_t>(x)];
    std::vector<std::vector<std::uint64_t>> lab;
    for (int e : inc) lab.push_back(reduce(G.edges[static_cast<std::size_t>(e)].label));
    for (std::size_t a = 0; a < lab.size(); ++a) {
      if (std::all_of(lab[a].begin(), lab[a].end(), [](std::uint64_t c) { return c == 0; }))
        return {false, x, inc[a], inc[a]};
      for (std::size_t b = a + 1; b < lab.size(); ++b) {
        bool parallel = true;
        for (std::size_t i = 0; i < lab[a].size() && parallel; ++i)
          for (std::size_t j = i + 1; j < lab[a].size() && parallel; ++j)
            parallel = (lab[a][i] * lab[b][j]) % p == (lab[a][j] * lab[b][i]) % p;
        if (parallel) return {false, x, inc[a], inc[b]};
      }
    }
  }
  return {};
}

Kernel coxeter_R_kernel(const BruhatInterval& I) {
  const CoxeterGroup& W = *I.W;
  std::map<std::pair<Weight, Weight>, UniPoly> memo;
  const UniPoly t = UniPoly::monomial(1), tm1 = UniPoly({-1, 1});
  auto R = [&](auto&& self, const CoxElement& v, const CoxElement& w) -> UniPoly {
    if (v == w) return UniPoly::constant(1);
    if (!W.leq(v, w)) return {};
    auto key = std::make_pair(v.weight, w.weight);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int s = w.word.front();
    const CoxElement sw = W.left_multiply(s, w), sv = W.left_multiply(s, v);
    UniPoly r = W.is_left_descent(s, v) ? self(self, sv, sw) : tm1 * self(self, sv, w) + t * self(self, sv, sw);
    memo.emplace(std::move(key), r);
    return r;
  };
  Kernel K(I.poset);
  for (int x = 0; x < I.size(); ++x)
    for (int y = 0; y < I.size(); ++y)
      if (I.poset->leq(x, y)) K(x, y) = R(R, I.elements[static_cast<std::size_t>(x)], I.elements[static_cast<std::size_t>(y)]);
  return K;
}

}  // namespace klsc
