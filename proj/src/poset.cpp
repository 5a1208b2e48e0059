#include "klsc/poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "klsc/errors.hpp"

namespace klsc {

namespace {

void set_bit(std::vector<std::uint64_t>& bits, int i) {
  bits[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace

RankedPoset::RankedPoset(std::vector<std::string> names, std::vector<int> rank,
                         const std::vector<std::pair<int, int>>& relations)
    : n_(static_cast<int>(rank.size())), names_(std::move(names)), rank_(std::move(rank)) {
  if (names_.size() != rank_.size()) throw InputError("rank", "one rank per element required");
  const std::size_t words = (static_cast<std::size_t>(n_) + 63) / 64;
  up_.assign(static_cast<std::size_t>(n_), std::vector<std::uint64_t>(words, 0));
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < relations.size(); ++k) {
    auto [a, b] = relations[k];
    std::string where = "covers[" + std::to_string(k) + "]";
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw InputError(where, "element index out of range");
    if (rank_[static_cast<std::size_t>(b)] <= rank_[static_cast<std::size_t>(a)])
      throw InputError(where, "rank must strictly increase along covers");
    succ[static_cast<std::size_t>(a)].push_back(b);
  }
  // Ranks strictly increase, so decreasing rank is a reverse topological order.
  std::vector<int> order(static_cast<std::size_t>(n_));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank_[a] > rank_[b]; });
  for (int x : order) {
    auto& row = up_[static_cast<std::size_t>(x)];
    set_bit(row, x);
    for (int y : succ[static_cast<std::size_t>(x)]) {
      const auto& other = up_[static_cast<std::size_t>(y)];
      for (std::size_t w = 0; w < words; ++w) row[w] |= other[w];
    }
  }
  down_.assign(static_cast<std::size_t>(n_), std::vector<std::uint64_t>(words, 0));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (leq(x, y)) set_bit(down_[static_cast<std::size_t>(y)], x);
  up_covers_.resize(static_cast<std::size_t>(n_));
  down_covers_.resize(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    const auto& ux = up_[static_cast<std::size_t>(x)];
    for (int y = 0; y < n_; ++y) {
      if (!less(x, y)) continue;
      const auto& dy = down_[static_cast<std::size_t>(y)];
      int between = 0;
      for (std::size_t w = 0; w < words; ++w) between += __builtin_popcountll(ux[w] & dy[w]);
      if (between == 2) {
        up_covers_[static_cast<std::size_t>(x)].push_back(y);
        down_covers_[static_cast<std::size_t>(y)].push_back(x);
      }
    }
  }
  mobius_ = std::make_shared<MobiusCache>();
  mobius_->rows.resize(static_cast<std::size_t>(n_));
}

int RankedPoset::max_rank() const {
  int m = 0;
  for (int r : rank_) m = std::max(m, r);
  return m;
}

std::vector<std::pair<int, int>> RankedPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y : up_covers_[static_cast<std::size_t>(x)]) out.emplace_back(x, y);
  return out;
}

std::vector<int> RankedPoset::interval(int x, int y) const {
  std::vector<int> out;
  if (!leq(x, y)) return out;
  for (int z = 0; z < n_; ++z)
    if (leq(x, z) && leq(z, y)) out.push_back(z);
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return rank(a) < rank(b); });
  return out;
}

std::vector<int> RankedPoset::upper_set(int x) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

std::vector<int> RankedPoset::strict_upper_set(int x) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (less(x, y)) out.push_back(y);
  return out;
}

bool RankedPoset::is_upper_set(const std::vector<int>& q) const {
  std::vector<char> in(static_cast<std::size_t>(n_), 0);
  for (int x : q) in[static_cast<std::size_t>(x)] = 1;
  for (int x : q)
    for (int y = 0; y < n_; ++y)
      if (leq(x, y) && !in[static_cast<std::size_t>(y)]) return false;
  return true;
}

std::vector<int> RankedPoset::upper_closure(const std::vector<int>& q) const {
  std::vector<char> in(static_cast<std::size_t>(n_), 0);
  for (int x : q)
    for (int y = 0; y < n_; ++y)
      if (leq(x, y)) in[static_cast<std::size_t>(y)] = 1;
  std::vector<int> out;
  for (int y = 0; y < n_; ++y)
    if (in[static_cast<std::size_t>(y)]) out.push_back(y);
  return out;
}

std::vector<int> RankedPoset::top_down_order() const {
  std::vector<int> order(static_cast<std::size_t>(n_));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rank(a) > rank(b); });
  return order;
}

std::vector<int> RankedPoset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (down_covers_[static_cast<std::size_t>(x)].empty()) out.push_back(x);
  return out;
}

std::vector<int> RankedPoset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (up_covers_[static_cast<std::size_t>(x)].empty()) out.push_back(x);
  return out;
}

std::optional<int> RankedPoset::bottom() const {
  auto m = minimal_elements();
  if (m.size() == 1) return m[0];
  return std::nullopt;
}

std::optional<int> RankedPoset::top() const {
  auto m = maximal_elements();
  if (m.size() == 1) return m[0];
  return std::nullopt;
}

std::optional<int> RankedPoset::join(int x, int y) const {
  std::optional<int> best;
  for (int z = 0; z < n_; ++z) {
    if (!leq(x, z) || !leq(y, z)) continue;
    if (!best || leq(z, *best)) best = z;
  }
  if (!best) return std::nullopt;
  for (int z = 0; z < n_; ++z)
    if (leq(x, z) && leq(y, z) && !leq(*best, z)) return std::nullopt;
  return best;
}

std::optional<int> RankedPoset::meet(int x, int y) const {
  std::optional<int> best;
  for (int z = 0; z < n_; ++z) {
    if (!leq(z, x) || !leq(z, y)) continue;
    if (!best || leq(*best, z)) best = z;
  }
  if (!best) return std::nullopt;
  for (int z = 0; z < n_; ++z)
    if (leq(z, x) && leq(z, y) && !leq(z, *best)) return std::nullopt;
  return best;
}

bool RankedPoset::is_lattice() const {
  if (n_ == 0) return false;
  for (int x = 0; x < n_; ++x)
    for (int y = x + 1; y < n_; ++y)
      if (!join(x, y) || !meet(x, y)) return false;
  return true;
}

const std::vector<long long>& RankedPoset::mobius_row(int x) const {
  std::lock_guard<std::mutex> lock(mobius_->mu);
  auto& slot = mobius_->rows[static_cast<std::size_t>(x)];
  if (slot) return *slot;
  auto row = std::make_unique<std::vector<long long>>(static_cast<std::size_t>(n_), 0);
  std::vector<int> ups = upper_set(x);
  std::stable_sort(ups.begin(), ups.end(), [&](int a, int b) { return rank(a) < rank(b); });
  for (int y : ups) {
    if (y == x) {
      (*row)[static_cast<std::size_t>(y)] = 1;
      continue;
    }
    long long s = 0;
    for (int z : ups)
      if (z != y && leq(z, y)) s -= (*row)[static_cast<std::size_t>(z)];
    (*row)[static_cast<std::size_t>(y)] = s;
  }
  slot = std::move(row);
  return *slot;
}

long long RankedPoset::mobius(int x, int y) const {
  if (!leq(x, y)) throw std::invalid_argument("mobius: elements " + name(x) + ", " + name(y) + " not ordered");
  return mobius_row(x)[static_cast<std::size_t>(y)];
}

std::pair<RankedPoset, std::vector<int>> RankedPoset::induced(const std::vector<int>& elems) const {
  std::vector<int> idx(static_cast<std::size_t>(n_), -1);
  std::vector<std::string> names;
  std::vector<int> ranks;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    idx[static_cast<std::size_t>(elems[k])] = static_cast<int>(k);
    names.push_back(name(elems[k]));
    ranks.push_back(rank(elems[k]));
  }
  std::vector<std::pair<int, int>> rel;
  for (int a : elems)
    for (int b : elems)
      if (less(a, b)) rel.emplace_back(idx[static_cast<std::size_t>(a)], idx[static_cast<std::size_t>(b)]);
  return {RankedPoset(std::move(names), std::move(ranks), rel), elems};
}

bool is_eulerian(const RankedPoset& P) {
  if (!P.bottom() || !P.top()) return false;
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y) {
      if (!P.less(x, y)) continue;
      long long s = 0;
      for (int z : P.interval(x, y)) s += (P.rank(z) % 2 == 0) ? 1 : -1;
      if (s != 0) return false;
    }
  return true;
}

std::vector<long long> rank_sizes(const RankedPoset& P) {
  std::vector<long long> h(static_cast<std::size_t>(P.max_rank()) + 1, 0);
  for (int x = 0; x < P.size(); ++x) {
    if (P.rank(x) < 0) throw std::invalid_argument("rank_sizes: negative rank");
    ++h[static_cast<std::size_t>(P.rank(x))];
  }
  return h;
}

TopHeavyResult top_heavy_check(const RankedPoset& P) {
  auto h = rank_sizes(P);
  const int d = static_cast<int>(h.size()) - 1;
  for (int j = 0; j <= d; ++j)
    for (int k = j; k <= d - j; ++k)
      if (h[static_cast<std::size_t>(j)] > h[static_cast<std::size_t>(k)]) return {false, j, k};
  return {};
}

UniPoly characteristic_polynomial(const RankedPoset& P, int x, int y) {
  if (!P.leq(x, y)) throw std::invalid_argument("characteristic_polynomial: elements not ordered");
  UniPoly chi;
  for (int z : P.interval(x, y)) chi += UniPoly::monomial(P.rank(y) - P.rank(z), P.mobius(x, z));
  return chi;
}

bool is_geometric_lattice(const RankedPoset& P) {
  if (!P.is_lattice()) return false;
  for (auto [x, y] : P.covers())
    if (P.rank(y) != P.rank(x) + 1) return false;
  int bot = *P.bottom();
  std::vector<int> atoms = P.upper_covers(bot);
  for (int x = 0; x < P.size(); ++x) {
    if (x == bot) continue;
    int j = bot;
    for (int a : atoms)
      if (P.leq(a, x)) j = *P.join(j, a);
    if (j != x) return false;
  }
  for (int x = 0; x < P.size(); ++x)
    for (int y = x + 1; y < P.size(); ++y)
      if (P.rank(x) + P.rank(y) < P.rank(*P.join(x, y)) + P.rank(*P.meet(x, y))) return false;
  return true;
}

RankedPoset chain(int len) {
  std::vector<std::string> names;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i <= len; ++i) {
    names.push_back(std::to_string(i));
    ranks.push_back(i);
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return RankedPoset(std::move(names), std::move(ranks), rel);
}

RankedPoset boolean_lattice(int n) {
  const int m = 1 << n;
  std::vector<std::string> names;
  std::vector<int> ranks;
  std::vector<std::pair<int, int>> rel;
  for (int s = 0; s < m; ++s) {
    std::string nm = "{";
    for (int i = 0; i < n; ++i)
      if (s >> i & 1) nm += (nm.size() > 1 ? "," : "") + std::to_string(i + 1);
    names.push_back(nm + "}");
    ranks.push_back(__builtin_popcount(static_cast<unsigned>(s)));
    for (int i = 0; i < n; ++i)
      if (!(s >> i & 1)) rel.emplace_back(s, s | (1 << i));
  }
  return RankedPoset(std::move(names), std::move(ranks), rel);
}

}  // namespace klsc
