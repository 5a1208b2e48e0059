#include "klsc/poly.hpp"

#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace klsc {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("UniPoly: coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("UniPoly: coefficient overflow");
  return r;
}

}  // namespace

UniPoly UniPoly::monomial(int k, long long a) {
  if (k < 0) throw std::invalid_argument("UniPoly::monomial: negative exponent");
  std::vector<long long> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = a;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::t_minus_one_pow(int r) {
  UniPoly f = constant(1);
  const UniPoly lin{-1, 1};
  for (int i = 0; i < r; ++i) f = f * lin;
  return f;
}

long long UniPoly::eval(long long t) const {
  long long acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

UniPoly UniPoly::reversed(int r) const {
  if (is_zero()) return {};
  if (degree() > r) throw std::invalid_argument("UniPoly::reversed: degree exceeds r");
  std::vector<long long> c(static_cast<std::size_t>(r) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(r) - i] = c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<long long> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return UniPoly(std::move(c));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = checked_mul(x, -1);
  return r;
}

bool UniPoly::nonnegative() const {
  for (long long x : c_)
    if (x < 0) return false;
  return true;
}

std::string UniPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    long long a = c_[i];
    if (a == 0) continue;
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    long long m = a < 0 ? -a : a;
    if (i == 0 || m != 1) os << m;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << f.str(); }

bool poly_reverse_check(const UniPoly& f, int r) {
  if (f.is_zero()) return true;
  if (f.degree() > r) return false;
  return f.reversed(r) == f;
}

long long monomial_space_dim(int d, int i) {
  if (d < 0 || i < 0) throw std::invalid_argument("monomial_space_dim: negative argument");
  if (d == 0) return i == 0 ? 1 : 0;
  // C(d+i-1, i) computed incrementally; every prefix is itself a binomial.
  long long r = 1;
  for (int k = 1; k <= i; ++k) r = checked_mul(r, d - 1 + k) / k;
  return r;
}

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars == 0) {
    if (degree == 0) monos_.emplace_back();
  } else {
    Exponent e(static_cast<std::size_t>(nvars), 0);
    // Descending lex: the first variable takes the largest exponent first.
    auto rec = [&](auto&& self, int var, int left) -> void {
      if (var == nvars - 1) {
        e[static_cast<std::size_t>(var)] = left;
        monos_.push_back(e);
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[static_cast<std::size_t>(var)] = a;
        self(self, var + 1, left - a);
      }
    };
    rec(rec, 0, degree);
  }
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<Index>(i));
}

const MonomialBasis& MonomialBasis::get(int nvars, int degree) {
  if (nvars < 0 || degree < 0) throw std::invalid_argument("MonomialBasis: negative argument");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{nvars, degree}];
  if (!slot) slot.reset(new MonomialBasis(nvars, degree));
  return *slot;
}

Index MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw std::out_of_range("MonomialBasis: exponent not of this degree");
  return it->second;
}

template <class S>
SparseMat<S> multiplication_matrix(const LinearForm<S>& form, int k) {
  const int n = static_cast<int>(form.size());
  const auto& src = MonomialBasis::get(n, k);
  const auto& dst = MonomialBasis::get(n, k + 1);
  std::vector<Eigen::Triplet<S>> trip;
  for (Index c = 0; c < src.size(); ++c) {
    Exponent e = src[c];
    for (int v = 0; v < n; ++v) {
      if (is_zero(form[v])) continue;
      ++e[static_cast<std::size_t>(v)];
      trip.emplace_back(dst.index_of(e), c, form[v]);
      --e[static_cast<std::size_t>(v)];
    }
  }
  SparseMat<S> M(dst.size(), src.size());
  M.setFromTriplets(trip.begin(), trip.end());
  return M;
}

template <class S>
SparseMat<S> substitution_matrix(const Mat<S>& M, int k) {
  const int n = static_cast<int>(M.rows());
  const int m = static_cast<int>(M.cols());
  const auto& src = MonomialBasis::get(n, k);
  const auto& dst = MonomialBasis::get(m, k);
  std::vector<MultiPoly<S>> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images.push_back(MultiPoly<S>::from_linear_form(M.row(j).transpose()));
  std::vector<Eigen::Triplet<S>> trip;
  for (Index c = 0; c < src.size(); ++c) {
    MultiPoly<S> p(m);
    p.add_term(Exponent(static_cast<std::size_t>(m), 0), S(1));
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < src[c][static_cast<std::size_t>(j)]; ++a) p = p * images[static_cast<std::size_t>(j)];
    for (const auto& [e, v] : p.terms()) trip.emplace_back(dst.index_of(e), c, v);
  }
  SparseMat<S> R(dst.size(), src.size());
  R.setFromTriplets(trip.begin(), trip.end());
  return R;
}

template <class S>
MultiPoly<S> MultiPoly<S>::variable(int nvars, int j, const S& one) {
  MultiPoly p(nvars);
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(j)] = 1;
  p.add_term(e, one);
  return p;
}

template <class S>
MultiPoly<S> MultiPoly<S>::from_linear_form(const LinearForm<S>& f) {
  const int n = static_cast<int>(f.size());
  MultiPoly p(n);
  for (int j = 0; j < n; ++j) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    p.add_term(e, f[j]);
  }
  return p;
}

template <class S>
MultiPoly<S> MultiPoly<S>::from_coordinates(int nvars, int k, const Vec<S>& coords) {
  const auto& basis = MonomialBasis::get(nvars, k);
  if (coords.size() != basis.size()) throw std::invalid_argument("MultiPoly: coordinate size mismatch");
  MultiPoly p(nvars);
  for (Index i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
  return p;
}

template <class S>
int MultiPoly<S>::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

template <class S>
void MultiPoly<S>::add_term(const Exponent& e, const S& a) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultiPoly: exponent length");
  if (klsc::is_zero(a)) return;
  auto [it, inserted] = terms_.emplace(e, a);
  if (!inserted) {
    it->second += a;
    if (klsc::is_zero(it->second)) terms_.erase(it);
  }
}

template <class S>
MultiPoly<S> MultiPoly<S>::homogeneous_part(int k) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == k) r.terms_.emplace(e, c);
  }
  return r;
}

template <class S>
Vec<S> MultiPoly<S>::coordinates(int k) const {
  const auto& basis = MonomialBasis::get(nvars_, k);
  Vec<S> v = Vec<S>::Zero(basis.size());
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s == k) v[basis.index_of(e)] = c;
  }
  return v;
}

template <class S>
MultiPoly<S>& MultiPoly<S>::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

template <class S>
MultiPoly<S>& MultiPoly<S>::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

template <class S>
MultiPoly<S>& MultiPoly<S>::operator*=(const S& a) {
  if (klsc::is_zero(a)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= a;
  return *this;
}

template <class S>
std::string MultiPoly<S>::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second;
    for (std::size_t j = 0; j < it->first.size(); ++j) {
      int a = it->first[j];
      if (a == 0) continue;
      os << "*x" << j + 1;
      if (a > 1) os << "^" << a;
    }
  }
  return os.str();
}

template class MultiPoly<Rational>;
template class MultiPoly<Fp>;
template SparseMat<Rational> multiplication_matrix(const LinearForm<Rational>&, int);
template SparseMat<Fp> multiplication_matrix(const LinearForm<Fp>&, int);
template SparseMat<Rational> substitution_matrix(const Mat<Rational>&, int);
template SparseMat<Fp> substitution_matrix(const Mat<Fp>&, int);

}  // namespace klsc
