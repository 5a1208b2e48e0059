#ifndef KLSC_POLY_HPP
#define KLSC_POLY_HPP

#include <climits>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "klsc/linalg.hpp"

namespace klsc {

/// Integer polynomial in t; coefficient i multiplies t^i.
///
/// Arithmetic is checked: an overflow of 64-bit coefficients throws
/// std::overflow_error instead of wrapping.
class UniPoly {
 public:
  static constexpr int kMinusInfinity = INT_MIN;

  UniPoly() = default;
  UniPoly(std::initializer_list<long long> c) : c_(c) { trim(); }
  explicit UniPoly(std::vector<long long> c) : c_(std::move(c)) { trim(); }
  static UniPoly constant(long long a) { return UniPoly(std::vector<long long>{a}); }
  static UniPoly monomial(int k, long long a = 1);
  /// (t - 1)^r
  static UniPoly t_minus_one_pow(int r);

  /// Degree, or kMinusInfinity for the zero polynomial.
  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  long long operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<long long>& coeffs() const { return c_; }

  long long eval(long long t) const;
  /// t^r f(1/t); requires deg f <= r.
  UniPoly reversed(int r) const;
  UniPoly shifted(int k) const;  // t^k f

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  bool nonnegative() const;
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& f);

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<long long> c_;
};

/// Whether t^r f(1/t) = f(t).
bool poly_reverse_check(const UniPoly& f, int r);

/// g - f has non-negative coefficients.
inline bool dominated_by(const UniPoly& f, const UniPoly& g) { return (g - f).nonnegative(); }

/// C(d+i-1, i): dimension of the degree-i part of a polynomial ring in d variables.
long long monomial_space_dim(int d, int i);

using Exponent = std::vector<int>;

/// Monomials of degree k in n variables, in descending lexicographic order,
/// with index lookup. Instances are cached and shared.
class MonomialBasis {
 public:
  static const MonomialBasis& get(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  Index size() const { return static_cast<Index>(monos_.size()); }
  const Exponent& operator[](Index i) const { return monos_[static_cast<std::size_t>(i)]; }
  Index index_of(const Exponent& e) const;

 private:
  MonomialBasis(int nvars, int degree);
  int nvars_;
  int degree_;
  std::vector<Exponent> monos_;
  std::map<Exponent, Index> index_;
};

/// Linear form on K^n, as the coefficient vector of the variables.
template <class S>
using LinearForm = Vec<S>;

/// Matrix of multiplication by a linear form: degree k -> degree k + 1.
template <class S>
SparseMat<S> multiplication_matrix(const LinearForm<S>& form, int k);

/// Matrix of the ring map K[x_1..x_n] -> K[y_1..y_m], x_j -> sum_l M(j,l) y_l,
/// on homogeneous parts of degree k.
template <class S>
SparseMat<S> substitution_matrix(const Mat<S>& M, int k);

/// Sparse polynomial in a fixed number of variables.
template <class S>
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly variable(int nvars, int j, const S& one = S(1));
  static MultiPoly from_linear_form(const LinearForm<S>& f);
  /// Homogeneous polynomial of degree k from coordinates in MonomialBasis(n, k).
  static MultiPoly from_coordinates(int nvars, int k, const Vec<S>& coords);

  int nvars() const { return nvars_; }
  const std::map<Exponent, S>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const Exponent& e, const S& a);
  MultiPoly homogeneous_part(int k) const;
  Vec<S> coordinates(int k) const;  // of the degree-k part

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const S& a);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  int nvars_ = 0;
  std::map<Exponent, S> terms_;
};

}  // namespace klsc

#endif  // KLSC_POLY_HPP
