#ifndef KLSC_RATIONAL_HPP
#define KLSC_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace klsc {

/// Exact rational number in canonical form (lowest terms, positive
/// denominator).
///
/// Values whose numerator and denominator fit in 62 bits are kept inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational and demoted again as soon as it fits. Almost every entry met by
/// the sheaf computations is a small integer, so the inline path dominates.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) { if (!fits(n)) promote_int(n); }  // NOLINT
  Rational(int n) : Rational(static_cast<long long>(n)) {}           // NOLINT
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q) { assign(q); }

  Rational(const Rational& o)
      : num_(o.num_), den_(o.den_),
        big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (!o.big_ && !big_) {
      num_ = o.num_;
      den_ = o.den_;
    } else if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Parses "p", "-p" or "p/q".
  static Rational parse(const std::string& text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  /// Canonical "p/q" (or "p" when the denominator is 1).
  std::string str() const;

  Rational inverse() const;

  Rational& operator+=(const Rational& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_add_overflow(num_, o.num_, &r) && fits(r)) {
      num_ = r;
      return *this;
    }
    return add_slow(o);
  }
  Rational& operator-=(const Rational& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_sub_overflow(num_, o.num_, &r) && fits(r)) {
      num_ = r;
      return *this;
    }
    return sub_slow(o);
  }
  Rational& operator*=(const Rational& o) {
    std::int64_t r;
    if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_mul_overflow(num_, o.num_, &r) && fits(r)) {
      num_ = r;
      return *this;
    }
    return mul_slow(o);
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  static constexpr std::int64_t kLimit = std::int64_t{1} << 62;
  static bool fits(long long v) { return v > -kLimit && v < kLimit; }

  Rational& add_slow(const Rational& o);
  Rational& sub_slow(const Rational& o);
  Rational& mul_slow(const Rational& o);
  void promote_int(long long n);
  void assign(const mpq_class& q);
  void set_small_or_big(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;  // engaged iff the value is not inline
};

inline bool is_zero(const Rational& q) { return q.is_zero(); }

}  // namespace klsc

#endif  // KLSC_RATIONAL_HPP
