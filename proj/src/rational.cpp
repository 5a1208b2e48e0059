#include "klsc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace klsc {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      std::uint64_t x = static_cast<std::uint64_t>(a);
      std::uint64_t y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  std::uint64_t x = a < 0 ? static_cast<std::uint64_t>(-a) : static_cast<std::uint64_t>(a);
  std::uint64_t y = b < 0 ? static_cast<std::uint64_t>(-b) : static_cast<std::uint64_t>(b);
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return static_cast<std::int64_t>(x);
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  set_small_or_big(n, d);
}

void Rational::promote_int(long long n) {
  big_ = std::make_unique<mpq_class>(mpz_class(static_cast<long>(n)));
  num_ = 0;
  den_ = 1;
}

void Rational::assign(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && fits(n.get_si()) && fits(d.get_si())) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(q);
    big_->canonicalize();
    num_ = 0;
    den_ = 1;
  }
}

void Rational::set_small_or_big(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  if (d != 1) {
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
  }
  if (n > -kLimit && n < kLimit && d < kLimit) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  mpq_class q(to_mpz(n), to_mpz(d));
  q.canonicalize();
  big_ = std::make_unique<mpq_class>(std::move(q));
  num_ = 0;
  den_ = 1;
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpq_class q(mpz_class(text, 10));
      return Rational(q);
    }
    mpz_class n(text.substr(0, slash), 10);
    mpz_class d(text.substr(slash + 1), 10);
    if (d == 0) throw std::domain_error("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational \"" + text + "\"");
  }
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: division by zero");
  if (big_) return Rational(mpq_class(1) / *big_);
  Rational r;
  r.set_small_or_big(den_, num_);
  return r;
}

Rational Rational::operator-() const {
  if (big_) return Rational(mpq_class(-*big_));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::add_slow(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s = num_ + o.num_;
      if (fits(s)) {
        num_ = s;
        return *this;
      }
    }
    set_small_or_big(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                     static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::sub_slow(const Rational& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      std::int64_t s = num_ - o.num_;
      if (fits(s)) {
        num_ = s;
        return *this;
      }
    }
    set_small_or_big(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                     static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::mul_slow(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = gcd64(num_, o.den_);
    std::int64_t g2 = gcd64(o.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (n > -kLimit && n < kLimit && d < kLimit) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    set_small_or_big(n, d);
    return *this;
  }
  assign(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return *this *= o.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a value is inline whenever it fits
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_)
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace klsc
