#ifndef KLSC_PRIME_FIELD_HPP
#define KLSC_PRIME_FIELD_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace klsc {

/// Element of the prime field F_p for a runtime prime p.
///
/// Every element carries its modulus. An element with modulus 0 is an
/// "unbound" integer constant (what `Fp(0)` and `Fp(1)` produce, e.g. inside
/// Eigen's `Zero()`); it adopts the modulus of the first bound operand it is
/// combined with. Use `Fp(value, p)` for anything that must be reduced.
class Fp {
 public:
  Fp() = default;
  Fp(long long v) : raw_(v) {}  // NOLINT(google-explicit-constructor)
  Fp(int v) : raw_(v) {}        // NOLINT(google-explicit-constructor)
  Fp(long long v, std::uint32_t p) : p_(p) {
    if (p == 0) throw std::invalid_argument("Fp: modulus must be positive");
    long long r = v % static_cast<long long>(p);
    raw_ = r < 0 ? r + p : r;
  }

  std::uint32_t modulus() const { return p_; }

  /// Modulus used when two unbound constants meet in a division (0: none).
  static std::uint32_t context_modulus() { return context_; }

  /// Sets the context modulus for the current thread while alive.
  class Scope {
   public:
    explicit Scope(std::uint32_t p) : saved_(context_) { context_ = p; }
    ~Scope() { context_ = saved_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint32_t saved_;
  };
  /// Representative in [0, p) (or the raw integer when unbound).
  long long value() const { return raw_; }

  bool is_zero() const { return raw_ == 0; }
  bool is_one() const { return raw_ == 1; }

  Fp inverse() const;

  Fp& operator+=(const Fp& o) {
    bind(o);
    raw_ += o.reduced(p_);
    if (p_ && raw_ >= static_cast<long long>(p_)) raw_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    bind(o);
    raw_ -= o.reduced(p_);
    if (p_ && raw_ < 0) raw_ += p_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    bind(o);
    raw_ = p_ ? static_cast<long long>((static_cast<unsigned __int128>(raw_) * o.reduced(p_)) % p_)
              : raw_ * o.raw_;
    return *this;
  }
  Fp& operator/=(const Fp& o) {
    bind(o);
    const std::uint32_t q = p_ ? p_ : context_modulus();
    Fp inv = o.p_ ? o.inverse() : (q ? Fp(o.raw_, q).inverse() : o.inverse());
    return *this *= inv;
  }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const {
    Fp r = *this;
    if (p_) r.raw_ = raw_ == 0 ? 0 : p_ - raw_;
    else r.raw_ = -raw_;
    return r;
  }

  friend bool operator==(const Fp& a, const Fp& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    return a.reduced(p) == b.reduced(p);
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x);

 private:
  static std::uint32_t throw_unbound() {
    throw std::domain_error("Fp: division between unbound constants");
  }
  long long reduced(std::uint32_t p) const {
    if (p == 0 || p_ == p) return raw_;
    long long r = raw_ % static_cast<long long>(p);
    return r < 0 ? r + p : r;
  }
  void bind(const Fp& o) {
    if (p_ == 0 && o.p_ != 0) {
      p_ = o.p_;
      raw_ = reduced(0) % static_cast<long long>(p_);
      if (raw_ < 0) raw_ += p_;
    } else if (p_ != 0 && o.p_ != 0 && p_ != o.p_) {
      throw std::domain_error("Fp: mixing different moduli");
    }
  }

  static thread_local std::uint32_t context_;
  long long raw_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }

bool is_prime(long long n);

}  // namespace klsc

#endif  // KLSC_PRIME_FIELD_HPP
