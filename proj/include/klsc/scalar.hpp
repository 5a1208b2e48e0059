#ifndef KLSC_SCALAR_HPP
#define KLSC_SCALAR_HPP

#include <cstdint>
#include <limits>
#include <string>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "klsc/prime_field.hpp"
#include "klsc/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<klsc::Rational> : GenericNumTraits<klsc::Rational> {
  using Real = klsc::Rational;
  using NonInteger = klsc::Rational;
  using Nested = klsc::Rational;
  using Literal = klsc::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(std::numeric_limits<long long>::max()); }
  static Real lowest() { return Real(std::numeric_limits<long long>::min() + 1); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<klsc::Fp> : GenericNumTraits<klsc::Fp> {
  using Real = klsc::Fp;
  using NonInteger = klsc::Fp;
  using Nested = klsc::Fp;
  using Literal = klsc::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 2
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(0); }
  static Real lowest() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace klsc {

/// Coefficient field: characteristic 0 means the rationals, otherwise F_p.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_rational() const { return characteristic == 0; }
  std::string name() const {
    return characteristic == 0 ? "Q" : "F_" + std::to_string(characteristic);
  }
  friend bool operator==(FieldSpec a, FieldSpec b) { return a.characteristic == b.characteristic; }
};

inline FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

/// Binds unbound F_p constants to the field's characteristic while alive.
class FieldScope {
 public:
  explicit FieldScope(const FieldSpec& field) : fp_(field.characteristic) {}

 private:
  Fp::Scope fp_;
};

/// Integer embedded into the scalar type of the given field.
template <class S>
S scalar_from_int(long long n, const FieldSpec& field);

template <>
inline Rational scalar_from_int<Rational>(long long n, const FieldSpec&) {
  return Rational(n);
}

template <>
inline Fp scalar_from_int<Fp>(long long n, const FieldSpec& field) {
  if (field.characteristic == 0) throw std::invalid_argument("F_p scalar requested over Q");
  return Fp(n, field.characteristic);
}

/// Rational number mapped into the field (the denominator must be invertible).
template <class S>
S scalar_from_rational(const Rational& q, const FieldSpec& field);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& q, const FieldSpec&) {
  return q;
}

template <>
inline Fp scalar_from_rational<Fp>(const Rational& q, const FieldSpec& field) {
  mpq_class v = q.to_mpq();
  mpz_class p(static_cast<unsigned long>(field.characteristic));
  mpz_class n = v.get_num() % p;
  mpz_class d = v.get_den() % p;
  if (d == 0) throw std::domain_error("denominator vanishes in " + field.name());
  return Fp(n.get_si(), field.characteristic) / Fp(d.get_si(), field.characteristic);
}

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using SparseMat = Eigen::SparseMatrix<S, Eigen::RowMajor>;

using Index = Eigen::Index;

}  // namespace klsc

#endif  // KLSC_SCALAR_HPP
