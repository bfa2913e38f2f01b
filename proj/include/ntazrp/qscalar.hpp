// Exact scalars: integer polynomials in q, reduced rational functions in q,
// and Laurent polynomials in a fixed set of spectral variables over them.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ntazrp {

using BigInt = mpz_class;

/// Thrown when a division that must be exact leaves a remainder. Always a bug.
class NonExactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Polynomial in q with big-integer coefficients, stored densely from q^0.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const BigInt& c);
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly monomial(const BigInt& c, int exponent);
  static QPoly q_power(int exponent) { return monomial(1, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Exponent of the lowest nonzero term; -1 for zero.
  int low_degree() const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int exponent) const;
  BigInt at_zero() const { return coeff(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  const BigInt& trailing() const { return coeffs_[static_cast<std::size_t>(low_degree())]; }

  BigInt content() const;
  QPoly primitive_part() const;
  BigInt evaluate(const BigInt& q) const;

  /// q -> q^k, used to obtain base-q^2 objects from base-q ones.
  QPoly substitute_power(int k) const;
  /// Multiply by q^e, e >= 0.
  QPoly shifted(int e) const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const BigInt& c);
  QPoly& divide_exact(const BigInt& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b);
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Exact quotient num / den in Z[q]; throws NonExactDivision otherwise.
QPoly div_exact(const QPoly& num, const QPoly& den);
/// Greatest common divisor in Z[q], with positive leading coefficient.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// Reduced rational function num/den in q.
///
/// Canonical form: gcd(num, den) = 1 in Z[q] and the lowest-degree coefficient
/// of den is positive. Zero is 0/1. Equality is structural.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRat(const QPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QRat(const BigInt& c) : num_(c), den_(1) {}
  QRat(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  QRat inverse() const;
  /// Value at q = 0; throws std::domain_error on a pole.
  mpq_class at_zero() const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);

  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void canonicalize();
  QPoly num_;
  QPoly den_;
};

// q-special functions.

/// (q)_m = prod_{j=1}^m (1 - q^j).
QPoly q_factorial(int m);
/// (z; q)_m with z = z_coeff * q^z_qshift.
QRat q_pochhammer(const QRat& z_coeff, int z_qshift, int m);
/// (q)_m / ((q)_j (q)_{m-j}); zero outside 0 <= j <= m.
QPoly q_binomial(int m, int j);
/// (q^2; q^2)_m.
QPoly q2_factorial(int m);
/// 1 / (q)_m.
QRat chi(int m);
/// (q^2)_m / (q)_m, which is always a polynomial.
QRat chi_prime(int m);

// Spectral variables.

enum class Var : std::uint8_t { z, x, y, xp, yp, z1, z2, z3, z4, lambda, mu };
inline constexpr std::size_t kVarCount = 11;
std::string_view var_name(Var v);

using Exponents = std::array<int, kVarCount>;

/// Laurent polynomial in the spectral variables with QRat coefficients.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long c);          // NOLINT(google-explicit-constructor)
  LaurentScalar(const QRat& c);   // NOLINT(google-explicit-constructor)
  LaurentScalar(const QPoly& c);  // NOLINT(google-explicit-constructor)

  static LaurentScalar monomial(Var v, int exponent, const QRat& coeff = QRat(1));
  static LaurentScalar term(const Exponents& e, const QRat& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, QRat>& terms() const { return terms_; }
  /// Coefficient of the pure constant monomial.
  QRat constant_term() const;
  QRat coefficient(const Exponents& e) const;

  LaurentScalar operator-() const;
  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  LaurentScalar& operator*=(const QRat& c);
  void add_term(const Exponents& e, const QRat& c);

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

  LaurentScalar swap_vars(Var a, Var b) const;
  /// v -> v^{-1}.
  LaurentScalar invert_var(Var v) const;
  /// v d/dv.
  LaurentScalar euler_derivative(Var v) const;
  /// v -> 1.
  LaurentScalar evaluate_at_one(Var v) const;
  /// q -> 0 in every coefficient; throws std::domain_error on a pole.
  LaurentScalar at_q_zero() const;

  std::string to_string() const;

 private:
  std::map<Exponents, QRat> terms_;
};

Exponents unit_exponents(Var v, int exponent);

}  // namespace ntazrp
