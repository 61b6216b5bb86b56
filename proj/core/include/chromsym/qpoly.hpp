#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chromsym {

using BigInt = mpz_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored canonically: `coeffs()[k]` is the coefficient of q^(offset()+k),
/// and the coefficient vector is either empty (the zero polynomial, offset 0)
/// or has nonzero first and last entries.
class QPoly {
 public:
  QPoly() = default;

  /// The constant polynomial c.
  static QPoly constant(const BigInt& c);
  /// c * q^e.
  static QPoly monomial(int e, const BigInt& c = 1);
  /// Canonicalizes the given coefficient run.
  static QPoly from_coeffs(int offset, std::vector<BigInt> coeffs);
  static QPoly from_coeffs(int offset, std::initializer_list<long> coeffs);

  /// Inverse of to_string(); throws Error(Parse).
  static QPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int offset() const noexcept { return offset_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of q^e (zero outside the support).
  BigInt coefficient(int e) const;

  /// Highest / lowest exponent; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  std::optional<int> low_degree() const;

  BigInt eval_at_one() const;
  bool is_nonnegative() const;

  /// True iff coefficient(e) == coefficient(center2 - e) for all e, i.e. the
  /// polynomial is a palindrome about center2 / 2. Zero is palindromic about
  /// any center.
  bool is_palindromic(int center2) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly& add_term(int e, const BigInt& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const BigInt& c);
  friend QPoly operator-(const QPoly& a);

  friend bool operator==(const QPoly& a, const QPoly& b);

  /// "c0 + c1*q + c2*q^2", ascending exponents; negative exponents are
  /// written as q^-k. The zero polynomial renders as "0".
  std::string to_string() const;

  /// Renders q^(shift2/2) * p with half-integer exponents where needed, e.g.
  /// "q^(-1/2) + q^(1/2)". Display only.
  std::string to_string_shifted(int shift2) const;

 private:
  void canonicalize();

  int offset_ = 0;
  std::vector<BigInt> coeffs_;
};

QPoly add(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly add_term(const QPoly& a, int e, const BigInt& c);

/// [k]_q = 1 + q + ... + q^(k-1); [0]_q = 0.
QPoly q_integer(int k);
/// [k]_q! = [1]_q [2]_q ... [k]_q; [0]_q! = 1.
QPoly q_factorial(int k);

}  // namespace chromsym
