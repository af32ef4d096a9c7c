#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latticeq {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
///
/// Index i of coefficients() holds the coefficient of q^i. The stored list
/// never ends in a zero, so the zero polynomial is the empty list and two
/// polynomials are equal iff their coefficient lists are equal.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);

  static QPoly zero() { return {}; }
  static QPoly one() { return QPoly{1}; }
  /// c * q^power
  static QPoly monomial(std::size_t power, BigInt c = 1);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept;
  /// Coefficient of q^power, zero past the degree.
  BigInt coefficient(std::size_t power) const;

  /// Multiply by q^k.
  QPoly shifted(std::size_t k) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

QPoly add(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);

/// Quotient c with b*c == a. Throws Error{DivisionByZero} for b == 0 and
/// Error{NonExactDivision} when the long division leaves a remainder.
QPoly exact_div(const QPoly& a, const QPoly& b);

inline QPoly operator+(const QPoly& a, const QPoly& b) { return add(a, b); }
inline QPoly operator*(const QPoly& a, const QPoly& b) { return mul(a, b); }

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0.
QPoly q_int(std::size_t n);
QPoly q_factorial(std::size_t n);
/// Gaussian binomial; zero when b < 0 or b > a.
QPoly q_binomial(long long a, long long b);
/// [total]! / prod [part]!. Throws Error{PartsMismatch} unless the parts sum
/// to total.
QPoly q_multinomial(std::size_t total, std::span<const std::size_t> parts);
QPoly q_multinomial(std::size_t total, std::initializer_list<std::size_t> parts);

BigInt eval_at_one(const QPoly& p);

/// "1 + q^2 + 2*q^3"; ascending powers, "0" for the zero polynomial.
std::string to_string(const QPoly& p);
/// JSON array of decimal coefficient strings, e.g. ["1","0","1"].
std::string to_json(const QPoly& p);
/// Inverse of to_json; accepts the array-of-strings form only.
QPoly from_json(const std::string& text);

}  // namespace latticeq
