#ifndef KLINV_POLYNOMIAL_HPP
#define KLINV_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace klinv {

/*
  Polynomial in q with 64-bit integer coefficients, stored densely from
  degree 0 with trailing zeros trimmed (the zero polynomial has no
  coefficients). Arithmetic is exact; any coefficient overflow throws
  std::overflow_error instead of wrapping.
*/
class IntPolynomial {
public:
  using Coefficient = std::int64_t;

  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Coefficient> coefficients);
  explicit IntPolynomial(std::vector<Coefficient> coefficients);

  static IntPolynomial constant(Coefficient c) { return IntPolynomial({c}); }
  /// c * q^k
  static IntPolynomial monomial(Coefficient c, int k);

  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  /// [q^k]; zero outside the stored range (including negative k).
  Coefficient coefficient(int k) const;
  const std::vector<Coefficient>& coefficients() const { return coefficients_; }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
  void trim();

  std::vector<Coefficient> coefficients_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
/// c * p
IntPolynomial poly_scale(const IntPolynomial& p, IntPolynomial::Coefficient c);
/// q^k * p for k >= 0.
IntPolynomial poly_scale_qpow(const IntPolynomial& p, int k);

/// "1 + 2q + q^2"; zero prints as "0", negative terms as "1 - q".
std::string to_string(const IntPolynomial& p);

} // namespace klinv

#endif
