#include "klinv/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace klinv {

namespace {

using Coefficient = IntPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b)
{
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow in addition");
  return r;
}

Coefficient checked_sub(Coefficient a, Coefficient b)
{
  Coefficient r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow in subtraction");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b)
{
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("polynomial coefficient overflow in multiplication");
  return r;
}

} // namespace

IntPolynomial::IntPolynomial(std::initializer_list<Coefficient> coefficients)
    : coefficients_(coefficients)
{
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Coefficient> coefficients)
    : coefficients_(std::move(coefficients))
{
  trim();
}

IntPolynomial IntPolynomial::monomial(Coefficient c, int k)
{
  if (k < 0)
    throw std::invalid_argument("negative exponent " + std::to_string(k));
  std::vector<Coefficient> cs(static_cast<std::size_t>(k) + 1, 0);
  cs[k] = c;
  return IntPolynomial(std::move(cs));
}

Coefficient IntPolynomial::coefficient(int k) const
{
  if (k < 0 || k >= static_cast<int>(coefficients_.size()))
    return 0;
  return coefficients_[k];
}

void IntPolynomial::trim()
{
  while (!coefficients_.empty() && coefficients_.back() == 0)
    coefficients_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other)
{
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] = checked_add(coefficients_[i], other.coefficients_[i]);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other)
{
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] = checked_sub(coefficients_[i], other.coefficients_[i]);
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Coefficient> out(a.coefficients_.size() + b.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(a.coefficients_[i], b.coefficients_[j]));
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a)
{
  return IntPolynomial{} - a;
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b) { return a - b; }
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial poly_scale(const IntPolynomial& p, Coefficient c)
{
  std::vector<Coefficient> out = p.coefficients();
  for (Coefficient& x : out)
    x = checked_mul(x, c);
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_scale_qpow(const IntPolynomial& p, int k)
{
  if (k < 0)
    throw std::invalid_argument("negative q-power shift " + std::to_string(k));
  if (p.is_zero())
    return {};
  std::vector<Coefficient> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), p.coefficients().begin(), p.coefficients().end());
  return IntPolynomial(std::move(out));
}

std::string to_string(const IntPolynomial& p)
{
  if (p.is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Coefficient c = p.coefficient(k);
    if (c == 0)
      continue;
    // Magnitude printed as unsigned so INT64_MIN survives.
    const bool negative = c < 0;
    const std::uint64_t magnitude =
        negative ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(c)
                 : static_cast<std::uint64_t>(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (k == 0 || magnitude != 1)
      out << magnitude;
    if (k == 1)
      out << 'q';
    else if (k > 1)
      out << "q^" << k;
  }
  return out.str();
}

} // namespace klinv
