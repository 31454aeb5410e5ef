#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lambdamap {

using BigInt = boost::multiprecision::cpp_int;

// Polynomial in x with exact integer coefficients; index = power of x.
// Trailing zeros are always trimmed.
class PolynomialInX {
 public:
  PolynomialInX() = default;
  explicit PolynomialInX(std::vector<BigInt> coefficients);

  static PolynomialInX x();

  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  BigInt coefficient(std::size_t k) const;
  std::size_t degree_bound() const noexcept { return coefficients_.size(); }

  PolynomialInX operator+(const PolynomialInX& other) const;
  PolynomialInX operator*(const PolynomialInX& other) const;
  PolynomialInX derivative() const;
  // (P(x) - P(0)) / x
  PolynomialInX divided_difference() const;
  // P(x) - P(0)
  PolynomialInX without_constant() const;

  friend bool operator==(const PolynomialInX&, const PolynomialInX&) = default;

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

enum class SeriesFamily { linear, indecomposable, planar, planar_indecomposable };

std::string_view to_string(SeriesFamily f) noexcept;

// t[n][k] for n = 0..N. The linear families are exponential in x
// (t[n][k] = k! [x^k] P_n); the planar families are ordinary (t = [x^k] P_n).
struct CoefficientTable {
  SeriesFamily family;
  std::vector<std::vector<BigInt>> rows;

  std::size_t max_size() const noexcept { return rows.empty() ? 0 : rows.size() - 1; }
  // Zero outside the stored range.
  BigInt at(std::size_t n, std::size_t k) const;
  // Closed-term counts t[n][0].
  std::vector<BigInt> closed() const;
};

// Coefficients P_0..P_N of z^n for the chosen family:
//   linear:                 P_{n+1} = sum P_i P_j + P_n'
//   indecomposable:         P_{n+1} = sum (P_i - P_i(0))(P_j - P_j(0)) + P_n'
//   planar:                 P_{n+1} = sum P_i P_j + (P_n - P_n(0))/x
//   planar_indecomposable:  both modifications
// with P_0 = x and i + j = n.
std::vector<PolynomialInX> series_polynomials(SeriesFamily family, std::size_t max_size);

CoefficientTable series_table(SeriesFamily family, std::size_t max_size);

inline CoefficientTable series_linear(std::size_t n) { return series_table(SeriesFamily::linear, n); }
inline CoefficientTable series_indecomposable(std::size_t n) {
  return series_table(SeriesFamily::indecomposable, n);
}
inline CoefficientTable series_planar(std::size_t n) { return series_table(SeriesFamily::planar, n); }
inline CoefficientTable series_planar_indecomposable(std::size_t n) {
  return series_table(SeriesFamily::planar_indecomposable, n);
}

}  // namespace lambdamap
