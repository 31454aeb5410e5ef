#include "lambdamap/series.hpp"

#include <algorithm>

namespace lambdamap {

PolynomialInX::PolynomialInX(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

PolynomialInX PolynomialInX::x() { return PolynomialInX({BigInt(0), BigInt(1)}); }

void PolynomialInX::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt PolynomialInX::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : BigInt(0);
}

PolynomialInX PolynomialInX::operator+(const PolynomialInX& other) const {
  std::vector<BigInt> out(std::max(coefficients_.size(), other.coefficients_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + other.coefficient(i);
  return PolynomialInX(std::move(out));
}

PolynomialInX PolynomialInX::operator*(const PolynomialInX& other) const {
  if (coefficients_.empty() || other.coefficients_.empty()) return {};
  std::vector<BigInt> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return PolynomialInX(std::move(out));
}

PolynomialInX PolynomialInX::derivative() const {
  std::vector<BigInt> out;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) out.push_back(coefficients_[k] * k);
  return PolynomialInX(std::move(out));
}

PolynomialInX PolynomialInX::divided_difference() const {
  if (coefficients_.size() <= 1) return {};
  return PolynomialInX(std::vector<BigInt>(coefficients_.begin() + 1, coefficients_.end()));
}

PolynomialInX PolynomialInX::without_constant() const {
  std::vector<BigInt> out = coefficients_;
  if (!out.empty()) out[0] = 0;
  return PolynomialInX(std::move(out));
}

std::string_view to_string(SeriesFamily f) noexcept {
  switch (f) {
    case SeriesFamily::linear:
      return "linear";
    case SeriesFamily::indecomposable:
      return "indecomposable";
    case SeriesFamily::planar:
      return "planar";
    case SeriesFamily::planar_indecomposable:
      return "planar-indecomposable";
  }
  return "linear";
}

std::vector<PolynomialInX> series_polynomials(SeriesFamily family, std::size_t max_size) {
  const bool indecomposable =
      family == SeriesFamily::indecomposable || family == SeriesFamily::planar_indecomposable;
  const bool planar = family == SeriesFamily::planar || family == SeriesFamily::planar_indecomposable;

  std::vector<PolynomialInX> p{PolynomialInX::x()};
  // Factors entering the quadratic term: P_i, or P_i - P_i(0) when closed
  // subterms are excluded.
  std::vector<PolynomialInX> factor{indecomposable ? p[0].without_constant() : p[0]};
  for (std::size_t n = 0; n < max_size; ++n) {
    PolynomialInX next = planar ? p[n].divided_difference() : p[n].derivative();
    for (std::size_t i = 0; i <= n; ++i) next = next + factor[i] * factor[n - i];
    factor.push_back(indecomposable ? next.without_constant() : next);
    p.push_back(std::move(next));
  }
  return p;
}

CoefficientTable series_table(SeriesFamily family, std::size_t max_size) {
  const bool exponential = family == SeriesFamily::linear || family == SeriesFamily::indecomposable;
  const auto polys = series_polynomials(family, max_size);
  CoefficientTable table{family, {}};
  for (const auto& poly : polys) {
    std::vector<BigInt> row;
    BigInt factorial = 1;
    for (std::size_t k = 0; k < poly.coefficients().size(); ++k) {
      if (k > 0) factorial *= k;
      row.push_back(exponential ? poly.coefficient(k) * factorial : poly.coefficient(k));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

BigInt CoefficientTable::at(std::size_t n, std::size_t k) const {
  if (n >= rows.size() || k >= rows[n].size()) return 0;
  return rows[n][k];
}

std::vector<BigInt> CoefficientTable::closed() const {
  std::vector<BigInt> out;
  for (std::size_t n = 0; n < rows.size(); ++n) out.push_back(at(n, 0));
  return out;
}

}  // namespace lambdamap
