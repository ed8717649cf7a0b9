#include "entrec/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace entrec {

SchmidtVector CompactForm::expand() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (int c = 0; c < multiplicities[i]; ++c) out.push_back(values[i]);
  }
  return SchmidtVector(std::move(out));
}

SchmidtVector::SchmidtVector(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) fail(ErrorKind::InvalidState, "state needs dimension >= 1");
  for (const Rational& c : coeffs_) {
    if (c.sign() < 0) {
      fail(ErrorKind::NegativeCoefficient, "negative coefficient " + c.str());
    }
  }
  std::sort(coeffs_.begin(), coeffs_.end(), std::greater<Rational>());
}

SchmidtVector SchmidtVector::parse(const std::vector<std::string>& raw, int dimension,
                                   bool normalized) {
  if (static_cast<int>(raw.size()) != dimension) {
    fail(ErrorKind::DimensionMismatch,
         "declared dimension " + std::to_string(dimension) + " but got " +
             std::to_string(raw.size()) + " coefficients");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(raw.size());
  for (const std::string& s : raw) coeffs.push_back(Rational::from_string(s));
  SchmidtVector v(std::move(coeffs));
  if (normalized && !v.is_normalized()) {
    fail(ErrorKind::NotNormalized, "coefficients sum to " + v.sum().str() + ", not 1");
  }
  return v;
}

Rational SchmidtVector::sum() const {
  Rational total;
  for (const Rational& c : coeffs_) total += c;
  return total;
}

Rational SchmidtVector::prefix_sum(int m) const {
  if (m < 1 || m > dim()) {
    fail(ErrorKind::IndexOutOfRange,
         "prefix index " + std::to_string(m) + " outside 1.." + std::to_string(dim()));
  }
  Rational total;
  for (int i = 0; i < m; ++i) total += coeffs_[i];
  return total;
}

int SchmidtVector::nonzero_count() const {
  int count = 0;
  for (const Rational& c : coeffs_) {
    if (!c.is_zero()) ++count;
  }
  return count;
}

CompactForm compact(const SchmidtVector& x) {
  CompactForm form;
  for (const Rational& c : x.coefficients()) {
    if (!form.values.empty() && form.values.back() == c) {
      ++form.multiplicities.back();
    } else {
      form.values.push_back(c);
      form.multiplicities.push_back(1);
    }
  }
  return form;
}

SchmidtVector tensor(const SchmidtVector& x, const SchmidtVector& y) {
  std::vector<Rational> products;
  products.reserve(static_cast<std::size_t>(x.dim()) * y.dim());
  for (const Rational& a : x.coefficients()) {
    for (const Rational& b : y.coefficients()) products.push_back(a * b);
  }
  return SchmidtVector(std::move(products));
}

SchmidtVector tensor_power(const SchmidtVector& x, int m) {
  if (m < 1) fail(ErrorKind::PreconditionViolated, "tensor power needs m >= 1");
  SchmidtVector result = x;
  for (int i = 1; i < m; ++i) result = tensor(result, x);
  return result;
}

SchmidtVector direct_sum(const SchmidtVector& x, const SchmidtVector& y) {
  std::vector<Rational> coeffs = x.coefficients();
  coeffs.insert(coeffs.end(), y.coefficients().begin(), y.coefficients().end());
  return SchmidtVector(std::move(coeffs));
}

MajorizationReport majorize(const SchmidtVector& x, const SchmidtVector& y) {
  if (x.dim() != y.dim()) {
    fail(ErrorKind::DimensionMismatch,
         "majorization needs equal dimensions, got " + std::to_string(x.dim()) +
             " and " + std::to_string(y.dim()));
  }
  if (x.sum() != y.sum()) {
    fail(ErrorKind::SumMismatch,
         "majorization needs equal totals, got " + x.sum().str() + " and " + y.sum().str());
  }

  MajorizationReport report;
  report.majorized = true;
  Rational ex, ey;
  const int n = x.dim();
  for (int m = 1; m < n; ++m) {
    ex += x[m - 1];
    ey += y[m - 1];
    if (ex > ey) {
      report.majorized = false;
      if (!report.first_violation) report.first_violation = m;
    } else if (ex == ey) {
      report.delta.push_back(m);
    }
  }
  report.strict = report.majorized && report.delta.empty();
  return report;
}

bool bounded_strictly(const SchmidtVector& x, const SchmidtVector& y) {
  return x.largest() < y.largest() && x.smallest() > y.smallest();
}

double distance(const SchmidtVector& x, const SchmidtVector& y) {
  if (x.dim() != y.dim()) {
    fail(ErrorKind::DimensionMismatch, "distance needs equal dimensions");
  }
  Rational sum_sq;
  for (int i = 0; i < x.dim(); ++i) {
    Rational d = x[i] - y[i];
    sum_sq += d * d;
  }
  return std::sqrt(sum_sq.to_double());
}

bool valid_witness(const SchmidtVector& psi, const SchmidtVector& phi,
                   const SchmidtVector& chi, const SchmidtVector& omega) {
  if (omega == chi) return false;
  if (!majorize(omega, chi).majorized) return false;
  return majorize(tensor(psi, chi), tensor(phi, omega)).majorized;
}

}  // namespace entrec
