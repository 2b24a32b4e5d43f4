#pragma once

#include <string>
#include <vector>

#include "qcp/poly.hpp"

namespace qcp {

enum class Normalization { EGF, OGF };

// Truncated bivariate series in x whose coefficients are polynomials in t.
// Under EGF normalization coefficient n stores A_n(t), i.e. the series is
// sum A_n(t) x^n / n!; under OGF it stores the plain coefficient of x^n.
// Internal arithmetic is exact rational; int_coeff() asserts integrality.
class BivariateSeries {
 public:
  BivariateSeries(Normalization norm, int order)
      : norm_(norm), coeffs_(order + 1) {}
  static BivariateSeries one(Normalization norm, int order);
  static BivariateSeries x(Normalization norm, int order);

  Normalization normalization() const { return norm_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatPoly& coeff(int n) const { return coeffs_.at(n); }
  RatPoly& coeff(int n) { return coeffs_.at(n); }
  IntPoly int_coeff(int n) const { return coeffs_.at(n).to_int(); }

  bool operator==(const BivariateSeries&) const = default;

 private:
  Normalization norm_;
  std::vector<RatPoly> coeffs_;
};

// Coefficientwise sum/difference; both sides need the same normalization
// and order.
BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries series_exp(const BivariateSeries& f);        // needs f_0 = 0
BivariateSeries series_invert(const BivariateSeries& f);     // needs f_0 = 1
BivariateSeries series_integrate(const BivariateSeries& f);
BivariateSeries series_derivative(const BivariateSeries& f);
BivariateSeries series_scale_t(const BivariateSeries& f, int k = 1);

// A^{sigma k} from A^sigma via the level recurrence
// A_{n+1} = t * sum_{i<n} C(n,i) A_i^sigma A_{n-i} + A_n^sigma.
BivariateSeries structure_transform(const BivariateSeries& a_sigma, int order);

// Division-free check of t*(A^p - 1) = exp(t * int A^sigma) - 1 through the
// given order; returns the first failing coefficient index, or -1 if none.
int verify_structure_closed_form(const BivariateSeries& a_sigma,
                                 const BivariateSeries& a_p, int order);

// Coefficient-level action of passing to the complemented (or reversed)
// pattern: A_n(t) -> t^{n-1} A_n(1/t); valid for EGF and OGF enumerators.
BivariateSeries complement_transform(const BivariateSeries& f);

// Closed-form avoidance enumerators, built by exact series composition.
// Names: "(12)3", "(21)3", "(32)1", "(23)1", "(123)cons", "(321)cons".
BivariateSeries closed_form(const std::string& name, int order);

mpz_class narayana_number(int n, int k);
// OGF whose x^n coefficient is the Narayana polynomial sum_k N_{n,k} t^k,
// built from the rationalized functional equation of its closed form.
BivariateSeries narayana(int order);

struct UVState {
  // Descent enumerators of consecutive-132-avoiders starting with an
  // ascent (U) / a descent (V), levels 0..order.
  std::vector<IntPoly> U;
  std::vector<IntPoly> V;
  int order() const { return static_cast<int>(U.size()) - 1; }
};

UVState uv_recurrences(int order);
BivariateSeries uv_to_series(const std::vector<IntPoly>& coeffs);  // EGF
// A^{(132)} = 1 + x + U + V.
BivariateSeries a132_series(const UVState& state);
// Both PDEs as formal-series identities; true when they hold through
// order-1 of the state.
bool verify_uv_pdes(const UVState& state);
// A^{(231)} = A^{(312)} via the coefficient-reversal transform on U+V.
BivariateSeries cor_231_transform(const UVState& state);

}  // namespace qcp
