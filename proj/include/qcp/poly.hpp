#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qcp {

// Dense polynomials in t.  IntPoly is the public coefficient type
// (descent polynomials, Narayana rows, ...); RatPoly is internal scratch
// for the series engine, where 1/n! and 1/t appear mid-computation.

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
  static IntPoly constant(long v);
  static IntPoly t_power(int k);  // t^k

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const mpz_class& coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly&) const = default;

  IntPoly times_t(int k = 1) const;
  // t^(deg) * p(1/t) padded to the given degree; needs degree(p) <= deg.
  IntPoly reversed_to_degree(int deg) const;
  // Exact division by t; throws if the constant term is nonzero.
  IntPoly divided_by_t() const;

  mpz_class eval_at_one() const;
  std::string str() const;  // e.g. "1+3t+t^2"
  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }
  RatPoly(const IntPoly& p);  // NOLINT: implicit widening is intended
  static RatPoly constant(const mpq_class& v);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& coeff(int k) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly& operator*=(const mpq_class& s);
  bool operator==(const RatPoly&) const = default;

  RatPoly times_t(int k = 1) const;
  RatPoly divided_by_t() const;

  bool is_integral() const;
  IntPoly to_int() const;  // asserts integrality

 private:
  void trim();
  std::vector<mpq_class> c_;
};

mpz_class binomial(int n, int k);
mpz_class factorial(int n);

}  // namespace qcp
