#include "qcp/poly.hpp"

#include <stdexcept>

namespace qcp {

namespace {
const mpz_class kZeroZ = 0;
const mpq_class kZeroQ = 0;
}  // namespace

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(long v) {
  if (v == 0) return IntPoly();
  return IntPoly({mpz_class(v)});
}

IntPoly IntPoly::t_power(int k) {
  std::vector<mpz_class> c(k + 1, 0);
  c[k] = 1;
  return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroZ;
  return c_[k];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::times_t(int k) const {
  if (is_zero()) return IntPoly();
  std::vector<mpz_class> c(c_.size() + k, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::reversed_to_degree(int deg) const {
  if (degree() > deg)
    throw std::invalid_argument("reversed_to_degree: degree exceeds target");
  std::vector<mpz_class> c(deg + 1, 0);
  for (int i = 0; i <= degree(); ++i) c[deg - i] = c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divided_by_t() const {
  if (is_zero()) return IntPoly();
  if (c_[0] != 0) throw std::domain_error("divided_by_t: nonzero constant term");
  return IntPoly(std::vector<mpz_class>(c_.begin() + 1, c_.end()));
}

mpz_class IntPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& v : c_) s += v;
  return s;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= degree(); ++k) {
    if (c_[k] == 0) continue;
    mpz_class a = c_[k];
    if (!s.empty()) {
      s += (a < 0) ? "-" : "+";
      if (a < 0) a = -a;
    } else if (a < 0) {
      s += "-";
      a = -a;
    }
    if (k == 0) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str();
      s += (k == 1) ? "t" : "t^" + std::to_string(k);
    }
  }
  return s;
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& v : c_) out.push_back(v.get_str());
  return out;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly::RatPoly(const IntPoly& p) {
  for (int k = 0; k <= p.degree(); ++k) c_.emplace_back(p.coeff(k));
  trim();
}

RatPoly RatPoly::constant(const mpq_class& v) {
  if (v == 0) return RatPoly();
  return RatPoly({v});
}

const mpq_class& RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZeroQ;
  return c_[k];
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(c));
}

RatPoly& RatPoly::operator*=(const mpq_class& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

RatPoly RatPoly::times_t(int k) const {
  if (is_zero()) return RatPoly();
  std::vector<mpq_class> c(c_.size() + k, 0);
  for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return RatPoly(std::move(c));
}

RatPoly RatPoly::divided_by_t() const {
  if (is_zero()) return RatPoly();
  if (c_[0] != 0) throw std::domain_error("divided_by_t: nonzero constant term");
  return RatPoly(std::vector<mpq_class>(c_.begin() + 1, c_.end()));
}

bool RatPoly::is_integral() const {
  for (const auto& v : c_)
    if (v.get_den() != 1) return false;
  return true;
}

IntPoly RatPoly::to_int() const {
  std::vector<mpz_class> c;
  for (const auto& v : c_) {
    if (v.get_den() != 1)
      throw std::domain_error("to_int: non-integer coefficient " + v.get_str());
    c.push_back(v.get_num());
  }
  return IntPoly(std::move(c));
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace qcp
