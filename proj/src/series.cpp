#include "qcp/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcp {

namespace {

void require_same(const BivariateSeries& a, const BivariateSeries& b,
                  const char* where) {
  if (a.normalization() != b.normalization())
    throw std::invalid_argument(std::string(where) + ": normalization mismatch");
}

RatPoly rat_t_power(int k) { return RatPoly(IntPoly::t_power(k)); }

}  // namespace

BivariateSeries BivariateSeries::one(Normalization norm, int order) {
  BivariateSeries s(norm, order);
  s.coeff(0) = RatPoly::constant(1);
  return s;
}

BivariateSeries BivariateSeries::x(Normalization norm, int order) {
  BivariateSeries s(norm, order);
  if (order >= 1) s.coeff(1) = RatPoly::constant(1);
  return s;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  require_same(a, b, "series add");
  const int order = std::min(a.order(), b.order());
  BivariateSeries out(a.normalization(), order);
  for (int n = 0; n <= order; ++n) out.coeff(n) = a.coeff(n) + b.coeff(n);
  return out;
}

BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
  require_same(a, b, "series subtract");
  const int order = std::min(a.order(), b.order());
  BivariateSeries out(a.normalization(), order);
  for (int n = 0; n <= order; ++n) out.coeff(n) = a.coeff(n) - b.coeff(n);
  return out;
}

BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) {
  require_same(a, b, "series_mul");
  const int order = std::min(a.order(), b.order());
  BivariateSeries out(a.normalization(), order);
  const bool egf = a.normalization() == Normalization::EGF;
  for (int n = 0; n <= order; ++n) {
    RatPoly c;
    for (int i = 0; i <= n; ++i) {
      RatPoly term = a.coeff(i) * b.coeff(n - i);
      if (egf) term *= mpq_class(binomial(n, i));
      c += term;
    }
    out.coeff(n) = std::move(c);
  }
  return out;
}

BivariateSeries series_exp(const BivariateSeries& f) {
  if (!f.coeff(0).is_zero())
    throw std::invalid_argument("series_exp: nonzero constant term");
  const int order = f.order();
  BivariateSeries out(f.normalization(), order);
  out.coeff(0) = RatPoly::constant(1);
  if (f.normalization() == Normalization::EGF) {
    // F' = f' F: F_{n+1} = sum C(n,i) f_{i+1} F_{n-i}
    for (int n = 0; n < order; ++n) {
      RatPoly c;
      for (int i = 0; i <= n; ++i) {
        RatPoly term = f.coeff(i + 1) * out.coeff(n - i);
        term *= mpq_class(binomial(n, i));
        c += term;
      }
      out.coeff(n + 1) = std::move(c);
    }
  } else {
    // (n+1) F_{n+1} = sum (i+1) f_{i+1} F_{n-i}
    for (int n = 0; n < order; ++n) {
      RatPoly c;
      for (int i = 0; i <= n; ++i) {
        RatPoly term = f.coeff(i + 1) * out.coeff(n - i);
        term *= mpq_class(i + 1);
        c += term;
      }
      c *= mpq_class(1, n + 1);
      out.coeff(n + 1) = std::move(c);
    }
  }
  return out;
}

BivariateSeries series_invert(const BivariateSeries& f) {
  if (!(f.coeff(0) == RatPoly::constant(1)))
    throw std::invalid_argument("series_invert: constant term must be 1");
  const int order = f.order();
  BivariateSeries out(f.normalization(), order);
  out.coeff(0) = RatPoly::constant(1);
  const bool egf = f.normalization() == Normalization::EGF;
  for (int n = 1; n <= order; ++n) {
    RatPoly c;
    for (int i = 1; i <= n; ++i) {
      RatPoly term = f.coeff(i) * out.coeff(n - i);
      if (egf) term *= mpq_class(binomial(n, i));
      c += term;
    }
    c *= mpq_class(-1);
    out.coeff(n) = std::move(c);
  }
  return out;
}

BivariateSeries series_integrate(const BivariateSeries& f) {
  BivariateSeries out(f.normalization(), f.order());
  for (int n = 1; n <= f.order(); ++n) {
    out.coeff(n) = f.coeff(n - 1);
    if (f.normalization() == Normalization::OGF) out.coeff(n) *= mpq_class(1, n);
  }
  return out;
}

BivariateSeries series_derivative(const BivariateSeries& f) {
  if (f.order() < 1) throw std::invalid_argument("series_derivative: order 0");
  BivariateSeries out(f.normalization(), f.order() - 1);
  for (int n = 0; n < f.order(); ++n) {
    out.coeff(n) = f.coeff(n + 1);
    if (f.normalization() == Normalization::OGF) out.coeff(n) *= mpq_class(n + 1);
  }
  return out;
}

BivariateSeries series_scale_t(const BivariateSeries& f, int k) {
  BivariateSeries out(f.normalization(), f.order());
  for (int n = 0; n <= f.order(); ++n) out.coeff(n) = f.coeff(n).times_t(k);
  return out;
}

BivariateSeries structure_transform(const BivariateSeries& a_sigma, int order) {
  if (a_sigma.order() < order - 1)
    throw std::invalid_argument("structure_transform: insufficient input order");
  if (a_sigma.normalization() != Normalization::EGF)
    throw std::invalid_argument("structure_transform: EGF input required");
  BivariateSeries out(Normalization::EGF, order);
  out.coeff(0) = RatPoly::constant(1);
  for (int n = 0; n < order; ++n) {
    RatPoly c;
    for (int i = 0; i <= n - 1; ++i) {
      RatPoly term = a_sigma.coeff(i) * out.coeff(n - i);
      term *= mpq_class(binomial(n, i));
      c += term;
    }
    c = c.times_t();
    c += a_sigma.coeff(n);
    out.coeff(n + 1) = std::move(c);
  }
  return out;
}

int verify_structure_closed_form(const BivariateSeries& a_sigma,
                                 const BivariateSeries& a_p, int order) {
  if (a_sigma.order() < order || a_p.order() < order)
    throw std::invalid_argument("verify_structure_closed_form: insufficient order");
  BivariateSeries inner(Normalization::EGF, order);
  for (int n = 1; n <= order; ++n) inner.coeff(n) = a_sigma.coeff(n - 1).times_t();
  BivariateSeries e = series_exp(inner);
  if (!(a_p.coeff(0) == RatPoly::constant(1))) return 0;
  for (int n = 1; n <= order; ++n)
    if (!(a_p.coeff(n).times_t() == e.coeff(n))) return n;
  return -1;
}

BivariateSeries complement_transform(const BivariateSeries& f) {
  if (!(f.coeff(0) == RatPoly::constant(1)))
    throw std::invalid_argument("complement_transform: constant term must be 1");
  BivariateSeries out(f.normalization(), f.order());
  out.coeff(0) = RatPoly::constant(1);
  for (int n = 1; n <= f.order(); ++n) {
    IntPoly p = f.int_coeff(n);
    if (p.degree() > n - 1)
      throw std::domain_error("complement_transform: coefficient degree exceeds n-1");
    out.coeff(n) = RatPoly(p.reversed_to_degree(n - 1));
  }
  return out;
}

BivariateSeries closed_form(const std::string& name, int order) {
  const int N = order;
  auto finalize_shifted = [&](const BivariateSeries& e) {
    // A_n = E_n / t for n >= 1, A_0 = 1.
    BivariateSeries a(Normalization::EGF, N);
    a.coeff(0) = RatPoly::constant(1);
    for (int n = 1; n <= N; ++n) a.coeff(n) = e.coeff(n).divided_by_t();
    return a;
  };
  auto assert_integral = [&](const BivariateSeries& a) {
    for (int n = 0; n <= N; ++n) (void)a.int_coeff(n);
    return a;
  };

  if (name == "(12)3" || name == "(21)3" || name == "(32)1" || name == "(23)1") {
    BivariateSeries g(Normalization::EGF, N);
    for (int n = 1; n <= N; ++n) {
      if (name == "(12)3")
        g.coeff(n) = n == 1 ? rat_t_power(1) : rat_t_power(n - 1);
      else if (name == "(21)3")
        g.coeff(n) = rat_t_power(1);
      else if (name == "(32)1")
        g.coeff(n) = n == 1 ? RatPoly::constant(1) : rat_t_power(1);
      else  // "(23)1"
        g.coeff(n) = rat_t_power(n - 1);
    }
    BivariateSeries e = series_exp(g);
    if (name == "(12)3" || name == "(21)3") return assert_integral(finalize_shifted(e));
    return assert_integral(e);
  }

  if (name == "(123)cons" || name == "(321)cons") {
    // Even/odd expansion with u^2 substituted by a polynomial, so the
    // square roots cancel before any coefficient is materialized.
    const bool is123 = name == "(123)cons";
    IntPoly u2 = is123 ? IntPoly({0, -4, 1})      // t^2 - 4t
                       : IntPoly({1, -4});        // 1 - 4t
    BivariateSeries denom(Normalization::EGF, N);
    denom.coeff(0) = RatPoly::constant(1);
    IntPoly u2m = IntPoly::constant(1);
    for (int m = 0; 2 * m <= N || 2 * m + 1 <= N; ++m) {
      if (m > 0) u2m = u2m * u2;
      if (2 * m <= N && m > 0) {
        RatPoly c(u2m);
        c *= mpq_class(1, mpz_class(1) << (2 * m));
        denom.coeff(2 * m) = c;
      }
      if (2 * m + 1 <= N) {
        RatPoly c(is123 ? u2m.times_t() : u2m);
        c *= mpq_class(-1, mpz_class(1) << (2 * m + 1));
        denom.coeff(2 * m + 1) = c;
      }
      if (2 * (m + 1) > N && 2 * (m + 1) + 1 > N) break;
    }
    BivariateSeries num(Normalization::EGF, N);
    for (int n = 0; n <= N; ++n) {
      RatPoly c(is123 ? IntPoly::t_power(n) : IntPoly::constant(1));
      c *= mpq_class(1, mpz_class(1) << n);
      num.coeff(n) = c;
    }
    BivariateSeries r = series_mul(num, series_invert(denom));
    if (is123) return assert_integral(finalize_shifted(r));
    return assert_integral(r);
  }

  throw std::invalid_argument("closed_form: unknown name " + name);
}

mpz_class narayana_number(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) return (n >= 1 || k != 0) ? mpz_class(0) : mpz_class(1);
  mpz_class v = binomial(n, k) * binomial(n - 1, k);
  mpz_class q, r;
  mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), k + 1);
  if (r != 0) throw std::logic_error("narayana_number: non-integer");
  return q;
}

BivariateSeries narayana(int order) {
  // B = 1 - x(t-1)B + t x B^2, the rationalized quadratic of the closed form.
  BivariateSeries b(Normalization::OGF, order);
  b.coeff(0) = RatPoly::constant(1);
  RatPoly one_minus_t({mpq_class(1), mpq_class(-1)});
  for (int n = 1; n <= order; ++n) {
    RatPoly c = one_minus_t * b.coeff(n - 1);
    RatPoly sq;
    for (int i = 0; i <= n - 1; ++i) sq += b.coeff(i) * b.coeff(n - 1 - i);
    c += sq.times_t();
    b.coeff(n) = std::move(c);
  }
  return b;
}

UVState uv_recurrences(int order) {
  if (order < 2) throw std::invalid_argument("uv_recurrences: order must be >= 2");
  UVState s;
  s.U.assign(order + 1, IntPoly());
  s.V.assign(order + 1, IntPoly());
  if (order >= 2) {
    s.U[2] = IntPoly::constant(1);
    s.V[2] = IntPoly::t_power(1);
  }
  if (order >= 3) {
    s.U[3] = IntPoly({1, 1});
    s.V[3] = IntPoly({0, 2, 1});
  }
  for (int n = 3; n + 1 <= order; ++n) {
    IntPoly u = s.U[n].times_t();
    u += (s.U[n - 1] * IntPoly::constant(n)).times_t();
    IntPoly conv;
    for (int i = 2; i <= n - 2; ++i)
      conv += s.U[i] * s.U[n - i] * IntPoly(std::vector<mpz_class>{binomial(n, i)});
    u += conv.times_t();
    u += s.U[n];
    s.U[n + 1] = std::move(u);

    IntPoly v = s.V[n].times_t();
    v += (s.V[n - 1] * IntPoly::constant(n)).times_t();
    IntPoly convv;
    for (int i = 2; i <= n - 2; ++i)
      convv += s.V[i] * s.U[n - i] * IntPoly(std::vector<mpz_class>{binomial(n, i)});
    v += convv.times_t();
    v += (s.U[n - 1] * IntPoly::constant(n)).times_t();
    s.V[n + 1] = std::move(v);
  }
  return s;
}

BivariateSeries uv_to_series(const std::vector<IntPoly>& coeffs) {
  BivariateSeries out(Normalization::EGF, static_cast<int>(coeffs.size()) - 1);
  for (size_t n = 0; n < coeffs.size(); ++n) out.coeff(static_cast<int>(n)) = RatPoly(coeffs[n]);
  return out;
}

BivariateSeries a132_series(const UVState& state) {
  BivariateSeries out = uv_to_series(state.U);
  const BivariateSeries v = uv_to_series(state.V);
  for (int n = 0; n <= out.order(); ++n) out.coeff(n) += v.coeff(n);
  out.coeff(0) += RatPoly::constant(1);
  if (out.order() >= 1) out.coeff(1) += RatPoly::constant(1);
  return out;
}

bool verify_uv_pdes(const UVState& state) {
  const int N = state.order();
  BivariateSeries u = uv_to_series(state.U);
  BivariateSeries v = uv_to_series(state.V);
  BivariateSeries x = BivariateSeries::x(Normalization::EGF, N);
  BivariateSeries one = BivariateSeries::one(Normalization::EGF, N);

  // U + x + 1
  BivariateSeries uxp1 = u;
  for (int n = 0; n <= N; ++n) {
    uxp1.coeff(n) += x.coeff(n);
    uxp1.coeff(n) += one.coeff(n);
  }
  // tU + 1
  BivariateSeries tu1(Normalization::EGF, N);
  for (int n = 0; n <= N; ++n) tu1.coeff(n) = u.coeff(n).times_t();
  tu1.coeff(0) += RatPoly::constant(1);

  BivariateSeries rhs_u = series_mul(tu1, uxp1);
  rhs_u.coeff(0) -= RatPoly::constant(1);
  BivariateSeries du = series_derivative(u);
  for (int n = 0; n <= N - 1; ++n)
    if (!(du.coeff(n) == rhs_u.coeff(n))) return false;

  // V + x
  BivariateSeries vx = v;
  for (int n = 0; n <= N; ++n) vx.coeff(n) += x.coeff(n);
  BivariateSeries rhs_v = series_mul(vx, uxp1);
  for (int n = 0; n <= N; ++n) rhs_v.coeff(n) = rhs_v.coeff(n).times_t();
  BivariateSeries dv = series_derivative(v);
  for (int n = 0; n <= N - 1; ++n)
    if (!(dv.coeff(n) == rhs_v.coeff(n))) return false;
  return true;
}

BivariateSeries cor_231_transform(const UVState& state) {
  return complement_transform(a132_series(state));
}

}  // namespace qcp
