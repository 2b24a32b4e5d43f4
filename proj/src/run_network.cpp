#include "qcp/run_network.hpp"

#include <stdexcept>

namespace qcp {

namespace {

std::vector<BivariateSeries> identity_matrix(Normalization norm, int m,
                                             int order) {
  std::vector<BivariateSeries> mat(static_cast<size_t>(m) * m,
                                   BivariateSeries(norm, order));
  for (int i = 0; i < m; ++i)
    mat[static_cast<size_t>(i) * m + i].coeff(0) = RatPoly::constant(1);
  return mat;
}

// Order-by-order inverse of a matrix series whose constant term is I.
// OGF: plain Cauchy convolution; EGF: binomial convolution.
std::vector<BivariateSeries> matrix_invert(
    const std::vector<BivariateSeries>& a, int m) {
  const Normalization norm = a.at(0).normalization();
  const int order = a.at(0).order();
  auto out = identity_matrix(norm, m, order);
  auto at = [m](std::vector<BivariateSeries>& mat, int i, int j) -> BivariateSeries& {
    return mat[static_cast<size_t>(i) * m + j];
  };
  auto cat = [m](const std::vector<BivariateSeries>& mat, int i, int j)
      -> const BivariateSeries& {
    return mat[static_cast<size_t>(i) * m + j];
  };
  for (int n = 1; n <= order; ++n) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        RatPoly acc;
        for (int k = 0; k < n; ++k) {
          for (int l = 0; l < m; ++l) {
            RatPoly term = cat(out, i, l).coeff(k) * cat(a, l, j).coeff(n - k);
            if (norm == Normalization::EGF) term *= mpq_class(binomial(n, k));
            acc = acc + term;
          }
        }
        at(out, i, j).coeff(n) = RatPoly() - acc;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<BivariateSeries> matrix_mul(const std::vector<BivariateSeries>& a,
                                        const std::vector<BivariateSeries>& b,
                                        int m) {
  const Normalization norm = a.at(0).normalization();
  const int order = a.at(0).order();
  std::vector<BivariateSeries> out(static_cast<size_t>(m) * m,
                                   BivariateSeries(norm, order));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      BivariateSeries acc(norm, order);
      for (int l = 0; l < m; ++l)
        acc = acc + series_mul(a[static_cast<size_t>(i) * m + l],
                               b[static_cast<size_t>(l) * m + j]);
      out[static_cast<size_t>(i) * m + j] = acc;
    }
  return out;
}

RunNetwork run_network_123() {
  RunNetwork net;
  net.m = 1;
  net.arcs.push_back({1, 1, {1, 2}, IntPoly::t_power(1)});
  return net;
}

RunEnumerator run_network_enumerator(const RunNetwork& net, int order) {
  if (net.m < 1) throw std::invalid_argument("run network needs m >= 1");
  RunEnumerator en;
  en.m = net.m;
  en.weights.assign(static_cast<size_t>(net.m) * net.m,
                    BivariateSeries(Normalization::OGF, order));
  for (const RunNetworkArc& arc : net.arcs) {
    if (arc.from < 1 || arc.from > net.m || arc.to < 1 || arc.to > net.m)
      throw std::invalid_argument("run network arc out of range");
    auto& w = en.weights[static_cast<size_t>(arc.from - 1) * net.m + (arc.to - 1)];
    for (int len : arc.lengths) {
      if (len < 1) throw std::invalid_argument("run lengths must be positive");
      if (len <= order) w.coeff(len) = w.coeff(len) + RatPoly(arc.weight);
    }
  }

  auto i_plus_w = identity_matrix(Normalization::OGF, net.m, order);
  for (size_t i = 0; i < en.weights.size(); ++i)
    i_plus_w[i] = i_plus_w[i] + en.weights[i];
  en.inverse = matrix_invert(i_plus_w, net.m);

  en.phi.reserve(en.inverse.size());
  for (const BivariateSeries& v : en.inverse) {
    BivariateSeries e(Normalization::EGF, order);
    for (int n = 0; n <= order; ++n) e.coeff(n) = v.coeff(n);
    en.phi.push_back(std::move(e));
  }

  en.result = matrix_invert(en.phi, net.m);
  return en;
}

}  // namespace qcp
