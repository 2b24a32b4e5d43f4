#pragma once

#include <string>
#include <vector>

#include "qcp/poly.hpp"
#include "qcp/series.hpp"

namespace qcp {

// Digraph on [m] with arc-indexed allowed run lengths; each admitted length
// on an arc contributes weight * x^length to the arc's weight series.
struct RunNetworkArc {
  int from = 1;  // 1-based vertices
  int to = 1;
  std::vector<int> lengths;
  IntPoly weight;
};

struct RunNetwork {
  int m = 1;
  std::vector<RunNetworkArc> arcs;
};

// The single-vertex network whose walks are run-length sequences over
// {1,2}, each run weighted t: enumerates consecutive-123-avoiders.
RunNetwork run_network_123();

struct RunEnumerator {
  // All matrices are m x m, stored row-major.
  std::vector<BivariateSeries> weights;   // OGF, W(x)
  std::vector<BivariateSeries> inverse;   // OGF, V = (I + W)^{-1}
  std::vector<BivariateSeries> phi;       // EGF reinterpretation of V
  std::vector<BivariateSeries> result;    // EGF, inverse of phi
  int m = 1;

  const BivariateSeries& entry(const std::vector<BivariateSeries>& mat, int i,
                               int j) const {
    return mat.at(static_cast<size_t>(i) * m + j);
  }
};

RunEnumerator run_network_enumerator(const RunNetwork& net, int order);

// Matrix product of two m x m series matrices (same normalization).
std::vector<BivariateSeries> matrix_mul(const std::vector<BivariateSeries>& a,
                                        const std::vector<BivariateSeries>& b,
                                        int m);

}  // namespace qcp
