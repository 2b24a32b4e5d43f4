// Compares the serial descent-vector kernel against the parallel one on a
// few representative patterns and reports wall-clock times.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qcp/enumerate.hpp"

using namespace qcp;

namespace {

double seconds(const std::function<DescentVector()>& fn, DescentVector& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 9;
  const std::vector<std::string> patterns = {"(312)4", "(123)", "(12)3(45)",
                                             "(13)2"};
  std::printf("%-10s %-3s %12s %12s %8s\n", "pattern", "n", "serial[s]",
              "parallel[s]", "speedup");
  for (const auto& text : patterns) {
    VincularPattern w = parse_pattern(text);
    DescentVector serial, parallel;
    double ts = seconds([&] { return descent_vector_serial(n, w, n); }, serial);
    double tp = seconds([&] { return descent_vector(n, w, n); }, parallel);
    if (serial != parallel) {
      std::printf("MISMATCH for %s\n", text.c_str());
      return 1;
    }
    std::printf("%-10s %-3d %12.3f %12.3f %8.2f\n", text.c_str(), n, ts, tp,
                tp > 0 ? ts / tp : 0.0);
  }
  return 0;
}
