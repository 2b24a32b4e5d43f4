#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qcp/pattern.hpp"
#include "qcp/poly.hpp"

namespace qcp {

// Guards against accidental factorial blowup; override per call.
inline constexpr int kDefaultEnumerationCap = 10;

struct DescentVector {
  int n = 0;
  std::vector<long long> counts;  // counts[k] = #{pi in S_n(w) : des(pi) = k}

  long long total() const;
  bool operator==(const DescentVector&) const = default;
};

// Serial reference kernel: one next_permutation sweep over S_n.
DescentVector descent_vector_serial(int n, const VincularPattern& w,
                                    int cap = kDefaultEnumerationCap);

// OpenMP kernel: coarse split by first letter, deterministic reduction.
DescentVector descent_vector(int n, const VincularPattern& w,
                             int cap = kDefaultEnumerationCap);

long long avoider_count(int n, const VincularPattern& w,
                        int cap = kDefaultEnumerationCap);

// Streams every avoider in lexicographic order.
void for_each_avoider(int n, const VincularPattern& w,
                      const std::function<void(const Perm&)>& fn,
                      int cap = kDefaultEnumerationCap);
std::vector<Perm> avoiders(int n, const VincularPattern& w,
                           int cap = kDefaultEnumerationCap);

IntPoly descent_polynomial(int n, const VincularPattern& w,
                           int cap = kDefaultEnumerationCap);

struct PatternClass {
  std::vector<std::string> members;                // rendered patterns
  std::vector<DescentVector> vectors;              // levels 1..n_max
};

struct ClassReport {
  int n_max = 0;
  std::vector<PatternClass> classes;
  // Least level at which the two classes' descent vectors first differ.
  std::map<std::pair<int, int>, int> separating_level;
};

ClassReport classify(const std::vector<VincularPattern>& patterns, int n_max,
                     int cap = kDefaultEnumerationCap);

// All 24 quasi-consecutive patterns of the given length (sigma consecutive
// of length k-1, followed by a free letter), in lexicographic base order.
std::vector<VincularPattern> quasi_consecutive_patterns(int length);

struct OeisComparison {
  int n = 0;
  long long computed = 0;
  long long file_value = 0;
  bool match = false;
};

struct OeisReport {
  std::vector<OeisComparison> rows;
  bool all_match = true;
  bool no_overlap = false;
};

// b-file format: "n value" per line, '#' comments ignored.
OeisReport oeis_compare(const VincularPattern& w, const std::string& bfile_path,
                        int n_max, int cap = kDefaultEnumerationCap);

std::string descent_vector_csv_row(const std::string& pattern_text,
                                   const DescentVector& dv);

}  // namespace qcp
