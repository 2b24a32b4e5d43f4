#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcp/permutation.hpp"

namespace qcp {

// A vincular pattern: a standard permutation whose consecutive letters may
// be grouped into underlined blocks.  glue[i] (i >= 1) means positions i-1
// and i belong to the same block, so any occurrence must pick adjacent host
// positions there.  Length-1 blocks are indistinguishable from free
// positions, which keeps equality canonical.
struct VincularPattern {
  Perm base;
  std::vector<bool> glue;  // same size as base; glue[0] is always false

  int length() const { return static_cast<int>(base.size()); }
  bool is_consecutive() const;
  bool is_classical() const;
  bool is_quasi_consecutive() const;

  bool operator==(const VincularPattern&) const = default;
};

// Grammar (bit-exact): PATTERN := ITEM+ ; ITEM := DIGIT | "(" DIGIT DIGIT+ ")"
// and the digits across the pattern must form a permutation of 1..k.
VincularPattern parse_pattern(std::string_view text);
std::string render_pattern(const VincularPattern& w);

VincularPattern make_consecutive(const Perm& base);
VincularPattern quasi_from_consecutive(const VincularPattern& sigma);

VincularPattern pattern_complement(const VincularPattern& w);
VincularPattern pattern_reverse(const VincularPattern& w);
VincularPattern pattern_rc(const VincularPattern& w);

// All occurrences, as strictly increasing 1-based position sequences,
// sorted lexicographically.
std::vector<std::vector<int>> occurrences(const Perm& pi, const VincularPattern& w);
bool avoids(const Perm& pi, const VincularPattern& w);
bool contains(const Perm& pi, const VincularPattern& w);

}  // namespace qcp
