#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qcp {

// One-line notation, 1-based values.  A "standard" permutation is a
// rearrangement of 1..n; general words of distinct integers are accepted
// only by standardize() and the replacement algorithms.
using Perm = std::vector<int>;

bool is_standard(const Perm& p);
void require_standard(const Perm& p, const char* where);

// Replace the letters of a word of distinct integers by 1..n, preserving
// relative order.  Throws std::invalid_argument on duplicates.
Perm standardize(const std::vector<int>& word);

int des(const Perm& p);
std::vector<int> des_set(const Perm& p);   // 1-based positions i with p[i] > p[i+1]
std::vector<int> comp(const Perm& p);      // increasing-run lengths
long long inv(const Perm& p);

Perm reverse(const Perm& p);
Perm complement(const Perm& p);
Perm inverse(const Perm& p);
Perm rc(const Perm& p);

// Text format: whitespace/comma separated integers, or a compact digit
// string when n <= 9 (e.g. "867953124").
Perm parse_perm(std::string_view text);
std::string format_perm(const Perm& p);

}  // namespace qcp
