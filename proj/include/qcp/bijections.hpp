#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcp/pattern.hpp"
#include "qcp/permutation.hpp"

namespace qcp {

// Replacement engines over words of distinct integers.  The optional bound
// restricts both the loop condition and the choice of y to elements on the
// admissible side of it, which is how all five bijections share one engine.
std::pair<int, std::vector<int>> replacement_I(
    int a, std::vector<int> w, std::optional<int> lower_bound = std::nullopt);
std::pair<int, std::vector<int>> replacement_II(
    int a, std::vector<int> w, std::optional<int> upper_bound = std::nullopt);

// Anchor-and-window bijection: transforms every occurrence of `from`
// (one of (312)4, (231)4, (213)4, (132)4) into an occurrence of the pattern
// with the rc'd triple, by applying rc to the windows between anchors.
// Preserves des and inv.  Requires pi to contain `from` and avoid the
// target; throws std::domain_error otherwise.
Perm bijection_f(const Perm& pi, const VincularPattern& from);

// Replacement-based bijection for the pairs {(231)4,(241)3},
// {(132)4,(142)3}, {(134)2,(124)3}; `from` selects pattern and direction.
// Preserves des.  Requires pi to contain `from` and avoid its partner.
Perm bijection_g(const Perm& pi, const VincularPattern& from);

// Partner pattern within the five proved pairs, or nullopt.
std::optional<VincularPattern> bijection_partner(const VincularPattern& w);

// Total map S_n(alpha) -> S_n(beta): identity on double avoiders, else the
// appropriate f/g applied to the beta-occurrences.
Perm full_bijection(const VincularPattern& alpha, const VincularPattern& beta,
                    const Perm& pi);

struct BijectionCertificate {
  std::string pair;
  int n = 0;
  bool bijective = false;
  bool des_preserved = false;
  std::optional<bool> inv_preserved;  // only checked when requested
  std::optional<Perm> counterexample;
  // Non-fixed-point mappings, filled only when list_pairs is set.
  std::vector<std::pair<Perm, Perm>> mapped;
};

BijectionCertificate certify_pair(const VincularPattern& alpha,
                                  const VincularPattern& beta, int n,
                                  bool check_inv = false,
                                  bool list_pairs = false,
                                  int cap = 10);

}  // namespace qcp
