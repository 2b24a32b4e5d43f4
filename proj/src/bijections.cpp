#include "qcp/bijections.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qcp/enumerate.hpp"

namespace qcp {

std::pair<int, std::vector<int>> replacement_I(int a, std::vector<int> w,
                                               std::optional<int> lower_bound) {
  for (;;) {
    int best = -1;
    size_t best_pos = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= a) continue;
      if (lower_bound && w[i] <= *lower_bound) continue;
      if (best < 0 || w[i] > best) {
        best = w[i];
        best_pos = i;
      }
    }
    if (best < 0) break;
    w[best_pos] = a;
    a = best;
  }
  return {a, std::move(w)};
}

std::pair<int, std::vector<int>> replacement_II(int a, std::vector<int> w,
                                                std::optional<int> upper_bound) {
  for (;;) {
    int best = -1;
    size_t best_pos = 0;
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] <= a) continue;
      if (upper_bound && w[i] >= *upper_bound) continue;
      if (best < 0 || w[i] < best) {
        best = w[i];
        best_pos = i;
      }
    }
    if (best < 0) break;
    w[best_pos] = a;
    a = best;
  }
  return {a, std::move(w)};
}

namespace {

Perm triple_of(const VincularPattern& w) {
  return standardize({w.base[0], w.base[1], w.base[2]});
}

bool is_glued_triple_quasi(const VincularPattern& w) {
  return w.length() == 4 && !w.glue[0] && w.glue[1] && w.glue[2] && !w.glue[3];
}

// The f-pairs: quasi patterns (sigma)4 whose target has the rc'd triple.
std::optional<VincularPattern> f_target(const VincularPattern& from) {
  if (!is_glued_triple_quasi(from)) return std::nullopt;
  if (from.base[3] != 4) return std::nullopt;
  Perm sigma = triple_of(from);
  if (sigma != Perm{3, 1, 2} && sigma != Perm{2, 3, 1} && sigma != Perm{2, 1, 3} &&
      sigma != Perm{1, 3, 2})
    return std::nullopt;
  Perm target_triple = rc(sigma);
  VincularPattern to = make_consecutive(target_triple);
  return quasi_from_consecutive(to);
}

struct GRule {
  VincularPattern src;
  VincularPattern dst;
  bool use_replacement_I;  // forward direction (src occurrences -> dst)
  int bound_offset;        // 0 => value at j, 2 => value at j+2, -1 => none
};

std::vector<GRule> g_rules() {
  auto P = [](const char* s) { return parse_pattern(s); };
  return {
      {P("(241)3"), P("(231)4"), true, 0},   {P("(231)4"), P("(241)3"), false, -1},
      {P("(142)3"), P("(132)4"), true, 2},   {P("(132)4"), P("(142)3"), false, -1},
      {P("(134)2"), P("(124)3"), true, 0},   {P("(124)3"), P("(134)2"), false, 2},
  };
}

// Distinct start positions (1-based) of the underlined triple over all
// occurrences of w in pi.
std::vector<int> occurrence_starts(const Perm& pi, const VincularPattern& w) {
  std::vector<int> starts;
  for (const auto& occ : occurrences(pi, w)) {
    if (starts.empty() || starts.back() != occ[0]) starts.push_back(occ[0]);
  }
  return starts;
}

}  // namespace

Perm bijection_f(const Perm& pi, const VincularPattern& from) {
  require_standard(pi, "bijection_f");
  auto to = f_target(from);
  if (!to) throw std::invalid_argument("bijection_f: unsupported pattern");
  if (avoids(pi, from) || contains(pi, *to))
    throw std::domain_error("bijection_f: permutation outside the map's domain");

  // Select anchors: in each suffix, the largest element playing the free
  // letter of `from`, then recurse past it.
  std::vector<int> anchors;  // 0-based positions
  int pos = 0;
  for (;;) {
    std::vector<int> sub(pi.begin() + pos, pi.end());
    if (static_cast<int>(sub.size()) < 4) break;
    Perm s = standardize(sub);
    int best_val = -1, best_idx = -1;
    for (const auto& occ : occurrences(s, from)) {
      int r = occ[3] - 1;  // 0-based within suffix
      if (sub[r] > best_val) {
        best_val = sub[r];
        best_idx = r;
      }
    }
    if (best_idx < 0) break;
    anchors.push_back(pos + best_idx);
    pos = pos + best_idx + 1;
  }

  Perm out = pi;
  for (int j : anchors) {
    int i = -1;
    for (int q = j - 1; q >= 0; --q) {
      if (pi[q] > pi[j]) {
        i = q;
        break;
      }
    }
    // rc-transform the window strictly between the bounding pair.
    int lo = i + 1, hi = j - 1;
    if (hi - lo + 1 <= 1) continue;
    std::vector<int> window(pi.begin() + lo, pi.begin() + hi + 1);
    std::vector<int> sorted_vals = window;
    std::sort(sorted_vals.begin(), sorted_vals.end());
    Perm s = rc(standardize(window));
    for (int p = 0; p <= hi - lo; ++p) out[lo + p] = sorted_vals[s[p] - 1];
  }
  return out;
}

Perm bijection_g(const Perm& pi, const VincularPattern& from) {
  require_standard(pi, "bijection_g");
  for (const GRule& rule : g_rules()) {
    if (rule.src != from) continue;
    if (avoids(pi, rule.src) || contains(pi, rule.dst))
      throw std::domain_error("bijection_g: permutation outside the map's domain");
    // Replacing one occurrence can expose a fresh occurrence elsewhere (the
    // moved element may complete a new glued triple), so rescan after every
    // step instead of fixing the index list up front.  The forward map works
    // left to right, the backward map right to left.
    Perm cur = pi;
    const int limit = static_cast<int>(pi.size()) * static_cast<int>(pi.size()) + 4;
    for (int step = 0; ; ++step) {
      if (step > limit)
        throw std::logic_error("bijection_g: replacement chain did not settle");
      std::vector<int> starts = occurrence_starts(cur, rule.src);
      if (starts.empty()) break;
      const int j = (rule.use_replacement_I ? starts.front() : starts.back()) - 1;
      std::optional<int> bound;
      if (rule.bound_offset >= 0) bound = cur[j + rule.bound_offset];
      int a = cur[j + 1];
      std::vector<int> w(cur.begin() + j + 3, cur.end());
      auto [a2, w2] = rule.use_replacement_I ? replacement_I(a, std::move(w), bound)
                                             : replacement_II(a, std::move(w), bound);
      cur[j + 1] = a2;
      std::copy(w2.begin(), w2.end(), cur.begin() + j + 3);
    }
    return cur;
  }
  throw std::invalid_argument("bijection_g: unsupported pattern");
}

std::optional<VincularPattern> bijection_partner(const VincularPattern& w) {
  if (auto t = f_target(w)) return t;
  for (const GRule& rule : g_rules())
    if (rule.src == w) return rule.dst;
  return std::nullopt;
}

Perm full_bijection(const VincularPattern& alpha, const VincularPattern& beta,
                    const Perm& pi) {
  // A pattern can have both an f-partner and a g-partner; pick whichever
  // matches the requested source pattern.
  bool use_f = false, use_g = false;
  if (auto t = f_target(beta); t && *t == alpha) use_f = true;
  if (!use_f)
    for (const GRule& rule : g_rules())
      if (rule.src == beta && rule.dst == alpha) use_g = true;
  if (!use_f && !use_g)
    throw std::invalid_argument("full_bijection: unsupported pattern pair");
  if (!avoids(pi, alpha))
    throw std::domain_error("full_bijection: permutation contains the source pattern");
  if (avoids(pi, beta)) return pi;  // double avoiders are fixed points
  if (use_f) return bijection_f(pi, beta);
  return bijection_g(pi, beta);
}

BijectionCertificate certify_pair(const VincularPattern& alpha,
                                  const VincularPattern& beta, int n,
                                  bool check_inv, bool list_pairs, int cap) {
  BijectionCertificate cert;
  cert.pair = render_pattern(alpha) + ":" + render_pattern(beta);
  cert.n = n;
  cert.bijective = true;
  cert.des_preserved = true;
  if (check_inv) cert.inv_preserved = true;

  std::set<Perm> images;
  long long domain_size = 0;
  bool failed = false;
  for_each_avoider(n, alpha, [&](const Perm& p) {
    if (failed) return;
    ++domain_size;
    Perm q = full_bijection(alpha, beta, p);
    bool ok = true;
    if (!avoids(q, beta) || !images.insert(q).second) {
      cert.bijective = false;
      ok = false;
    }
    if (des(q) != des(p)) {
      cert.des_preserved = false;
      ok = false;
    }
    if (check_inv && inv(q) != inv(p)) {
      cert.inv_preserved = false;
      ok = false;
    }
    if (!ok) {
      cert.counterexample = p;
      failed = true;
      return;
    }
    if (list_pairs && q != p) cert.mapped.emplace_back(p, q);
  }, cap);

  if (!failed) {
    long long codomain_size = avoider_count(n, beta, cap);
    if (domain_size != codomain_size ||
        static_cast<long long>(images.size()) != domain_size)
      cert.bijective = false;
  }
  return cert;
}

}  // namespace qcp
