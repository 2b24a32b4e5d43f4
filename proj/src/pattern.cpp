#include "qcp/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcp {

bool VincularPattern::is_consecutive() const {
  if (base.empty()) return false;
  for (size_t i = 1; i < glue.size(); ++i)
    if (!glue[i]) return false;
  return true;
}

bool VincularPattern::is_classical() const {
  return std::none_of(glue.begin(), glue.end(), [](bool g) { return g; });
}

bool VincularPattern::is_quasi_consecutive() const {
  const int k = length();
  if (k < 2) return false;
  for (int i = 1; i < k - 1; ++i)
    if (!glue[i]) return false;
  return !glue[k - 1];
}

VincularPattern parse_pattern(std::string_view text) {
  VincularPattern w;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      size_t j = i + 1;
      int count = 0;
      while (j < text.size() && text[j] != ')') {
        if (text[j] < '1' || text[j] > '9')
          throw std::invalid_argument("parse_pattern: expected digit in block");
        w.base.push_back(text[j] - '0');
        w.glue.push_back(count > 0);
        ++count;
        ++j;
      }
      if (j >= text.size()) throw std::invalid_argument("parse_pattern: unclosed block");
      if (count < 1) throw std::invalid_argument("parse_pattern: empty block");
      i = j + 1;
    } else if (c >= '1' && c <= '9') {
      w.base.push_back(c - '0');
      w.glue.push_back(false);
      ++i;
    } else {
      throw std::invalid_argument("parse_pattern: unexpected character");
    }
  }
  if (w.base.empty()) throw std::invalid_argument("parse_pattern: empty pattern");
  if (!is_standard(w.base))
    throw std::invalid_argument("parse_pattern: digits do not form a permutation of 1..k");
  w.glue[0] = false;
  return w;
}

std::string render_pattern(const VincularPattern& w) {
  const int k = w.length();
  std::string s;
  int i = 0;
  while (i < k) {
    int j = i + 1;
    while (j < k && w.glue[j]) ++j;
    if (j - i >= 2) {
      s += '(';
      for (int p = i; p < j; ++p) s += static_cast<char>('0' + w.base[p]);
      s += ')';
    } else {
      s += static_cast<char>('0' + w.base[i]);
    }
    i = j;
  }
  return s;
}

VincularPattern make_consecutive(const Perm& base) {
  require_standard(base, "make_consecutive");
  VincularPattern w;
  w.base = base;
  w.glue.assign(base.size(), true);
  if (!w.glue.empty()) w.glue[0] = false;
  return w;
}

VincularPattern quasi_from_consecutive(const VincularPattern& sigma) {
  if (!sigma.is_consecutive())
    throw std::invalid_argument("quasi_from_consecutive: pattern is not consecutive");
  VincularPattern w = sigma;
  w.base.push_back(w.length() + 1);
  w.glue.push_back(false);
  return w;
}

VincularPattern pattern_complement(const VincularPattern& w) {
  VincularPattern out = w;
  out.base = complement(w.base);
  return out;
}

VincularPattern pattern_reverse(const VincularPattern& w) {
  const int k = w.length();
  VincularPattern out;
  out.base = Perm(w.base.rbegin(), w.base.rend());
  out.glue.assign(k, false);
  for (int i = 1; i < k; ++i) out.glue[i] = w.glue[k - i];
  return out;
}

VincularPattern pattern_rc(const VincularPattern& w) {
  return pattern_complement(pattern_reverse(w));
}

namespace {

// Plain backtracking over positions; the adjacency constraint pins every
// glued position, so the branching factor is the number of free letters.
template <typename OnHit>
bool scan(const Perm& pi, const VincularPattern& w, OnHit&& on_hit) {
  const int n = static_cast<int>(pi.size());
  const int k = w.length();
  if (k == 0 || k > n) return false;
  std::vector<int> pos(k);  // 0-based host indices
  bool stop = false;

  auto order_ok = [&](int depth) {
    for (int q = 0; q < depth; ++q) {
      if ((pi[pos[q]] < pi[pos[depth]]) != (w.base[q] < w.base[depth])) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (stop) return;
    if (depth == k) {
      std::vector<int> occ(k);
      for (int q = 0; q < k; ++q) occ[q] = pos[q] + 1;
      if (on_hit(occ)) stop = true;
      return;
    }
    if (depth > 0 && w.glue[depth]) {
      int c = pos[depth - 1] + 1;
      if (c >= n) return;
      pos[depth] = c;
      if (order_ok(depth)) self(self, depth + 1);
      return;
    }
    int start = depth == 0 ? 0 : pos[depth - 1] + 1;
    // Keep room for the glued run that follows this free position.
    int tail = 0;
    for (int q = depth + 1; q < k && w.glue[q]; ++q) ++tail;
    for (int c = start; c + tail < n; ++c) {
      pos[depth] = c;
      if (order_ok(depth)) self(self, depth + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
  return stop;
}

}  // namespace

std::vector<std::vector<int>> occurrences(const Perm& pi, const VincularPattern& w) {
  require_standard(pi, "occurrences");
  std::vector<std::vector<int>> out;
  scan(pi, w, [&](const std::vector<int>& occ) {
    out.push_back(occ);
    return false;
  });
  return out;
}

bool contains(const Perm& pi, const VincularPattern& w) {
  if (w.length() > static_cast<int>(pi.size())) return false;
  return scan(pi, w, [](const std::vector<int>&) { return true; });
}

bool avoids(const Perm& pi, const VincularPattern& w) { return !contains(pi, w); }

}  // namespace qcp
