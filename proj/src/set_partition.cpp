#include "qcp/set_partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcp {

int SetPartition::n() const {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  return total;
}

int SetPartition::sing() const {
  int s = 0;
  for (const auto& b : blocks)
    if (b.size() == 1) ++s;
  return s;
}

void SetPartition::normalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition parse_partition(std::string_view text) {
  SetPartition p;
  std::vector<int> cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("parse_partition: empty block");
    p.blocks.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == '/') {
      flush();
    } else if (c >= '1' && c <= '9') {
      cur.push_back(c - '0');
    } else {
      throw std::invalid_argument("parse_partition: unexpected character");
    }
  }
  flush();
  p.normalize();
  std::vector<int> all;
  for (const auto& b : p.blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  for (int i = 0; i < static_cast<int>(all.size()); ++i)
    if (all[i] != i + 1)
      throw std::invalid_argument("parse_partition: blocks do not partition [n]");
  return p;
}

std::string format_partition(const SetPartition& p) {
  std::string s;
  for (size_t i = 0; i < p.blocks.size(); ++i) {
    if (i) s += '/';
    for (int v : p.blocks[i]) s += std::to_string(v);
  }
  return s;
}

void for_each_partition(int n, const std::function<void(const SetPartition&)>& fn,
                        int cap) {
  if (n < 0) throw std::invalid_argument("partitions: negative n");
  if (n > cap)
    throw std::invalid_argument("partitions: n exceeds cap " + std::to_string(cap));
  if (n == 0) {
    fn(SetPartition{});
    return;
  }
  // Restricted growth strings: rgs[0]=0, rgs[i] <= 1+max(rgs[0..i-1]).
  std::vector<int> rgs(n, 0);
  auto emit = [&] {
    SetPartition p;
    int b = *std::max_element(rgs.begin(), rgs.end()) + 1;
    p.blocks.assign(b, {});
    for (int i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i + 1);
    fn(p);
  };
  auto rec = [&](auto&& self, int i, int m) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= m + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(m, v));
    }
  };
  rec(rec, 1, 0);
}

std::vector<SetPartition> partitions(int n, int cap) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); }, cap);
  return out;
}

Perm phi_I(const SetPartition& p) {
  // Standard representation: each block ends with its smallest element, the
  // rest increasing; blocks ordered by increasing minima.
  Perm pi;
  for (const auto& b : p.blocks) {
    for (size_t i = 1; i < b.size(); ++i) pi.push_back(b[i]);
    pi.push_back(b[0]);
  }
  return pi;
}

SetPartition phi_I_inverse(const Perm& pi) {
  require_standard(pi, "phi_I_inverse");
  // Cut after every right-to-left minimum.
  const int n = static_cast<int>(pi.size());
  std::vector<bool> rl_min(n, false);
  int m = n + 1;
  for (int i = n - 1; i >= 0; --i) {
    if (pi[i] < m) {
      rl_min[i] = true;
      m = pi[i];
    }
  }
  SetPartition p;
  std::vector<int> cur;
  for (int i = 0; i < n; ++i) {
    cur.push_back(pi[i]);
    if (rl_min[i]) {
      p.blocks.push_back(cur);
      cur.clear();
    }
  }
  if (!cur.empty())
    throw std::domain_error("phi_I_inverse: trailing letters after last right-to-left minimum");
  p.normalize();
  return p;
}

Perm phi_II(const SetPartition& p) {
  // Blocks written increasingly, ordered by decreasing maxima.
  auto blocks = p.blocks;
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.back() > b.back(); });
  Perm pi;
  for (const auto& b : blocks) pi.insert(pi.end(), b.begin(), b.end());
  return pi;
}

SetPartition phi_II_inverse(const Perm& pi) {
  require_standard(pi, "phi_II_inverse");
  // Blocks are exactly the maximal increasing runs.
  SetPartition p;
  std::vector<int> cur;
  for (size_t i = 0; i < pi.size(); ++i) {
    cur.push_back(pi[i]);
    if (i + 1 == pi.size() || pi[i] > pi[i + 1]) {
      p.blocks.push_back(cur);
      cur.clear();
    }
  }
  p.normalize();
  return p;
}

}  // namespace qcp
