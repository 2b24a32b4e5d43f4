#include "qcp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace qcp {

bool is_standard(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : p) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void require_standard(const Perm& p, const char* where) {
  if (!is_standard(p))
    throw std::invalid_argument(std::string(where) + ": not a permutation of 1..n");
}

Perm standardize(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return word[a] < word[b]; });
  for (int i = 0; i + 1 < n; ++i)
    if (word[order[i]] == word[order[i + 1]])
      throw std::invalid_argument("standardize: duplicate entries");
  Perm out(n);
  for (int r = 0; r < n; ++r) out[order[r]] = r + 1;
  return out;
}

int des(const Perm& p) {
  int d = 0;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) ++d;
  return d;
}

std::vector<int> des_set(const Perm& p) {
  std::vector<int> s;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) s.push_back(static_cast<int>(i) + 1);
  return s;
}

std::vector<int> comp(const Perm& p) {
  if (p.empty()) return {};
  std::vector<int> parts;
  int run = 1;
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return parts;
}

long long inv(const Perm& p) {
  long long c = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

Perm reverse(const Perm& p) {
  require_standard(p, "reverse");
  return Perm(p.rbegin(), p.rend());
}

Perm complement(const Perm& p) {
  require_standard(p, "complement");
  const int n = static_cast<int>(p.size());
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = n + 1 - p[i];
  return out;
}

Perm inverse(const Perm& p) {
  require_standard(p, "inverse");
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

Perm rc(const Perm& p) { return complement(reverse(p)); }

Perm parse_perm(std::string_view text) {
  std::vector<int> vals;
  bool has_sep = text.find_first_of(", \t") != std::string_view::npos;
  if (!has_sep && !text.empty() &&
      std::all_of(text.begin(), text.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
      text.size() <= 9) {
    for (char c : text) vals.push_back(c - '0');
  } else {
    size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
      if (i >= text.size()) break;
      size_t j = i;
      while (j < text.size() && text[j] != ',' && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      vals.push_back(std::stoi(std::string(text.substr(i, j - i))));
      i = j;
    }
  }
  return vals;
}

std::string format_perm(const Perm& p) {
  bool compact = p.size() <= 9 &&
                 std::all_of(p.begin(), p.end(), [](int v) { return v >= 1 && v <= 9; });
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (!compact && i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s;
}

}  // namespace qcp
