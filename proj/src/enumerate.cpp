#include "qcp/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcp {

namespace {

void check_cap(int n, int cap) {
  if (n < 0) throw std::invalid_argument("enumerate: negative n");
  if (n > cap)
    throw std::invalid_argument("enumerate: n=" + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap) +
                                " (raise the cap explicitly to proceed)");
}

}  // namespace

long long DescentVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

DescentVector descent_vector_serial(int n, const VincularPattern& w, int cap) {
  check_cap(n, cap);
  DescentVector dv;
  dv.n = n;
  dv.counts.assign(std::max(n, 1), 0);
  if (n == 0) {
    dv.counts[0] = 1;  // the empty permutation avoids everything
    return dv;
  }
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    if (avoids(p, w)) ++dv.counts[des(p)];
  } while (std::next_permutation(p.begin(), p.end()));
  return dv;
}

DescentVector descent_vector(int n, const VincularPattern& w, int cap) {
  check_cap(n, cap);
  if (n <= 2) return descent_vector_serial(n, w, cap);
  DescentVector dv;
  dv.n = n;
  dv.counts.assign(n, 0);
  std::vector<std::vector<long long>> partial(n, std::vector<long long>(n, 0));

#pragma omp parallel for schedule(dynamic)
  for (int first = 1; first <= n; ++first) {
    auto& counts = partial[first - 1];
    Perm p(n);
    p[0] = first;
    int v = 1;
    for (int i = 1; i < n; ++i) {
      if (v == first) ++v;
      p[i] = v++;
    }
    do {
      if (avoids(p, w)) ++counts[des(p)];
    } while (std::next_permutation(p.begin() + 1, p.end()));
  }
  for (const auto& counts : partial)
    for (int k = 0; k < n; ++k) dv.counts[k] += counts[k];
  return dv;
}

long long avoider_count(int n, const VincularPattern& w, int cap) {
  return descent_vector(n, w, cap).total();
}

void for_each_avoider(int n, const VincularPattern& w,
                      const std::function<void(const Perm&)>& fn, int cap) {
  check_cap(n, cap);
  if (n == 0) {
    fn(Perm{});
    return;
  }
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    if (avoids(p, w)) fn(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

std::vector<Perm> avoiders(int n, const VincularPattern& w, int cap) {
  std::vector<Perm> out;
  for_each_avoider(n, w, [&](const Perm& p) { out.push_back(p); }, cap);
  return out;
}

IntPoly descent_polynomial(int n, const VincularPattern& w, int cap) {
  if (n == 0) return IntPoly::constant(1);
  DescentVector dv = descent_vector(n, w, cap);
  std::vector<mpz_class> c(dv.counts.size());
  for (size_t k = 0; k < dv.counts.size(); ++k) c[k] = mpz_class(static_cast<long>(dv.counts[k]));
  return IntPoly(std::move(c));
}

ClassReport classify(const std::vector<VincularPattern>& patterns, int n_max,
                     int cap) {
  if (n_max < 1) throw std::invalid_argument("classify: n_max must be >= 1");
  check_cap(n_max, cap);
  ClassReport report;
  report.n_max = n_max;

  std::vector<std::vector<DescentVector>> profiles(patterns.size());
  for (size_t i = 0; i < patterns.size(); ++i)
    for (int n = 1; n <= n_max; ++n)
      profiles[i].push_back(descent_vector(n, patterns[i], cap));

  std::vector<int> class_of(patterns.size(), -1);
  for (size_t i = 0; i < patterns.size(); ++i) {
    for (size_t c = 0; c < report.classes.size(); ++c) {
      size_t rep = 0;
      // representative = first member's profile index
      for (size_t j = 0; j < i; ++j)
        if (class_of[j] == static_cast<int>(c)) { rep = j; break; }
      if (profiles[i] == profiles[rep]) {
        class_of[i] = static_cast<int>(c);
        report.classes[c].members.push_back(render_pattern(patterns[i]));
        break;
      }
    }
    if (class_of[i] < 0) {
      class_of[i] = static_cast<int>(report.classes.size());
      PatternClass pc;
      pc.members.push_back(render_pattern(patterns[i]));
      pc.vectors = profiles[i];
      report.classes.push_back(std::move(pc));
    }
  }

  // Least separating level for every pair of classes.
  std::vector<size_t> rep_of(report.classes.size());
  for (size_t i = 0; i < patterns.size(); ++i)
    if (report.classes[class_of[i]].members.front() ==
        render_pattern(patterns[i]))
      rep_of[class_of[i]] = i;
  for (size_t a = 0; a < report.classes.size(); ++a)
    for (size_t b = a + 1; b < report.classes.size(); ++b)
      for (int n = 1; n <= n_max; ++n)
        if (profiles[rep_of[a]][n - 1] != profiles[rep_of[b]][n - 1]) {
          report.separating_level[{static_cast<int>(a), static_cast<int>(b)}] = n;
          break;
        }
  return report;
}

std::vector<VincularPattern> quasi_consecutive_patterns(int length) {
  if (length < 2) throw std::invalid_argument("quasi_consecutive_patterns: length < 2");
  std::vector<VincularPattern> out;
  Perm sigma(length - 1);
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    for (int j = 1; j <= length; ++j) {
      VincularPattern w;
      for (int v : sigma) w.base.push_back(v >= j ? v + 1 : v);
      w.base.push_back(j);
      w.glue.assign(length, true);
      w.glue[0] = false;
      w.glue[length - 1] = false;
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::sort(out.begin(), out.end(),
            [](const VincularPattern& a, const VincularPattern& b) {
              return a.base < b.base;
            });
  return out;
}

OeisReport oeis_compare(const VincularPattern& w, const std::string& bfile_path,
                        int n_max, int cap) {
  std::ifstream in(bfile_path);
  if (!in) throw std::runtime_error("oeis_compare: cannot open " + bfile_path);
  std::map<int, long long> values;
  std::string line;
  while (std::getline(in, line)) {
    size_t h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    long long idx, val;
    if (ls >> idx >> val) values[static_cast<int>(idx)] = val;
  }
  OeisReport report;
  for (int n = 0; n <= n_max; ++n) {
    auto it = values.find(n);
    if (it == values.end()) continue;
    OeisComparison row;
    row.n = n;
    row.computed = avoider_count(n, w, cap);
    row.file_value = it->second;
    row.match = row.computed == row.file_value;
    if (!row.match) report.all_match = false;
    report.rows.push_back(row);
  }
  if (report.rows.empty()) {
    report.no_overlap = true;
    report.all_match = false;
  }
  return report;
}

std::string descent_vector_csv_row(const std::string& pattern_text,
                                   const DescentVector& dv) {
  std::string s = pattern_text + "," + std::to_string(dv.n);
  for (long long c : dv.counts) s += "," + std::to_string(c);
  return s;
}

}  // namespace qcp
