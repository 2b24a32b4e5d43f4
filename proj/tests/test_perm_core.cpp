#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qcp/permutation.hpp"

using namespace qcp;

namespace {

void for_each_perm(int n, const std::function<void(const Perm&)>& fn) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  do fn(p);
  while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

TEST_CASE("standardize") {
  CHECK(standardize({2, 4, 5, 6, 8}) == Perm{1, 2, 3, 4, 5});
  CHECK(standardize({1, 2, 3}) == Perm{1, 2, 3});
  CHECK(standardize({5, 1, 4}) == Perm{3, 1, 2});
  CHECK(standardize({}) == Perm{});
  CHECK_THROWS_AS(standardize({2, 2}), std::invalid_argument);
  for_each_perm(5, [](const Perm& p) { CHECK(standardize(p) == p); });
}

TEST_CASE("descents and composition") {
  CHECK(des({1, 2, 3}) == 0);
  CHECK(des({3, 2, 1}) == 2);
  CHECK(des({1}) == 0);
  CHECK(des({}) == 0);
  Perm pi = parse_perm("413782596");
  CHECK(des_set(pi) == std::vector<int>{1, 5, 8});
  CHECK(comp(pi) == std::vector<int>{1, 4, 3, 1});
  for_each_perm(6, [](const Perm& p) {
    auto ds = des_set(p);
    auto c = comp(p);
    CHECK(c.size() == ds.size() + 1);
    CHECK(std::accumulate(c.begin(), c.end(), 0) == 6);
    // comp determines des_set: partial sums are the descent positions
    int acc = 0;
    for (size_t i = 0; i + 1 < c.size(); ++i) {
      acc += c[i];
      CHECK(ds[i] == acc);
    }
  });
}

TEST_CASE("inversions") {
  CHECK(inv({1, 2, 3, 4, 5}) == 0);
  CHECK(inv({3, 2, 1}) == 3);
  CHECK(inv({2, 3, 1}) == 2);
}

TEST_CASE("trivial maps") {
  CHECK(reverse({1, 2, 3}) == Perm{3, 2, 1});
  CHECK(complement({2, 3, 1}) == Perm{2, 1, 3});
  CHECK(rc({1, 3, 2}) == Perm{2, 1, 3});
  CHECK(inverse({2, 3, 1}) == Perm{3, 1, 2});
  for_each_perm(6, [](const Perm& p) {
    const int n = 6;
    CHECK(reverse(reverse(p)) == p);
    CHECK(complement(complement(p)) == p);
    CHECK(inverse(inverse(p)) == p);
    CHECK(rc(complement(reverse(p))) == p);
    CHECK(complement(reverse(p)) == reverse(complement(p)));
    CHECK(des(complement(p)) == n - 1 - des(p));
    CHECK(des(reverse(p)) == n - 1 - des(p));
    CHECK(des(rc(p)) == des(p));
    CHECK(inv(p) + inv(reverse(p)) == n * (n - 1) / 2);
    CHECK(inv(rc(p)) == inv(p));
  });
}

TEST_CASE("text format") {
  CHECK(parse_perm("867953124") == Perm{8, 6, 7, 9, 5, 3, 1, 2, 4});
  CHECK(parse_perm("3 1 2") == Perm{3, 1, 2});
  CHECK(parse_perm("10,2,3,4,5,6,7,8,9,1") ==
        Perm{10, 2, 3, 4, 5, 6, 7, 8, 9, 1});
  Perm big(11);
  std::iota(big.begin(), big.end(), 1);
  CHECK(parse_perm(format_perm(big)) == big);
  CHECK(parse_perm(format_perm(Perm{3, 1, 2})) == Perm{3, 1, 2});
}
