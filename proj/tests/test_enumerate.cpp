#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qcp/enumerate.hpp"

using namespace qcp;

namespace {

std::vector<long long> counts_of(const char* pattern, int n) {
  return descent_vector(n, parse_pattern(pattern)).counts;
}

}  // namespace

TEST_CASE("avoider counts") {
  for (int n = 0; n <= 7; ++n)
    CHECK(avoider_count(n, parse_pattern("(2)1")) == 1);
  CHECK(avoider_count(7, parse_pattern("(123)4")) == 3815);
  CHECK(avoider_count(0, parse_pattern("(231)4")) == 1);
  CHECK_THROWS_AS(avoider_count(11, parse_pattern("(2)1")),
                  std::invalid_argument);
}

TEST_CASE("descent vectors") {
  CHECK(counts_of("(312)4", 7) ==
        std::vector<long long>{1, 78, 724, 1706, 1041, 120, 1});
  CHECK(counts_of("(134)2", 7) ==
        std::vector<long long>{1, 56, 637, 1756, 1089, 120, 1});
  CHECK(counts_of("(231)4", 1) == std::vector<long long>{1});
  DescentVector dv = descent_vector(6, parse_pattern("(21)3"));
  CHECK(dv.total() == avoider_count(6, parse_pattern("(21)3")));
}

TEST_CASE("parallel kernel matches serial reference") {
  for (const char* s : {"(312)4", "(12)3", "(123)", "(13)2", "(12)3(45)"}) {
    VincularPattern w = parse_pattern(s);
    for (int n = 0; n <= 7; ++n)
      CHECK(descent_vector(n, w) == descent_vector_serial(n, w));
  }
}

TEST_CASE("descent polynomials") {
  CHECK(descent_polynomial(3, parse_pattern("(12)3")) ==
        IntPoly({0, 4, 1}));
  CHECK(descent_polynomial(3, parse_pattern("(21)3")) ==
        IntPoly({1, 3, 1}));
  CHECK(descent_polynomial(0, parse_pattern("(12)3")) == IntPoly::constant(1));
}

TEST_CASE("avoider stream") {
  auto all = avoiders(3, parse_pattern("(12)3"));
  CHECK(all == std::vector<Perm>{{1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}});
  CHECK(avoiders(0, parse_pattern("(12)3")) == std::vector<Perm>{{}});
}

TEST_CASE("quasi pattern generator") {
  auto all3 = quasi_consecutive_patterns(3);
  REQUIRE(all3.size() == 6);
  CHECK(render_pattern(all3[0]) == "(12)3");
  auto all4 = quasi_consecutive_patterns(4);
  CHECK(all4.size() == 24);
  for (const auto& w : all4) CHECK(w.is_quasi_consecutive());
  CHECK(std::find(all4.begin(), all4.end(), parse_pattern("(241)3")) != all4.end());
}

TEST_CASE("classification basics") {
  // a pattern always lands in one class with its reverse-complement
  VincularPattern w = parse_pattern("(312)4");
  ClassReport rep = classify({w, pattern_rc(w)}, 5);
  CHECK(rep.classes.size() == 1);
  CHECK(rep.classes[0].members.size() == 2);

  ClassReport rep2 = classify({parse_pattern("(13)2"), parse_pattern("(31)2")}, 8);
  CHECK(rep2.classes.size() == 1);

  ClassReport rep3 = classify({parse_pattern("(123)4"), parse_pattern("(321)4")}, 7);
  CHECK(rep3.classes.size() == 2);
  CHECK(rep3.separating_level.at({0, 1}) == 4);
}

TEST_CASE("catalan and bell checks") {
  const long long catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
  const long long bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n <= 8; ++n)
    CHECK(avoider_count(n, parse_pattern("(13)2")) == catalan[n]);
  for (int n = 0; n <= 7; ++n)
    CHECK(avoider_count(n, parse_pattern("(21)3")) == bell[n]);
}

TEST_CASE("oeis comparison") {
  const char* path = "test_bfile_tmp.txt";
  {
    std::ofstream out(path);
    out << "# avoider counts for (21)3\n";
    for (int n = 0; n <= 6; ++n)
      out << n << " " << avoider_count(n, parse_pattern("(21)3")) << "\n";
  }
  OeisReport rep = oeis_compare(parse_pattern("(21)3"), path, 6);
  CHECK(rep.all_match);
  CHECK(rep.rows.size() == 7);
  {
    std::ofstream out(path);
    out << "5 999\n";
  }
  OeisReport bad = oeis_compare(parse_pattern("(21)3"), path, 6);
  CHECK(!bad.all_match);
  {
    std::ofstream out(path);
  }
  OeisReport empty = oeis_compare(parse_pattern("(21)3"), path, 6);
  CHECK(empty.no_overlap);
  std::remove(path);
  CHECK_THROWS_AS(oeis_compare(parse_pattern("(21)3"), "no_such_file", 6),
                  std::runtime_error);
}

TEST_CASE("csv row") {
  DescentVector dv = descent_vector(3, parse_pattern("(12)3"));
  CHECK(descent_vector_csv_row("(12)3", dv) == "(12)3,3,0,4,1");
}
