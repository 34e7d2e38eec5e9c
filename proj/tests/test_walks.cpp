#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cjones/braid.hpp"
#include "cjones/errors.hpp"
#include "cjones/walks.hpp"
#include "test_util.hpp"

using namespace cjones;

namespace {

std::vector<std::uint64_t> masks(const WalkCensus& c) {
  std::vector<std::uint64_t> out;
  for (const auto& w : c.walks) out.push_back(w.active);
  return out;
}

std::uint64_t reversed_mask(std::uint64_t m, int l) {
  std::uint64_t r = 0;
  for (int t = 0; t < l; ++t)
    if ((m >> t) & 1) r |= std::uint64_t{1} << (l - 1 - t);
  return r;
}

long long semi_total(const BraidWord& b) {
  auto [s, r] = enumerate_semi_simple(b);
  return static_cast<long long>(s.count() + r.count());
}

}  // namespace

TEST_CASE("six-crossing twist word reproduces both reference walks") {
  // This trace pins the per-crossing transition table: any reimplementation
  // must reproduce these two weights letter for letter.
  BraidWord b = parse_braid("[-2,1,2,2,2,1]");
  WalkCensus c = enumerate_simple_walks(b);
  REQUIRE(c.count() == 2);

  const Walk* jumpy = nullptr;   // active {1,4}
  const Walk* single = nullptr;  // active {4}
  for (const auto& w : c.walks) {
    if (w.active == ((1u << 0) | (1u << 3))) jumpy = &w;
    if (w.active == (1u << 3)) single = &w;
  }
  REQUIRE(jumpy != nullptr);
  REQUIRE(single != nullptr);

  CHECK(single->J == std::vector<int>{2, 3});
  CHECK(single->exits == std::vector<int>{3, 2});
  CHECK(single->inversions == 1);
  CHECK(single->prefactor_sign == 1);   // (-1)^{1+2+1}
  CHECK(single->prefactor_qpow == 3);   // |J| + inversions
  CHECK(weight_string(*single) == "q^3 b_1 c_1 c_2 c_3 a_4 b_5 b_6");

  CHECK(jumpy->J == std::vector<int>{3});
  CHECK(jumpy->exits == std::vector<int>{3});
  CHECK(jumpy->inversions == 0);
  CHECK(jumpy->prefactor_sign == 1);    // (-1)^{1+1+0}
  CHECK(jumpy->prefactor_qpow == 1);
  CHECK(weight_string(*jumpy) == "q^1 a_1 c_3 a_4 b_5");
}

TEST_CASE("trefoil has the single one-strand walk") {
  WalkCensus c = enumerate_simple_walks(parse_braid("[1,1,1]"));
  REQUIRE(c.count() == 1);
  const Walk& w = c.walks[0];
  CHECK(w.active == (1u << 1));
  CHECK(w.J == std::vector<int>{2});
  CHECK(w.exits == std::vector<int>{2});
  CHECK(weight_string(w) == "q^1 c_1 a_2 b_3");
}

TEST_CASE("seven-crossing word yields three walks") {
  WalkCensus c = enumerate_simple_walks(parse_braid("[1,2,-1,-3,2,-3,1]"));
  REQUIRE(c.count() == 3);
  std::set<std::uint64_t> act;
  for (const auto& w : c.walks) act.insert(w.active);
  CHECK(act == std::set<std::uint64_t>{
                   (1u << 3), (1u << 2) | (1u << 3), (1u << 3) | (1u << 5)});
}

TEST_CASE("small reference counts") {
  auto count = [](const char* w) {
    return enumerate_simple_walks(parse_braid(w)).count();
  };
  CHECK(count("[1,-2,1,-2]") == 2);
  CHECK(count("[1,1,1,1,1]") == 3);
  CHECK(count("[1,2,2,2,1,-2]") == 2);
  CHECK(count("[1,1,1,-2,1,-2]") == 4);
  CHECK(count("[1,1,1,1,1,1,1]") == 8);
  CHECK(count("[1,2,2,2,1,2,2,2]") == 5);
}

TEST_CASE("walk invariants hold on the census") {
  std::mt19937 rng(21);
  for (int it = 0; it < 60; ++it) {
    BraidWord b = testutil::random_word(rng, 1, 10, 5);
    WalkCensus c = enumerate_simple_walks(b);
    CHECK(std::is_sorted(
        c.walks.begin(), c.walks.end(), [](const Walk& x, const Walk& y) {
          return std::tie(x.active, x.J) < std::tie(y.active, y.J);
        }));
    for (const auto& w : c.walks) {
      CHECK(std::is_sorted(w.J.begin(), w.J.end()));
      for (int j : w.J) CHECK(j >= 2);  // starting on strand 1 is forbidden
      CHECK(w.exits.size() == w.J.size());
      CHECK(w.prefactor_qpow ==
            static_cast<int>(w.J.size()) + w.inversions);
      const int expect_sign =
          (1 + static_cast<int>(w.J.size()) + w.inversions) % 2 == 0 ? 1 : -1;
      CHECK(w.prefactor_sign == expect_sign);
      CHECK(std::is_sorted(w.cells.begin(), w.cells.end()));
      // paths of a simple walk are pairwise disjoint: no duplicate cells
      CHECK(std::adjacent_find(w.cells.begin(), w.cells.end()) ==
            w.cells.end());
      // the exits permute J within itself (the closure ties them back)
      std::multiset<int> starts(w.J.begin(), w.J.end());
      std::multiset<int> ends(w.exits.begin(), w.exits.end());
      CHECK(starts == ends);
      int inv = 0;
      for (size_t x = 0; x < w.exits.size(); ++x)
        for (size_t y = x + 1; y < w.exits.size(); ++y)
          if (w.exits[x] > w.exits[y]) ++inv;
      CHECK(w.inversions == inv);
    }
  }
}

TEST_CASE("coloring rejects collisions and strand-1 endpoints") {
  BraidWord b = parse_braid("[1,1,1]");
  Coloring good = color_from_monomial(b, 1u << 1);
  CHECK(good.valid);
  // activating the top crossing forces red onto a strand-1 end cell
  Coloring bad = color_from_monomial(b, 1u << 0);
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.reason.empty());
  Walk w = trace_walk(b, 1u << 1, good);
  CHECK(w.J == std::vector<int>{2});
}

TEST_CASE("coloring census equals path search on exhaustive small words") {
  // every reduced word, width 2 and 3, length 1..6
  for (int m = 2; m <= 3; ++m) {
    const int gens = 2 * (m - 1);
    for (int len = 1; len <= 6; ++len) {
      std::vector<int> digits(static_cast<size_t>(len), 0);
      for (;;) {
        BraidWord b{m, {}};
        for (int d : digits) {
          int idx = d / 2 + 1;
          int sign = (d % 2 == 0) ? 1 : -1;
          b.letters.push_back({idx, sign});
        }
        if (is_reduced(b)) {
          WalkCensus lhs = enumerate_simple_walks(b);
          WalkCensus rhs = enumerate_paths_dfs(b);
          REQUIRE(lhs.walks == rhs.walks);
        }
        int i = 0;
        while (i < len && ++digits[static_cast<size_t>(i)] == gens)
          digits[static_cast<size_t>(i++)] = 0;
        if (i == len) break;
      }
    }
  }
}

TEST_CASE("coloring census equals path search on fuzzed words") {
  std::mt19937 rng(22);
  for (int it = 0; it < 120; ++it) {
    BraidWord b = testutil::random_word(rng, 7, 11, 5);
    WalkCensus lhs = enumerate_simple_walks(b);
    WalkCensus rhs = enumerate_paths_dfs(b);
    REQUIRE(lhs.walks == rhs.walks);
  }
}

TEST_CASE("semi-simple censuses are monomial-disjoint on knots") {
  std::mt19937 rng(23);
  for (int it = 0; it < 40; ++it) {
    BraidWord b = testutil::random_knot_word(rng, 2, 10, 4);
    auto [s, r] = enumerate_semi_simple(b);
    std::set<std::uint64_t> seen;
    for (const auto& w : s.walks) seen.insert(w.active);
    for (const auto& w : r.walks) CHECK(seen.count(w.active) == 0);
  }
}

TEST_CASE("semi-simple total is conserved under cyclic shifts") {
  std::mt19937 rng(24);
  for (int it = 0; it < 40; ++it) {
    BraidWord b = testutil::random_knot_word(rng, 2, 9, 4);
    const long long total = semi_total(b);
    for (int k = 1; k < b.length(); ++k)
      CHECK(semi_total(cyclic_shift(b, k)) == total);
  }
}

TEST_CASE("shifting a leading letter of index above one keeps SW literally") {
  std::mt19937 rng(25);
  int done = 0;
  while (done < 40) {
    BraidWord b = testutil::random_knot_word(rng, 2, 9, 5);
    if (b.letters[0].index == 1) continue;
    ++done;
    const int l = b.length();
    WalkCensus before = enumerate_simple_walks(b);
    WalkCensus after = enumerate_simple_walks(cyclic_shift(b, 1));
    REQUIRE(before.count() == after.count());
    // crossing t of the shifted word was crossing t+1; masks rotate down
    std::vector<std::uint64_t> expect;
    for (const auto& w : before.walks) {
      std::uint64_t m = w.active >> 1;
      if (w.active & 1) m |= std::uint64_t{1} << (l - 1);
      expect.push_back(m);
    }
    std::vector<std::uint64_t> got = masks(after);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(expect == got);
  }
}

TEST_CASE("reversal preserves the walk count") {
  std::mt19937 rng(26);
  for (int it = 0; it < 60; ++it) {
    BraidWord b = testutil::random_word(rng, 1, 10, 5);
    CHECK(enumerate_simple_walks(reverse(b)).count() ==
          enumerate_simple_walks(b).count());
  }
}

TEST_CASE("rotation relabels the semi-simple monomials by t -> l+1-t") {
  std::mt19937 rng(27);
  for (int it = 0; it < 40; ++it) {
    BraidWord b = testutil::random_word(rng, 1, 9, 5);
    const int l = b.length();
    auto [s, r] = enumerate_semi_simple(b);
    auto [rs, rr] = enumerate_semi_simple(rotate(b));
    std::vector<std::uint64_t> expect, got;
    for (const auto& w : s.walks) expect.push_back(reversed_mask(w.active, l));
    for (const auto& w : r.walks) expect.push_back(reversed_mask(w.active, l));
    for (const auto& w : rs.walks) got.push_back(w.active);
    for (const auto& w : rr.walks) got.push_back(w.active);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    CHECK(expect == got);
  }
}

TEST_CASE("insertion and stabilization never lose walks") {
  std::mt19937 rng(28);
  for (int it = 0; it < 60; ++it) {
    BraidWord b = testutil::random_word(rng, 1, 9, 4);
    const auto base = enumerate_simple_walks(b).count();
    int pos = static_cast<int>(rng() % (b.letters.size() + 1));
    int idx = 1 + static_cast<int>(rng() % (b.width - 1));
    int sign = (rng() & 1) ? 1 : -1;
    CHECK(enumerate_simple_walks(insert_cancelling_pair(b, pos, idx, sign))
              .count() >= base);
    CHECK(enumerate_simple_walks(stabilize(b, 1)).count() >= base);
    CHECK(enumerate_simple_walks(stabilize(b, -1)).count() >= base);
  }
}

TEST_CASE("far commutativity preserves the walk count") {
  std::mt19937 rng(29);
  int fc = 0;
  while (fc < 40) {
    BraidWord b = testutil::random_word(rng, 3, 9, 5);
    for (int pos = 0; pos < b.length(); ++pos) {
      if (auto moved = far_commute(b, pos); moved && fc < 40) {
        ++fc;
        CHECK(enumerate_simple_walks(*moved).count() ==
              enumerate_simple_walks(b).count());
      }
    }
  }
}

TEST_CASE("Yang-Baxter rewrites keep the weighted sum, not the count") {
  // the census size can genuinely change across the braid relation: here
  // the two presentations carry 9 and 8 walks but identical invariants
  BraidWord a = parse_braid("[1,2,1,2,1,1,2,-1]");
  BraidWord b = *yang_baxter(a, 2);
  CHECK(to_string(b) == "[1,2,2,1,2,1,2,-1]");
  CHECK(enumerate_simple_walks(a).count() == 9);
  CHECK(enumerate_simple_walks(b).count() == 8);
}

TEST_CASE("Yang-Baxter rewrites preserve the invariant census supports") {
  // walks with no active crossing inside the rewritten triple correspond
  // one to one; only jump patterns touching the triple may reshuffle
  std::mt19937 rng(30);
  int yb = 0;
  while (yb < 30) {
    BraidWord b = testutil::random_word(rng, 3, 9, 5);
    for (int pos = 0; pos < b.length(); ++pos) {
      if (auto moved = yang_baxter(b, pos); moved && yb < 30) {
        ++yb;
        const std::uint64_t triple = std::uint64_t{7} << pos;
        std::multiset<std::uint64_t> lhs, rhs;
        for (const auto& w : enumerate_simple_walks(b).walks)
          if ((w.active & triple) == 0) lhs.insert(w.active);
        for (const auto& w : enumerate_simple_walks(*moved).walks)
          if ((w.active & triple) == 0) rhs.insert(w.active);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("enumeration is deterministic across thread counts") {
  BraidWord b = parse_braid("[1,-2,3,1,-2,3,4,-3,2,-3,-2,-4]");
  EnumOptions one;
  one.threads = 1;
  EnumOptions many;
  many.threads = 8;
  CHECK(enumerate_simple_walks(b, one).walks ==
        enumerate_simple_walks(b, many).walks);
}

TEST_CASE("length limit raises a resource error") {
  BraidWord b{2, {}};
  for (int i = 0; i < 30; ++i) b.letters.push_back({1, 1});
  EnumOptions opt;
  opt.max_length = 24;
  CHECK_THROWS_AS(enumerate_simple_walks(b, opt), ResourceError);
}

TEST_CASE("dump lists one walk per line") {
  std::string d = dump(enumerate_simple_walks(parse_braid("[1,1,1]")));
  CHECK(d.find("J=[2]") != std::string::npos);
  CHECK(d.find("c_1 a_2 b_3") != std::string::npos);
}
