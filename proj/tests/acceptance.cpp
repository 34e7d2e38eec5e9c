// End-to-end acceptance gate: ten numbered criteria, one verdict line each.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cjones/batch.hpp"
#include "cjones/bracket.hpp"
#include "cjones/braid.hpp"
#include "cjones/closed_forms.hpp"
#include "cjones/engine.hpp"
#include "cjones/minimize.hpp"
#include "cjones/torus.hpp"
#include "cjones/walks.hpp"
#include "test_util.hpp"

using namespace cjones;

namespace {

int failures = 0;

void verdict(int num, const std::string& what, bool ok,
             const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", num,
              what.c_str(), detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct CorpusRow {
  std::string name;
  BraidWord word;
  long long sw = -1;
};

// knots.csv carries a third reference-count column that load_csv ignores
std::vector<CorpusRow> load_corpus() {
  std::vector<CorpusRow> rows;
  std::ifstream in(testutil::data_path("knots.csv"));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const size_t c1 = line.find(',');
    const size_t c2 = line.rfind(',');
    CorpusRow row;
    row.name = line.substr(0, c1);
    std::string word = line.substr(c1 + 1, c2 - c1 - 1);
    std::erase(word, '"');
    row.word = parse_braid(word);
    row.sw = std::stoll(line.substr(c2 + 1));
    rows.push_back(std::move(row));
  }
  return rows;
}

bool is_reference_table_row(const std::string& name) {
  return name.size() > 1 && name[0] >= '3' && name[0] <= '9' && name[1] == '_';
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

long long semi_total(const BraidWord& b) {
  auto [s, r] = enumerate_semi_simple(b);
  return static_cast<long long>(s.count() + r.count());
}

std::uint64_t reversed_mask(std::uint64_t m, int l) {
  std::uint64_t r = 0;
  for (int t = 0; t < l; ++t)
    if ((m >> t) & 1) r |= std::uint64_t{1} << (l - 1 - t);
  return r;
}

std::vector<std::uint64_t> sorted_masks(const WalkCensus& c) {
  std::vector<std::uint64_t> out;
  for (const auto& w : c.walks) out.push_back(w.active);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- criteria ----

void criterion_1(const std::vector<CorpusRow>& corpus) {
  const auto t0 = std::chrono::steady_clock::now();
  int checked = 0, wrong = 0;
  for (const auto& row : corpus) {
    if (!is_reference_table_row(row.name)) continue;
    ++checked;
    const long long got =
        static_cast<long long>(enumerate_simple_walks(row.word).count());
    if (got != row.sw) {
      ++wrong;
      std::printf("  mismatch %s: got %lld want %lld\n", row.name.c_str(),
                  got, row.sw);
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream detail;
  detail << checked << " table rows in " << dt << "s";
  verdict(1, "walk counts match the 84-row reference table",
          checked == 84 && wrong == 0 && dt < 60.0, detail.str());
}

void criterion_2(const std::vector<CorpusRow>& corpus) {
  std::map<std::string, long long> want = {{"10_136_w4", 21},
                                           {"10_136_w5", 17},
                                           {"11n_8_w4", 20},
                                           {"11n_8_w5", 23}};
  int hit = 0;
  bool ok = true;
  for (const auto& row : corpus) {
    auto it = want.find(row.name);
    if (it == want.end()) continue;
    ++hit;
    // The published counts are what the orbit-minimization program reports.
    const long long got = minimize_walks(row.word).sw_count;
    if (got != it->second || row.sw != it->second) ok = false;
  }
  verdict(2, "case-study words minimize to 21/17 and 20/23 walks",
          ok && hit == 4);
}

void criterion_3() {
  SeriesReport f2 = count_series(2, 11);
  SeriesReport f3 = count_series(3, 10);
  const bool seq_ok =
      f2.counts == std::vector<long long>{1, 2, 3, 5, 8, 13, 21, 34, 55, 89,
                                          144} &&
      f3.counts ==
          std::vector<long long>{0, 1, 4, 5, 10, 19, 34, 63, 116, 213} &&
      f2.recurrence_ok && f2.closedform_ok && f3.recurrence_ok &&
      f3.closedform_ok;
  bool radical_ok = true;
  try {
    // each call cross-checks the radical evaluation to 1e-6 internally
    for (int n = 1; n <= 30; ++n) {
      closed_form_f(n);
      closed_form_g(n);
    }
  } catch (const std::exception&) {
    radical_ok = false;
  }
  verdict(3, "torus families follow the two recurrences and closed forms",
          seq_ok && radical_ok);
}

void criterion_4(const std::vector<CorpusRow>& corpus) {
  bool ok = true;
  auto check_word = [&](const BraidWord& b) {
    if (b.length() < 2) return;
    const long long total = semi_total(b);
    for (int k = 1; k < b.length() && ok; ++k)
      if (semi_total(cyclic_shift(b, k)) != total) ok = false;
    if (ok && b.letters[0].index != 1) {
      WalkCensus before = enumerate_simple_walks(b);
      WalkCensus after = enumerate_simple_walks(cyclic_shift(b, 1));
      std::vector<std::uint64_t> expect;
      for (const auto& w : before.walks) {
        std::uint64_t m = w.active >> 1;
        if (w.active & 1) m |= std::uint64_t{1} << (b.length() - 1);
        expect.push_back(m);
      }
      std::sort(expect.begin(), expect.end());
      if (expect != sorted_masks(after)) ok = false;
    }
  };
  for (const auto& row : corpus) {
    check_word(row.word);
    if (!ok) break;
  }
  std::mt19937 rng(1004);
  for (int it = 0; ok && it < 200; ++it)
    check_word(testutil::random_knot_word(rng, 2, 12, 5));
  verdict(4, "semi-simple totals are conserved under cyclic permutation", ok);
}

void criterion_5() {
  bool ok = true;
  long long exhaustive = 0;
  for (int m = 2; m <= 3 && ok; ++m) {
    const int gens = 2 * (m - 1);
    for (int len = 1; len <= 7 && ok; ++len) {
      std::vector<int> digits(static_cast<size_t>(len), 0);
      for (;;) {
        BraidWord b{m, {}};
        for (int d : digits)
          b.letters.push_back({d / 2 + 1, (d % 2 == 0) ? 1 : -1});
        if (is_reduced(b)) {
          ++exhaustive;
          if (enumerate_simple_walks(b).walks !=
              enumerate_paths_dfs(b).walks) {
            ok = false;
            break;
          }
        }
        int i = 0;
        while (i < len && ++digits[static_cast<size_t>(i)] == gens)
          digits[static_cast<size_t>(i++)] = 0;
        if (i == len) break;
      }
    }
  }
  std::mt19937 rng(1005);
  for (int it = 0; ok && it < 500; ++it) {
    BraidWord b = testutil::random_word(rng, 8, 12, 5);
    if (enumerate_simple_walks(b).walks != enumerate_paths_dfs(b).walks)
      ok = false;
  }
  std::ostringstream detail;
  detail << exhaustive << " exhaustive + 500 fuzzed words";
  verdict(5, "coloring census equals direct path search", ok, detail.str());
}

void criterion_6(const std::vector<CorpusRow>& corpus) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  int checked = 0;
  for (const auto& row : corpus) {
    if (!is_reference_table_row(row.name)) continue;
    ++checked;
    if (colored_jones(row.word, 2) != jones_via_bracket(row.word)) {
      ok = false;
      std::printf("  engine/oracle mismatch on %s\n", row.name.c_str());
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream detail;
  detail << checked << " knots in " << dt << "s";
  verdict(6, "color-two engine equals the state-sum oracle",
          ok && checked == 84 && dt < 600.0, detail.str());
}

void criterion_7() {
  bool ok = true;
  const std::pair<const char*, Laurent (*)(int)> cases[] = {
      {"[-2,1,2,2,2,1]", &cjp_5_2},
      {"[1,2,-1,-3,2,-3,1]", &cjp_6_1},
      {"[1,2,3,3,3,-1,2,1,-3]", &cjp_7_2},
  };
  for (const auto& [word, form] : cases) {
    BraidWord b = parse_braid(word);
    for (int N = 2; N <= 5; ++N)
      if (form(N) != colored_jones(b, N)) ok = false;
  }
  verdict(7, "closed forms equal the engine for colors two to five", ok,
          ok ? "exact, residual prefactor 1" : "");
}

void criterion_8() {
  std::mt19937 rng(1008);
  bool ok = true;
  for (const char* word : {"[1,1,1]", "[1,-2,1,-2]", "[1,2,2,2,1,-2]"}) {
    BraidWord base = parse_braid(word);
    std::vector<Laurent> reference;
    for (int N = 2; N <= 4; ++N) reference.push_back(colored_jones(base, N));
    for (int rewrite = 0; rewrite < 5 && ok; ++rewrite) {
      BraidWord b = base;
      int stabs = 0;  // widening is exponential in cost at color 4, cap it
      for (int mv = 0; mv < 4; ++mv) {
        switch (rng() % 3) {
          case 0:
            b = cyclic_shift(b, 1 + static_cast<int>(
                                     rng() % b.letters.size()));
            break;
          case 1:
            if (stabs < 2) {
              b = stabilize(b, (rng() & 1) ? 1 : -1);
              ++stabs;
            } else {
              b = cyclic_shift(b, 1);
            }
            break;
          case 2: {
            std::vector<int> spots;
            for (int pos = 0; pos + 3 <= b.length(); ++pos)
              if (yang_baxter(b, pos)) spots.push_back(pos);
            if (!spots.empty())
              b = *yang_baxter(b, spots[rng() % spots.size()]);
            break;
          }
        }
      }
      for (int N = 2; N <= 4 && ok; ++N) {
        if (colored_jones(b, N) != reference[static_cast<size_t>(N - 2)])
          ok = false;
        if (colored_jones(reflect(b), N) !=
            reference[static_cast<size_t>(N - 2)].inverted_q())
          ok = false;
      }
    }
  }
  verdict(8, "Markov rewritings and mirrors preserve the invariant", ok);
}

void criterion_9() {
  std::mt19937 rng(1009);
  bool ok = true;
  for (int it = 0; it < 200 && ok; ++it) {
    BraidWord b = testutil::random_word(rng, 1, 9, 4);
    const auto base = enumerate_simple_walks(b).count();
    const int pos = static_cast<int>(rng() % (b.letters.size() + 1));
    const int idx = 1 + static_cast<int>(rng() % (b.width - 1));
    const int sign = (rng() & 1) ? 1 : -1;
    if (enumerate_simple_walks(insert_cancelling_pair(b, pos, idx, sign))
            .count() < base)
      ok = false;
    if (enumerate_simple_walks(stabilize(b, sign)).count() < base) ok = false;
    if (enumerate_simple_walks(reverse(b)).count() != base) ok = false;

    auto [s, r] = enumerate_semi_simple(b);
    auto [rs, rr] = enumerate_semi_simple(rotate(b));
    std::vector<std::uint64_t> expect, got;
    for (const auto& w : s.walks)
      expect.push_back(reversed_mask(w.active, b.length()));
    for (const auto& w : r.walks)
      expect.push_back(reversed_mask(w.active, b.length()));
    for (const auto& w : rs.walks) got.push_back(w.active);
    for (const auto& w : rr.walks) got.push_back(w.active);
    std::sort(expect.begin(), expect.end());
    std::sort(got.begin(), got.end());
    if (expect != got) ok = false;
  }
  verdict(9, "monotonicity, reversal and rotation relabeling hold", ok);
}

void criterion_10(const std::vector<CorpusRow>& corpus) {
  std::vector<KnotRecord> recs;
  for (size_t i = 0; i < corpus.size() && recs.size() < 30; ++i)
    recs.push_back({corpus[i].name, corpus[i].word});
  bool ok = true;
  for (BatchTask task :
       {BatchTask::walks, BatchTask::minimize, BatchTask::jones}) {
    std::vector<KnotRecord> subset =
        task == BatchTask::minimize
            ? std::vector<KnotRecord>(recs.begin(), recs.begin() + 10)
            : recs;
    BatchOptions opt;
    opt.task = task;
    opt.color = 2;
    opt.jobs = 1;
    auto serial = run_batch(subset, opt);
    opt.jobs = 8;
    auto parallel = run_batch(subset, opt);
    if (results_to_csv(serial) != results_to_csv(parallel)) ok = false;
    if (results_to_json(serial) != results_to_json(parallel)) ok = false;
  }
  verdict(10, "batch output is byte-identical for 1 and 8 jobs", ok);
}

}  // namespace

int main() {
  const std::vector<CorpusRow> corpus = load_corpus();
  criterion_1(corpus);
  criterion_2(corpus);
  criterion_3();
  criterion_4(corpus);
  criterion_5();
  criterion_6(corpus);
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(corpus);
  if (failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
