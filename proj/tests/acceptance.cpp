// Prints one PASS/FAIL line per acceptance criterion over the default corpus.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "baire/corpus.hpp"
#include "baire/suites.hpp"
#include "baire/witness.hpp"

using namespace baire;

namespace {

struct Criterion {
  int id;
  const char* title;
  const char* suite;
  std::size_t min_checked;
  double time_limit;  // seconds, 0 for none
  std::function<std::vector<std::string>()> extra;
};

std::vector<std::string> prop15_rows() {
  std::vector<std::string> problems;
  Prop15Report r = prop15_demo(6);
  if (r.rows.size() != 6) problems.push_back("expected 6 rows");
  for (const auto& row : r.rows) {
    if (row.product != Rat(1)) problems.push_back("row " + std::to_string(row.n) + ": product " + row.product.str());
    if (!row.premise || row.norm_bound > Rat(2)) problems.push_back("row " + std::to_string(row.n) + ": norm premise");
  }
  if (!r.conclusion) problems.push_back("conclusion flag not set");
  return problems;
}

}  // namespace

int main() {
  const CorpusSpec spec;
  const Corpus corpus = generate_corpus(spec);
  std::printf("corpus: %zu entries (seed %llu)\n", corpus.size(), static_cast<unsigned long long>(spec.seed));

  const std::vector<Criterion> criteria{
      {1, "witness indicators, trails and bounds for n = 1..6", "witness", 6, 5.0, nullptr},
      {2, "pipeline certificates within (2^{i+1}-1)|f| + 1/100", "pipeline", 200, 60.0, nullptr},
      {3, "staircase residual lsc and bounded by 1/n", "staircase", 50, 10.0, nullptr},
      {4, "index inequalities for sums, products, max/min", "algebra", 200, 0, nullptr},
      {5, "oscillation sandwich and trail nesting", "sandwich", 1, 0, nullptr},
      {6, "level-set decomposition round trip", "simple-dcs", 1, 0, nullptr},
      {7, "per-rank demo up to rank 6", "prop15", 6, 10.0, prop15_rows},
      {8, "oracle agreement at copies 2 and 3", "oracle", 1, 0, nullptr},
      {9, "eps i(f, eps) <= 4 x certified upper bound", "index-norm", 1, 0, nullptr},
      {10, "structural identities", "identities", 1, 0, nullptr},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult r = run_suite(c.suite, corpus, spec.seed);
    std::vector<std::string> problems = r.violations;
    if (c.extra) {
      auto more = c.extra();
      problems.insert(problems.end(), more.begin(), more.end());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.checked < c.min_checked) {
      problems.push_back("checked " + std::to_string(r.checked) + " < " + std::to_string(c.min_checked));
    }
    if (c.time_limit > 0 && secs > c.time_limit) problems.push_back("took " + std::to_string(secs) + " s");
    const bool ok = problems.empty();
    failed += !ok;
    std::printf("%s %2d %-55s checked=%zu violations=%zu %.3fs\n", ok ? "PASS" : "FAIL", c.id, c.title, r.checked,
                problems.size(), secs);
    for (std::size_t k = 0; k < problems.size() && k < 10; ++k) std::printf("     %s\n", problems[k].c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
