#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "baire/corpus.hpp"

namespace baire {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;  // corpus entries (or pairs, ranks) examined
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

using Corpus = std::vector<CorpusEntry>;

SuiteResult suite_witness(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_pipeline(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_staircase(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_algebra(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_sandwich(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_simple_dcs(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_prop15(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_oracle(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_index_norm(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_identities(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_topology(const Corpus& corpus, std::uint64_t seed);
SuiteResult suite_semicontinuous(const Corpus& corpus, std::uint64_t seed);

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const Corpus& corpus, std::uint64_t seed);

}  // namespace baire
