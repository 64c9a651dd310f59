#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "baire/corpus.hpp"
#include "baire/serialize.hpp"

namespace baire {

/// Exit codes: 0 success, 1 property violation or rejected input, 2 usage error.
/// The JSON report goes to `out`, a one-line summary to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "default" or a path to a JSON corpus spec.
CorpusSpec load_corpus_spec(const std::string& source);
CorpusSpec corpus_spec_from_json(const json& j);
json to_json(const CorpusSpec& spec);

}  // namespace baire
