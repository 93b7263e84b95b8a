#pragma once

#include "lexmorse/labeling.hpp"
#include "lexmorse/poset.hpp"
#include "lexmorse/puzzle.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace lexmorse::cli {

using Json = nlohmann::ordered_json;

struct Limits {
    std::size_t max_faces = 2'000'000;  // LEXMORSE_MAX_FACES
};

Json analyze_report(const Poset& p, const EdgeLabeling& labels, const Limits& lim);
std::string analyze_text(const Json& r);

enum class MultisetCommand { Report, Cancel, Mobius, Homology };

struct MultisetRequest {
    std::vector<int> multiplicities;
    MultisetCommand command = MultisetCommand::Report;
    bool force = false;
    int max_n = 8;
};

Json multiset_report(const MultisetRequest& req, const Limits& lim);
std::string multiset_text(const Json& r);

Json puzzle_report(const PuzzleOptions& opts);
std::string puzzle_text(const Json& r);

// "pass" unless some consistency check failed.
bool report_passes(const Json& r);

}  // namespace lexmorse::cli
