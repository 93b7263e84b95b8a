#pragma once

#include "lexmorse/lex_morse.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lexmorse {

struct ShellingVerdict {
    bool is_shelling = true;
    // First facet (0-based) with an interval of height > 1, and that interval.
    std::optional<std::size_t> facet;
    std::optional<RankInterval> interval;
};

// True iff every minimal skipped interval of every facet has height one.
ShellingVerdict is_lex_shelling(std::span<const IntervalSystem> systems);

// Cone-point matching of a pure complex given by facets in shelling order.
// Each facet lists its vertices in increasing order. Facet 0 owns the empty
// face; facet j is left critical when it meets the earlier facets in its whole
// boundary. Throws NotAShelling naming the first bad facet (1-based).
AcyclicMatching shelling_matching(std::vector<Face> facets);

}  // namespace lexmorse
