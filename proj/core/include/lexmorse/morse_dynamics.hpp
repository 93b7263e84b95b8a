#pragma once

#include "lexmorse/matching.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lexmorse {

// tau = tau_0 > sigma_0 < tau_1 > sigma_1 < ... > sigma_m = sigma, stored as
// face indices. Each sigma_t < tau_{t+1} is a matched pair.
struct GradientPath {
    std::vector<std::size_t> steps;
    // Rank (within the owning facet of tau_t) of the vertex removed at each downward step.
    std::vector<int> deleted_ranks;

    std::size_t length() const { return deleted_ranks.size(); }
};

// All gradient paths from critical tau down to critical sigma, dim tau = dim sigma + 1.
// Throws DimensionMismatch, InvalidArgument for non-critical endpoints, and
// BoundExceeded past `max_paths` paths (0 means no cap).
std::vector<GradientPath> enumerate_gradient_paths(const AcyclicMatching& m, std::size_t tau, std::size_t sigma,
                                                   std::size_t max_paths = 0);

// Number of gradient paths, by memoized counting over the acyclic flow.
unsigned long long count_gradient_paths(const AcyclicMatching& m, std::size_t tau, std::size_t sigma);

// Reverses the unique gradient path from tau to sigma. The input is left
// untouched; throws NotUnique when there are 0 or at least 2 paths.
AcyclicMatching cancel_pair(const AcyclicMatching& m, std::size_t tau, std::size_t sigma);

struct RankPreservation {
    bool holds = true;
    // First path deleting a vertex of rank <= r, with the offending rank.
    std::optional<GradientPath> witness;
    int offending_rank = 0;
};

// Checks that no gradient path from tau to sigma deletes a vertex of rank <= r.
RankPreservation check_rank_preservation(const AcyclicMatching& m, std::size_t tau, std::size_t sigma, int r);

// Number of leading ranks on which the owning facets of two faces agree.
int agreement_prefix(const FaceIndex& fx, std::size_t a, std::size_t b);

}  // namespace lexmorse
