#pragma once

#include "lexmorse/homology.hpp"
#include "lexmorse/labeling.hpp"
#include "lexmorse/matching.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lexmorse {

// Consecutive interior ranks lo..hi of one facet, 1-based.
struct RankInterval {
    int lo = 1;
    int hi = 1;

    int height() const { return hi - lo + 1; }
    bool contains(int r) const { return lo <= r && r <= hi; }
    bool contains(const RankInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    friend auto operator<=>(const RankInterval&, const RankInterval&) = default;
};

std::string format_intervals(std::span<const RankInterval> ivs);

struct IntervalSystem {
    std::size_t facet_index = 0;
    int proper_length = 0;
    std::vector<RankInterval> I;  // minimal skipped intervals, sorted
    std::vector<RankInterval> J;  // truncated, disjoint, sorted by lo
    std::vector<int> j0;          // ranks covered by no I interval
    std::vector<Element> rho;     // rho_0 alone when j0 is nonempty, else rho_1..rho_r

    bool covered() const { return j0.empty(); }
};

struct Truncation {
    std::vector<RankInterval> J;
    std::vector<int> j0;
    std::vector<int> rho_ranks;
};

// The truncation loop: repeatedly move the interval with the least lo into J,
// cut the rest down to ranks above its hi, and drop non-minimal survivors.
Truncation truncate_intervals(std::span<const RankInterval> I, int proper_length);

// Maximal faces of F_j intersected with the union of earlier facets, each as
// a bitmask over the interior ranks of F_j (bit r-1 for rank r).
std::vector<std::uint64_t> maximal_overlap_masks(const FacetOrder& fo, std::size_t j);

// Minimal skipped intervals of facet j (0-based). Throws NonIntervalOverlap
// naming both facets when an overlap skips a non-interval.
std::vector<RankInterval> minimal_skipped_intervals(const FacetOrder& fo, std::size_t j);

IntervalSystem interval_system(const FacetOrder& fo, std::size_t j);
std::vector<IntervalSystem> interval_systems(const FacetOrder& fo);

// Fibre of every face: index of the earliest facet containing it.
std::shared_ptr<const FaceIndex> assign_fibres(const FacetOrder& fo, std::size_t max_faces = 0);

AcyclicMatching build_matching(const FacetOrder& fo, std::span<const IntervalSystem> systems,
                               std::size_t max_faces = 0);
AcyclicMatching build_matching(const FacetOrder& fo, std::size_t max_faces = 0);

// |J| - 1 when the facet carries a critical cell.
std::optional<int> critical_dimension(const IntervalSystem& sys);

// Elements of facet j at the low ends of its J intervals, when covered.
std::optional<Face> expected_critical_face(const FacetOrder& fo, const IntervalSystem& sys);

struct OverlapType {
    enum class Kind { Sphere, CollapsibleLike } kind = Kind::CollapsibleLike;
    int dim = 0;  // sphere dimension, meaningful for Kind::Sphere
    friend bool operator==(const OverlapType&, const OverlapType&) = default;
};

std::string format_overlap(const OverlapType& t);

// Homology type of F_j meeting the earlier facets, j >= 1 (0-based). Throws
// UnexpectedHomology when it is neither a homology sphere nor acyclic.
OverlapType overlap_type(const FacetOrder& fo, std::size_t j);

}  // namespace lexmorse
