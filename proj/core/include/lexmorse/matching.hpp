#pragma once

#include "lexmorse/poset.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace lexmorse {

// All faces of a complex given by an ordered facet list, each face tagged with
// the earliest facet containing it. Faces are sorted by (size, vertex list).
class FaceIndex {
public:
    // Each facet lists its vertices in an order inherited by subfaces.
    // Throws BoundExceeded past `max_faces` faces (0 means no cap).
    FaceIndex(std::vector<Face> ordered_facets, std::size_t max_faces = 0);

    std::size_t size() const { return faces_.size(); }
    const Face& face(std::size_t i) const { return faces_[i]; }
    int dim(std::size_t i) const { return face_dimension(faces_[i]); }
    std::size_t fibre(std::size_t i) const { return fibre_[i]; }
    std::optional<std::size_t> find(const Face& f) const;
    std::size_t at(const Face& f) const;  // throws InvalidArgument

    // Codimension-one subfaces, in order of the removed vertex position.
    std::span<const std::size_t> boundary(std::size_t i) const;

    const std::vector<Face>& facets() const { return facets_; }
    // 1-based position of `v` in the facet that owns face `i`.
    int rank_in_fibre(std::size_t i, Element v) const;
    // Faces owned by facet j.
    std::span<const std::size_t> fibre_members(std::size_t j) const;

private:
    std::vector<Face> facets_;
    std::vector<Face> faces_;
    std::vector<std::size_t> fibre_;
    std::vector<std::size_t> boundary_offsets_;
    std::vector<std::size_t> boundary_;
    std::vector<std::size_t> fibre_offsets_;
    std::vector<std::size_t> fibre_faces_;
};

// A partial matching on the faces of a FaceIndex. Values are cheap to copy:
// the face data is shared and only the partner table is owned.
class AcyclicMatching {
public:
    explicit AcyclicMatching(std::shared_ptr<const FaceIndex> index);

    const FaceIndex& faces() const { return *index_; }
    std::shared_ptr<const FaceIndex> shared_faces() const { return index_; }

    std::optional<std::size_t> mate(std::size_t i) const;
    bool is_critical(std::size_t i) const { return mate_[i] < 0; }
    std::vector<std::size_t> critical() const;
    std::vector<Face> critical_faces() const;
    std::size_t fibre_of(const Face& f) const { return index_->fibre(index_->at(f)); }

    // Pairs i and j, unpairing any previous partners first.
    void pair(std::size_t i, std::size_t j);
    void unpair(std::size_t i);

private:
    std::shared_ptr<const FaceIndex> index_;
    std::vector<std::ptrdiff_t> mate_;
};

// Every matched pair is a codimension-one face pair and the table is an involution.
bool is_valid_matching(const AcyclicMatching& m);

// A directed cycle in the modified Hasse diagram (matched edges up, the rest
// down), as face indices; nullopt when acyclic.
std::optional<std::vector<std::size_t>> find_directed_cycle(const AcyclicMatching& m);
inline bool is_acyclic(const AcyclicMatching& m) { return !find_directed_cycle(m).has_value(); }

// Critical cell counts, slot d+1 holding dimension d (the empty face has dimension -1).
struct MorseVector {
    std::vector<long long> values;

    long long at(int dim) const {
        auto i = static_cast<std::size_t>(dim + 1);
        return i < values.size() ? values[i] : 0;
    }
    long long alternating_sum() const;
    friend bool operator==(const MorseVector&, const MorseVector&) = default;
};

MorseVector morse_vector(const AcyclicMatching& m);

// Counts without the empty face: a vertex matched to the empty face becomes critical.
MorseVector unreduced_counts(const MorseVector& reduced);

}  // namespace lexmorse
