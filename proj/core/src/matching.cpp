#include "lexmorse/matching.hpp"

#include "lexmorse/error.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace lexmorse {

namespace {

bool size_then_lex(const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct FaceHash {
    std::size_t operator()(const Face& f) const { return boost::hash_range(f.begin(), f.end()); }
};

}  // namespace

FaceIndex::FaceIndex(std::vector<Face> ordered_facets, std::size_t max_faces) : facets_(std::move(ordered_facets)) {
    std::unordered_map<Face, std::size_t, FaceHash> seen;
    std::vector<Face> faces;
    std::vector<std::size_t> fibre;
    auto add = [&](Face f, std::size_t j) {
        if (seen.emplace(f, faces.size()).second) {
            faces.push_back(std::move(f));
            fibre.push_back(j);
            if (max_faces != 0 && faces.size() > max_faces)
                throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(max_faces) + " faces");
        }
    };
    add(Face{}, 0);
    for (std::size_t j = 0; j < facets_.size(); ++j) {
        const auto& g = facets_[j];
        if (g.size() >= 63) throw Error(ErrorCode::BoundExceeded, "facet too large");
        const std::uint64_t n = std::uint64_t{1} << g.size();
        for (std::uint64_t mask = 1; mask < n; ++mask) {
            Face f;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (mask >> i & 1) f.push_back(g[i]);
            add(std::move(f), j);
        }
    }

    std::vector<std::size_t> perm(faces.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return size_then_lex(faces[a], faces[b]); });
    std::vector<std::size_t> new_id(faces.size());
    for (std::size_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = i;

    faces_.reserve(faces.size());
    fibre_.reserve(faces.size());
    for (std::size_t old : perm) {
        faces_.push_back(faces[old]);
        fibre_.push_back(fibre[old]);
    }

    boundary_offsets_.assign(1, 0);
    Face sub;
    for (const auto& f : faces_) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            sub.assign(f.begin(), f.end());
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
            boundary_.push_back(new_id[seen.at(sub)]);
        }
        boundary_offsets_.push_back(boundary_.size());
    }

    std::vector<std::size_t> per_fibre(facets_.size() + 1, 0);
    for (std::size_t j : fibre_) ++per_fibre[j + 1];
    std::partial_sum(per_fibre.begin(), per_fibre.end(), per_fibre.begin());
    fibre_offsets_ = per_fibre;
    fibre_faces_.resize(faces_.size());
    auto cursor = per_fibre;
    for (std::size_t i = 0; i < faces_.size(); ++i) fibre_faces_[cursor[fibre_[i]]++] = i;
}

std::optional<std::size_t> FaceIndex::find(const Face& f) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), f, size_then_lex);
    if (it == faces_.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - faces_.begin());
}

std::size_t FaceIndex::at(const Face& f) const {
    if (auto i = find(f)) return *i;
    throw Error(ErrorCode::InvalidArgument, "face is not in the complex");
}

std::span<const std::size_t> FaceIndex::boundary(std::size_t i) const {
    return std::span<const std::size_t>(boundary_).subspan(boundary_offsets_[i],
                                                           boundary_offsets_[i + 1] - boundary_offsets_[i]);
}

std::span<const std::size_t> FaceIndex::fibre_members(std::size_t j) const {
    return std::span<const std::size_t>(fibre_faces_).subspan(fibre_offsets_[j],
                                                              fibre_offsets_[j + 1] - fibre_offsets_[j]);
}

int FaceIndex::rank_in_fibre(std::size_t i, Element v) const {
    const auto& f = facets_[fibre_[i]];
    auto it = std::find(f.begin(), f.end(), v);
    if (it == f.end()) throw Error(ErrorCode::InvalidArgument, "vertex not in owning facet");
    return static_cast<int>(it - f.begin()) + 1;
}

AcyclicMatching::AcyclicMatching(std::shared_ptr<const FaceIndex> index)
    : index_(std::move(index)), mate_(index_->size(), -1) {}

std::optional<std::size_t> AcyclicMatching::mate(std::size_t i) const {
    if (mate_[i] < 0) return std::nullopt;
    return static_cast<std::size_t>(mate_[i]);
}

std::vector<std::size_t> AcyclicMatching::critical() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mate_.size(); ++i)
        if (mate_[i] < 0) out.push_back(i);
    return out;
}

std::vector<Face> AcyclicMatching::critical_faces() const {
    std::vector<Face> out;
    for (std::size_t i : critical()) out.push_back(index_->face(i));
    return out;
}

void AcyclicMatching::unpair(std::size_t i) {
    if (mate_[i] >= 0) mate_[static_cast<std::size_t>(mate_[i])] = -1;
    mate_[i] = -1;
}

void AcyclicMatching::pair(std::size_t i, std::size_t j) {
    unpair(i);
    unpair(j);
    mate_[i] = static_cast<std::ptrdiff_t>(j);
    mate_[j] = static_cast<std::ptrdiff_t>(i);
}

bool is_valid_matching(const AcyclicMatching& m) {
    const auto& fx = m.faces();
    for (std::size_t i = 0; i < fx.size(); ++i) {
        auto j = m.mate(i);
        if (!j) continue;
        if (m.mate(*j) != i) return false;
        auto [lo, hi] = fx.dim(i) < fx.dim(*j) ? std::pair{i, *j} : std::pair{*j, i};
        auto b = fx.boundary(hi);
        if (std::find(b.begin(), b.end(), lo) == b.end()) return false;
    }
    return true;
}

std::optional<std::vector<std::size_t>> find_directed_cycle(const AcyclicMatching& m) {
    const auto& fx = m.faces();
    enum : unsigned char { White, Grey, Black };
    std::vector<unsigned char> colour(fx.size(), White);
    std::vector<std::size_t> parent(fx.size());

    // Successors of x: its codim-one subfaces except its mate, plus its mate when the mate is larger.
    auto successors = [&](std::size_t x, std::vector<std::size_t>& out) {
        out.clear();
        auto mx = m.mate(x);
        for (std::size_t s : fx.boundary(x))
            if (!mx || *mx != s) out.push_back(s);
        if (mx && fx.dim(*mx) > fx.dim(x)) out.push_back(*mx);
    };

    struct Frame {
        std::size_t node;
        std::vector<std::size_t> next;
        std::size_t pos;
    };
    std::vector<Frame> stack;
    for (std::size_t root = 0; root < fx.size(); ++root) {
        if (colour[root] != White) continue;
        colour[root] = Grey;
        stack.push_back({root, {}, 0});
        successors(root, stack.back().next);
        while (!stack.empty()) {
            auto& top = stack.back();
            if (top.pos == top.next.size()) {
                colour[top.node] = Black;
                stack.pop_back();
                continue;
            }
            std::size_t y = top.next[top.pos++];
            if (colour[y] == Grey) {
                std::vector<std::size_t> cycle{y};
                for (auto it = stack.rbegin(); it != stack.rend() && it->node != y; ++it) cycle.push_back(it->node);
                std::reverse(cycle.begin(), cycle.end());
                return cycle;
            }
            if (colour[y] == White) {
                colour[y] = Grey;
                std::size_t from = top.node;
                parent[y] = from;
                stack.push_back({y, {}, 0});
                successors(y, stack.back().next);
            }
        }
    }
    return std::nullopt;
}

long long MorseVector::alternating_sum() const {
    long long s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i % 2 == 1 ? 1 : -1) * values[i];
    return s;
}

MorseVector morse_vector(const AcyclicMatching& m) {
    const auto& fx = m.faces();
    int top = -1;
    for (std::size_t i = 0; i < fx.size(); ++i) top = std::max(top, fx.dim(i));
    MorseVector v;
    v.values.assign(static_cast<std::size_t>(top + 2), 0);
    for (std::size_t i : m.critical()) ++v.values[static_cast<std::size_t>(fx.dim(i) + 1)];
    return v;
}

MorseVector unreduced_counts(const MorseVector& reduced) {
    MorseVector u = reduced;
    if (u.values.size() < 2) u.values.resize(2, 0);
    u.values[1] += 1 - u.values[0];
    u.values[0] = 0;
    return u;
}

}  // namespace lexmorse
