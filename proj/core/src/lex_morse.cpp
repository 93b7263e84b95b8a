#include "lexmorse/lex_morse.hpp"

#include "lexmorse/error.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace lexmorse {

std::string format_intervals(std::span<const RankInterval> ivs) {
    std::string s = "{";
    for (std::size_t i = 0; i < ivs.size(); ++i)
        s += (i ? "," : "") + ("[" + std::to_string(ivs[i].lo) + "," + std::to_string(ivs[i].hi) + "]");
    return s + "}";
}

Truncation truncate_intervals(std::span<const RankInterval> I, int proper_length) {
    Truncation t;
    std::vector<bool> covered(static_cast<std::size_t>(proper_length) + 1, false);
    for (const auto& iv : I)
        for (int r = iv.lo; r <= iv.hi; ++r) covered.at(static_cast<std::size_t>(r)) = true;
    for (int r = 1; r <= proper_length; ++r)
        if (!covered[static_cast<std::size_t>(r)]) t.j0.push_back(r);

    std::vector<RankInterval> rest(I.begin(), I.end());
    while (!rest.empty()) {
        auto first = *std::min_element(rest.begin(), rest.end());
        t.J.push_back(first);
        std::vector<RankInterval> cut;
        for (const auto& iv : rest)
            if (iv != first && iv.hi > first.hi) cut.push_back({std::max(iv.lo, first.hi + 1), iv.hi});
        std::sort(cut.begin(), cut.end());
        cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
        rest.clear();
        for (const auto& iv : cut) {
            bool minimal = std::none_of(cut.begin(), cut.end(), [&](const RankInterval& o) { return o != iv && iv.contains(o); });
            if (minimal) rest.push_back(iv);
        }
    }

    if (!t.j0.empty()) {
        t.rho_ranks.push_back(t.j0.front());
    } else {
        for (const auto& iv : t.J) t.rho_ranks.push_back(iv.lo);
    }
    return t;
}

namespace {

struct Overlap {
    std::uint64_t mask;
    std::size_t witness;  // an earlier facet realizing it
};

std::vector<Overlap> maximal_overlaps(const FacetOrder& fo, std::size_t j) {
    const auto inner = fo.facets.at(j).interior();
    if (inner.size() >= 63) throw Error(ErrorCode::BoundExceeded, "facet too long for rank masks");
    std::unordered_map<Element, int> rank;
    for (std::size_t r = 0; r < inner.size(); ++r) rank.emplace(inner[r], static_cast<int>(r));

    std::unordered_map<std::uint64_t, std::size_t> seen;
    for (std::size_t i = 0; i < j; ++i) {
        std::uint64_t mask = 0;
        for (Element e : fo.facets[i].interior())
            if (auto it = rank.find(e); it != rank.end()) mask |= std::uint64_t{1} << it->second;
        seen.emplace(mask, i);
    }
    std::vector<Overlap> out;
    for (const auto& [m, w] : seen) {
        bool maximal = std::none_of(seen.begin(), seen.end(), [&](const auto& o) { return o.first != m && (m & ~o.first) == 0; });
        if (maximal) out.push_back({m, w});
    }
    std::sort(out.begin(), out.end(), [](const Overlap& a, const Overlap& b) { return a.mask < b.mask; });
    return out;
}

Face face_from_mask(std::span<const Element> inner, std::uint64_t mask) {
    Face f;
    for (std::size_t r = 0; r < inner.size(); ++r)
        if (mask >> r & 1) f.push_back(inner[r]);
    return f;
}

}  // namespace

std::vector<std::uint64_t> maximal_overlap_masks(const FacetOrder& fo, std::size_t j) {
    std::vector<std::uint64_t> out;
    for (const auto& o : maximal_overlaps(fo, j)) out.push_back(o.mask);
    return out;
}

std::vector<RankInterval> minimal_skipped_intervals(const FacetOrder& fo, std::size_t j) {
    const int length = fo.facets.at(j).proper_length();
    const std::uint64_t full = length == 0 ? 0 : (~std::uint64_t{0} >> (64 - length));
    std::vector<RankInterval> skipped;
    for (const auto& o : maximal_overlaps(fo, j)) {
        std::uint64_t gap = full & ~o.mask;
        if (gap == 0) throw Error(ErrorCode::NonIntervalOverlap, "facets " + std::to_string(o.witness + 1) + " and " +
                                                                 std::to_string(j + 1) + " coincide");
        int lo = std::countr_zero(gap);
        std::uint64_t run = gap >> lo;
        if ((run & (run + 1)) != 0)
            throw Error(ErrorCode::NonIntervalOverlap, "facet " + std::to_string(j + 1) + " meets earlier facet " +
                                                           std::to_string(o.witness + 1) +
                                                           " in a face skipping a non-interval of ranks");
        skipped.push_back({lo + 1, lo + std::popcount(run)});
    }
    std::vector<RankInterval> I;
    for (const auto& iv : skipped)
        if (std::none_of(skipped.begin(), skipped.end(), [&](const RankInterval& o) { return o != iv && iv.contains(o); }))
            I.push_back(iv);
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    return I;
}

IntervalSystem interval_system(const FacetOrder& fo, std::size_t j) {
    IntervalSystem s;
    s.facet_index = j;
    s.proper_length = fo.facets.at(j).proper_length();
    s.I = minimal_skipped_intervals(fo, j);
    auto t = truncate_intervals(s.I, s.proper_length);
    s.J = std::move(t.J);
    s.j0 = std::move(t.j0);
    for (int r : t.rho_ranks) s.rho.push_back(fo.facets[j].at_rank(r));
    return s;
}

std::vector<IntervalSystem> interval_systems(const FacetOrder& fo) {
    std::vector<IntervalSystem> out;
    out.reserve(fo.size());
    for (std::size_t j = 0; j < fo.size(); ++j) out.push_back(interval_system(fo, j));
    return out;
}

std::shared_ptr<const FaceIndex> assign_fibres(const FacetOrder& fo, std::size_t max_faces) {
    std::vector<Face> inner;
    inner.reserve(fo.size());
    for (const auto& f : fo.facets) inner.emplace_back(f.interior().begin(), f.interior().end());
    return std::make_shared<const FaceIndex>(std::move(inner), max_faces);
}

AcyclicMatching build_matching(const FacetOrder& fo, std::span<const IntervalSystem> systems, std::size_t max_faces) {
    if (systems.size() != fo.size()) throw Error(ErrorCode::InvalidArgument, "one interval system per facet required");
    auto index = assign_fibres(fo, max_faces);
    AcyclicMatching m(index);
    for (std::size_t j = 0; j < fo.size(); ++j) {
        const auto& sys = systems[j];
        const auto inner = fo.facets[j].interior();
        std::vector<std::uint64_t> j_masks;
        for (const auto& iv : sys.J) j_masks.push_back(((std::uint64_t{1} << iv.height()) - 1) << (iv.lo - 1));

        for (std::size_t face : index->fibre_members(j)) {
            std::uint64_t mask = 0;
            for (Element e : index->face(face)) mask |= std::uint64_t{1} << (index->rank_in_fibre(face, e) - 1);

            std::optional<int> toggle;
            if (!sys.covered()) {
                toggle = sys.j0.front();
            } else {
                for (std::size_t i = 0; i < sys.J.size(); ++i) {
                    std::uint64_t lo_bit = std::uint64_t{1} << (sys.J[i].lo - 1);
                    if ((mask & j_masks[i]) != lo_bit) {
                        toggle = sys.J[i].lo;
                        break;
                    }
                }
            }
            if (!toggle) continue;
            auto partner = index->at(face_from_mask(inner, mask ^ (std::uint64_t{1} << (*toggle - 1))));
            if (index->fibre(partner) != j)
                throw std::logic_error("matching partner left fibre " + std::to_string(j + 1));
            if (auto existing = m.mate(partner); existing && *existing != face)
                throw std::logic_error("matching is not an involution in fibre " + std::to_string(j + 1));
            m.pair(face, partner);
        }
    }
    return m;
}

AcyclicMatching build_matching(const FacetOrder& fo, std::size_t max_faces) {
    auto systems = interval_systems(fo);
    return build_matching(fo, systems, max_faces);
}

std::optional<int> critical_dimension(const IntervalSystem& sys) {
    if (!sys.covered()) return std::nullopt;
    return static_cast<int>(sys.J.size()) - 1;
}

std::optional<Face> expected_critical_face(const FacetOrder& fo, const IntervalSystem& sys) {
    if (!sys.covered()) return std::nullopt;
    Face f;
    for (const auto& iv : sys.J) f.push_back(fo.facets.at(sys.facet_index).at_rank(iv.lo));
    return f;
}

std::string format_overlap(const OverlapType& t) {
    if (t.kind == OverlapType::Kind::Sphere) return "sphere(" + std::to_string(t.dim) + ")";
    return "collapsible-like";
}

OverlapType overlap_type(const FacetOrder& fo, std::size_t j) {
    if (j == 0 || j >= fo.size()) throw Error(ErrorCode::InvalidArgument, "overlap needs an earlier facet");
    const auto inner = fo.facets[j].interior();
    std::vector<Face> gens;
    for (const auto& o : maximal_overlaps(fo, j)) gens.push_back(face_from_mask(inner, o.mask));
    auto betti = reduced_betti(SimplicialComplex::from_facets(gens));
    int ones = 0, other = 0, dim = 0;
    for (int d = -1; d <= betti.top_dimension(); ++d) {
        if (betti.at(d) == 1) {
            ++ones;
            dim = d;
        } else if (betti.at(d) != 0) {
            ++other;
        }
    }
    if (other == 0 && ones == 1) return {OverlapType::Kind::Sphere, dim};
    if (other == 0 && ones == 0) return {OverlapType::Kind::CollapsibleLike, 0};
    throw Error(ErrorCode::UnexpectedHomology, "facet " + std::to_string(j + 1) + " overlap is neither a sphere nor acyclic");
}

}  // namespace lexmorse
