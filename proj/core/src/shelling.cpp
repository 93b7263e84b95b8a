#include "lexmorse/shelling.hpp"

#include "lexmorse/error.hpp"

#include <algorithm>
#include <set>

namespace lexmorse {

ShellingVerdict is_lex_shelling(std::span<const IntervalSystem> systems) {
    for (const auto& sys : systems)
        for (const auto& iv : sys.I)
            if (iv.height() != 1) return {false, sys.facet_index, iv};
    return {};
}

AcyclicMatching shelling_matching(std::vector<Face> facets) {
    if (facets.empty()) throw Error(ErrorCode::InvalidArgument, "no facets");
    const std::size_t size = facets.front().size();
    for (std::size_t j = 0; j < facets.size(); ++j)
        if (facets[j].size() != size)
            throw Error(ErrorCode::NotAShelling, "complex is not pure (facet " + std::to_string(j + 1) + ")");

    auto index = std::make_shared<const FaceIndex>(facets);
    AcyclicMatching m(index);
    for (std::size_t j = 0; j < facets.size(); ++j) {
        const Face& fj = facets[j];
        std::set<Element> missing;  // v with F_j - v inside an earlier facet
        std::vector<std::set<Element>> meets;
        for (std::size_t i = 0; i < j; ++i) {
            std::set<Element> x;
            for (Element v : facets[i])
                if (std::find(fj.begin(), fj.end(), v) != fj.end()) x.insert(v);
            if (x.size() + 1 == size) {
                for (Element v : fj)
                    if (!x.count(v)) missing.insert(v);
            }
            meets.push_back(std::move(x));
        }
        if (j > 0) {
            auto bad = [&] {
                return Error(ErrorCode::NotAShelling,
                             "facet " + std::to_string(j + 1) + " meets the earlier facets in a complex that is not pure of codimension one");
            };
            if (missing.empty()) throw bad();
            for (const auto& x : meets)
                if (std::all_of(missing.begin(), missing.end(), [&](Element v) { return x.count(v) != 0; })) throw bad();
        }

        std::vector<Element> cones;
        for (Element v : fj)
            if (!missing.count(v)) cones.push_back(v);
        if (cones.empty()) continue;
        Element cone = *std::min_element(cones.begin(), cones.end());
        auto pos = static_cast<std::size_t>(std::find(fj.begin(), fj.end(), cone) - fj.begin());

        for (std::size_t face : index->fibre_members(j)) {
            const Face& g = index->face(face);
            if (std::find(g.begin(), g.end(), cone) != g.end()) continue;
            Face up;
            for (std::size_t r = 0; r < fj.size(); ++r)
                if (r == pos || std::find(g.begin(), g.end(), fj[r]) != g.end()) up.push_back(fj[r]);
            m.pair(face, index->at(up));
        }
    }
    return m;
}

}  // namespace lexmorse
