#include "lexmorse/labeling.hpp"

#include "lexmorse/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lexmorse {

std::string format_token(const LabelToken& t) {
    if (!t.word) return std::to_string(t.value);
    return "(" + std::to_string(t.value) + "," + *t.word + ")";
}

std::string format_labels(std::span<const LabelToken> seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? "," : "") + format_token(seq[i]);
    return s + ")";
}

void EdgeLabeling::set(std::string lower, std::string upper, long long value) {
    labels_[{std::move(lower), std::move(upper)}] = value;
}

std::optional<long long> EdgeLabeling::get(std::string_view lower, std::string_view upper) const {
    auto it = labels_.find(std::pair<std::string, std::string>(lower, upper));
    if (it == labels_.end()) return std::nullopt;
    return it->second;
}

LabelToken EdgeLabeling::label(const Poset& p, std::span<const Element> root, Element next) const {
    const auto& lower = p.id(root.back());
    const auto& upper = p.id(next);
    if (auto v = get(lower, upper)) return LabelToken{*v, std::nullopt};
    throw Error(ErrorCode::MissingLabel, "no label on cover " + lower + " < " + upper);
}

std::vector<std::string> EdgeLabeling::repeated_labels(const Poset& p) const {
    std::vector<std::string> out;
    for (std::size_t u = 0; u < p.size(); ++u) {
        std::set<long long> seen;
        for (Element v : p.upper_covers(static_cast<Element>(u))) {
            auto l = get(p.id(static_cast<Element>(u)), p.id(v));
            if (l && !seen.insert(*l).second) {
                out.push_back(p.id(static_cast<Element>(u)));
                break;
            }
        }
    }
    return out;
}

std::vector<LabelToken> label_sequence(const Poset& p, const Facet& f, const ChainLabeling& labeling) {
    std::vector<LabelToken> seq;
    seq.reserve(f.elements.size() - 1);
    std::span<const Element> chain(f.elements);
    for (std::size_t i = 1; i < chain.size(); ++i) seq.push_back(labeling.label(p, chain.first(i), chain[i]));
    return seq;
}

FacetOrder order_facets(const Poset& p, const ChainLabeling& labeling, std::size_t max_facets) {
    auto facets = enumerate_facets(p, max_facets);
    std::vector<std::vector<LabelToken>> labels;
    labels.reserve(facets.size());
    for (const auto& f : facets) labels.push_back(label_sequence(p, f, labeling));

    std::vector<std::size_t> idx(facets.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

    FacetOrder fo;
    fo.facets.reserve(facets.size());
    fo.labels.reserve(facets.size());
    for (std::size_t i : idx) {
        if (!fo.labels.empty() && fo.labels.back() == labels[i])
            throw Error(ErrorCode::DuplicateLabelSequence,
                        "two facets share label sequence " + format_labels(labels[i]) + ": " +
                            format_face(p, fo.facets.back().elements) + " and " + format_face(p, facets[i].elements));
        fo.facets.push_back(std::move(facets[i]));
        fo.labels.push_back(std::move(labels[i]));
    }
    return fo;
}

FacetOrder facet_order_from_sequence(const Poset& p, std::vector<Facet> sequence) {
    auto all = enumerate_facets(p);
    auto by_elements = [](const Facet& a, const Facet& b) { return a.elements < b.elements; };
    std::sort(all.begin(), all.end(), by_elements);
    auto given = sequence;
    std::sort(given.begin(), given.end(), by_elements);
    if (given != all)
        throw Error(ErrorCode::InvalidArgument, "sequence is not a permutation of the saturated chains");
    FacetOrder fo;
    fo.facets = std::move(sequence);
    return fo;
}

namespace {

std::optional<LexAxiomViolation> check_subtree(const FacetOrder& fo, const std::vector<std::size_t>& members,
                                               std::size_t depth) {
    // Group facets by their element at `depth`; members arrive in increasing order.
    std::map<Element, std::vector<std::size_t>> children;
    for (std::size_t j : members) {
        const auto& e = fo.facets[j].elements;
        if (depth < e.size()) children[e[depth]].push_back(j);
    }
    std::vector<const std::vector<std::size_t>*> groups;
    for (const auto& [_, g] : children) groups.push_back(&g);
    std::sort(groups.begin(), groups.end(), [](auto* a, auto* b) { return a->front() < b->front(); });
    for (std::size_t g = 0; g + 1 < groups.size(); ++g) {
        const auto& a = *groups[g];
        const auto& b = *groups[g + 1];
        if (a.back() > b.front()) {
            const auto& f1 = fo.facets[a.front()].elements;
            const auto& f2 = fo.facets[b.front()].elements;
            LexAxiomViolation v;
            v.first = a.front();
            v.second = b.front();
            v.late = a.back();
            v.shared.assign(f1.begin() + 1, f1.begin() + static_cast<std::ptrdiff_t>(depth));
            v.tau.assign(f1.begin() + 1, f1.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
            v.mu.assign(f2.begin() + 1, f2.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
            return v;
        }
    }
    for (auto* g : groups)
        if (g->size() > 1)
            if (auto v = check_subtree(fo, *g, depth + 1)) return v;
    return std::nullopt;
}

}  // namespace

std::optional<LexAxiomViolation> validate_lex_axiom(const FacetOrder& fo) {
    if (fo.facets.size() < 2) return std::nullopt;
    std::vector<std::size_t> all(fo.facets.size());
    std::iota(all.begin(), all.end(), 0);
    return check_subtree(fo, all, 1);
}

}  // namespace lexmorse
