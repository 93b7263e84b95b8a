#pragma once

#include "lexmorse/poset.hpp"

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lexmorse {

// An integer, or an (integer, word) pair. The integer has precedence; words
// compare lexicographically with a strict prefix first.
struct LabelToken {
    long long value = 0;
    std::optional<std::string> word;

    friend auto operator<=>(const LabelToken&, const LabelToken&) = default;
    friend bool operator==(const LabelToken&, const LabelToken&) = default;
};

std::string format_token(const LabelToken& t);
std::string format_labels(std::span<const LabelToken> seq);

// A label rule on rooted covers. `root` runs bottom = u_0 < ... < u_k and
// `next` covers u_k. Implementations must be stateless.
class ChainLabeling {
public:
    virtual ~ChainLabeling() = default;
    virtual LabelToken label(const Poset& p, std::span<const Element> root, Element next) const = 0;
};

// Labels that depend only on the cover, keyed by element ids so a labeling
// also applies to any interval of the poset it was written for.
class EdgeLabeling : public ChainLabeling {
public:
    void set(std::string lower, std::string upper, long long value);
    std::optional<long long> get(std::string_view lower, std::string_view upper) const;
    std::size_t size() const { return labels_.size(); }

    LabelToken label(const Poset& p, std::span<const Element> root, Element next) const override;

    // Lower elements whose upper covers repeat a label.
    std::vector<std::string> repeated_labels(const Poset& p) const;

private:
    std::map<std::pair<std::string, std::string>, long long, std::less<>> labels_;
};

struct FacetOrder {
    std::vector<Facet> facets;
    // Empty when the order was supplied directly rather than induced by labels.
    std::vector<std::vector<LabelToken>> labels;

    std::size_t size() const { return facets.size(); }
};

std::vector<LabelToken> label_sequence(const Poset& p, const Facet& f, const ChainLabeling& labeling);

// Sorts all facets by label sequence. Throws DuplicateLabelSequence on ties,
// MissingLabel from edge labelings, BoundExceeded past `max_facets`.
FacetOrder order_facets(const Poset& p, const ChainLabeling& labeling, std::size_t max_facets = 0);

// Wraps an explicit facet sequence after checking it lists every saturated
// chain of `p` exactly once.
FacetOrder facet_order_from_sequence(const Poset& p, std::vector<Facet> sequence);

struct LexAxiomViolation {
    std::size_t first;   // F_1, precedes `second`
    std::size_t second;  // F_2
    Face shared;         // sigma: common prefix of ranks 1..i
    Face tau;            // prefix of F_1 of ranks 1..i+1
    Face mu;             // prefix of F_2 of ranks 1..i+1
    std::size_t late;    // a facet containing tau that comes after F_2
};

// nullopt means the order satisfies the lexicographic order axiom.
std::optional<LexAxiomViolation> validate_lex_axiom(const FacetOrder& fo);

}  // namespace lexmorse
