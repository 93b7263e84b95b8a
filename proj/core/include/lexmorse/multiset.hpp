#pragma once

#include "lexmorse/labeling.hpp"
#include "lexmorse/lex_morse.hpp"
#include "lexmorse/morse_dynamics.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexmorse {

// A block is its letters in increasing order, e.g. "aab".
using Block = std::string;

// Length-lex: shorter blocks first, then lexicographic on the word.
bool length_lex_less(std::string_view a, std::string_view b);

// Letter i of the alphabet occurs multiplicities[i] times ('a' is letter 0).
// A partition lambda is the usual input; any positive composition is allowed
// so the letter order can be chosen.
std::vector<int> parse_lambda(std::string_view text);  // "3,1,1"
bool is_hook(std::span<const int> multiplicities);
std::string format_lambda(std::span<const int> multiplicities);

// The poset of multiset partitions of {a^m_0, b^m_1, ...} ordered by
// refinement, coarse to fine: bottom is one block, top is all singletons.
class MultisetPoset {
public:
    // Throws BoundExceeded past `max_elements` elements (0 means no cap).
    explicit MultisetPoset(std::vector<int> multiplicities, std::size_t max_elements = 0);

    const Poset& poset() const { return *poset_; }
    std::shared_ptr<const Poset> shared_poset() const { return poset_; }
    const std::vector<int>& multiplicities() const { return multiplicities_; }
    int n() const { return n_; }
    bool hook() const { return is_hook(multiplicities_); }

    // Blocks of an element in length-lex order.
    const std::vector<Block>& blocks(Element e) const { return blocks_[static_cast<std::size_t>(e)]; }
    Element element_of(std::vector<Block> blocks) const;  // throws UnknownElement

    static std::string id_of(std::vector<Block> blocks);

private:
    std::vector<int> multiplicities_;
    int n_ = 0;
    std::shared_ptr<const Poset> poset_;
    std::vector<std::vector<Block>> blocks_;
};

// The split performed by a cover: parent -> (left, right), left <= right in length-lex.
struct BlockSplit {
    Block parent;
    Block left;
    Block right;
};

BlockSplit split_of(const MultisetPoset& mp, Element lower, Element upper);

struct BarLabel {
    int position = 0;  // letters before the new bar in the refined word
    Block left;        // left child word

    LabelToken token() const { return LabelToken{position, left}; }
    friend bool operator==(const BarLabel&, const BarLabel&) = default;
};

// Blocks in root order. The concatenation is the canonical word.
using OrderedPartition = std::vector<Block>;

// Refines the leftmost block equal to split.parent in place, smaller child
// left. Throws BlockNotPresent.
BarLabel chain_label(OrderedPartition& ordered, const BlockSplit& split);

// The length-lex chain labeling, replaying the root to order the blocks.
// Holds a reference: the MultisetPoset must outlive it.
class MultisetLabeling : public ChainLabeling {
public:
    explicit MultisetLabeling(const MultisetPoset& mp) : mp_(mp) {}
    LabelToken label(const Poset& p, std::span<const Element> root, Element next) const override;

private:
    const MultisetPoset& mp_;
};

// Replay of one saturated chain.
struct ChainReplay {
    std::vector<OrderedPartition> partitions;  // one per chain element
    std::vector<BarLabel> labels;              // step i (1-based) at labels[i-1]
    std::vector<BlockSplit> splits;
    std::vector<int> parent_start;             // letter offset of the refined block at each step
};

ChainReplay replay_chain(const MultisetPoset& mp, const Facet& f);

std::string format_bar_notation(const MultisetPoset& mp, const Facet& f);
// Throws MalformedNotation for bad syntax or letters, InconsistentSubscripts
// when the subscripts are not a permutation of 1..#bars or do not describe the
// canonical refinement order of the labeling.
Facet parse_bar_notation(const MultisetPoset& mp, std::string_view text);

FacetOrder multiset_facet_order(const MultisetPoset& mp, std::size_t max_facets = 0);

// Steps i < i+1 not lexicographically least on [u_{i-1}, u_{i+1}].
// Returned as ranks of the middle element u_i.
std::vector<int> topological_descents(const MultisetPoset& mp, const Facet& f);

// Minimal skipped intervals computed locally: the containment-minimal rank
// intervals on which the chain is not lexicographically least, comparing only
// chains with the same root. Independent of any global facet order.
std::vector<RankInterval> local_skipped_intervals(const MultisetPoset& mp, const Facet& f);

enum class InversionOrientation {
    // (i,j) when the rank-j bar lies left of the rank-i bar.
    LeftOfEarlier,
    // The literal reading: the rank-j bar lies right of the rank-i bar.
    LiteralRight,
};

struct InversionPair {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const InversionPair&, const InversionPair&) = default;
};

// Inversions among the steps in `window` (1-based step ranks, inclusive),
// with no validity check on the window.
std::vector<InversionPair> window_inversions(const MultisetPoset& mp, const Facet& f, RankInterval window,
                                             InversionOrientation orientation = InversionOrientation::LeftOfEarlier);

// As above, but throws WindowTooLow unless the window starts above the last
// nontrivial interval of `skipped`.
std::vector<InversionPair> inversion_set(const MultisetPoset& mp, const Facet& f, RankInterval window,
                                         std::span<const RankInterval> skipped,
                                         InversionOrientation orientation = InversionOrientation::LeftOfEarlier);

// Transitivity and betweenness (the two permutation-inversion axioms).
bool is_permutation_inversion_set(std::span<const InversionPair> s);

enum class MsiKind { Type1, Type2, Type3, Hybrid };
std::string_view to_string(MsiKind k);

struct MsiType {
    MsiKind kind = MsiKind::Hybrid;
    RankInterval interval;
    // Mechanisms observed: 1 identical blocks refined oppositely, 2 children
    // regrouped under different parent types, 3 different blocks refined.
    bool identical_blocks_swapped = false;
    bool parents_regrouped = false;
    bool different_blocks_refined = false;
    Facet least_chain;  // the chain agreeing outside the interval that is least on it
};

// Classifies a nontrivial minimal skipped interval by comparing the facet
// with the least chain on [u_{lo-1}, u_{hi+1}]. Throws TrivialInterval for
// height 1 and NotSkipped when the interval is not a local minimal skipped
// interval of the facet.
MsiType classify_msi(const MultisetPoset& mp, const Facet& f, RankInterval iv);

enum class PartnerDirection { ShiftOut, ShiftIn };  // partner dim + 1 / dim - 1
std::string_view to_string(PartnerDirection d);

struct Partner {
    std::size_t face = 0;         // critical face index of the partner
    std::size_t facet = 0;        // its owning facet
    PartnerDirection direction = PartnerDirection::ShiftIn;
    int agreement = 0;            // leading chain elements shared with the given facet
    std::optional<PartnerDirection> predicted;  // from comparing L_r with L_{R_r}
    RankInterval interval;        // highest nontrivial J interval of the given facet
};

// Among critical cells of adjacent dimension whose facets agree with the
// given one below its highest nontrivial J interval, the one agreeing on the
// most leading ranks (earliest facet on ties). Throws NoNontrivialInterval,
// PartnerNotCritical when no critical cell qualifies.
Partner partner_cell(const MultisetPoset& mp, const FacetOrder& fo, std::span<const IntervalSystem> systems,
                     const AcyclicMatching& m, std::size_t critical_face);

struct CancelledPair {
    std::size_t upper = 0;  // face indices in the matching
    std::size_t lower = 0;
    std::size_t upper_facet = 0;
    std::size_t lower_facet = 0;
    int agreement = 0;
    unsigned long long path_count = 0;
    GradientPath path;
    std::optional<PartnerDirection> predicted;
    bool acyclic_after = false;
};

struct CancellationOptions {
    bool force = false;
    std::size_t max_faces = 0;
};

struct CancellationReport {
    std::vector<int> multiplicities;
    bool hook = false;
    std::size_t facet_count = 0;
    int top_dimension = 0;  // n - 3
    FacetOrder order;
    std::vector<IntervalSystem> systems;
    MorseVector before;
    MorseVector after;
    std::vector<CancelledPair> pairs;
    std::vector<std::size_t> survivors;  // critical face indices after cancellation
    std::vector<std::string> issues;     // partner problems seen in forced runs
    std::optional<AcyclicMatching> initial;
    std::optional<AcyclicMatching> final_matching;
};

// Builds the lexicographic matching and cancels every lower critical cell
// against a partner: candidates are critical cells of adjacent dimension
// joined by exactly one gradient path, taken greedily by agreement length,
// then cancelled in order of the earlier partner's facet. Throws
// NotHookShaped (unless forced), PairingConflict, NotUnique.
CancellationReport cancel_all_lower(const MultisetPoset& mp, const CancellationOptions& opts = {});

// lambda_1 > 3 (l(lambda) - 1). Throws NotHookShaped.
bool hook_mobius_predicate(std::span<const int> multiplicities);

}  // namespace lexmorse
