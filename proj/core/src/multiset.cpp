#include "lexmorse/multiset.hpp"

#include "lexmorse/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace lexmorse {

bool length_lex_less(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<int> parse_lambda(std::string_view text) {
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto part = text.substr(start, end - start);
        int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size() || v < 1)
            throw Error(ErrorCode::InvalidArgument, "bad partition '" + std::string(text) + "'");
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

bool is_hook(std::span<const int> multiplicities) {
    std::vector<int> s(multiplicities.begin(), multiplicities.end());
    std::sort(s.rbegin(), s.rend());
    return std::all_of(s.begin() + (s.empty() ? 0 : 1), s.end(), [](int x) { return x == 1; });
}

std::string format_lambda(std::span<const int> multiplicities) {
    std::string s = "(";
    for (std::size_t i = 0; i < multiplicities.size(); ++i) s += (i ? "," : "") + std::to_string(multiplicities[i]);
    return s + ")";
}

namespace {

std::vector<Block> canonical(std::vector<Block> blocks) {
    std::sort(blocks.begin(), blocks.end(), length_lex_less);
    return blocks;
}

// Unordered splits of a block into two nonempty sub-multisets, as (smaller, larger).
std::vector<std::pair<Block, Block>> block_splits(const Block& b) {
    std::vector<std::pair<char, int>> counts;
    for (char c : b) {
        if (counts.empty() || counts.back().first != c) counts.push_back({c, 0});
        ++counts.back().second;
    }
    std::set<std::pair<Block, Block>> out;
    std::vector<int> take(counts.size(), 0);
    while (true) {
        Block left, right;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            left.append(static_cast<std::size_t>(take[i]), counts[i].first);
            right.append(static_cast<std::size_t>(counts[i].second - take[i]), counts[i].first);
        }
        if (!left.empty() && !right.empty()) {
            if (length_lex_less(right, left)) std::swap(left, right);
            out.emplace(std::move(left), std::move(right));
        }
        std::size_t i = 0;
        while (i < counts.size() && take[i] == counts[i].second) take[i++] = 0;
        if (i == counts.size()) break;
        ++take[i];
    }
    return {out.begin(), out.end()};
}

}  // namespace

std::string MultisetPoset::id_of(std::vector<Block> blocks) {
    std::string id;
    for (const auto& b : canonical(std::move(blocks))) id += (id.empty() ? "" : "|") + b;
    return id;
}

MultisetPoset::MultisetPoset(std::vector<int> multiplicities, std::size_t max_elements)
    : multiplicities_(std::move(multiplicities)) {
    if (multiplicities_.empty() || multiplicities_.size() > 26)
        throw Error(ErrorCode::InvalidArgument, "need between 1 and 26 letters");
    Block word;
    for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
        if (multiplicities_[i] < 1) throw Error(ErrorCode::InvalidArgument, "multiplicities must be positive");
        word.append(static_cast<std::size_t>(multiplicities_[i]), static_cast<char>('a' + i));
        n_ += multiplicities_[i];
    }
    if (n_ < 2) throw Error(ErrorCode::InvalidArgument, "a one-letter multiset has no bounded partition poset");

    std::map<std::string, std::vector<Block>> seen;
    std::vector<CoverPair> covers;
    std::deque<std::string> queue;
    seen.emplace(word, std::vector<Block>{word});
    queue.push_back(word);
    while (!queue.empty()) {
        auto uid = queue.front();
        queue.pop_front();
        const auto ublocks = seen.at(uid);
        for (std::size_t k = 0; k < ublocks.size(); ++k) {
            if (k > 0 && ublocks[k] == ublocks[k - 1]) continue;
            for (auto& [l, r] : block_splits(ublocks[k])) {
                auto child = ublocks;
                child.erase(child.begin() + static_cast<std::ptrdiff_t>(k));
                child.push_back(l);
                child.push_back(r);
                child = canonical(std::move(child));
                auto vid = id_of(child);
                covers.push_back({uid, vid});
                if (seen.emplace(vid, std::move(child)).second) {
                    if (max_elements != 0 && seen.size() > max_elements)
                        throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(max_elements) + " elements");
                    queue.push_back(vid);
                }
            }
        }
    }
    poset_ = std::make_shared<const Poset>(build_poset(covers));
    blocks_.resize(poset_->size());
    for (auto& [id, b] : seen) blocks_[static_cast<std::size_t>(poset_->element(id))] = std::move(b);
}

Element MultisetPoset::element_of(std::vector<Block> blocks) const {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    return poset_->element(id_of(std::move(blocks)));
}

BlockSplit split_of(const MultisetPoset& mp, Element lower, Element upper) {
    std::multiset<Block> gone(mp.blocks(lower).begin(), mp.blocks(lower).end());
    std::vector<Block> added;
    for (const auto& b : mp.blocks(upper)) {
        if (auto it = gone.find(b); it != gone.end()) {
            gone.erase(it);
        } else {
            added.push_back(b);
        }
    }
    if (gone.size() != 1 || added.size() != 2)
        throw Error(ErrorCode::InvalidArgument, mp.poset().id(lower) + " < " + mp.poset().id(upper) + " is not a cover");
    std::sort(added.begin(), added.end(), length_lex_less);
    return {*gone.begin(), added[0], added[1]};
}

BarLabel chain_label(OrderedPartition& ordered, const BlockSplit& split) {
    auto it = std::find(ordered.begin(), ordered.end(), split.parent);
    if (it == ordered.end()) throw Error(ErrorCode::BlockNotPresent, "no block " + split.parent + " to refine");
    int before = 0;
    for (auto b = ordered.begin(); b != it; ++b) before += static_cast<int>(b->size());
    Block left = split.left, right = split.right;
    if (length_lex_less(right, left)) std::swap(left, right);
    *it = right;
    ordered.insert(it, left);
    return {before + static_cast<int>(left.size()), left};
}

LabelToken MultisetLabeling::label(const Poset&, std::span<const Element> root, Element next) const {
    OrderedPartition ordered = mp_.blocks(root.front());
    for (std::size_t i = 1; i < root.size(); ++i) chain_label(ordered, split_of(mp_, root[i - 1], root[i]));
    return chain_label(ordered, split_of(mp_, root.back(), next)).token();
}

ChainReplay replay_chain(const MultisetPoset& mp, const Facet& f) {
    ChainReplay r;
    OrderedPartition ordered = mp.blocks(f.elements.front());
    r.partitions.push_back(ordered);
    for (std::size_t i = 1; i < f.elements.size(); ++i) {
        auto split = split_of(mp, f.elements[i - 1], f.elements[i]);
        auto lab = chain_label(ordered, split);
        r.parent_start.push_back(lab.position - static_cast<int>(lab.left.size()));
        r.labels.push_back(std::move(lab));
        r.splits.push_back(std::move(split));
        r.partitions.push_back(ordered);
    }
    return r;
}

std::string format_bar_notation(const MultisetPoset& mp, const Facet& f) {
    auto r = replay_chain(mp, f);
    std::string word;
    for (const auto& b : r.partitions.back()) word += b;
    std::vector<int> step_at_gap(word.size(), 0);
    for (std::size_t s = 0; s < r.labels.size(); ++s) step_at_gap[static_cast<std::size_t>(r.labels[s].position)] = static_cast<int>(s + 1);
    std::string out(1, word.front());
    for (std::size_t g = 1; g < word.size(); ++g) {
        if (step_at_gap[g] != 0) {
            out += "|_" + std::to_string(step_at_gap[g]) + " ";
        }
        out += word[g];
    }
    return out;
}

Facet parse_bar_notation(const MultisetPoset& mp, std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto malformed = [&](const std::string& why) {
        return Error(ErrorCode::MalformedNotation, "'" + std::string(text) + "': " + why);
    };

    std::string word;
    std::vector<int> subscript;  // bar after word[i], for i < n-1
    std::size_t i = 0;
    while (i < s.size()) {
        if (!std::islower(static_cast<unsigned char>(s[i]))) throw malformed("expected a letter at offset " + std::to_string(i));
        word += s[i++];
        if (i == s.size()) break;
        if (s[i] != '|' || i + 1 >= s.size() || s[i + 1] != '_') throw malformed("expected '|_' after a letter");
        i += 2;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw malformed("missing bar subscript");
        subscript.push_back(std::stoi(s.substr(start, i - start)));
        if (i == s.size()) throw malformed("trailing bar");
    }

    std::vector<int> counts(mp.multiplicities().size(), 0);
    for (char c : word) {
        auto k = static_cast<std::size_t>(c - 'a');
        if (k >= counts.size()) throw malformed(std::string("letter '") + c + "' is not in the alphabet");
        ++counts[k];
    }
    if (counts != mp.multiplicities()) throw malformed("letters do not match the multiset");

    const int bars = static_cast<int>(subscript.size());
    std::vector<int> sorted = subscript;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < bars; ++k)
        if (sorted[static_cast<std::size_t>(k)] != k + 1)
            throw Error(ErrorCode::InconsistentSubscripts, "subscripts are not a permutation of 1.." + std::to_string(bars));

    Facet f;
    for (int step = 0; step <= bars; ++step) {
        std::vector<Block> blocks;
        Block cur(1, word[0]);
        for (std::size_t g = 0; g < subscript.size(); ++g) {
            if (subscript[g] <= step) {
                blocks.push_back(cur);
                cur.clear();
            }
            cur += word[g + 1];
        }
        blocks.push_back(cur);
        f.elements.push_back(mp.element_of(std::move(blocks)));
    }
    if (f.elements.back() != mp.poset().top()) throw malformed("not fully refined");

    auto strip = [](std::string x) {
        x.erase(std::remove_if(x.begin(), x.end(), [](unsigned char c) { return std::isspace(c); }), x.end());
        return x;
    };
    if (strip(format_bar_notation(mp, f)) != s)
        throw Error(ErrorCode::InconsistentSubscripts, "'" + std::string(text) + "' is not the canonical notation of its chain (" +
                                                           format_bar_notation(mp, f) + ")");
    return f;
}

FacetOrder multiset_facet_order(const MultisetPoset& mp, std::size_t max_facets) {
    return order_facets(mp.poset(), MultisetLabeling(mp), max_facets);
}

namespace {

// Lexicographically least chain from f.elements[a] to f.elements[b], keeping
// the root f.elements[0..a]. Returns the whole facet with that segment swapped in.
Facet least_on_segment(const MultisetPoset& mp, const Facet& f, std::size_t a, std::size_t b) {
    const Poset& p = mp.poset();
    OrderedPartition base = mp.blocks(f.elements.front());
    for (std::size_t i = 1; i <= a; ++i) chain_label(base, split_of(mp, f.elements[i - 1], f.elements[i]));

    const Element target = f.elements[b];
    std::vector<Element> best, cur{f.elements[a]};
    std::vector<BarLabel> best_labels, cur_labels;
    std::vector<OrderedPartition> parts{base};
    auto walk = [&](auto&& self) -> void {
        Element u = cur.back();
        if (u == target) {
            if (best.empty() || std::lexicographical_compare(cur_labels.begin(), cur_labels.end(), best_labels.begin(),
                                                             best_labels.end(), [](const BarLabel& x, const BarLabel& y) {
                                                                 return x.token() < y.token();
                                                             })) {
                best = cur;
                best_labels = cur_labels;
            }
            return;
        }
        for (Element v : p.upper_covers(u)) {
            if (!p.leq(v, target)) continue;
            OrderedPartition next = parts.back();
            cur_labels.push_back(chain_label(next, split_of(mp, u, v)));
            parts.push_back(std::move(next));
            cur.push_back(v);
            self(self);
            cur.pop_back();
            parts.pop_back();
            cur_labels.pop_back();
        }
    };
    walk(walk);

    Facet out = f;
    std::copy(best.begin(), best.end(), out.elements.begin() + static_cast<std::ptrdiff_t>(a));
    return out;
}

bool least_on(const MultisetPoset& mp, const Facet& f, std::size_t a, std::size_t b) {
    return least_on_segment(mp, f, a, b) == f;
}

}  // namespace

std::vector<int> topological_descents(const MultisetPoset& mp, const Facet& f) {
    std::vector<int> out;
    for (int r = 1; r <= f.proper_length(); ++r)
        if (!least_on(mp, f, static_cast<std::size_t>(r - 1), static_cast<std::size_t>(r + 1))) out.push_back(r);
    return out;
}

std::vector<RankInterval> local_skipped_intervals(const MultisetPoset& mp, const Facet& f) {
    std::vector<RankInterval> found;
    const int len = f.proper_length();
    for (int h = 1; h <= len; ++h) {
        for (int lo = 1; lo + h - 1 <= len; ++lo) {
            RankInterval iv{lo, lo + h - 1};
            if (std::any_of(found.begin(), found.end(), [&](const RankInterval& o) { return iv.contains(o); })) continue;
            if (!least_on(mp, f, static_cast<std::size_t>(lo - 1), static_cast<std::size_t>(iv.hi + 1))) found.push_back(iv);
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<InversionPair> window_inversions(const MultisetPoset& mp, const Facet& f, RankInterval window,
                                             InversionOrientation orientation) {
    auto r = replay_chain(mp, f);
    const int steps = static_cast<int>(r.labels.size());
    if (window.lo < 1 || window.hi > steps || window.lo > window.hi)
        throw Error(ErrorCode::InvalidArgument, "window outside the chain's steps");
    auto pos = [&](int step) { return r.labels[static_cast<std::size_t>(step - 1)].position; };
    std::vector<InversionPair> out;
    for (int i = window.lo; i <= window.hi; ++i) {
        const int start = r.parent_start[static_cast<std::size_t>(i - 1)];
        const int end = start + static_cast<int>(r.splits[static_cast<std::size_t>(i - 1)].parent.size());
        for (int j = i + 1; j <= window.hi; ++j) {
            bool bar_order = orientation == InversionOrientation::LeftOfEarlier ? pos(j) < pos(i) : pos(j) > pos(i);
            bool single_block = true;
            for (int t = i; t <= j && single_block; ++t) {
                if (pos(t) <= start || pos(t) >= end) single_block = false;
                if (t > i && pos(t) <= pos(t - 1)) single_block = false;
            }
            bool shrinking = single_block && length_lex_less(r.labels[static_cast<std::size_t>(j - 1)].left,
                                                             r.labels[static_cast<std::size_t>(i - 1)].left);
            if (bar_order || shrinking) out.push_back({i, j});
        }
    }
    return out;
}

std::vector<InversionPair> inversion_set(const MultisetPoset& mp, const Facet& f, RankInterval window,
                                         std::span<const RankInterval> skipped, InversionOrientation orientation) {
    int last = 0;
    for (const auto& iv : skipped)
        if (iv.height() > 1) last = std::max(last, iv.hi);
    if (last > 0 && window.lo <= last + 1)
        throw Error(ErrorCode::WindowTooLow, "window starts at step " + std::to_string(window.lo) +
                                                 ", not above the nontrivial interval ending at rank " + std::to_string(last));
    return window_inversions(mp, f, window, orientation);
}

bool is_permutation_inversion_set(std::span<const InversionPair> s) {
    std::set<InversionPair> in(s.begin(), s.end());
    for (const auto& a : in)
        for (const auto& b : in)
            if (a.j == b.i && !in.count({a.i, b.j})) return false;
    for (const auto& p : in)
        for (int j = p.i + 1; j < p.j; ++j)
            if (!in.count({p.i, j}) && !in.count({j, p.j})) return false;
    return true;
}

std::string_view to_string(MsiKind k) {
    switch (k) {
        case MsiKind::Type1: return "Type1";
        case MsiKind::Type2: return "Type2";
        case MsiKind::Type3: return "Type3";
        case MsiKind::Hybrid: return "Hybrid";
    }
    return "?";
}

namespace {

// For each block of the ordered partition at index a, the sorted child words
// it has become at index b.
std::vector<std::vector<Block>> descendants(const MultisetPoset& mp, const Facet& f, std::size_t a, std::size_t b) {
    OrderedPartition ordered = mp.blocks(f.elements.front());
    for (std::size_t i = 1; i <= a; ++i) chain_label(ordered, split_of(mp, f.elements[i - 1], f.elements[i]));
    const std::size_t roots = ordered.size();
    std::vector<std::size_t> origin(roots);
    for (std::size_t k = 0; k < roots; ++k) origin[k] = k;
    for (std::size_t i = a + 1; i <= b; ++i) {
        auto split = split_of(mp, f.elements[i - 1], f.elements[i]);
        auto at = static_cast<std::size_t>(std::find(ordered.begin(), ordered.end(), split.parent) - ordered.begin());
        chain_label(ordered, split);
        origin.insert(origin.begin() + static_cast<std::ptrdiff_t>(at), origin[at]);
    }
    std::vector<std::vector<Block>> out(roots);
    for (std::size_t k = 0; k < ordered.size(); ++k) out[origin[k]].push_back(ordered[k]);
    for (auto& v : out) std::sort(v.begin(), v.end());
    return out;
}

}  // namespace

MsiType classify_msi(const MultisetPoset& mp, const Facet& f, RankInterval iv) {
    if (iv.height() < 2) throw Error(ErrorCode::TrivialInterval, "interval " + format_intervals(std::span(&iv, 1)) + " has height 1");
    if (iv.lo < 1 || iv.hi > f.proper_length()) throw Error(ErrorCode::InvalidArgument, "interval outside the facet");
    const auto a = static_cast<std::size_t>(iv.lo - 1), b = static_cast<std::size_t>(iv.hi + 1);
    if (least_on(mp, f, a, b)) throw Error(ErrorCode::NotSkipped, "chain is least on the interval");
    for (int lo = iv.lo; lo <= iv.hi; ++lo)
        for (int hi = lo; hi <= iv.hi; ++hi)
            if (RankInterval{lo, hi} != iv &&
                !least_on(mp, f, static_cast<std::size_t>(lo - 1), static_cast<std::size_t>(hi + 1)))
                throw Error(ErrorCode::NotSkipped, "a smaller interval inside is already skipped");

    MsiType t;
    t.interval = iv;
    t.least_chain = least_on_segment(mp, f, a, b);
    OrderedPartition at_u = mp.blocks(f.elements.front());
    for (std::size_t i = 1; i <= a; ++i) chain_label(at_u, split_of(mp, f.elements[i - 1], f.elements[i]));

    auto mine = descendants(mp, f, a, b);
    auto least = descendants(mp, t.least_chain, a, b);
    auto summary = [&](const std::vector<std::vector<Block>>& d) {
        std::vector<Block> parents;
        std::vector<std::pair<Block, std::vector<Block>>> pairs;
        for (std::size_t k = 0; k < d.size(); ++k) {
            if (d[k].size() == 1) continue;
            parents.push_back(at_u[k]);
            pairs.emplace_back(at_u[k], d[k]);
        }
        std::sort(parents.begin(), parents.end());
        std::sort(pairs.begin(), pairs.end());
        return std::pair{parents, pairs};
    };
    auto [p_mine, t_mine] = summary(mine);
    auto [p_least, t_least] = summary(least);
    t.different_blocks_refined = p_mine != p_least;
    t.parents_regrouped = !t.different_blocks_refined && t_mine != t_least;
    t.identical_blocks_swapped = !t.different_blocks_refined && !t.parents_regrouped && mine != least;
    if (t.different_blocks_refined) t.kind = MsiKind::Type3;
    else if (t.parents_regrouped) t.kind = MsiKind::Type2;
    else if (t.identical_blocks_swapped) t.kind = MsiKind::Type1;
    else t.kind = MsiKind::Hybrid;
    return t;
}

std::string_view to_string(PartnerDirection d) { return d == PartnerDirection::ShiftOut ? "shift-out" : "shift-in"; }

namespace {

std::optional<PartnerDirection> predicted_direction(const MultisetPoset& mp, const Facet& f, RankInterval iv) {
    auto r = replay_chain(mp, f);
    const auto last = static_cast<std::size_t>(iv.hi);  // step hi+1, the last insertion on the interval
    if (last >= r.labels.size()) return std::nullopt;
    const Block& lr = r.labels[last].left;
    const Block& right = r.splits[last].right;
    const int right_start = r.labels[last].position;
    for (std::size_t t = last + 1; t < r.labels.size(); ++t) {
        if (r.parent_start[t] == right_start && r.splits[t].parent == right) {
            const Block& l_of_right = r.labels[t].left;
            return length_lex_less(l_of_right, lr) ? PartnerDirection::ShiftOut : PartnerDirection::ShiftIn;
        }
    }
    return std::nullopt;
}

}  // namespace

Partner partner_cell(const MultisetPoset& mp, const FacetOrder& fo, std::span<const IntervalSystem> systems,
                     const AcyclicMatching& m, std::size_t critical_face) {
    const auto& fx = m.faces();
    if (!m.is_critical(critical_face)) throw Error(ErrorCode::InvalidArgument, "face is not critical");
    const std::size_t facet = fx.fibre(critical_face);
    const auto& sys = systems[facet];
    std::optional<RankInterval> top;
    for (const auto& iv : sys.J)
        if (iv.height() > 1) top = iv;
    if (!top) throw Error(ErrorCode::NoNontrivialInterval, "facet " + std::to_string(facet + 1) + " has no nontrivial J interval");

    Partner best;
    best.interval = *top;
    bool found = false;
    const int dim = fx.dim(critical_face);
    for (std::size_t c : m.critical()) {
        if (c == critical_face || std::abs(fx.dim(c) - dim) != 1) continue;
        int agree = agreement_prefix(fx, c, critical_face);
        if (agree < top->lo - 1) continue;
        std::size_t cf = fx.fibre(c);
        if (!found || agree > best.agreement || (agree == best.agreement && cf < best.facet)) {
            found = true;
            best.face = c;
            best.facet = cf;
            best.agreement = agree;
            best.direction = fx.dim(c) > dim ? PartnerDirection::ShiftOut : PartnerDirection::ShiftIn;
        }
    }
    if (!found)
        throw Error(ErrorCode::PartnerNotCritical, "no critical cell of adjacent dimension agrees with facet " +
                                                       std::to_string(facet + 1) + " below rank " + std::to_string(top->lo));
    best.predicted = predicted_direction(mp, fo.facets[facet], *top);
    return best;
}

CancellationReport cancel_all_lower(const MultisetPoset& mp, const CancellationOptions& opts) {
    CancellationReport rep;
    rep.multiplicities = mp.multiplicities();
    rep.hook = mp.hook();
    if (!rep.hook && !opts.force)
        throw Error(ErrorCode::NotHookShaped, format_lambda(mp.multiplicities()) + " is not a hook; use force to run anyway");
    rep.top_dimension = mp.n() - 3;
    rep.order = multiset_facet_order(mp);
    rep.facet_count = rep.order.size();
    rep.systems = interval_systems(rep.order);
    AcyclicMatching m = build_matching(rep.order, rep.systems, opts.max_faces);
    rep.before = morse_vector(m);
    const auto& fx = m.faces();

    std::vector<std::size_t> lower;
    for (std::size_t c : m.critical())
        if (fx.dim(c) < rep.top_dimension) lower.push_back(c);

    struct Edge {
        std::size_t lower_cell, other;
        int agreement;
        std::size_t first_facet, second_facet;
    };
    std::vector<Edge> edges;
    const auto critical = m.critical();
    for (std::size_t s : lower) {
        for (std::size_t c : critical) {
            if (std::abs(fx.dim(c) - fx.dim(s)) != 1) continue;
            auto [hi, lo] = fx.dim(c) > fx.dim(s) ? std::pair{c, s} : std::pair{s, c};
            if (count_gradient_paths(m, hi, lo) != 1) continue;
            auto f1 = std::min(fx.fibre(s), fx.fibre(c)), f2 = std::max(fx.fibre(s), fx.fibre(c));
            edges.push_back({s, c, agreement_prefix(fx, s, c), f1, f2});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.agreement != b.agreement) return a.agreement > b.agreement;
        if (a.first_facet != b.first_facet) return a.first_facet < b.first_facet;
        return a.second_facet < b.second_facet;
    });
    std::set<std::size_t> claimed;
    std::vector<Edge> chosen;
    for (const auto& e : edges) {
        if (claimed.count(e.lower_cell) || claimed.count(e.other)) continue;
        claimed.insert(e.lower_cell);
        claimed.insert(e.other);
        chosen.push_back(e);
    }
    for (std::size_t s : lower) {
        if (claimed.count(s)) continue;
        std::string msg = "lower critical cell in facet " + std::to_string(fx.fibre(s) + 1) + " has no free partner";
        if (!opts.force) throw Error(ErrorCode::PairingConflict, msg);
        rep.issues.push_back(msg);
    }
    for (std::size_t s : lower) {
        try {
            partner_cell(mp, rep.order, rep.systems, m, s);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PartnerNotCritical) throw;
            rep.issues.push_back(e.what());
        }
    }

    std::sort(chosen.begin(), chosen.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.first_facet, a.second_facet} < std::pair{b.first_facet, b.second_facet};
    });
    rep.initial = m;
    AcyclicMatching cur = m;
    for (const auto& e : chosen) {
        auto [hi, lo] = fx.dim(e.other) > fx.dim(e.lower_cell) ? std::pair{e.other, e.lower_cell} : std::pair{e.lower_cell, e.other};
        CancelledPair cp;
        cp.upper = hi;
        cp.lower = lo;
        cp.upper_facet = fx.fibre(hi);
        cp.lower_facet = fx.fibre(lo);
        cp.agreement = e.agreement;
        cp.path_count = count_gradient_paths(cur, hi, lo);
        if (cp.path_count == 1) cp.path = enumerate_gradient_paths(cur, hi, lo).front();
        try {
            cp.predicted = partner_cell(mp, rep.order, rep.systems, m, e.lower_cell).predicted;
        } catch (const Error&) {
        }
        cur = cancel_pair(cur, hi, lo);
        cp.acyclic_after = is_acyclic(cur);
        rep.pairs.push_back(std::move(cp));
    }
    rep.after = morse_vector(cur);
    rep.survivors = cur.critical();
    rep.final_matching = std::move(cur);
    return rep;
}

bool hook_mobius_predicate(std::span<const int> multiplicities) {
    if (!is_hook(multiplicities)) throw Error(ErrorCode::NotHookShaped, format_lambda(multiplicities) + " is not a hook");
    int largest = *std::max_element(multiplicities.begin(), multiplicities.end());
    int parts = static_cast<int>(multiplicities.size());
    return largest > 3 * (parts - 1);
}

}  // namespace lexmorse
