#include "support.hpp"

#include "lexmorse/error.hpp"
#include "lexmorse/homology.hpp"
#include "lexmorse/mobius.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace lexmorse;
using namespace lexmorse::testing;

namespace {

template <class Fn>
ErrorCode code_of(Fn fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

using Blocks = std::vector<std::string>;

std::string word_of(const std::vector<int>& mult) {
    std::string w;
    for (std::size_t i = 0; i < mult.size(); ++i) w.append(static_cast<std::size_t>(mult[i]), static_cast<char>('a' + i));
    return w;
}

// Multiset partitions straight from the definition: the block holding the
// first letter is any sub-multiset of the rest plus that letter.
std::set<Blocks> brute_partitions(const std::string& word) {
    if (word.empty()) return {Blocks{}};
    std::set<Blocks> out;
    const std::string rest = word.substr(1);
    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
        std::string block(1, word[0]), left;
        for (std::size_t i = 0; i < rest.size(); ++i) (mask >> i & 1 ? block : left) += rest[i];
        for (auto tail : brute_partitions(left)) {
            tail.push_back(block);
            std::sort(tail.begin(), tail.end());
            out.insert(tail);
        }
    }
    return out;
}

// Every way of splitting one block into two nonempty parts.
std::set<Blocks> one_splits(const Blocks& b) {
    std::set<Blocks> out;
    for (std::size_t k = 0; k < b.size(); ++k) {
        const std::string& w = b[k];
        for (unsigned mask = 1; mask + 1 < (1u << w.size()); ++mask) {
            std::string x, y;
            for (std::size_t i = 0; i < w.size(); ++i) (mask >> i & 1 ? x : y) += w[i];
            Blocks nb = b;
            nb.erase(nb.begin() + static_cast<std::ptrdiff_t>(k));
            nb.push_back(x);
            nb.push_back(y);
            std::sort(nb.begin(), nb.end());
            out.insert(nb);
        }
    }
    return out;
}

Blocks sorted_blocks(const MultisetPoset& mp, Element e) {
    Blocks b = mp.blocks(e);
    std::sort(b.begin(), b.end());
    return b;
}

Facet chain_of(const MultisetPoset& mp, const std::vector<Blocks>& steps) {
    Facet f;
    for (const auto& s : steps) f.elements.push_back(mp.element_of(s));
    return f;
}

std::vector<std::vector<int>> partitions_upto(int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            if (std::accumulate(cur.begin(), cur.end(), 0) >= 2) out.push_back(cur);
            return;
        }
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    for (int n = 2; n <= hi; ++n) rec(rec, n, n);
    return out;
}

std::string a(int k) { return std::string(static_cast<std::size_t>(k), 'a'); }

}  // namespace

TEST_CASE("element counts and covers match a brute-force enumeration") {
    for (auto lam : std::vector<std::vector<int>>{{2}, {3}, {2, 1}, {2, 2}, {3, 1}, {2, 1, 1}, {1, 1, 1, 1}, {4, 1}, {2, 2, 1}, {5}, {6}, {3, 2, 1}}) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        auto brute = brute_partitions(word_of(lam));
        REQUIRE(mp.poset().size() == brute.size());
        for (std::size_t e = 0; e < mp.poset().size(); ++e) {
            const auto el = static_cast<Element>(e);
            Blocks b = sorted_blocks(mp, el);
            REQUIRE(brute.count(b) == 1);
            std::set<Blocks> up;
            for (Element v : mp.poset().upper_covers(el)) up.insert(sorted_blocks(mp, v));
            REQUIRE(up == one_splits(b));
        }
    }
    CHECK(MultisetPoset({3, 1}).poset().size() == 7);
    CHECK(MultisetPoset({2, 2}).poset().size() == 9);
    CHECK(MultisetPoset({1, 1, 1, 1}).poset().size() == 15);
    CHECK(MultisetPoset({5, 1}).poset().size() == 19);
    CHECK(MultisetPoset({6, 1}).poset().size() == 30);
}

TEST_CASE("bottom is one block and top is all singletons") {
    MultisetPoset mp({2, 3});
    CHECK(mp.blocks(mp.poset().bottom()) == Blocks{"aabbb"});
    CHECK(mp.blocks(mp.poset().top()) == Blocks{"a", "a", "b", "b", "b"});
    CHECK(code_of([&] { mp.element_of({"ab", "ab"}); }) == ErrorCode::UnknownElement);
    CHECK(code_of([] { MultisetPoset({6, 1}, 10); }) == ErrorCode::BoundExceeded);
    CHECK(code_of([] { MultisetPoset({2, 0}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("length-lex order and lambda parsing") {
    CHECK(length_lex_less("b", "ab"));
    CHECK(length_lex_less("ab", "bb"));
    CHECK_FALSE(length_lex_less("ab", "ab"));
    CHECK(parse_lambda("3,1,1") == std::vector<int>{3, 1, 1});
    CHECK(format_lambda(std::vector<int>{3, 1, 1}) == "(3,1,1)");
    CHECK(is_hook(std::vector<int>{4, 1, 1}));
    CHECK(is_hook(std::vector<int>{5}));
    CHECK_FALSE(is_hook(std::vector<int>{2, 2}));
}

TEST_CASE("the worked chain on two a's and three b's") {
    MultisetPoset mp({2, 3});
    Facet f = chain_of(mp, {{"aabbb"}, {"ab", "abb"}, {"ab", "b", "ab"}, {"a", "b", "b", "ab"}, {"a", "b", "b", "a", "b"}});
    auto r = replay_chain(mp, f);
    std::vector<BarLabel> expected{{2, "ab"}, {3, "b"}, {1, "a"}, {4, "a"}};
    CHECK(r.labels == expected);
    CHECK(format_bar_notation(mp, f) == "a|_3 b|_1 b|_2 a|_4 b");
    CHECK(parse_bar_notation(mp, "a|_3 b|_1 b|_2 a|_4 b") == f);

    // Labels through the ChainLabeling interface agree with the replay.
    MultisetLabeling lab(mp);
    auto seq = label_sequence(mp.poset(), f, lab);
    REQUIRE(seq.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(seq[i] == expected[i].token());

    auto s = split_of(mp, f.elements[0], f.elements[1]);
    CHECK(s.parent == "aabbb");
    CHECK(s.left == "ab");
    CHECK(s.right == "abb");
}

TEST_CASE("two-letter one-row chain") {
    MultisetPoset mp({2});
    Facet f = parse_bar_notation(mp, "a|_1 a");
    CHECK(f.elements == std::vector<Element>{mp.poset().bottom(), mp.poset().top()});
    CHECK(replay_chain(mp, f).labels == std::vector<BarLabel>{{1, "a"}});
}

TEST_CASE("the critical facet a|3 a|1 a|2 b") {
    MultisetPoset mp({3, 1});
    Facet f = parse_bar_notation(mp, "a|_3 a|_1 a|_2 b");
    CHECK(format_bar_notation(mp, f) == "a|_3 a|_1 a|_2 b");
    auto fo = multiset_facet_order(mp);
    auto it = std::find(fo.facets.begin(), fo.facets.end(), f);
    REQUIRE(it != fo.facets.end());
    auto sys = interval_system(fo, static_cast<std::size_t>(it - fo.facets.begin()));
    REQUIRE(critical_dimension(sys).has_value());
    CHECK(*critical_dimension(sys) == 1);
}

TEST_CASE("chain_label refuses a missing block") {
    OrderedPartition op{"ab", "b"};
    CHECK(code_of([&] { chain_label(op, BlockSplit{"aa", "a", "a"}); }) == ErrorCode::BlockNotPresent);
    auto l = chain_label(op, BlockSplit{"ab", "a", "b"});
    CHECK(l == BarLabel{1, "a"});
    CHECK(op == OrderedPartition{"a", "b", "b"});
}

TEST_CASE("bar notation errors") {
    MultisetPoset mp({3, 1});
    CHECK(code_of([&] { parse_bar_notation(mp, "a|_1 a|_2 a|_3"); }) == ErrorCode::MalformedNotation);
    CHECK(code_of([&] { parse_bar_notation(mp, "a|_1 a|_2 a|_3 c"); }) == ErrorCode::MalformedNotation);
    CHECK(code_of([&] { parse_bar_notation(mp, "a|_1 a|_2 b"); }) == ErrorCode::MalformedNotation);
    CHECK(code_of([&] { parse_bar_notation(mp, "a| a|_2 a|_3 b"); }) == ErrorCode::MalformedNotation);
    CHECK(code_of([&] { parse_bar_notation(mp, "a|_1 a|_1 a|_2 b"); }) == ErrorCode::InconsistentSubscripts);
    CHECK(code_of([&] { parse_bar_notation(mp, "a|_1 a|_2 a|_4 b"); }) == ErrorCode::InconsistentSubscripts);
    // Bar 1 cuts abc into ab|c, but the smaller child c would be written first.
    MultisetPoset pi3({1, 1, 1});
    CHECK(code_of([&] { parse_bar_notation(pi3, "a|_2 b|_1 c"); }) == ErrorCode::InconsistentSubscripts);
}

TEST_CASE("bar notation round-trips on every facet") {
    for (auto lam : std::vector<std::vector<int>>{{2, 1, 1}, {2, 3}, {3, 1, 1}, {1, 1, 1, 1}, {2, 2, 2}}) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        for (const auto& f : enumerate_facets(mp.poset())) {
            auto s = format_bar_notation(mp, f);
            CAPTURE(s);
            REQUIRE(parse_bar_notation(mp, s) == f);
        }
    }
}

TEST_CASE("labeling totality: distinct covers of a rooted element get distinct labels") {
    std::vector<std::vector<int>> shapes = partitions_upto(5);
    shapes.push_back({6});
    shapes.push_back({4, 2});
    shapes.push_back({3, 2, 1});
    shapes.push_back({2, 2, 2});
    for (const auto& lam : shapes) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        MultisetLabeling lab(mp);
        const Poset& p = mp.poset();
        std::set<std::vector<Element>> seen;
        for (const auto& f : enumerate_facets(p)) {
            for (std::size_t k = 0; k + 1 < f.elements.size(); ++k) {
                std::vector<Element> root(f.elements.begin(), f.elements.begin() + static_cast<std::ptrdiff_t>(k) + 1);
                if (!seen.insert(root).second) continue;
                std::set<LabelToken> labels;
                auto up = p.upper_covers(root.back());
                for (Element v : up) labels.insert(lab.label(p, root, v));
                REQUIRE(labels.size() == up.size());
            }
        }
    }
}

TEST_CASE("bar positions never move once inserted") {
    for (auto lam : std::vector<std::vector<int>>{{2, 2, 1}, {3, 2}, {6}, {2, 1, 1, 1}, {3, 2, 1}}) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        for (const auto& f : enumerate_facets(mp.poset())) {
            auto r = replay_chain(mp, f);
            std::set<int> prev;
            for (const auto& op : r.partitions) {
                std::set<int> bars;
                int at = 0;
                for (std::size_t i = 0; i + 1 < op.size(); ++i) bars.insert(at += static_cast<int>(op[i].size()));
                REQUIRE(std::includes(bars.begin(), bars.end(), prev.begin(), prev.end()));
                REQUIRE(bars.size() + 1 == op.size());
                prev = bars;
            }
            // The last partition's bars are the label positions.
            std::set<int> from_labels;
            for (const auto& l : r.labels) from_labels.insert(l.position);
            REQUIRE(from_labels == prev);
        }
    }
}

TEST_CASE("local minimal skipped intervals equal the ones from the facet order") {
    for (auto lam : std::vector<std::vector<int>>{{2, 2}, {3, 1}, {2, 1, 1}, {1, 1, 1, 1}, {2, 2, 1}, {3, 2}, {6}, {4, 2}, {2, 2, 2}}) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        auto fo = multiset_facet_order(mp);
        for (std::size_t j = 0; j < fo.size(); ++j) {
            auto local = local_skipped_intervals(mp, fo.facets[j]);
            REQUIRE(local == minimal_skipped_intervals(fo, j));
            // Height-one intervals are exactly the topological descents.
            std::vector<int> ones;
            for (const auto& iv : local)
                if (iv.height() == 1) ones.push_back(iv.lo);
            REQUIRE(topological_descents(mp, fo.facets[j]) == ones);
        }
    }
}

TEST_CASE("brute-force skipped intervals agree on small shapes") {
    for (auto lam : std::vector<std::vector<int>>{{2, 1, 1}, {2, 2, 1}}) {
        MultisetPoset mp(lam);
        auto fo = multiset_facet_order(mp);
        for (std::size_t j = 0; j < fo.size(); ++j) {
            auto b = brute_skipped_intervals(fo, j);
            std::sort(b.begin(), b.end());
            REQUIRE(local_skipped_intervals(mp, fo.facets[j]) == b);
        }
    }
}

TEST_CASE("interval types on constructed instances") {
    MultisetPoset m44({4, 4});
    SUBCASE("type 1: identical blocks refined oppositely") {
        Facet f = parse_bar_notation(m44, "b|_3 a|_6 a|_1 b|_4 b|_2 a|_5 a|_7 b");
        auto t = classify_msi(m44, f, {3, 4});
        CHECK(t.kind == MsiKind::Type1);
        CHECK(t.identical_blocks_swapped);
        CHECK(format_bar_notation(m44, t.least_chain) == "a|_3 a|_7 b|_1 b|_4 b|_2 b|_5 a|_6 a");
    }
    SUBCASE("type 2: children regrouped under different parents") {
        Facet f = parse_bar_notation(m44, "a|_1 b|_3 a|_6 b|_2 a|_4 a|_5 b|_7 b");
        auto t = classify_msi(m44, f, {3, 4});
        CHECK(t.kind == MsiKind::Type2);
        CHECK(format_bar_notation(m44, t.least_chain) == "a|_1 a|_3 b|_7 b|_2 a|_4 b|_5 a|_6 b");
    }
    SUBCASE("type 3: different blocks refined") {
        MultisetPoset m222({2, 2, 2});
        Facet f = parse_bar_notation(m222, "a|_5 c|_1 a|_2 b|_3 b|_4 c");
        auto t = classify_msi(m222, f, {2, 3});
        CHECK(t.kind == MsiKind::Type3);
        CHECK(t.different_blocks_refined);
        CHECK(format_bar_notation(m222, t.least_chain) == "a|_2 c|_1 b|_3 b|_4 a|_5 c");
    }
    SUBCASE("errors") {
        Facet f = parse_bar_notation(m44, "b|_3 a|_6 a|_1 b|_4 b|_2 a|_5 a|_7 b");
        CHECK(code_of([&] { classify_msi(m44, f, {3, 3}); }) == ErrorCode::TrivialInterval);
        CHECK(code_of([&] { classify_msi(m44, f, {5, 6}); }) == ErrorCode::NotSkipped);
    }
}

TEST_CASE("every nontrivial interval is classified and least chains agree outside it") {
    for (auto lam : std::vector<std::vector<int>>{{2, 2, 2}, {4, 4}}) {
        MultisetPoset mp(lam);
        for (const auto& f : enumerate_facets(mp.poset()))
            for (const auto& iv : local_skipped_intervals(mp, f)) {
                if (iv.height() < 2) continue;
                auto t = classify_msi(mp, f, iv);
                for (int r = 0; r <= f.proper_length() + 1; ++r)
                    if (!iv.contains(r)) REQUIRE(t.least_chain.elements[static_cast<std::size_t>(r)] == f.elements[static_cast<std::size_t>(r)]);
                REQUIRE(t.least_chain != f);
            }
    }
}

TEST_CASE("Ziegler's interval in P19") {
    MultisetPoset mp({19});
    const Poset& p = mp.poset();
    const Element u = mp.element_of({a(8), a(7), a(4)});
    const Element v = mp.element_of({a(6), a(5), a(3), a(2), a(2), a(1)});
    REQUIRE(p.less(u, v));
    Poset iv = open_interval(p, p.id(u), p.id(v));
    CHECK(iv.size() == 14);
    auto cx = order_complex(iv);
    auto b = reduced_betti(cx);
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 2);
    CHECK(mobius_recursive(p, u, v) == euler_characteristic(cx));

    // A full chain through [u,v]; any of its interior pairs that is a
    // minimal skipped interval is of the regrouping type.
    std::vector<Blocks> below{{a(19)}, {a(8), a(11)}};
    std::vector<Blocks> above;
    Blocks cur{a(6), a(5), a(3), a(2), a(2), a(1)};
    while (true) {
        std::sort(cur.begin(), cur.end(), [](const auto& x, const auto& y) { return x.size() > y.size(); });
        if (cur.front().size() == 1) break;
        std::string big = cur.front();
        cur.erase(cur.begin());
        cur.push_back(big.substr(1));
        cur.push_back("a");
        above.push_back(cur);
    }
    int classified = 0;
    for (Element x : p.upper_covers(u))
        for (Element y : p.upper_covers(x)) {
            if (!p.covers(y, v)) continue;
            Facet f;
            for (const auto& s : below) f.elements.push_back(mp.element_of(s));
            f.elements.push_back(u);
            f.elements.push_back(x);
            f.elements.push_back(y);
            f.elements.push_back(v);
            for (const auto& s : above) f.elements.push_back(mp.element_of(s));
            REQUIRE(f.elements.back() == p.top());
            try {
                auto t = classify_msi(mp, f, {3, 4});
                CHECK(t.kind == MsiKind::Type2);
                ++classified;
            } catch (const Error& e) {
                REQUIRE(e.code() == ErrorCode::NotSkipped);
            }
        }
    CHECK(classified > 0);
}

TEST_CASE("hook critical facets never carry a regrouping interval") {
    for (const auto& lam : hooks(4, 6)) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        auto fo = multiset_facet_order(mp);
        for (const auto& sys : interval_systems(fo)) {
            if (!critical_dimension(sys)) continue;
            const Facet& f = fo.facets[sys.facet_index];
            for (const auto& iv : sys.I)
                if (iv.height() > 1) REQUIRE(classify_msi(mp, f, iv).kind != MsiKind::Type2);
        }
    }
}

TEST_CASE("inversion set axioms") {
    using P = InversionPair;
    CHECK(is_permutation_inversion_set(std::vector<P>{}));
    CHECK(is_permutation_inversion_set(std::vector<P>{{1, 2}, {1, 3}}));
    CHECK(is_permutation_inversion_set(std::vector<P>{{1, 2}, {2, 3}, {1, 3}}));
    CHECK_FALSE(is_permutation_inversion_set(std::vector<P>{{1, 2}, {2, 3}}));
    CHECK_FALSE(is_permutation_inversion_set(std::vector<P>{{1, 3}}));

    // Above the last nontrivial interval every window is a permutation's
    // inversion set under the literal orientation. The left orientation mixes
    // bar order with the shrinking-child condition and can break transitivity.
    for (auto lam : std::vector<std::vector<int>>{{2, 2, 1}, {3, 2, 1}, {2, 2, 2}, {6}, {4, 1, 1}}) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        for (const auto& f : enumerate_facets(mp.poset())) {
            auto sk = local_skipped_intervals(mp, f);
            int last = 0;
            for (const auto& iv : sk)
                if (iv.height() > 1) last = std::max(last, iv.hi);
            const int steps = f.proper_length() + 1;
            for (int lo = last == 0 ? 1 : last + 2; lo <= steps; ++lo) {
                auto s = inversion_set(mp, f, {lo, steps}, sk, InversionOrientation::LiteralRight);
                REQUIRE(is_permutation_inversion_set(s));
                for (const auto& pr : s) REQUIRE((lo <= pr.i && pr.i < pr.j && pr.j <= steps));
            }
            if (last > 0) {
                auto lo = last + 1;
                REQUIRE(code_of([&] { inversion_set(mp, f, {lo, steps}, sk); }) == ErrorCode::WindowTooLow);
            }
        }
    }
}

TEST_CASE("left-oriented inversions are not always a permutation's") {
    MultisetPoset mp({2, 2, 1});
    Facet f = parse_bar_notation(mp, "b|_1 a|_4 b|_2 a|_3 c");
    auto sk = local_skipped_intervals(mp, f);
    // Only descents here, so the whole chain is an admissible window.
    for (const auto& iv : sk) REQUIRE(iv.height() == 1);
    auto s = inversion_set(mp, f, {1, 4}, sk);
    CHECK(s == std::vector<InversionPair>{{1, 3}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(is_permutation_inversion_set(s));
    CHECK(is_permutation_inversion_set(window_inversions(mp, f, {1, 4}, InversionOrientation::LiteralRight)));
}

TEST_CASE("inversions on the worked chain") {
    MultisetPoset mp({2, 3});
    Facet f = parse_bar_notation(mp, "a|_3 b|_1 b|_2 a|_4 b");
    // Bar 1 sits at gap 2, bar 2 at gap 3, bar 3 at gap 1, bar 4 at gap 4.
    // Steps 1 and 2 both cut the block aabbb left to right with a shrinking
    // left child (ab, then b), so (1,2) is an inversion either way.
    auto left = window_inversions(mp, f, {1, 4});
    CHECK(left == std::vector<InversionPair>{{1, 2}, {1, 3}, {2, 3}});
    auto right = window_inversions(mp, f, {1, 4}, InversionOrientation::LiteralRight);
    CHECK(right == std::vector<InversionPair>{{1, 2}, {1, 4}, {2, 4}, {3, 4}});
}

TEST_CASE("hook Mobius predicate") {
    CHECK(hook_mobius_predicate(std::vector<int>{4}));
    CHECK(hook_mobius_predicate(std::vector<int>{7, 1, 1}));
    CHECK_FALSE(hook_mobius_predicate(std::vector<int>{6, 1, 1}));
    CHECK(hook_mobius_predicate(std::vector<int>{4, 1}));
    CHECK_FALSE(hook_mobius_predicate(std::vector<int>{3, 1}));
    CHECK(code_of([] { hook_mobius_predicate(std::vector<int>{2, 2}); }) == ErrorCode::NotHookShaped);
}

TEST_CASE("Mobius values of small multiset posets") {
    struct Row {
        std::vector<int> lam;
        long long mu;
    };
    for (const auto& row : std::vector<Row>{{{2}, -1}, {{3}, 0}, {{4}, 0}, {{5}, 0}, {{3, 1}, -1}, {{4, 1}, 1}, {{5, 1}, -1},
                                            {{6, 1}, 1}, {{2, 1, 1}, -3}, {{2, 2}, -1}, {{1, 1, 1, 1}, -6}}) {
        CAPTURE(format_lambda(row.lam));
        MultisetPoset mp(row.lam);
        CHECK(hall_mobius(mp.poset()) == row.mu);
        CHECK(mobius_recursive(mp.poset()) == row.mu);
    }
}

TEST_CASE("Morse count of the Mobius function equals the recursion for n <= 6") {
    for (const auto& lam : partitions_upto(6)) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        auto fo = multiset_facet_order(mp);
        auto sys = interval_systems(fo);
        auto m = build_matching(fo, sys);
        REQUIRE(mobius_from_morse(m, sys) == mobius_recursive(mp.poset()));
    }
}

TEST_CASE("hook cancellation") {
    SUBCASE("one-row shape is collapsible") {
        auto r = cancel_all_lower(MultisetPoset({5}));
        CHECK(r.pairs.empty());
        CHECK(r.survivors.empty());
        CHECK(r.top_dimension == 2);
    }
    SUBCASE("(2,1,1) keeps three cells in the top dimension") {
        MultisetPoset mp({2, 1, 1});
        auto r = cancel_all_lower(mp);
        CHECK(r.survivors.size() == 3);
        for (auto s : r.survivors) CHECK(r.final_matching->faces().dim(s) == 1);
        auto b = reduced_betti(order_complex(mp.poset()));
        CHECK(b.at(1) == 3);
    }
    SUBCASE("(3,1) keeps one cell") {
        auto r = cancel_all_lower(MultisetPoset({3, 1}));
        CHECK(r.survivors.size() == 1);
        CHECK(r.after == r.before);
    }
    SUBCASE("non-hook shapes need force") {
        CHECK(code_of([] { cancel_all_lower(MultisetPoset({2, 2})); }) == ErrorCode::NotHookShaped);
    }
}

TEST_CASE("forced cancellation on (2,2,2)") {
    MultisetPoset mp({2, 2, 2});
    auto r = cancel_all_lower(mp, {.force = true});
    REQUIRE(r.pairs.size() == 1);
    const auto& pr = r.pairs.front();
    CHECK(pr.path_count == 1);
    CHECK(pr.acyclic_after);
    CHECK(format_bar_notation(mp, r.order.facets[pr.upper_facet]) == "a|_5 c|_1 a|_2 c|_3 b|_4 b");
    CHECK(format_bar_notation(mp, r.order.facets[pr.lower_facet]) == "a|_5 c|_1 a|_2 b|_3 b|_4 c");
    CHECK(pr.path.deleted_ranks == std::vector<int>{3});
    CHECK(r.before.at(2) == 1);
    CHECK(r.after.at(2) == 0);
    CHECK(r.after.at(3) == 16);
    CHECK(kahn_acyclic(*r.final_matching));
    auto b = reduced_betti(order_complex(mp.poset()));
    CHECK(b.at(3) == 16);
}

TEST_CASE("left-oriented inversions drop by the path length on forced pairs") {
    for (auto lam : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2, 2}}) {
        CAPTURE(format_lambda(lam));
        MultisetPoset mp(lam);
        auto r = cancel_all_lower(mp, {.force = true});
        REQUIRE_FALSE(r.pairs.empty());
        for (const auto& pr : r.pairs) {
            const Facet& up = r.order.facets[pr.upper_facet];
            const Facet& lo = r.order.facets[pr.lower_facet];
            auto sk = local_skipped_intervals(mp, up);
            int last = 0;
            for (const auto& iv : sk)
                if (iv.height() > 1) last = std::max(last, iv.hi);
            RankInterval w{last == 0 ? 1 : last + 2, up.proper_length() + 1};
            auto before = inversion_set(mp, up, w, sk).size();
            auto after = window_inversions(mp, lo, w).size();
            CHECK(before - after == pr.path.length());
        }
    }
}
