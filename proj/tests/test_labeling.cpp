#include "support.hpp"

#include "lexmorse/error.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lexmorse;
using namespace lexmorse::testing;

namespace {

Poset diamond() { return read_poset_file(fixture_path("diamond.poset")); }

Facet chain_of(const Poset& p, std::vector<std::string> ids) {
    Facet f;
    for (const auto& id : ids) f.elements.push_back(p.element(id));
    return f;
}

// Two atoms, each with two private coatoms above it.
Poset two_trees() {
    std::vector<CoverPair> c{{"0", "a"}, {"0", "b"}, {"a", "p"}, {"a", "q"}, {"b", "r"},
                             {"b", "s"}, {"p", "1"}, {"q", "1"}, {"r", "1"}, {"s", "1"}};
    return build_poset(c);
}

}  // namespace

TEST_CASE("token order: integer first, then word with prefixes first") {
    CHECK(LabelToken{1, "zz"} < LabelToken{2, "a"});
    CHECK(LabelToken{2, "a"} < LabelToken{2, "ab"});
    CHECK(LabelToken{2, "ab"} < LabelToken{2, "b"});
    CHECK(format_token(LabelToken{2, "ab"}) == "(2,ab)");
    CHECK(format_token(LabelToken{3, std::nullopt}) == "3");
}

TEST_CASE("B3 natural labeling orders facets by their permutation") {
    Case c = file_case("b3");
    REQUIRE(c.order.size() == 6);
    for (std::size_t j = 0; j + 1 < c.order.size(); ++j) CHECK(c.order.labels[j] < c.order.labels[j + 1]);
    std::vector<long long> first;
    for (const auto& t : c.order.labels.front()) first.push_back(t.value);
    CHECK(first == std::vector<long long>{1, 2, 3});
    std::vector<long long> last;
    for (const auto& t : c.order.labels.back()) last.push_back(t.value);
    CHECK(last == std::vector<long long>{3, 2, 1});
    CHECK_FALSE(validate_lex_axiom(c.order).has_value());
}

TEST_CASE("labeling errors") {
    Poset p = diamond();
    EdgeLabeling partial;
    partial.set("0", "a", 1);
    CHECK_THROWS_WITH_AS(order_facets(p, partial), doctest::Contains("MissingLabel"), Error);

    EdgeLabeling tied;
    for (auto [u, v] : std::vector<std::pair<std::string, std::string>>{{"0", "a"}, {"a", "1"}, {"0", "b"}, {"b", "1"}})
        tied.set(u, v, 1);
    CHECK_THROWS_WITH_AS(order_facets(p, tied), doctest::Contains("DuplicateLabelSequence"), Error);
    CHECK(tied.repeated_labels(p) == std::vector<std::string>{"0"});

    EdgeLabeling bounded = read_labels_file(fixture_path("diamond.labels"));
    CHECK_THROWS_WITH_AS(order_facets(p, bounded, 1), doctest::Contains("BoundExceeded"), Error);
}

TEST_CASE("explicit sequences must list every chain once") {
    Poset p = diamond();
    auto fa = chain_of(p, {"0", "a", "1"});
    auto fb = chain_of(p, {"0", "b", "1"});
    CHECK(facet_order_from_sequence(p, {fb, fa}).facets.front() == fb);
    CHECK_THROWS_AS(facet_order_from_sequence(p, {fa}), Error);
    CHECK_THROWS_AS(facet_order_from_sequence(p, {fa, fa}), Error);
}

TEST_CASE("lexicographic order axiom") {
    Poset p = two_trees();
    auto A1 = chain_of(p, {"0", "a", "p", "1"});
    auto A2 = chain_of(p, {"0", "a", "q", "1"});
    auto B1 = chain_of(p, {"0", "b", "r", "1"});
    auto B2 = chain_of(p, {"0", "b", "s", "1"});
    CHECK_FALSE(validate_lex_axiom(facet_order_from_sequence(p, {A1, A2, B1, B2})).has_value());
    CHECK_FALSE(validate_lex_axiom(facet_order_from_sequence(p, {B2, B1, A1, A2})).has_value());

    auto bad = validate_lex_axiom(facet_order_from_sequence(p, {A1, B1, A2, B2}));
    REQUIRE(bad.has_value());
    CHECK(bad->first == 0);
    CHECK(bad->second == 1);
    CHECK(bad->late == 2);
    CHECK(bad->shared.empty());
    CHECK(bad->tau == Face{p.element("a")});
    CHECK(bad->mu == Face{p.element("b")});

}

TEST_CASE("edge labels transfer to intervals by id") {
    Case b4 = file_case("b4");
    EdgeLabeling labels = read_labels_file(fixture_path("b4.labels"));
    Poset iv = open_interval(*b4.poset, "{1}", "{1,2,3,4}");
    FacetOrder fo = order_facets(iv, labels);
    CHECK(fo.size() == 6);
    CHECK_FALSE(validate_lex_axiom(fo).has_value());
}
