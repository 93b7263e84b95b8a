#include "support.hpp"

#include "lexmorse/error.hpp"
#include "lexmorse/morse_dynamics.hpp"

#include <doctest.h>

using namespace lexmorse;
using namespace lexmorse::testing;

namespace {

Face ids(const Poset& p, std::vector<std::string> names) {
    Face f;
    for (const auto& n : names) f.push_back(p.element(n));
    return f;
}

// Gradient paths by direct recursion over vertex removal: down from tau_t to
// any facet sigma_t other than the one we came up from, then up along its mate.
unsigned long long brute_paths(const AcyclicMatching& m, std::size_t tau, std::size_t sigma, std::size_t came_from) {
    const auto& fx = m.faces();
    unsigned long long total = 0;
    const Face& f = fx.face(tau);
    for (std::size_t r = 0; r < f.size(); ++r) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(r));
        std::size_t s = fx.at(sub);
        if (s == came_from) continue;
        if (s == sigma) {
            ++total;
            continue;
        }
        auto up = m.mate(s);
        if (up && fx.dim(*up) == fx.dim(tau)) total += brute_paths(m, *up, sigma, s);
    }
    return total;
}

struct Circle {
    Case c = file_case("circle");
    AcyclicMatching m = build_matching(c.order);
    const Poset& p() const { return *c.poset; }
    std::size_t at(std::vector<std::string> names) const { return m.faces().at(ids(p(), names)); }
};

}  // namespace

TEST_CASE("circle: the spurious critical vertex cancels along a unique path") {
    Circle k;
    const auto b = k.at({"b"}), ad = k.at({"a", "d"}), bc = k.at({"b", "c"});
    REQUIRE(k.m.is_critical(b));
    REQUIRE(k.m.is_critical(ad));
    REQUIRE(k.m.is_critical(bc));

    auto paths = enumerate_gradient_paths(k.m, ad, b);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].steps == std::vector<std::size_t>{ad, k.at({"d"}), k.at({"b", "d"}), b});
    CHECK(paths[0].length() == 2);
    CHECK(count_gradient_paths(k.m, bc, b) == 1);

    auto after = cancel_pair(k.m, ad, b);
    CHECK(morse_vector(after).values == std::vector<long long>{0, 0, 1});
    CHECK(unreduced_counts(morse_vector(after)).values == std::vector<long long>{0, 1, 1});
    CHECK(is_valid_matching(after));
    CHECK(kahn_acyclic(after));
    CHECK(after.critical() == std::vector<std::size_t>{bc});
    // The input matching is untouched.
    CHECK(k.m.is_critical(ad));
}

TEST_CASE("path errors") {
    Circle k;
    const auto b = k.at({"b"}), ad = k.at({"a", "d"}), bc = k.at({"b", "c"});
    CHECK_THROWS_WITH_AS(count_gradient_paths(k.m, ad, bc), doctest::Contains("DimensionMismatch"), Error);
    CHECK_THROWS_WITH_AS(count_gradient_paths(k.m, ad, k.at({"a"})), doctest::Contains("InvalidArgument"), Error);
    auto after = cancel_pair(k.m, bc, b);
    CHECK_THROWS_WITH_AS(cancel_pair(after, ad, b), doctest::Contains("InvalidArgument"), Error);
}

TEST_CASE("path counts agree with brute-force recursion") {
    std::vector<Case> cases = suite_cases();
    cases.push_back(file_case("circle"));
    cases.push_back(multiset_case("(2,2,2)", {2, 2, 2}));
    for (const auto& c : cases) {
        CAPTURE(c.name);
        auto m = build_matching(c.order);
        const auto& fx = m.faces();
        auto crit = m.critical();
        for (std::size_t t : crit)
            for (std::size_t s : crit) {
                if (fx.dim(t) != fx.dim(s) + 1) continue;
                auto n = count_gradient_paths(m, t, s);
                REQUIRE(n == brute_paths(m, t, s, fx.size()));
                if (n <= 50) CHECK(enumerate_gradient_paths(m, t, s).size() == n);
            }
    }
}

TEST_CASE("cancelling a pair with two paths is refused") {
    // Triangle boundary: {1,2} flows to {0} through {0,1} and through {0,2}.
    std::vector<Face> facets{{0, 1}, {0, 2}, {1, 2}};
    auto index = std::make_shared<const FaceIndex>(facets);
    AcyclicMatching m(index);
    auto at = [&](Face f) { return index->at(f); };
    m.pair(at({1}), at({0, 1}));
    m.pair(at({2}), at({0, 2}));
    REQUIRE(kahn_acyclic(m));
    CHECK(count_gradient_paths(m, at({1, 2}), at({0})) == 2);
    CHECK(brute_paths(m, at({1, 2}), at({0}), index->size()) == 2);
    CHECK_THROWS_WITH_AS(cancel_pair(m, at({1, 2}), at({0})), doctest::Contains("NotUnique"), Error);
    CHECK_THROWS_WITH_AS(enumerate_gradient_paths(m, at({1, 2}), at({0}), 1), doctest::Contains("BoundExceeded"), Error);
    CHECK(enumerate_gradient_paths(m, at({1, 2}), at({0})).size() == 2);
}

TEST_CASE("agreement prefix and rank preservation") {
    Case b3 = file_case("b3");
    auto m = build_matching(b3.order);
    const auto& fx = m.faces();
    const Poset& p = *b3.poset;
    auto f1 = fx.at(ids(p, {"{1}", "{1,2}"}));
    auto f2 = fx.at(ids(p, {"{1}", "{1,3}"}));
    auto f3 = fx.at(ids(p, {"{2}", "{1,2}"}));
    CHECK(agreement_prefix(fx, f1, f2) == 1);
    CHECK(agreement_prefix(fx, f1, f3) == 0);
    CHECK(agreement_prefix(fx, f1, f1) == 2);

    Circle k;
    auto rp = check_rank_preservation(k.m, k.at({"a", "d"}), k.at({"b"}), 0);
    CHECK(rp.holds);
    auto rp1 = check_rank_preservation(k.m, k.at({"a", "d"}), k.at({"b"}), 1);
    CHECK_FALSE(rp1.holds);
    CHECK(rp1.offending_rank == 1);
    REQUIRE(rp1.witness.has_value());
}
