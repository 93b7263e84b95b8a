#pragma once

// Fixtures and brute-force oracles shared by the unit tests and the
// acceptance binary. The oracles deliberately avoid the library's own
// algorithms: they work from definitions, on small inputs only.

#include "lexmorse/io.hpp"
#include "lexmorse/lex_morse.hpp"
#include "lexmorse/multiset.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <string>
#include <vector>

#ifndef LEXMORSE_FIXTURE_DIR
#error "LEXMORSE_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace lexmorse::testing {

inline std::string fixture_path(const std::string& name) { return std::string(LEXMORSE_FIXTURE_DIR) + "/" + name; }

// A labeled poset with its facet order. Multiset cases keep their poset alive.
struct Case {
    std::string name;
    std::shared_ptr<const Poset> poset;
    std::shared_ptr<const MultisetPoset> multiset;
    FacetOrder order;
};

inline Case file_case(const std::string& stem) {
    auto p = std::make_shared<const Poset>(read_poset_file(fixture_path(stem + ".poset")));
    auto labels = read_labels_file(fixture_path(stem + ".labels"));
    return {stem, p, nullptr, order_facets(*p, labels)};
}

inline Case multiset_case(const std::string& name, std::vector<int> mult) {
    auto mp = std::make_shared<const MultisetPoset>(std::move(mult));
    return {name, mp->shared_poset(), mp, multiset_facet_order(*mp)};
}

// The acceptance suite: 3-chain, diamond, B3, B4, Pi4, Pi4/S(2,1,1), P4, P5, P6.
inline std::vector<Case> suite_cases() {
    std::vector<Case> out;
    for (const char* stem : {"chain3", "diamond", "b3", "b4"}) out.push_back(file_case(stem));
    out.push_back(multiset_case("Pi4", {1, 1, 1, 1}));
    out.push_back(multiset_case("Pi4/S211", {2, 1, 1}));
    out.push_back(multiset_case("P4", {4}));
    out.push_back(multiset_case("P5", {5}));
    out.push_back(multiset_case("P6", {6}));
    return out;
}

// Hall's theorem: mu(0,1) = sum over chains 0 = x_0 < ... < x_k = 1 of (-1)^k,
// counted by explicit depth-first enumeration of chains.
inline long long hall_mobius(const Poset& p) {
    long long total = 0;
    std::vector<std::pair<Element, int>> stack{{p.bottom(), 0}};
    while (!stack.empty()) {
        auto [x, len] = stack.back();
        stack.pop_back();
        if (x == p.top()) {
            total += len % 2 == 0 ? 1 : -1;
            continue;
        }
        for (std::size_t y = 0; y < p.size(); ++y)
            if (p.less(x, static_cast<Element>(y))) stack.push_back({static_cast<Element>(y), len + 1});
    }
    return total;
}

inline bool contains_all(const Facet& outer, const std::vector<Element>& inner) {
    std::set<Element> s(outer.elements.begin(), outer.elements.end());
    return std::all_of(inner.begin(), inner.end(), [&](Element e) { return s.count(e) != 0; });
}

// Minimal skipped intervals from the definition: [a,b] is skipped when the
// facet with ranks a..b removed lies in an earlier facet.
inline std::vector<RankInterval> brute_skipped_intervals(const FacetOrder& fo, std::size_t j) {
    const Facet& f = fo.facets[j];
    const int len = f.proper_length();
    std::vector<RankInterval> skipped;
    for (int a = 1; a <= len; ++a)
        for (int b = a; b <= len; ++b) {
            std::vector<Element> rest;
            for (int r = 1; r <= len; ++r)
                if (r < a || r > b) rest.push_back(f.at_rank(r));
            for (std::size_t i = 0; i < j; ++i)
                if (contains_all(fo.facets[i], rest)) {
                    skipped.push_back({a, b});
                    break;
                }
        }
    std::vector<RankInterval> minimal;
    for (const auto& iv : skipped)
        if (std::none_of(skipped.begin(), skipped.end(), [&](const RankInterval& o) { return o != iv && iv.contains(o); }))
            minimal.push_back(iv);
    return minimal;
}

// Earliest facet whose chain contains every element of the face.
inline std::size_t brute_fibre(const FacetOrder& fo, const Face& face) {
    for (std::size_t i = 0; i < fo.size(); ++i)
        if (contains_all(fo.facets[i], face)) return i;
    return fo.size();
}

// Acyclicity by Kahn's algorithm on the modified Hasse diagram, built here
// from the face list by removing one vertex at a time.
inline bool kahn_acyclic(const AcyclicMatching& m) {
    const FaceIndex& fx = m.faces();
    const std::size_t n = fx.size();
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Face& f = fx.face(i);
        for (std::size_t r = 0; r < f.size(); ++r) {
            Face sub = f;
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(r));
            std::size_t s = fx.at(sub);
            bool matched = m.mate(s) && *m.mate(s) == i;
            auto [from, to] = matched ? std::pair{s, i} : std::pair{i, s};
            out[from].push_back(to);
            ++indeg[to];
        }
    }
    std::queue<std::size_t> q;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0) q.push(i);
    std::size_t seen = 0;
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        ++seen;
        for (auto w : out[v])
            if (--indeg[w] == 0) q.push(w);
    }
    return seen == n;
}

inline std::vector<Face> interiors(const FacetOrder& fo) {
    std::vector<Face> out;
    for (const auto& f : fo.facets) out.emplace_back(f.interior().begin(), f.interior().end());
    return out;
}

// Hook shapes (m,1,...,1) with n = m + (parts - 1) in [lo, hi], as multiplicities.
inline std::vector<std::vector<int>> hooks(int lo, int hi) {
    std::vector<std::vector<int>> out;
    for (int n = lo; n <= hi; ++n)
        for (int m = n; m >= 1; --m) {
            std::vector<int> lam{m};
            lam.insert(lam.end(), static_cast<std::size_t>(n - m), 1);
            out.push_back(lam);
        }
    return out;
}

}  // namespace lexmorse::testing
