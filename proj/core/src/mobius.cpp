#include "lexmorse/mobius.hpp"

#include "lexmorse/error.hpp"

#include <vector>

namespace lexmorse {

long long mobius_recursive(const Poset& p, Element u, Element v) {
    if (!p.leq(u, v)) throw Error(ErrorCode::NotComparable, p.id(u) + " is not below " + p.id(v));
    if (u == v) return 1;

    // Values on [u, v], filled in a linear extension so every x < w is ready before w.
    std::vector<long long> mu(p.size(), 0);
    Bitset window = p.strictly_above(u) & p.strictly_below(v);
    window.set(static_cast<std::size_t>(u));
    window.set(static_cast<std::size_t>(v));
    for (Element w : p.topological_order()) {
        auto wi = static_cast<std::size_t>(w);
        if (!window.test(wi)) continue;
        if (w == u) {
            mu[wi] = 1;
            continue;
        }
        Bitset below = p.strictly_below(w) & window;
        long long sum = 0;
        for (auto x = below.find_first(); x != Bitset::npos; x = below.find_next(x))
            if (__builtin_add_overflow(sum, mu[x], &sum)) throw Error(ErrorCode::BoundExceeded, "Mobius value overflow");
        mu[wi] = -sum;
    }
    return mu[static_cast<std::size_t>(v)];
}

long long mobius_recursive(const Poset& p, std::string_view u, std::string_view v) {
    return mobius_recursive(p, p.element(u), p.element(v));
}

long long mobius_from_morse(const AcyclicMatching& m, std::span<const IntervalSystem> systems) {
    long long total = 0;
    for (std::size_t c : m.critical()) {
        const auto& sys = systems[m.faces().fibre(c)];
        total += sys.J.size() % 2 == 1 ? 1 : -1;
    }
    return total;
}

}  // namespace lexmorse
