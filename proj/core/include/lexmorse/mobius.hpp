#pragma once

#include "lexmorse/lex_morse.hpp"

#include <span>
#include <string_view>

namespace lexmorse {

// mu(u,v) from mu(u,u) = 1 and mu(u,w) = -sum_{u <= x < w} mu(u,x).
// Throws NotComparable unless u <= v.
long long mobius_recursive(const Poset& p, Element u, Element v);
long long mobius_recursive(const Poset& p, std::string_view u, std::string_view v);
inline long long mobius_recursive(const Poset& p) { return mobius_recursive(p, p.bottom(), p.top()); }

// Sum over critical cells of (-1)^(|J| + 1), J taken from the owning facet.
long long mobius_from_morse(const AcyclicMatching& m, std::span<const IntervalSystem> systems);

}  // namespace lexmorse
