#include "lexmorse/poset.hpp"

#include "lexmorse/error.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace lexmorse {

std::optional<Element> Poset::find(std::string_view id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<Element>(it - ids_.begin());
}

Element Poset::element(std::string_view id) const {
    if (auto e = find(id)) return *e;
    throw Error(ErrorCode::UnknownElement, "no element '" + std::string(id) + "'");
}

bool Poset::covers(Element lower, Element upper) const {
    const auto& up = up_[static_cast<std::size_t>(lower)];
    return std::binary_search(up.begin(), up.end(), upper);
}

std::size_t Poset::cover_count() const {
    std::size_t n = 0;
    for (const auto& u : up_) n += u.size();
    return n;
}

std::vector<CoverPair> Poset::cover_list() const {
    std::vector<CoverPair> out;
    out.reserve(cover_count());
    for (std::size_t u = 0; u < size(); ++u)
        for (Element v : up_[u]) out.push_back({ids_[u], id(v)});
    return out;
}

Poset build_poset(std::span<const CoverPair> covers, std::span<const std::string> extra_elements) {
    if (covers.empty()) throw Error(ErrorCode::InvalidArgument, "cover list is empty");

    Poset p;
    for (const auto& c : covers) {
        p.ids_.push_back(c.lower);
        p.ids_.push_back(c.upper);
    }
    for (const auto& e : extra_elements) p.ids_.push_back(e);
    std::sort(p.ids_.begin(), p.ids_.end());
    p.ids_.erase(std::unique(p.ids_.begin(), p.ids_.end()), p.ids_.end());

    const std::size_t n = p.ids_.size();
    p.up_.assign(n, {});
    p.down_.assign(n, {});
    for (const auto& c : covers) {
        Element u = p.element(c.lower), v = p.element(c.upper);
        if (u == v) throw Error(ErrorCode::CycleDetected, "self-cover on '" + c.lower + "'");
        p.up_[static_cast<std::size_t>(u)].push_back(v);
        p.down_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (auto* adj : {&p.up_[i], &p.down_[i]}) {
            std::sort(adj->begin(), adj->end());
            adj->erase(std::unique(adj->begin(), adj->end()), adj->end());
        }
        if (p.up_[i].empty() && p.down_[i].empty())
            throw Error(ErrorCode::IsolatedElement, "'" + p.ids_[i] + "' is in no cover");
    }

    std::vector<std::size_t> indeg(n);
    std::vector<Element> sources, sinks;
    for (std::size_t i = 0; i < n; ++i) {
        indeg[i] = p.down_[i].size();
        if (p.down_[i].empty()) sources.push_back(static_cast<Element>(i));
        if (p.up_[i].empty()) sinks.push_back(static_cast<Element>(i));
    }

    // Kahn's algorithm; leftovers lie on or above a cycle.
    std::priority_queue<Element, std::vector<Element>, std::greater<>> ready(sources.begin(), sources.end());
    while (!ready.empty()) {
        Element u = ready.top();
        ready.pop();
        p.topo_.push_back(u);
        for (Element v : p.up_[static_cast<std::size_t>(u)])
            if (--indeg[static_cast<std::size_t>(v)] == 0) ready.push(v);
    }
    if (p.topo_.size() != n) {
        for (std::size_t i = 0; i < n; ++i)
            if (indeg[i] != 0) throw Error(ErrorCode::CycleDetected, "cycle through or below '" + p.ids_[i] + "'");
    }

    auto name_all = [&](const std::vector<Element>& es) {
        std::string s;
        for (Element e : es) s += (s.empty() ? "" : ", ") + p.ids_[static_cast<std::size_t>(e)];
        return s;
    };
    if (sources.size() != 1) throw Error(ErrorCode::MultipleMinima, "minimal elements: " + name_all(sources));
    if (sinks.size() != 1) throw Error(ErrorCode::MultipleMaxima, "maximal elements: " + name_all(sinks));
    p.bottom_ = sources.front();
    p.top_ = sinks.front();

    p.above_.assign(n, Bitset(n));
    for (auto it = p.topo_.rbegin(); it != p.topo_.rend(); ++it) {
        auto& a = p.above_[static_cast<std::size_t>(*it)];
        for (Element v : p.up_[static_cast<std::size_t>(*it)]) {
            a.set(static_cast<std::size_t>(v));
            a |= p.above_[static_cast<std::size_t>(v)];
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        const auto& up = p.up_[u];
        for (Element v : up)
            for (Element w : up)
                if (w != v && p.less(w, v))
                    throw Error(ErrorCode::NonReducedCover, "cover " + p.ids_[u] + " < " + p.id(v) +
                                                                " is implied through " + p.id(w));
    }
    p.below_.assign(n, Bitset(n));
    for (std::size_t u = 0; u < n; ++u)
        for (auto v = p.above_[u].find_first(); v != Bitset::npos; v = p.above_[u].find_next(v)) p.below_[v].set(u);
    return p;
}

std::vector<Facet> enumerate_facets(const Poset& p, std::size_t max_facets) {
    std::vector<Facet> out;
    std::vector<Element> chain{p.bottom()};
    // Explicit stack of next-cover cursors keeps deep chains off the call stack.
    std::vector<std::size_t> cursor{0};
    while (!chain.empty()) {
        Element u = chain.back();
        auto up = p.upper_covers(u);
        if (u == p.top()) {
            out.push_back(Facet{chain});
            if (max_facets != 0 && out.size() > max_facets)
                throw Error(ErrorCode::BoundExceeded, "more than " + std::to_string(max_facets) + " facets");
            chain.pop_back();
            cursor.pop_back();
            continue;
        }
        if (cursor.back() < up.size()) {
            chain.push_back(up[cursor.back()++]);
            cursor.push_back(0);
        } else {
            chain.pop_back();
            cursor.pop_back();
        }
    }
    return out;
}

Poset open_interval(const Poset& p, std::string_view u_id, std::string_view v_id) {
    Element u = p.element(u_id), v = p.element(v_id);
    if (!p.less(u, v))
        throw Error(ErrorCode::NotComparable, "'" + std::string(u_id) + "' is not below '" + std::string(v_id) + "'");
    Bitset inside = p.strictly_above(u) & p.strictly_below(v);
    if (inside.none())
        throw Error(ErrorCode::EmptyInterval, "(" + std::string(u_id) + ", " + std::string(v_id) + ") is empty");
    inside.set(static_cast<std::size_t>(u));
    inside.set(static_cast<std::size_t>(v));
    std::vector<CoverPair> covers;
    for (auto a = inside.find_first(); a != Bitset::npos; a = inside.find_next(a))
        for (Element b : p.upper_covers(static_cast<Element>(a)))
            if (inside.test(static_cast<std::size_t>(b))) covers.push_back({p.id(static_cast<Element>(a)), p.id(b)});
    return build_poset(covers);
}

bool is_chain(const Poset& p, std::span<const Element> members) {
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!p.comparable(members[i], members[j]) || members[i] == members[j]) return false;
    return true;
}

int face_dimension(const Face& f) { return static_cast<int>(f.size()) - 1; }

std::string format_face(const Poset& p, const Face& f) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? ", " : "") << p.id(f[i]);
    os << '}';
    return os.str();
}

}  // namespace lexmorse
