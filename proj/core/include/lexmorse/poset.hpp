#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexmorse {

// Elements are indices into the id table. Ids are sorted, so index order is
// id order and every canonical ordering below follows the id strings.
using Element = int;
using Bitset = boost::dynamic_bitset<>;

struct CoverPair {
    std::string lower;
    std::string upper;
};

// A finite poset with unique bottom and top, stored as its Hasse diagram plus
// the strict order relation as bitsets.
class Poset {
public:
    std::size_t size() const { return ids_.size(); }
    const std::string& id(Element e) const { return ids_.at(static_cast<std::size_t>(e)); }
    const std::vector<std::string>& ids() const { return ids_; }
    std::optional<Element> find(std::string_view id) const;
    Element element(std::string_view id) const;  // throws UnknownElement

    Element bottom() const { return bottom_; }
    Element top() const { return top_; }

    std::span<const Element> upper_covers(Element e) const { return up_[static_cast<std::size_t>(e)]; }
    std::span<const Element> lower_covers(Element e) const { return down_[static_cast<std::size_t>(e)]; }
    bool covers(Element lower, Element upper) const;
    std::size_t cover_count() const;

    bool less(Element a, Element b) const { return above_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
    bool leq(Element a, Element b) const { return a == b || less(a, b); }
    bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
    const Bitset& strictly_above(Element e) const { return above_[static_cast<std::size_t>(e)]; }
    const Bitset& strictly_below(Element e) const { return below_[static_cast<std::size_t>(e)]; }

    // Linear extension, bottom first.
    std::span<const Element> topological_order() const { return topo_; }

    // All cover pairs as ids, sorted.
    std::vector<CoverPair> cover_list() const;

private:
    friend Poset build_poset(std::span<const CoverPair>, std::span<const std::string>);

    std::vector<std::string> ids_;
    std::vector<std::vector<Element>> up_;
    std::vector<std::vector<Element>> down_;
    std::vector<Bitset> above_;
    std::vector<Bitset> below_;
    std::vector<Element> topo_;
    Element bottom_ = 0;
    Element top_ = 0;
};

// Validates and builds. `extra_elements` may name elements that appear in no
// cover; any such element is isolated and rejected.
Poset build_poset(std::span<const CoverPair> covers, std::span<const std::string> extra_elements = {});

// Saturated chain bottom = u_0 < u_1 < ... < u_r = top.
struct Facet {
    std::vector<Element> elements;

    int proper_length() const { return static_cast<int>(elements.size()) - 2; }
    // Interior element at 1-based rank within this chain.
    Element at_rank(int rank) const { return elements.at(static_cast<std::size_t>(rank)); }
    std::span<const Element> interior() const {
        return std::span<const Element>(elements).subspan(1, elements.size() - 2);
    }
    friend bool operator==(const Facet&, const Facet&) = default;
};

// Every saturated chain, in DFS order over upper covers sorted by id.
// Throws BoundExceeded when more than `max_facets` exist (0 means no cap).
std::vector<Facet> enumerate_facets(const Poset& p, std::size_t max_facets = 0);

// Closed interval [u,v] as a bounded poset.
Poset open_interval(const Poset& p, std::string_view u, std::string_view v);

// A face of the order complex: interior elements forming a chain, stored in
// increasing poset order. The empty face is legal.
using Face = std::vector<Element>;

bool is_chain(const Poset& p, std::span<const Element> members);
int face_dimension(const Face& f);
std::string format_face(const Poset& p, const Face& f);

}  // namespace lexmorse
