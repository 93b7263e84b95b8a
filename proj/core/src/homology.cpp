#include "lexmorse/homology.hpp"

#include "lexmorse/error.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>

namespace lexmorse {

namespace {

const std::vector<Face> kNoFaces;

void check_bound(std::size_t count, std::size_t max_faces) {
    if (max_faces != 0 && count > max_faces)
        throw Error(ErrorCode::BoundExceeded, "complex has more than " + std::to_string(max_faces) + " faces");
}

}  // namespace

void SimplicialComplex::insert_sorted(std::vector<Face> faces) {
    for (auto& f : faces) {
        auto slot = f.size();
        if (by_dim_.size() <= slot) by_dim_.resize(slot + 1);
        by_dim_[slot].push_back(std::move(f));
    }
    for (auto& v : by_dim_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    if (by_dim_.empty() || by_dim_[0].empty()) {
        by_dim_.resize(std::max<std::size_t>(by_dim_.size(), 1));
        by_dim_[0] = {Face{}};
    }
}

SimplicialComplex SimplicialComplex::from_facets(std::span<const Face> generators, std::size_t max_faces) {
    std::set<Face> all{Face{}};
    for (const auto& g : generators) {
        if (g.size() >= 63) throw Error(ErrorCode::BoundExceeded, "generator too large");
        const std::uint64_t n = std::uint64_t{1} << g.size();
        for (std::uint64_t mask = 1; mask < n; ++mask) {
            Face f;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (mask >> i & 1) f.push_back(g[i]);
            all.insert(std::move(f));
            check_bound(all.size(), max_faces);
        }
    }
    SimplicialComplex c;
    c.insert_sorted(std::vector<Face>(all.begin(), all.end()));
    return c;
}

const std::vector<Face>& SimplicialComplex::faces(int dim) const {
    auto slot = static_cast<std::size_t>(dim + 1);
    if (dim < -1 || slot >= by_dim_.size()) return kNoFaces;
    return by_dim_[slot];
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Face& f) const {
    const auto& v = faces(face_dimension(f));
    auto it = std::lower_bound(v.begin(), v.end(), f);
    if (it == v.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
}

SimplicialComplex order_complex(const Poset& p, std::size_t max_faces) {
    std::vector<Element> interior;
    for (Element e : p.topological_order())
        if (e != p.bottom() && e != p.top()) interior.push_back(e);

    std::vector<Face> out{Face{}};
    Face chain;
    // Extend chains upward through the strict order relation.
    auto extend = [&](auto&& self, Element last) -> void {
        const auto& above = p.strictly_above(last);
        for (auto v = above.find_first(); v != Bitset::npos; v = above.find_next(v)) {
            auto e = static_cast<Element>(v);
            if (e == p.top()) continue;
            chain.push_back(e);
            out.push_back(chain);
            check_bound(out.size(), max_faces);
            self(self, e);
            chain.pop_back();
        }
    };
    for (Element e : interior) {
        chain.assign(1, e);
        out.push_back(chain);
        check_bound(out.size(), max_faces);
        extend(extend, e);
    }
    SimplicialComplex c;
    c.insert_sorted(std::move(out));
    return c;
}

long long euler_characteristic(const SimplicialComplex& c) {
    long long chi = 0;
    for (int d = -1; d <= c.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(c.count(d));
    return chi;
}

namespace {

// Column d of the boundary map: rows index faces of dimension d-1.
template <class Visit>
void for_each_boundary_entry(const SimplicialComplex& c, const Face& f, Visit visit) {
    Face sub;
    for (std::size_t i = 0; i < f.size(); ++i) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        auto row = c.index_of(sub);
        if (!row) throw Error(ErrorCode::InvalidArgument, "complex not closed under subsets");
        visit(*row, i % 2 == 0 ? 1 : -1);
    }
}

std::size_t rank_rational(const SimplicialComplex& c, int dim) {
    using Entry = std::pair<std::size_t, mpq_class>;
    using Column = std::vector<Entry>;
    std::vector<Column> reduced;
    std::vector<std::ptrdiff_t> pivot_of(c.count(dim - 1), -1);
    std::size_t rank = 0;
    Column col, merged;
    for (const auto& f : c.faces(dim)) {
        col.clear();
        for_each_boundary_entry(c, f, [&](std::size_t row, int sign) { col.emplace_back(row, mpq_class(sign)); });
        std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
        while (!col.empty()) {
            auto low = col.back().first;
            if (pivot_of[low] < 0) {
                pivot_of[low] = static_cast<std::ptrdiff_t>(reduced.size());
                reduced.push_back(col);
                ++rank;
                break;
            }
            const Column& piv = reduced[static_cast<std::size_t>(pivot_of[low])];
            mpq_class factor = col.back().second / piv.back().second;
            merged.clear();
            std::size_t a = 0, b = 0;
            while (a < col.size() || b < piv.size()) {
                if (b == piv.size() || (a < col.size() && col[a].first < piv[b].first)) {
                    merged.push_back(col[a++]);
                } else if (a == col.size() || piv[b].first < col[a].first) {
                    merged.emplace_back(piv[b].first, -factor * piv[b].second);
                    ++b;
                } else {
                    mpq_class v = col[a].second - factor * piv[b].second;
                    if (v != 0) merged.emplace_back(col[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            col.swap(merged);
        }
    }
    return rank;
}

std::size_t rank_mod2(const SimplicialComplex& c, int dim) {
    using Column = std::vector<std::size_t>;
    std::vector<Column> reduced;
    std::vector<std::ptrdiff_t> pivot_of(c.count(dim - 1), -1);
    std::size_t rank = 0;
    Column col, merged;
    for (const auto& f : c.faces(dim)) {
        col.clear();
        for_each_boundary_entry(c, f, [&](std::size_t row, int) { col.push_back(row); });
        std::sort(col.begin(), col.end());
        while (!col.empty()) {
            auto low = col.back();
            if (pivot_of[low] < 0) {
                pivot_of[low] = static_cast<std::ptrdiff_t>(reduced.size());
                reduced.push_back(col);
                ++rank;
                break;
            }
            const Column& piv = reduced[static_cast<std::size_t>(pivot_of[low])];
            merged.clear();
            std::set_symmetric_difference(col.begin(), col.end(), piv.begin(), piv.end(), std::back_inserter(merged));
            col.swap(merged);
        }
    }
    return rank;
}

}  // namespace

std::vector<std::size_t> boundary_ranks(const SimplicialComplex& c, Coefficients k) {
    std::vector<std::size_t> ranks;
    for (int d = 0; d <= c.dimension(); ++d) ranks.push_back(k == Coefficients::Rational ? rank_rational(c, d) : rank_mod2(c, d));
    return ranks;
}

BettiVector reduced_betti(const SimplicialComplex& c, Coefficients k) {
    auto ranks = boundary_ranks(c, k);
    auto rank_of = [&](int d) -> long long {
        // d_d for d in 0..dim; zero outside.
        if (d < 0 || d > c.dimension()) return 0;
        return static_cast<long long>(ranks[static_cast<std::size_t>(d)]);
    };
    BettiVector b;
    for (int d = -1; d <= c.dimension(); ++d)
        b.values.push_back(static_cast<long long>(c.count(d)) - rank_of(d) - rank_of(d + 1));
    return b;
}

bool boundary_squares_to_zero(const SimplicialComplex& c) {
    for (int d = 1; d <= c.dimension(); ++d) {
        for (const auto& f : c.faces(d)) {
            std::map<std::size_t, long long> acc;
            for_each_boundary_entry(c, f, [&](std::size_t row, int sign) {
                const Face& sub = c.faces(d - 1)[row];
                for_each_boundary_entry(c, sub, [&](std::size_t row2, int sign2) { acc[row2] += sign * sign2; });
            });
            for (const auto& [_, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

}  // namespace lexmorse
