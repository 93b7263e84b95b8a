#pragma once

#include "lexmorse/poset.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace lexmorse {

// A finite simplicial complex that always contains the empty face. Vertices
// are integers; each face lists its vertices in one fixed total order that is
// inherited by subfaces (increasing order for vertex sets, poset order for
// chains). Faces of each dimension are kept sorted.
class SimplicialComplex {
public:
    // Closes `generators` under taking subsets. Throws BoundExceeded when the
    // result would exceed `max_faces` faces (0 means no cap).
    static SimplicialComplex from_facets(std::span<const Face> generators, std::size_t max_faces = 0);

    // -1 for the complex {empty}.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 2; }
    const std::vector<Face>& faces(int dim) const;
    std::size_t count(int dim) const { return faces(dim).size(); }
    std::size_t face_count() const;
    std::optional<std::size_t> index_of(const Face& f) const;
    bool contains(const Face& f) const { return index_of(f).has_value(); }

private:
    friend SimplicialComplex order_complex(const Poset&, std::size_t);
    void insert_sorted(std::vector<Face> faces);

    std::vector<std::vector<Face>> by_dim_;  // slot d+1 holds dimension d
};

// All chains of the open interval (bottom, top), found by walking the strict
// order relation; independent of facet enumeration.
SimplicialComplex order_complex(const Poset& p, std::size_t max_faces = 0);

// Reduced Betti numbers, slot d+1 holding dimension d.
struct BettiVector {
    std::vector<long long> values;

    long long at(int dim) const {
        auto i = static_cast<std::size_t>(dim + 1);
        return i < values.size() ? values[i] : 0;
    }
    int top_dimension() const { return static_cast<int>(values.size()) - 2; }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

enum class Coefficients { Rational, Mod2 };

BettiVector reduced_betti(const SimplicialComplex& c, Coefficients k = Coefficients::Rational);

// Reduced: alternating count over nonempty faces, minus one.
long long euler_characteristic(const SimplicialComplex& c);

// Ranks of the augmented boundary maps d_0 .. d_dim, where d_0 maps vertices to the empty face.
std::vector<std::size_t> boundary_ranks(const SimplicialComplex& c, Coefficients k = Coefficients::Rational);

// Checks d_{d-1} o d_d = 0 on every column, with integer coefficients.
bool boundary_squares_to_zero(const SimplicialComplex& c);

}  // namespace lexmorse
