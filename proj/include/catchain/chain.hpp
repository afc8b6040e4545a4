#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "catchain/linalg.hpp"
#include "catchain/nerve.hpp"

namespace catchain {

struct DegreeOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Finite-dimensional vector space with a labelled, ordered basis.
struct BasedVectorSpace {
    std::vector<std::string> basis;

    std::size_t dim() const { return basis.size(); }

    friend bool operator==(const BasedVectorSpace&, const BasedVectorSpace&) = default;
};

// A truncated simplicial set pushed through the free vector space functor:
// degree-n space has the n-simplices as basis, each face and degeneracy map
// becomes the 0/1 matrix of its graph.
struct SimplicialVectorSpace {
    std::vector<BasedVectorSpace> spaces;             // 0..N
    std::vector<std::vector<Matrix>> face_maps;       // [n][i], 1 <= n <= N
    std::vector<std::vector<Matrix>> degeneracy_maps; // [n][i], 0 <= n < N
};

inline SimplicialVectorSpace free_simplicial_vector_space(const SimplicialSetTrunc& s) {
    SimplicialVectorSpace out;
    out.spaces.resize(s.max_dim + 1);
    out.face_maps.resize(s.max_dim + 1);
    out.degeneracy_maps.resize(s.max_dim + 1);
    for (std::size_t n = 0; n <= s.max_dim; ++n) {
        out.spaces[n].basis.reserve(s.count(n));
        for (const auto& simplex : s.simplices[n])
            out.spaces[n].basis.push_back(simplex_label(simplex));
    }
    for (std::size_t n = 1; n <= s.max_dim; ++n) {
        out.face_maps[n].reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            Matrix d(s.count(n - 1), s.count(n));
            for (std::size_t k = 0; k < s.count(n); ++k) d(s.face(n, i, k), k) = Rational(1);
            out.face_maps[n].push_back(std::move(d));
        }
    }
    for (std::size_t n = 0; n + 1 <= s.max_dim; ++n) {
        out.degeneracy_maps[n].reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            Matrix deg(s.count(n + 1), s.count(n));
            for (std::size_t k = 0; k < s.count(n); ++k) deg(s.degeneracy(n, i, k), k) = Rational(1);
            out.degeneracy_maps[n].push_back(std::move(deg));
        }
    }
    return out;
}

// Bounded chain complex of based Q-vector spaces. boundaries[n] is
// delta_n : spaces[n] -> spaces[n-1]; boundaries[0] is the 0-row map to the
// zero space, so rank/kernel formulas need no special casing at the bottom.
struct ChainComplex {
    std::vector<BasedVectorSpace> spaces;
    std::vector<Matrix> boundaries;

    std::size_t top_degree() const { return spaces.size() - 1; }
    std::size_t dim(std::size_t n) const { return spaces[n].dim(); }
    const Matrix& boundary(std::size_t n) const { return boundaries[n]; }

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;
};

inline void verify_boundary_squares_to_zero(const ChainComplex& c) {
    for (std::size_t n = 1; n < c.boundaries.size(); ++n)
        if (!(c.boundaries[n - 1] * c.boundaries[n]).is_zero())
            throw std::logic_error("chain complex: delta_" + std::to_string(n - 1) + " * delta_" +
                                   std::to_string(n) + " != 0");
}

// Alternating face map boundary: delta_n = sum_{i=0}^{n} (-1)^i d_i.
inline ChainComplex alternating_complex(const SimplicialVectorSpace& sv) {
    ChainComplex out;
    out.spaces = sv.spaces;
    out.boundaries.resize(sv.spaces.size());
    out.boundaries[0] = Matrix(0, sv.spaces[0].dim());
    for (std::size_t n = 1; n < sv.spaces.size(); ++n) {
        Matrix delta(sv.spaces[n - 1].dim(), sv.spaces[n].dim());
        for (std::size_t i = 0; i <= n; ++i)
            delta = i % 2 == 0 ? delta + sv.face_maps[n][i] : delta - sv.face_maps[n][i];
        out.boundaries[n] = std::move(delta);
    }
    verify_boundary_squares_to_zero(out);
    return out;
}

// Quotient by the span of the flagged (degenerate) basis vectors. The
// degenerate chains form a subcomplex, so the boundary descends; the result
// keeps the non-flagged basis vectors in their original order.
inline ChainComplex normalize(const ChainComplex& c,
                              const std::vector<std::vector<bool>>& degenerate) {
    if (degenerate.size() != c.spaces.size())
        throw DimensionError("normalize: flag vector count does not match degrees");
    std::vector<std::vector<std::size_t>> kept(c.spaces.size());
    for (std::size_t n = 0; n < c.spaces.size(); ++n) {
        if (degenerate[n].size() != c.dim(n))
            throw DimensionError("normalize: flag count does not match dimension");
        for (std::size_t k = 0; k < c.dim(n); ++k)
            if (!degenerate[n][k]) kept[n].push_back(k);
    }

    ChainComplex out;
    out.spaces.resize(c.spaces.size());
    out.boundaries.resize(c.spaces.size());
    for (std::size_t n = 0; n < c.spaces.size(); ++n)
        for (std::size_t k : kept[n]) out.spaces[n].basis.push_back(c.spaces[n].basis[k]);
    out.boundaries[0] = Matrix(0, out.spaces[0].dim());
    for (std::size_t n = 1; n < c.spaces.size(); ++n)
        out.boundaries[n] = select(c.boundaries[n], kept[n - 1], kept[n]);
    verify_boundary_squares_to_zero(out);
    return out;
}

// Betti numbers b_0 .. b_k: b_n = dim ker(delta_n) - rank(delta_{n+1}).
// The top truncated degree has no incoming boundary inside the truncation
// and is excluded, so up_to must stay below top_degree().
inline std::vector<std::size_t> betti(const ChainComplex& c, std::size_t up_to) {
    if (up_to >= c.top_degree())
        throw DegreeOutOfRange("betti: degree " + std::to_string(up_to) +
                               " not reliable at truncation " + std::to_string(c.top_degree()));
    std::vector<std::size_t> ranks(up_to + 2);
    for (std::size_t n = 0; n <= up_to + 1; ++n) ranks[n] = rank(c.boundaries[n]);
    std::vector<std::size_t> out(up_to + 1);
    for (std::size_t n = 0; n <= up_to; ++n) out[n] = c.dim(n) - ranks[n] - ranks[n + 1];
    return out;
}

struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<Matrix> components;  // per degree 0..N

    friend bool operator==(const ChainMap&, const ChainMap&) = default;
};

inline ChainMap identity_chain_map(const ChainComplex& c) {
    ChainMap m{c, c, {}};
    for (std::size_t n = 0; n <= c.top_degree(); ++n)
        m.components.push_back(Matrix::identity(c.dim(n)));
    return m;
}

inline ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (g.components.size() != f.components.size())
        throw DimensionError("compose(ChainMap): truncations differ");
    ChainMap out{f.source, g.target, {}};
    out.components.reserve(f.components.size());
    for (std::size_t n = 0; n < f.components.size(); ++n)
        out.components.push_back(g.components[n] * f.components[n]);
    return out;
}

struct ChainMapCheck {
    bool ok = true;
    std::size_t degree = 0;  // first failing degree when !ok
};

// delta^target_n f_n = f_{n-1} delta^source_n, exactly, for every degree.
inline ChainMapCheck verify_chain_map(const ChainMap& m) {
    for (std::size_t n = 1; n < m.components.size(); ++n)
        if (m.target.boundaries[n] * m.components[n] != m.components[n - 1] * m.source.boundaries[n])
            return {false, n};
    return {};
}

// Degree-raising components alpha_n : from.source[n] -> from.target[n+1],
// for 0 <= n <= N-1; the witness for from - to = delta alpha + alpha delta.
struct ChainHomotopy {
    ChainMap from;
    ChainMap to;
    std::vector<Matrix> components;
};

struct HomotopyCheck {
    bool ok = true;
    std::size_t degree = 0;
    Matrix defect;  // (from_n - to_n) - (delta_{n+1} alpha_n + alpha_{n-1} delta_n)
};

// (from_n - to_n) - (delta_{n+1} alpha_n + alpha_{n-1} delta_n), the failure
// of the homotopy identity at degree n.
inline Matrix homotopy_defect(const ChainHomotopy& h, std::size_t n) {
    Matrix rhs = h.from.target.boundaries[n + 1] * h.components[n];
    if (n > 0) rhs = rhs + h.components[n - 1] * h.from.source.boundaries[n];
    return (h.from.components[n] - h.to.components[n]) - rhs;
}

// Checks from_n - to_n = delta_{n+1} alpha_n + alpha_{n-1} delta_n (with
// alpha_{-1} = 0) for 0 <= n <= N-1. The top degree needs delta_{N+1},
// which lies outside the truncation, and is skipped.
inline HomotopyCheck verify_homotopy(const ChainHomotopy& h) {
    const std::size_t top = h.from.source.top_degree();
    if (h.components.size() != top)
        throw DimensionError("verify_homotopy: expected one component per degree below the top");
    for (std::size_t n = 0; n < top; ++n) {
        Matrix defect = homotopy_defect(h, n);
        if (!defect.is_zero()) return {false, n, std::move(defect)};
    }
    return {};
}

}  // namespace catchain
