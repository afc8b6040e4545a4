#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catchain/chain.hpp"
#include "catchain/fincat.hpp"
#include "catchain/nerve.hpp"

namespace catchain {

// A category pushed through nerve, free vector space and alternating face
// map complex, with the normalized quotient alongside. Degree 0 of the
// complex is based on the objects, degree 1 on the morphisms.
struct ChResult {
    FinCategory category;
    std::size_t truncation = 0;
    SimplicialSetTrunc nerve_data;
    std::vector<std::vector<bool>> degenerate;
    std::vector<std::vector<std::size_t>> nondegenerate;  // normalized position -> alternating position
    ChainComplex complex;     // alternating
    ChainComplex normalized;
};

inline ChResult ch_category(const FinCategory& c, std::size_t truncation) {
    if (truncation < 2)
        throw DimensionError("ch_category: truncation must be at least 2");
    ChResult out;
    out.category = c;
    out.truncation = truncation;
    out.nerve_data = nerve(c, truncation);
    out.degenerate = degenerate_flags(out.nerve_data);
    out.nondegenerate.resize(truncation + 1);
    for (std::size_t n = 0; n <= truncation; ++n)
        for (std::size_t k = 0; k < out.degenerate[n].size(); ++k)
            if (!out.degenerate[n][k]) out.nondegenerate[n].push_back(k);
    out.complex = alternating_complex(free_simplicial_vector_space(out.nerve_data));
    out.normalized = normalize(out.complex, out.degenerate);
    return out;
}

// Chain map induced by a functor: the linearized N(F) in every degree.
inline ChainMap ch_functor(const Functor& f, const ChResult& src, const ChResult& tgt) {
    if (src.category != f.source() || tgt.category != f.target())
        throw DimensionError("ch_functor: ChResult categories do not match the functor");
    const SimplicialMap nf = nerve_of_functor(f, src.nerve_data, tgt.nerve_data);
    ChainMap out{src.complex, tgt.complex, {}};
    out.components.reserve(nf.components.size());
    for (std::size_t n = 0; n < nf.components.size(); ++n) {
        Matrix m(tgt.complex.dim(n), src.complex.dim(n));
        for (std::size_t k = 0; k < nf.components[n].size(); ++k)
            m(nf.components[n][k], k) = Rational(1);
        out.components.push_back(std::move(m));
    }
    return out;
}

inline ChainMap ch_functor(const Functor& f, std::size_t truncation) {
    return ch_functor(f, ch_category(f.source(), truncation), ch_category(f.target(), truncation));
}

// Projection of a chain map between alternating complexes onto the
// normalized quotients. Functor images of nondegenerate chains may be
// degenerate; the quotient kills them.
inline ChainMap normalized_chain_map(const ChainMap& m, const ChResult& src, const ChResult& tgt) {
    ChainMap out{src.normalized, tgt.normalized, {}};
    out.components.reserve(m.components.size());
    for (std::size_t n = 0; n < m.components.size(); ++n)
        out.components.push_back(select(m.components[n], tgt.nondegenerate[n], src.nondegenerate[n]));
    return out;
}

// Chain homotopy induced by a natural transformation via the prism
// decomposition: an n-chain x_0 -> ... -> x_n is sent to
// sum_{i=0}^n (-1)^i (F x_0 -> ... -> F x_i -> G x_i -> ... -> G x_n), the
// i-th prism crossing from F to G along the component at x_i. In degree 0
// this is the component itself and in degree 1 it is the difference B - A
// of the two triangles of the naturality square. The result satisfies
// delta h + h delta = ch(G) - ch(F); since a homotopy witnesses
// from - to = delta h + h delta, the returned value has from = ch(G) and
// to = ch(F).
inline ChainHomotopy ch_nat_transf(const NatTransf& a, const ChResult& src, const ChResult& tgt) {
    const Functor& f = a.from();
    const Functor& g = a.to();
    if (src.category != f.source() || tgt.category != f.target())
        throw DimensionError("ch_nat_transf: ChResult categories do not match the transformation");
    const FinCategory& c = f.source();
    const FinCategory& d = f.target();
    const std::size_t top = src.truncation;
    const auto tgt_index = simplex_index(tgt.nerve_data);

    ChainHomotopy out{ch_functor(g, src, tgt), ch_functor(f, src, tgt), {}};
    out.components.reserve(top);
    for (std::size_t n = 0; n < top; ++n) {
        Matrix h(tgt.complex.dim(n + 1), src.complex.dim(n));
        for (std::size_t k = 0; k < src.nerve_data.count(n); ++k) {
            const Simplex& desc = src.nerve_data.simplices[n][k];
            std::vector<std::size_t> chain;
            chain.reserve(n);
            if (n > 0)
                for (const auto& id : desc) chain.push_back(*c.morphism_index(id));
            std::vector<std::size_t> vertices;  // x_0 .. x_n
            if (n == 0) {
                vertices.push_back(*c.object_index(desc[0]));
            } else {
                vertices = detail::chain_vertices(c, chain);
            }
            for (std::size_t i = 0; i <= n; ++i) {
                Simplex prism;
                prism.reserve(n + 1);
                for (std::size_t j = 0; j < i; ++j)
                    prism.push_back(d.morphism_id(f.mor_image(chain[j])));
                prism.push_back(d.morphism_id(a.component(vertices[i])));
                for (std::size_t j = i; j < n; ++j)
                    prism.push_back(d.morphism_id(g.mor_image(chain[j])));
                const std::size_t row = tgt_index[n + 1].at(prism);
                h(row, k) += i % 2 == 0 ? Rational(1) : Rational(-1);
            }
        }
        out.components.push_back(std::move(h));
    }
    return out;
}

inline ChainHomotopy ch_nat_transf(const NatTransf& a, std::size_t truncation) {
    return ch_nat_transf(a, ch_category(a.from().source(), truncation),
                         ch_category(a.from().target(), truncation));
}

// The prism terms of a degenerate chain are degenerate, so the homotopy
// descends to the normalized quotients.
inline ChainHomotopy normalized_homotopy(const ChainHomotopy& h, const ChResult& src,
                                         const ChResult& tgt) {
    ChainHomotopy out{normalized_chain_map(h.from, src, tgt),
                      normalized_chain_map(h.to, src, tgt),
                      {}};
    out.components.reserve(h.components.size());
    for (std::size_t n = 0; n < h.components.size(); ++n)
        out.components.push_back(
            select(h.components[n], tgt.nondegenerate[n + 1], src.nondegenerate[n]));
    return out;
}

}  // namespace catchain
