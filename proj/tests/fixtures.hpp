#pragma once

#include <cassert>
#include <random>
#include <string>
#include <vector>

#include "catchain/catchain.hpp"

namespace fixtures {

using namespace catchain;

// x --f--> y
inline CategoryData walking_arrow_data() {
    CategoryData d;
    d.objects = {"x", "y"};
    d.morphisms = {{"id_x", "x", "x"}, {"id_y", "y", "y"}, {"f", "x", "y"}};
    d.identities = {{"x", "id_x"}, {"y", "id_y"}};
    // all composable pairs involve an identity; the unit laws force them
    return d;
}

inline FinCategory walking_arrow() { return validate_category(walking_arrow_data()); }

inline FinCategory terminal_category() {
    CategoryData d;
    d.objects = {"*"};
    d.morphisms = {{"id", "*", "*"}};
    d.identities = {{"*", "id"}};
    return validate_category(d);
}

inline FinCategory empty_category() { return validate_category(CategoryData{}); }

inline FinCategory discrete_category(std::size_t k) {
    CategoryData d;
    for (std::size_t i = 0; i < k; ++i) {
        const std::string o = "o" + std::to_string(i);
        d.objects.push_back(o);
        d.morphisms.push_back({"id_" + o, o, o});
        d.identities[o] = "id_" + o;
    }
    return validate_category(d);
}

// One object, morphisms g0..g{n-1}, g_a o g_b = g_{(a+b) mod n}; g0 is the identity.
inline CategoryData cyclic_monoid_data(std::size_t n) {
    CategoryData d;
    d.objects = {"*"};
    for (std::size_t a = 0; a < n; ++a)
        d.morphisms.push_back({"g" + std::to_string(a), "*", "*"});
    d.identities = {{"*", "g0"}};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == 0 || b == 0) continue;
            d.composites.push_back({"g" + std::to_string(a), "g" + std::to_string(b),
                                    "g" + std::to_string((a + b) % n)});
        }
    return d;
}

inline FinCategory cyclic_monoid(std::size_t n) { return validate_category(cyclic_monoid_data(n)); }

// One object, morphisms {e, g} with g o g = g; e is the identity.
inline CategoryData idempotent_monoid_data() {
    CategoryData d;
    d.objects = {"*"};
    d.morphisms = {{"e", "*", "*"}, {"g", "*", "*"}};
    d.identities = {{"*", "e"}};
    d.composites = {{"g", "g", "g"}};
    return d;
}

// Commutative square: 0 -a-> 1 -b-> 3, 0 -c-> 2 -d-> 3, b o a = d o c = m.
inline CategoryData square_data() {
    CategoryData d;
    d.objects = {"0", "1", "2", "3"};
    d.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"}, {"id3", "3", "3"},
                   {"a", "0", "1"},   {"b", "1", "3"},   {"c", "0", "2"},   {"d", "2", "3"},
                   {"m", "0", "3"}};
    d.identities = {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}, {"3", "id3"}};
    d.composites = {{"b", "a", "m"}, {"d", "c", "m"}};
    return d;
}

inline FinCategory square_category() { return validate_category(square_data()); }

// Same shape but the two paths differ: b o a = m1, d o c = m2.
inline FinCategory noncommutative_square() {
    CategoryData d;
    d.objects = {"0", "1", "2", "3"};
    d.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"id2", "2", "2"}, {"id3", "3", "3"},
                   {"a", "0", "1"},   {"b", "1", "3"},   {"c", "0", "2"},   {"d", "2", "3"},
                   {"m1", "0", "3"},  {"m2", "0", "3"}};
    d.identities = {{"0", "id0"}, {"1", "id1"}, {"2", "id2"}, {"3", "id3"}};
    d.composites = {{"b", "a", "m1"}, {"d", "c", "m2"}};
    return validate_category(d);
}

// F: walking arrow -> square along the top path, G along the bottom path,
// alpha with the left/right edges as components.
inline Functor arrow_to_square_top(const FinCategory& arrow, const FinCategory& square) {
    FunctorData f;
    f.obj_map = {{"x", "0"}, {"y", "1"}};
    f.mor_map = {{"id_x", "id0"}, {"id_y", "id1"}, {"f", "a"}};
    return validate_functor(arrow, square, f);
}

inline Functor arrow_to_square_bottom(const FinCategory& arrow, const FinCategory& square) {
    FunctorData g;
    g.obj_map = {{"x", "2"}, {"y", "3"}};
    g.mor_map = {{"id_x", "id2"}, {"id_y", "id3"}, {"f", "d"}};
    return validate_functor(arrow, square, g);
}

inline NatTransf arrow_to_square_transf(const Functor& top, const Functor& bottom) {
    NatTransfData a;
    a.components = {{"x", "c"}, {"y", "b"}};
    return validate_nat_transf(top, bottom, a);
}

// Thin category of a preorder; leq must be reflexive and transitive.
inline CategoryData preorder_data(const std::vector<std::vector<bool>>& leq) {
    const std::size_t n = leq.size();
    CategoryData d;
    const auto obj = [](std::size_t i) { return "p" + std::to_string(i); };
    const auto mor = [](std::size_t i, std::size_t j) {
        return "h" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (std::size_t i = 0; i < n; ++i) {
        d.objects.push_back(obj(i));
        d.identities[obj(i)] = mor(i, i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq[i][j]) d.morphisms.push_back({mor(i, j), obj(i), obj(j)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (leq[i][j] && leq[j][k])
                    d.composites.push_back({mor(j, k), mor(i, j), mor(i, k)});
    return d;
}

// Random preorder: reflexive-transitive closure of a random relation.
inline std::vector<std::vector<bool>> random_preorder(std::mt19937_64& rng, std::size_t n,
                                                      double density = 0.35) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && coin(rng) < density) leq[i][j] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j]) leq[i][j] = true;
    return leq;
}

inline FinCategory random_preorder_category(std::mt19937_64& rng, std::size_t n) {
    return validate_category(preorder_data(random_preorder(rng, n)));
}

// Monotone map between preorders as a functor between the thin categories.
inline Functor monotone_functor(const FinCategory& src, const FinCategory& tgt,
                                const std::vector<std::vector<bool>>& src_leq,
                                const std::vector<std::size_t>& image) {
    FunctorData f;
    const std::size_t n = src_leq.size();
    const auto pob = [](std::size_t i) { return "p" + std::to_string(i); };
    const auto pmor = [](std::size_t i, std::size_t j) {
        return "h" + std::to_string(i) + "_" + std::to_string(j);
    };
    for (std::size_t i = 0; i < n; ++i) f.obj_map[pob(i)] = pob(image[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (src_leq[i][j]) f.mor_map[pmor(i, j)] = pmor(image[i], image[j]);
    return validate_functor(src, tgt, f);
}

// Random natural transformations between thin categories: two monotone maps
// F <= G pointwise, with the unique components between their images.
inline std::vector<NatTransf> random_thin_transformations(std::mt19937_64& rng, std::size_t count,
                                                          std::size_t max_objects = 5) {
    std::vector<NatTransf> out;
    while (out.size() < count) {
        std::uniform_int_distribution<std::size_t> size(2, max_objects);
        const std::size_t ns = size(rng), nt = size(rng);
        const auto src_leq = random_preorder(rng, ns);
        const auto tgt_leq = random_preorder(rng, nt);

        std::uniform_int_distribution<std::size_t> pick(0, nt - 1);
        std::vector<std::size_t> fimg(ns), gimg(ns);
        for (std::size_t i = 0; i < ns; ++i) {
            fimg[i] = pick(rng);
            gimg[i] = pick(rng);
        }
        const auto monotone = [&](const std::vector<std::size_t>& img) {
            for (std::size_t i = 0; i < ns; ++i)
                for (std::size_t j = 0; j < ns; ++j)
                    if (src_leq[i][j] && !tgt_leq[img[i]][img[j]]) return false;
            return true;
        };
        bool pointwise = true;
        for (std::size_t i = 0; i < ns; ++i) pointwise = pointwise && tgt_leq[fimg[i]][gimg[i]];
        if (!monotone(fimg) || !monotone(gimg) || !pointwise) continue;

        const FinCategory src = validate_category(preorder_data(src_leq));
        const FinCategory tgt = validate_category(preorder_data(tgt_leq));
        const Functor f = monotone_functor(src, tgt, src_leq, fimg);
        const Functor g = monotone_functor(src, tgt, src_leq, gimg);
        NatTransfData a;
        for (std::size_t i = 0; i < ns; ++i)
            a.components["p" + std::to_string(i)] =
                "h" + std::to_string(fimg[i]) + "_" + std::to_string(gimg[i]);
        out.push_back(validate_nat_transf(f, g, a));
    }
    return out;
}

// Arrows drawn in the plane: a morphism (a,b,c,d) starts at (a,b) and spans
// (c,d), so s(a,b,c,d) = (a,b), t(a,b,c,d) = (a+c,b+d), i(a,b) = (a,b,0,0).
inline ReflexiveVectGraph plane_arrows_graph() {
    ReflexiveVectGraph g;
    g.dim0 = 2;
    g.dim1 = 4;
    g.s = Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}});
    g.t = Matrix::from_rows({{1, 0, 1, 0}, {0, 1, 0, 1}});
    g.i = Matrix::from_rows({{1, 0}, {0, 1}, {0, 0}, {0, 0}});
    return validate_graph(g);
}

inline ReflexiveVectGraph trivial_graph() {
    ReflexiveVectGraph g;
    g.dim0 = 1;
    g.dim1 = 1;
    g.s = g.t = g.i = Matrix::identity(1);
    return validate_graph(g);
}

inline ReflexiveVectGraph zero_graph() { return ReflexiveVectGraph{0, 0, Matrix(0, 0), Matrix(0, 0), Matrix(0, 0)}; }

// i is the standard inclusion and s, t are [identity | random block], which
// makes s i = t i = id hold by construction.
inline ReflexiveVectGraph random_reflexive_graph(std::mt19937_64& rng, std::size_t max_dim0 = 3,
                                                 std::size_t max_dim1 = 6) {
    std::uniform_int_distribution<std::size_t> d0(0, max_dim0);
    const std::size_t dim0 = d0(rng);
    std::uniform_int_distribution<std::size_t> d1(dim0, max_dim1);
    const std::size_t dim1 = d1(rng);
    std::uniform_int_distribution<long> num(-2, 2);
    std::uniform_int_distribution<long> den(1, 2);

    ReflexiveVectGraph g;
    g.dim0 = dim0;
    g.dim1 = dim1;
    g.s = Matrix(dim0, dim1);
    g.t = Matrix(dim0, dim1);
    g.i = Matrix(dim1, dim0);
    for (std::size_t k = 0; k < dim0; ++k) {
        g.s(k, k) = Rational(1);
        g.t(k, k) = Rational(1);
        g.i(k, k) = Rational(1);
    }
    for (std::size_t r = 0; r < dim0; ++r)
        for (std::size_t c = dim0; c < dim1; ++c) {
            g.s(r, c) = Rational(num(rng), den(rng));
            g.t(r, c) = Rational(num(rng), den(rng));
        }
    return validate_graph(g);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                            long lo = -3, long hi = 3) {
    std::uniform_int_distribution<long> entry(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(entry(rng));
    return m;
}

inline MagmaPair z3_additive() {
    MagmaPair m;
    m.elements = {"0", "1", "2"};
    m.op1 = m.op2 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    m.unit1 = m.unit2 = 0;
    return m;
}

inline MagmaPair xor_pair() {
    MagmaPair m;
    m.elements = {"0", "1"};
    m.op1 = m.op2 = {{0, 1}, {1, 0}};
    m.unit1 = m.unit2 = 0;
    return m;
}

// Unital but not interchange-satisfying: every non-unit element absorbs on
// the left (a.x = a, b.x = b for x != e).
inline MagmaPair left_absorbing_pair() {
    MagmaPair m;
    m.elements = {"e", "a", "b"};
    m.op1 = m.op2 = {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
    m.unit1 = m.unit2 = 0;
    return m;
}

// Removes a simplex at the top dimension. The caller guarantees it is not in
// the image of any degeneracy.
inline SimplicialSetTrunc remove_top_simplex(SimplicialSetTrunc s, std::size_t index) {
    const std::size_t dim = s.max_dim;
    assert(index < s.count(dim));
    for (std::size_t n = 0; n + 1 <= s.max_dim; ++n)
        for (std::size_t i = 0; i < s.degeneracies[n].size(); ++i)
            for (std::size_t k = 0; k < s.degeneracies[n][i].size(); ++k) {
                assert(n + 1 != dim || s.degeneracies[n][i][k] != index);
                if (n + 1 == dim && s.degeneracies[n][i][k] > index) --s.degeneracies[n][i][k];
            }
    s.simplices[dim].erase(s.simplices[dim].begin() + static_cast<std::ptrdiff_t>(index));
    for (auto& face_map : s.faces[dim])
        face_map.erase(face_map.begin() + static_cast<std::ptrdiff_t>(index));
    return s;
}

// Nerve of B(Z/2) truncated at 3 with the unique nondegenerate 3-simplex
// (g,g,g) deleted: its boundary is compatible but no longer filled.
inline SimplicialSetTrunc mutilated_bz2_nerve() {
    const FinCategory c = cyclic_monoid(2);
    SimplicialSetTrunc s = nerve(c, 3);
    const auto idx = simplex_index(s);
    return remove_top_simplex(std::move(s), idx[3].at(Simplex{"g1", "g1", "g1"}));
}

}  // namespace fixtures
