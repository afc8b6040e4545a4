#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "catchain/linalg.hpp"

namespace catchain {

// Reflexive graph internal to Vect: spaces Q^dim0 (objects) and Q^dim1
// (morphisms) with source/target maps s, t and identity-assigning map i
// satisfying s i = t i = id.
struct ReflexiveVectGraph {
    std::size_t dim0 = 0;
    std::size_t dim1 = 0;
    Matrix s;  // dim0 x dim1
    Matrix t;  // dim0 x dim1
    Matrix i;  // dim1 x dim0

    friend bool operator==(const ReflexiveVectGraph&, const ReflexiveVectGraph&) = default;
};

inline std::vector<std::string> check_reflexive_graph(const ReflexiveVectGraph& g) {
    std::vector<std::string> bad;
    if (g.s.rows() != g.dim0 || g.s.cols() != g.dim1) bad.push_back("s is not dim0 x dim1");
    if (g.t.rows() != g.dim0 || g.t.cols() != g.dim1) bad.push_back("t is not dim0 x dim1");
    if (g.i.rows() != g.dim1 || g.i.cols() != g.dim0) bad.push_back("i is not dim1 x dim0");
    if (!bad.empty()) return bad;
    const Matrix id0 = Matrix::identity(g.dim0);
    if (g.s * g.i != id0) bad.push_back("s i != id");
    if (g.t * g.i != id0) bad.push_back("t i != id");
    return bad;
}

inline ReflexiveVectGraph validate_graph(ReflexiveVectGraph g) {
    auto bad = check_reflexive_graph(g);
    if (!bad.empty()) {
        std::string msg = "reflexive graph invalid:";
        for (const auto& b : bad) msg += " " + b + ";";
        throw std::invalid_argument(msg);
    }
    return g;
}

// Arrow part of a morphism vector: f - i(s(f)). Its source is 0 and its
// target is t(f) - s(f).
inline Matrix arrow_part(const ReflexiveVectGraph& g, const Matrix& f) {
    if (f.rows() != g.dim1 || f.cols() != 1)
        throw DimensionError("arrow_part: expected a dim1-column vector");
    return f - g.i * (g.s * f);
}

struct NotComposableError : std::invalid_argument {
    NotComposableError(const Matrix& source_of_g, const Matrix& target_of_f)
        : std::invalid_argument("not composable: s(g) = " + source_of_g.str() +
                                " but t(f) = " + target_of_f.str()),
          source_of_g(source_of_g), target_of_f(target_of_f) {}
    Matrix source_of_g;
    Matrix target_of_f;
};

// Composite g after f: f_hat + g_hat + i(s(f)). Requires s(g) = t(f) exactly.
inline Matrix diamond(const ReflexiveVectGraph& g, const Matrix& gmor, const Matrix& fmor) {
    if (gmor.rows() != g.dim1 || gmor.cols() != 1 || fmor.rows() != g.dim1 || fmor.cols() != 1)
        throw DimensionError("diamond: expected dim1-column vectors");
    const Matrix sg = g.s * gmor;
    const Matrix tf = g.t * fmor;
    if (sg != tf) throw NotComposableError(sg, tf);
    return arrow_part(g, fmor) + arrow_part(g, gmor) + g.i * (g.s * fmor);
}

// 2-vector space: a reflexive graph with its composition. The pullback
// {(g, f) : s g = t f} in C1 (+) C1 is carried as an explicit kernel basis
// (columns of pullback_basis, g-block on top), and compose maps pullback
// coordinates to C1.
struct TwoVectSpace {
    ReflexiveVectGraph graph;
    Matrix pullback_basis;  // 2*dim1 x p
    Matrix compose;         // dim1 x p
};

namespace detail {

// [s | -t] : C1 (+) C1 -> C0, whose kernel is the pullback.
inline Matrix pullback_constraint(const ReflexiveVectGraph& g) {
    return hstack(g.s, -Rational(1) * g.t);
}

// The diamond composition as a map on all of C1 (+) C1: (g, f) |-> f + g - i s g.
inline Matrix diamond_on_pairs(const ReflexiveVectGraph& g) {
    const Matrix id1 = Matrix::identity(g.dim1);
    return hstack(id1 - g.i * g.s, id1);
}

inline Matrix columns_to_matrix(const std::vector<Matrix>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t r = 0; r < rows; ++r) m(r, j) = cols[j](r, 0);
    return m;
}

}  // namespace detail

// Coordinates of a pullback element with respect to pullback_basis.
inline Matrix pullback_coords(const TwoVectSpace& c, const Matrix& pair_vec) {
    auto sol = solve_affine({{c.pullback_basis, pair_vec}}, c.pullback_basis.cols());
    if (sol.kind != LinearSolution::Kind::Unique)
        throw std::invalid_argument("pullback_coords: vector is not in the pullback");
    return sol.solution;
}

// Composite of a composable pair via the stored compose matrix.
inline Matrix compose_pair(const TwoVectSpace& c, const Matrix& gmor, const Matrix& fmor) {
    return c.compose * pullback_coords(c, vstack(gmor, fmor));
}

// Invariant check: pullback basis lies in the pullback, unit laws hold on a
// basis of C1, compose is compatible with s and t, and composition is
// associative on a basis of the triple pullback.
inline std::vector<std::string> check_two_vect(const TwoVectSpace& c) {
    std::vector<std::string> bad = check_reflexive_graph(c.graph);
    if (!bad.empty()) return bad;
    const ReflexiveVectGraph& g = c.graph;
    const Matrix constraint = detail::pullback_constraint(g);
    if (!(constraint * c.pullback_basis).is_zero())
        bad.push_back("pullback basis does not satisfy s pi1 = t pi2");
    if (rank(c.pullback_basis) != c.pullback_basis.cols())
        bad.push_back("pullback basis is not linearly independent");
    if (c.compose.rows() != g.dim1 || c.compose.cols() != c.pullback_basis.cols())
        bad.push_back("compose has the wrong shape");
    if (!bad.empty()) return bad;

    const Matrix pi1 = hstack(Matrix::identity(g.dim1), Matrix(g.dim1, g.dim1));
    const Matrix pi2 = hstack(Matrix(g.dim1, g.dim1), Matrix::identity(g.dim1));
    if (g.s * c.compose != g.s * pi2 * c.pullback_basis)
        bad.push_back("s compose != s pi2 on the pullback");
    if (g.t * c.compose != g.t * pi1 * c.pullback_basis)
        bad.push_back("t compose != t pi1 on the pullback");

    for (std::size_t k = 0; k < g.dim1; ++k) {
        Matrix e(g.dim1, 1);
        e(k, 0) = Rational(1);
        const Matrix right = compose_pair(c, e, g.i * (g.s * e));  // f o i(s f)
        const Matrix left = compose_pair(c, g.i * (g.t * e), e);   // i(t f) o f
        if (right != e) bad.push_back("right unit law fails on basis vector " + std::to_string(k));
        if (left != e) bad.push_back("left unit law fails on basis vector " + std::to_string(k));
    }

    // triple pullback: {(h, g, f) : s h = t g, s g = t f}
    const Matrix zero01 = Matrix(g.dim0, g.dim1);
    const Matrix triple = vstack(hstack(hstack(g.s, -Rational(1) * g.t), zero01),
                                 hstack(hstack(zero01, g.s), -Rational(1) * g.t));
    for (const Matrix& v : kernel_basis(triple)) {
        Matrix h(g.dim1, 1), gm(g.dim1, 1), fm(g.dim1, 1);
        for (std::size_t r = 0; r < g.dim1; ++r) {
            h(r, 0) = v(r, 0);
            gm(r, 0) = v(g.dim1 + r, 0);
            fm(r, 0) = v(2 * g.dim1 + r, 0);
        }
        const Matrix left = compose_pair(c, compose_pair(c, h, gm), fm);
        const Matrix right = compose_pair(c, h, compose_pair(c, gm, fm));
        if (left != right) bad.push_back("associativity fails on a triple pullback basis vector");
    }
    return bad;
}

// Equips a reflexive graph with the diamond composition. The inverse
// direction just forgets the composition; both round trips are exact.
inline TwoVectSpace graph_to_category(const ReflexiveVectGraph& g) {
    TwoVectSpace c;
    c.graph = g;
    c.pullback_basis =
        detail::columns_to_matrix(kernel_basis(detail::pullback_constraint(g)), 2 * g.dim1);
    c.compose = detail::diamond_on_pairs(g) * c.pullback_basis;
    auto bad = check_two_vect(c);
    if (!bad.empty())
        throw std::logic_error("graph_to_category: diamond composition failed checks: " + bad.front());
    return c;
}

inline ReflexiveVectGraph category_to_graph(const TwoVectSpace& c) { return c.graph; }

// Outcome of solving for a composition from the unit laws alone.
struct CompositionSolve {
    LinearSolution::Kind kind = LinearSolution::Kind::None;
    std::size_t affine_dim = 0;     // when Affine
    bool equals_diamond = false;    // when Unique
    TwoVectSpace space;             // when Unique
};

// Sets up "m is linear on the pullback, m(f, i s f) = f, m(i t f, f) = f"
// as a linear system over the entries of the compose matrix and classifies
// its solution set. For every valid reflexive graph the unit-law vectors
// span the pullback, so the solution is unique and equals the diamond
// matrix; source/target compatibility and associativity are verified after
// the fact rather than imposed.
inline CompositionSolve solve_composition(const ReflexiveVectGraph& graph) {
    const ReflexiveVectGraph g = validate_graph(graph);
    const Matrix basis =
        detail::columns_to_matrix(kernel_basis(detail::pullback_constraint(g)), 2 * g.dim1);
    const std::size_t p = basis.cols();
    const std::size_t unknowns = g.dim1 * p;  // compose entries, row major

    TwoVectSpace scratch;  // for pullback_coords only
    scratch.graph = g;
    scratch.pullback_basis = basis;

    std::vector<AffineConstraint> constraints;
    for (std::size_t k = 0; k < g.dim1; ++k) {
        Matrix e(g.dim1, 1);
        e(k, 0) = Rational(1);
        for (const Matrix& pair : {vstack(e, g.i * (g.s * e)), vstack(g.i * (g.t * e), e)}) {
            const Matrix coords = pullback_coords(scratch, pair);
            Matrix lhs(g.dim1, unknowns);
            for (std::size_t r = 0; r < g.dim1; ++r)
                for (std::size_t j = 0; j < p; ++j) lhs(r, r * p + j) = coords(j, 0);
            constraints.push_back({std::move(lhs), e});
        }
    }

    const LinearSolution sol = solve_affine(constraints, unknowns);
    CompositionSolve out;
    out.kind = sol.kind;
    if (sol.kind == LinearSolution::Kind::Affine) out.affine_dim = sol.affine_dim;
    if (sol.kind != LinearSolution::Kind::Unique) return out;

    Matrix compose(g.dim1, p);
    for (std::size_t r = 0; r < g.dim1; ++r)
        for (std::size_t j = 0; j < p; ++j) compose(r, j) = sol.solution(r * p + j, 0);
    const Matrix diamond_matrix = detail::diamond_on_pairs(g) * basis;
    out.equals_diamond = compose == diamond_matrix;
    out.space = TwoVectSpace{g, basis, std::move(compose)};
    return out;
}

// Finite carrier with two unital binary operations.
struct MagmaPair {
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> op1;  // op1[a][b] = a + b
    std::vector<std::vector<std::size_t>> op2;  // op2[a][b] = a o b
    std::size_t unit1 = 0;
    std::size_t unit2 = 0;
};

inline std::vector<std::string> check_magma(const MagmaPair& m) {
    std::vector<std::string> bad;
    const std::size_t n = m.elements.size();
    for (const auto* table : {&m.op1, &m.op2}) {
        if (table->size() != n) { bad.push_back("table is not n x n"); return bad; }
        for (const auto& row : *table) {
            if (row.size() != n) { bad.push_back("table is not n x n"); return bad; }
            for (std::size_t v : row)
                if (v >= n) { bad.push_back("table entry out of range"); return bad; }
        }
    }
    if (m.unit1 >= n || m.unit2 >= n) { bad.push_back("unit out of range"); return bad; }
    for (std::size_t a = 0; a < n; ++a) {
        if (m.op1[m.unit1][a] != a || m.op1[a][m.unit1] != a)
            bad.push_back("unit1 is not a two-sided unit for op1 at '" + m.elements[a] + "'");
        if (m.op2[m.unit2][a] != a || m.op2[a][m.unit2] != a)
            bad.push_back("unit2 is not a two-sided unit for op2 at '" + m.elements[a] + "'");
    }
    return bad;
}

struct EckmannHiltonResult {
    bool confirmed = false;
    std::array<std::size_t, 4> witness{};  // (a, b, c, d) violating interchange
};

// Tests the interchange law (a + b) o (c + d) = (a o c) + (b o d) on all
// quadruples. When it holds, the two operations must coincide, be
// commutative, and share their unit; a failure of any of those conclusions
// would falsify the theorem and raises logic_error.
inline EckmannHiltonResult eckmann_hilton_check(const MagmaPair& m) {
    const std::size_t n = m.elements.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    if (m.op2[m.op1[a][b]][m.op1[c][d]] != m.op1[m.op2[a][c]][m.op2[b][d]])
                        return {false, {a, b, c, d}};

    if (m.op1 != m.op2)
        throw std::logic_error("eckmann_hilton_check: interchange holds but operations differ");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (m.op1[a][b] != m.op1[b][a])
                throw std::logic_error("eckmann_hilton_check: interchange holds but operation is not commutative");
    if (n > 0 && m.unit1 != m.unit2)
        throw std::logic_error("eckmann_hilton_check: interchange holds but units differ");
    return {true, {}};
}

namespace detail {

// All unital tables on {0..n-1} with the given unit: the unit row/column is
// forced, the (n-1)^2 remaining cells run over all values.
template <typename Fn>
inline void for_each_unital_table(std::size_t n, std::size_t unit, Fn&& fn) {
    std::vector<std::size_t> free_cells;  // flattened (row, col) pairs, unit excluded
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != unit && c != unit) free_cells.push_back(r * n + c);

    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        table[unit][a] = a;
        table[a][unit] = a;
    }
    std::vector<std::size_t> digits(free_cells.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < free_cells.size(); ++k)
            table[free_cells[k] / n][free_cells[k] % n] = digits[k];
        fn(table);
        std::size_t k = 0;
        while (k < digits.size() && digits[k] + 1 == n) digits[k++] = 0;
        if (k == digits.size()) break;
        ++digits[k];
    }
}

}  // namespace detail

struct EckmannHiltonScan {
    std::size_t pairs = 0;
    std::size_t interchange = 0;  // pairs satisfying interchange; all Confirmed
};

// Exhaustive Eckmann-Hilton verification over every pair of unital tables
// with every choice of designated units. Capped at carrier size 3, where a
// unit configuration already produces 81 x 81 pairs.
inline EckmannHiltonScan exhaustive_eckmann_hilton_scan(std::size_t carrier_size) {
    if (carrier_size > 3)
        throw std::invalid_argument("exhaustive_eckmann_hilton_scan: carrier size capped at 3");
    std::vector<std::string> elements;
    for (std::size_t k = 0; k < carrier_size; ++k) elements.push_back(std::to_string(k));

    EckmannHiltonScan stats;
    for (std::size_t u1 = 0; u1 < carrier_size; ++u1)
        detail::for_each_unital_table(carrier_size, u1, [&](const auto& t1) {
            for (std::size_t u2 = 0; u2 < carrier_size; ++u2)
                detail::for_each_unital_table(carrier_size, u2, [&](const auto& t2) {
                    ++stats.pairs;
                    MagmaPair m{elements, t1, t2, u1, u2};
                    if (eckmann_hilton_check(m).confirmed) ++stats.interchange;
                });
        });
    return stats;
}

// Randomized variant for larger carriers.
inline EckmannHiltonScan sampled_eckmann_hilton_scan(std::size_t carrier_size,
                                                     std::size_t samples, std::uint64_t seed) {
    std::vector<std::string> elements;
    for (std::size_t k = 0; k < carrier_size; ++k) elements.push_back(std::to_string(k));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, carrier_size - 1);

    const auto random_unital = [&](std::size_t unit) {
        std::vector<std::vector<std::size_t>> table(carrier_size,
                                                    std::vector<std::size_t>(carrier_size));
        for (std::size_t r = 0; r < carrier_size; ++r)
            for (std::size_t c = 0; c < carrier_size; ++c)
                table[r][c] = r == unit ? c : (c == unit ? r : pick(rng));
        return table;
    };

    EckmannHiltonScan stats;
    for (std::size_t k = 0; k < samples; ++k) {
        const std::size_t u1 = pick(rng), u2 = pick(rng);
        MagmaPair m{elements, random_unital(u1), random_unital(u2), u1, u2};
        ++stats.pairs;
        if (eckmann_hilton_check(m).confirmed) ++stats.interchange;
    }
    return stats;
}

}  // namespace catchain
