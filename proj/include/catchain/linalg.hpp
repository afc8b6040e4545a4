#pragma once

#include <cstddef>
#include <vector>

#include "catchain/matrix.hpp"

namespace catchain {

struct EchelonForm {
    Matrix mat;                       // fully reduced (RREF)
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Gauss-Jordan elimination over Q. Partial pivoting picks the entry of
// largest absolute value in each column, which fixes the intermediate
// state deterministically; rank and kernel do not depend on the choice.
// Columns at and beyond `col_limit` are carried along but never pivoted
// (used for augmented systems).
inline EchelonForm reduced_row_echelon(Matrix m, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t best = row;
        bool found = false;
        Rational best_abs;
        for (std::size_t i = row; i < m.rows(); ++i) {
            if (m(i, col).is_zero()) continue;
            Rational a = abs(m(i, col));
            if (!found || best_abs < a) {
                found = true;
                best = i;
                best_abs = a;
            }
        }
        if (!found) continue;
        m.swap_rows(row, best);
        const Rational inv_pivot = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv_pivot * m(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline EchelonForm reduced_row_echelon(Matrix m) {
    const std::size_t limit = m.cols();
    return reduced_row_echelon(std::move(m), limit);
}

inline std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivots.size(); }

// Basis of ker(m) as column vectors; size is cols(m) - rank(m).
inline std::vector<Matrix> kernel_basis(const Matrix& m) {
    const EchelonForm ef = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : ef.pivots) is_pivot[c] = true;

    std::vector<Matrix> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Matrix v(m.cols(), 1);
        v(free_col, 0) = Rational(1);
        for (std::size_t r = 0; r < ef.pivots.size(); ++r)
            v(ef.pivots[r], 0) = -ef.mat(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One block of a stacked linear system: lhs * x = rhs.
struct AffineConstraint {
    Matrix lhs;  // k x n
    Matrix rhs;  // k x 1
};

struct LinearSolution {
    enum class Kind { Unique, None, Affine };
    Kind kind = Kind::None;
    Matrix solution;             // n x 1, set when Unique
    std::size_t affine_dim = 0;  // set when Affine
};

// Exact classification of the solution set of the stacked system.
inline LinearSolution solve_affine(const std::vector<AffineConstraint>& constraints,
                                   std::size_t unknowns) {
    std::size_t total_rows = 0;
    for (const auto& c : constraints) {
        if (c.lhs.cols() != unknowns)
            throw DimensionError("solve_affine: constraint has wrong unknown count");
        if (c.rhs.rows() != c.lhs.rows() || c.rhs.cols() != 1)
            throw DimensionError("solve_affine: rhs shape does not match lhs");
        total_rows += c.lhs.rows();
    }

    Matrix aug(total_rows, unknowns + 1);
    std::size_t at = 0;
    for (const auto& c : constraints) {
        for (std::size_t i = 0; i < c.lhs.rows(); ++i, ++at) {
            for (std::size_t j = 0; j < unknowns; ++j) aug(at, j) = c.lhs(i, j);
            aug(at, unknowns) = c.rhs(i, 0);
        }
    }

    const EchelonForm ef = reduced_row_echelon(std::move(aug), unknowns);
    const std::size_t rk = ef.pivots.size();
    for (std::size_t i = rk; i < ef.mat.rows(); ++i)
        if (!ef.mat(i, unknowns).is_zero()) return {LinearSolution::Kind::None, Matrix(), 0};

    if (rk == unknowns) {
        Matrix x(unknowns, 1);
        for (std::size_t r = 0; r < rk; ++r) x(ef.pivots[r], 0) = ef.mat(r, unknowns);
        return {LinearSolution::Kind::Unique, std::move(x), 0};
    }
    return {LinearSolution::Kind::Affine, Matrix(), unknowns - rk};
}

}  // namespace catchain
