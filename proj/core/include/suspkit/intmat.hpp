#ifndef SUSPKIT_INTMAT_HPP
#define SUSPKIT_INTMAT_HPP

#include "suspkit/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace suspkit {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int& c);
    void add_col(std::size_t i, std::size_t j, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
IntVec mul(const IntMatrix& a, const IntVec& x);
IntVec mul_row(const IntVec& x, const IntMatrix& a);

// U*A*V = D with U, V unimodular and D diagonal, each diagonal entry
// nonnegative and dividing the next. Inverses are tracked alongside the row
// and column operations, so unimodularity holds by construction.
struct SnfResult {
    IntMatrix U, Uinv, D, V, Vinv;
    // diagonal entries, length min(rows, cols)
    IntVec diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& a);

// Integral solutions of A x = b. On failure, `fail_row` is a coordinate of
// the transformed system where the divisibility test fails: d * y = c has
// no integer y.
struct LinearSolution {
    bool solvable = false;
    IntVec x;
    std::size_t fail_row = 0;
    Int fail_divisor = 0, fail_value = 0;
};

LinearSolution solve_linear(const IntMatrix& a, const IntVec& b);

} // namespace suspkit

#endif
