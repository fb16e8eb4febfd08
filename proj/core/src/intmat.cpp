#include "suspkit/intmat.hpp"

namespace suspkit {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) = -at(k, i);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

IntVec mul(const IntMatrix& a, const IntVec& x) {
    if (a.cols() != x.size()) throw Error("matrix dimension mismatch");
    IntVec y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
    return y;
}

IntVec mul_row(const IntVec& x, const IntMatrix& a) {
    if (a.rows() != x.size()) throw Error("matrix dimension mismatch");
    IntVec y(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) y[j] += x[i] * a.at(i, j);
    return y;
}

IntVec SnfResult::diagonal() const {
    IntVec d(std::min(D.rows(), D.cols()));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = D.at(i, i);
    return d;
}

namespace {

// Smallest nonzero entry of D[s.., s..] by absolute value.
bool find_pivot(const IntMatrix& d, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = s; i < d.rows(); ++i)
        for (std::size_t j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int v = abs(d.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    SnfResult r;
    r.D = a;
    r.U = IntMatrix::identity(a.rows());
    r.Uinv = IntMatrix::identity(a.rows());
    r.V = IntMatrix::identity(a.cols());
    r.Vinv = IntMatrix::identity(a.cols());
    IntMatrix& D = r.D;

    // D <- L*D tracks U <- L*U, Uinv <- Uinv*L^-1 (and dually for columns).
    auto row_op = [&](std::size_t i, std::size_t j, const Int& c) {
        D.add_row(i, j, c);
        r.U.add_row(i, j, c);
        r.Uinv.add_col(j, i, -c);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Int& c) {
        D.add_col(i, j, c);
        r.V.add_col(i, j, c);
        r.Vinv.add_row(j, i, -c);
    };

    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t s = 0; s < n; ++s) {
        for (;;) {
            std::size_t pi = s, pj = s;
            if (!find_pivot(D, s, pi, pj)) break; // rest is zero
            if (pi != s) {
                D.swap_rows(s, pi);
                r.U.swap_rows(s, pi);
                r.Uinv.swap_cols(s, pi);
            }
            if (pj != s) {
                D.swap_cols(s, pj);
                r.V.swap_cols(s, pj);
                r.Vinv.swap_rows(s, pj);
            }
            bool dirty = false;
            for (std::size_t i = s + 1; i < D.rows(); ++i) {
                if (D.at(i, s) == 0) continue;
                Int q = D.at(i, s) / D.at(s, s);
                if (q != 0) row_op(i, s, -q);
                if (D.at(i, s) != 0) dirty = true;
            }
            for (std::size_t j = s + 1; j < D.cols(); ++j) {
                if (D.at(s, j) == 0) continue;
                Int q = D.at(s, j) / D.at(s, s);
                if (q != 0) col_op(j, s, -q);
                if (D.at(s, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // pivot now lone in its row and column; force divisibility of the
            // remaining block by folding a bad entry into the pivot column
            bool bad = false;
            for (std::size_t i = s + 1; i < D.rows() && !bad; ++i)
                for (std::size_t j = s + 1; j < D.cols() && !bad; ++j)
                    if (D.at(i, j) % D.at(s, s) != 0) {
                        row_op(s, i, 1);
                        bad = true;
                    }
            if (!bad) break;
        }
        if (D.at(s, s) < 0) {
            D.negate_row(s);
            r.U.negate_row(s);
            r.Uinv.negate_col(s);
        }
    }
    return r;
}

LinearSolution solve_linear(const IntMatrix& a, const IntVec& b) {
    if (a.rows() != b.size()) throw Error("rhs dimension mismatch");
    SnfResult snf = smith_normal_form(a);
    IntVec c = mul(snf.U, b);
    LinearSolution sol;
    IntVec y(a.cols());
    const std::size_t n = std::min(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Int d = i < n ? snf.D.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) {
                sol.solvable = false;
                sol.fail_row = i;
                sol.fail_divisor = 0;
                sol.fail_value = c[i];
                return sol;
            }
        } else if (c[i] % d != 0) {
            sol.solvable = false;
            sol.fail_row = i;
            sol.fail_divisor = d;
            sol.fail_value = c[i];
            return sol;
        } else {
            y[i] = c[i] / d;
        }
    }
    sol.solvable = true;
    sol.x = mul(snf.V, y);
    return sol;
}

} // namespace suspkit
