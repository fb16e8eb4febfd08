#include "helpers.hpp"
#include "suspkit/intmat.hpp"

#include <doctest.h>

#include <random>

using namespace suspkit;
using namespace suspkit::testing;

namespace {

IntMatrix from_rows(std::vector<std::vector<long long>> rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

void check_snf(const IntMatrix& a) {
    SnfResult r = smith_normal_form(a);
    CHECK(mul(mul(r.U, a), r.V) == r.D);
    CHECK(mul(r.U, r.Uinv) == IntMatrix::identity(a.rows()));
    CHECK(mul(r.V, r.Vinv) == IntMatrix::identity(a.cols()));
    IntVec d = r.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (d[i] == 0) CHECK(d[i + 1] == 0);
        else CHECK(d[i + 1] % d[i] == 0);
    }
    for (std::size_t i = 0; i < r.D.rows(); ++i)
        for (std::size_t j = 0; j < r.D.cols(); ++j)
            if (i != j) CHECK(r.D.at(i, j) == 0);
}

} // namespace

TEST_CASE("smith normal form on fixed inputs") {
    SUBCASE("identity") {
        SnfResult r = smith_normal_form(IntMatrix::identity(3));
        CHECK(r.D == IntMatrix::identity(3));
    }
    SUBCASE("2x2 with determinant 8") {
        IntMatrix a = from_rows({{2, 4}, {6, 8}});
        SnfResult r = smith_normal_form(a);
        CHECK(r.D.at(0, 0) == 2);
        CHECK(r.D.at(1, 1) == 4);
        check_snf(a);
    }
    SUBCASE("zero matrix") {
        IntMatrix a(2, 3);
        SnfResult r = smith_normal_form(a);
        CHECK(r.D == a);
    }
}

TEST_CASE("smith normal form on random matrices") {
    std::mt19937_64 rng(corpus_seed() + 7);
    std::uniform_int_distribution<int> dim(0, 5), entry(-9, 9);
    for (int trial = 0; trial < 150; ++trial) {
        IntMatrix a(dim(rng), dim(rng));
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
        check_snf(a);
    }
}

TEST_CASE("integral linear systems") {
    SUBCASE("divisible") {
        LinearSolution s = solve_linear(from_rows({{2}}), {Int(2)});
        REQUIRE(s.solvable);
        CHECK(s.x[0] == 1);
    }
    SUBCASE("parity obstruction") {
        LinearSolution s = solve_linear(from_rows({{2}}), {Int(1)});
        CHECK(!s.solvable);
        CHECK(s.fail_divisor == 2);
        CHECK(s.fail_value % 2 != 0);
    }
    SUBCASE("diagonal") {
        LinearSolution s = solve_linear(from_rows({{2, 0}, {0, 3}}), {Int(4), Int(6)});
        REQUIRE(s.solvable);
        // brute-force oracle over a small box
        bool found = false;
        for (int x = -5; x <= 5 && !found; ++x)
            for (int y = -5; y <= 5 && !found; ++y)
                if (2 * x == 4 && 3 * y == 6) {
                    found = true;
                    CHECK(s.x[0] == x);
                    CHECK(s.x[1] == y);
                }
        CHECK(found);
    }
    SUBCASE("agreement with brute force on random small systems") {
        std::mt19937_64 rng(corpus_seed() + 8);
        std::uniform_int_distribution<int> dim(1, 3), entry(-4, 4);
        for (int trial = 0; trial < 120; ++trial) {
            const int m = dim(rng), n = dim(rng);
            IntMatrix a(m, n);
            IntVec b(m);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
                b[std::size_t(i)] = entry(rng);
            }
            LinearSolution s = solve_linear(a, b);
            // search |x| <= 12
            bool bf = false;
            std::vector<long long> x(n, -12);
            for (;;) {
                bool ok = true;
                for (int i = 0; i < m && ok; ++i) {
                    Int sum = 0;
                    for (int j = 0; j < n; ++j) sum += a.at(i, j) * x[std::size_t(j)];
                    ok = sum == b[std::size_t(i)];
                }
                if (ok) {
                    bf = true;
                    break;
                }
                int k = 0;
                while (k < n && x[std::size_t(k)] == 12) {
                    x[std::size_t(k)] = -12;
                    ++k;
                }
                if (k == n) break;
                ++x[std::size_t(k)];
            }
            if (bf) CHECK(s.solvable);
            if (s.solvable) {
                IntVec check = mul(a, s.x);
                CHECK(check == b);
            }
        }
    }
}
