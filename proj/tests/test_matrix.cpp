#include <doctest.h>

#include <random>

#include "homcat/matrix.hpp"

using namespace homcat;

namespace {

IntMat from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

// determinant by cofactor expansion; test-only oracle for unimodularity
Int det(const IntMat& m) {
    REQUIRE(m.rows() == m.cols());
    int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMat minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = m.at(i, c);
            }
        }
        Int term = m.at(0, j) * det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

void check_snf(const IntMat& m) {
    auto snf = smith_normal_form(m);
    CHECK(snf.U * m * snf.V == snf.S);
    CHECK((snf.U * snf.U_inv).is_identity());
    CHECK((snf.V * snf.V_inv).is_identity());
    if (m.rows() <= 6) {
        Int du = det(snf.U);
        CHECK((du == 1 || du == -1));
    }
    if (m.cols() <= 6) {
        Int dv = det(snf.V);
        CHECK((dv == 1 || dv == -1));
    }
    for (int i = 0; i < std::min(snf.S.rows(), snf.S.cols()); ++i)
        for (int j = 0; j < snf.S.cols(); ++j)
            if (i != j && i < snf.S.rows()) CHECK(snf.S.at(i, j) == 0);
    for (size_t i = 1; i < snf.invariants.size(); ++i) {
        CHECK(snf.invariants[i] % snf.invariants[i - 1] == 0);
        CHECK(snf.invariants[i - 1] > 0);
    }
}

}  // namespace

TEST_CASE("smith normal form of [[2,4],[6,8]] is diag(2,4)") {
    auto m = from_rows({{2, 4}, {6, 8}});
    auto snf = smith_normal_form(m);
    CHECK(snf.rank == 2);
    CHECK(snf.invariants == std::vector<Int>{2, 4});
    // |det| = 8 preserved by unimodular transforms
    CHECK(snf.invariants[0] * snf.invariants[1] == 8);
    check_snf(m);
}

TEST_CASE("identity and zero matrices") {
    auto id = IntMat::identity(3);
    auto s1 = smith_normal_form(id);
    CHECK(s1.S == id);
    check_snf(id);

    IntMat z(2, 3);
    auto s2 = smith_normal_form(z);
    CHECK(s2.rank == 0);
    CHECK(s2.S.is_zero());
    CHECK(s2.U.is_identity());
    CHECK(s2.V.is_identity());
}

TEST_CASE("snf on deterministic random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        IntMat m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
        check_snf(m);
    }
}

TEST_CASE("snf rank agrees with fraction-free elimination") {
    // independent oracle: rank over the rationals
    auto rational_rank = [](IntMat m) {
        int rank = 0, r = 0;
        for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
            int pivot = -1;
            for (int i = r; i < m.rows(); ++i)
                if (m.at(i, c) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            m.swap_rows(r, pivot);
            for (int i = r + 1; i < m.rows(); ++i) {
                if (m.at(i, c) == 0) continue;
                Int a = m.at(r, c), b = m.at(i, c);
                for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * a - m.at(r, j) * b;
            }
            ++r;
            ++rank;
        }
        return rank;
    };
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> dim(1, 9), val(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        IntMat m(dim(rng), dim(rng));
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
        CHECK(smith_normal_form(m).rank == rational_rank(m));
    }
}

TEST_CASE("snf entries can exceed machine precision safely") {
    IntMat m(2, 2);
    m.at(0, 0) = Int("123456789012345678901234567890");
    m.at(0, 1) = 2;
    m.at(1, 0) = 3;
    m.at(1, 1) = Int("987654321098765432109876543210");
    auto snf = smith_normal_form(m);
    CHECK(snf.U * m * snf.V == snf.S);
}

TEST_CASE("integer solving via snf") {
    SUBCASE("solvable system") {
        auto m = from_rows({{1, 0, -1}, {-1, 1, 0}, {0, -1, 1}});
        std::vector<Int> b{1, -1, 0};
        auto res = solve_integer(m, b);
        REQUIRE(res.solution.has_value());
        CHECK(m.apply(*res.solution) == b);
    }
    SUBCASE("divisibility failure") {
        auto m = from_rows({{2}});
        auto res = solve_integer(m, {Int(3)});
        CHECK_FALSE(res.solution.has_value());
        CHECK(res.obstruction.find("divisibility") != std::string::npos);
    }
    SUBCASE("zero-row obstruction") {
        auto m = from_rows({{1, 1}, {1, 1}});
        auto res = solve_integer(m, {Int(0), Int(1)});
        CHECK_FALSE(res.solution.has_value());
        CHECK_FALSE(res.obstruction.empty());
    }
    SUBCASE("random solvable systems round-trip") {
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> dim(1, 5), val(-5, 5);
        for (int trial = 0; trial < 40; ++trial) {
            IntMat m(dim(rng), dim(rng));
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) m.at(i, j) = val(rng);
            std::vector<Int> x(static_cast<size_t>(m.cols()));
            for (auto& v : x) v = val(rng);
            auto b = m.apply(x);
            auto res = solve_integer(m, b);
            REQUIRE(res.solution.has_value());
            CHECK(m.apply(*res.solution) == b);
        }
    }
}
