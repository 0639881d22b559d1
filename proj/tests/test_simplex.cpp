#include <doctest.h>

#include <algorithm>
#include <set>

#include "homcat/simplex.hpp"

using namespace homcat;

TEST_CASE("face maps match the skip-i formula") {
    CHECK(face_map(1, 0).image == std::vector<int>{1});
    CHECK(face_map(2, 1).image == std::vector<int>{0, 2});
    CHECK(face_map(1, 1).image == std::vector<int>{0});
    CHECK(face_map(3, 2).image == std::vector<int>{0, 1, 3});

    for (int n = 1; n <= 4; ++n)
        for (int i = 0; i <= n; ++i) {
            auto d = face_map(n, i);
            CHECK(d.is_injective());
            // i is skipped
            for (int v : d.image) CHECK(v != i);
        }

    CHECK_THROWS_AS(face_map(2, 3), Error);
    CHECK_THROWS_AS(face_map(2, -1), Error);
}

TEST_CASE("degeneracy maps duplicate exactly the i-th element") {
    CHECK(degeneracy_map(1, 0).image == std::vector<int>{0, 0, 1});
    CHECK(degeneracy_map(0, 0).image == std::vector<int>{0, 0});
    CHECK(degeneracy_map(2, 2).image == std::vector<int>{0, 1, 2, 2});

    for (int n = 0; n <= 4; ++n)
        for (int i = 0; i <= n; ++i) {
            auto s = degeneracy_map(n, i);
            CHECK(s.is_surjective());
            int dup = 0;
            for (size_t j = 1; j < s.image.size(); ++j)
                if (s.image[j] == s.image[j - 1]) {
                    ++dup;
                    CHECK(s.image[j] == i);
                }
            CHECK(dup == 1);
        }

    CHECK_THROWS_AS(degeneracy_map(2, 5), Error);
}

TEST_CASE("composition evaluates pointwise") {
    CHECK(compose(face_map(2, 0), face_map(1, 0)).image == std::vector<int>{2});
    // s_{0,0} o d_{1,0} = id_[0]
    CHECK(compose(degeneracy_map(0, 0), face_map(1, 0)).is_identity());
    // two routes to the same monotone [0] -> [2]
    auto lhs = compose(face_map(2, 2), face_map(1, 0));
    auto rhs = compose(face_map(2, 0), face_map(1, 1));
    CHECK(lhs == rhs);
    CHECK(lhs.image == std::vector<int>{1});

    CHECK_THROWS_AS(compose(face_map(1, 0), face_map(1, 0)), Error);
}

TEST_CASE("composition is associative (exhaustive through [4])") {
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 4; ++c)
                for (int d = 0; d <= 4; ++d) {
                    if (a > b || b > c || c > d) continue;  // keep the census small
                    for (const auto& f : all_monotone_maps(a, b))
                        for (const auto& g : all_monotone_maps(b, c))
                            for (const auto& h : all_monotone_maps(c, d))
                                CHECK(compose(compose(h, g), f) == compose(h, compose(g, f)));
                }
}

TEST_CASE("enumeration, rank and unrank agree") {
    for (int m = 0; m <= 3; ++m)
        for (int n = 0; n <= 3; ++n) {
            auto maps = all_monotone_maps(m, n);
            CHECK(static_cast<std::int64_t>(maps.size()) == monotone_count(m, n));
            for (std::int64_t r = 0; r < static_cast<std::int64_t>(maps.size()); ++r) {
                CHECK(monotone_rank(maps[static_cast<size_t>(r)]) == r);
                CHECK(monotone_unrank(m, n, r) == maps[static_cast<size_t>(r)]);
            }
        }
    CHECK(monotone_count(1, 1) == 3);
    CHECK(monotone_count(3, 2) == 15);
}

TEST_CASE("simplicial identity suite passes up to level 4") {
    CHECK(verify_simplicial_identities(1).pass);
    CHECK(verify_simplicial_identities(4).pass);
}

namespace {
// deliberately replaces d_{2,1} by d_{2,0}
struct CorruptedTable : GeneratorTable {
    MonotoneMap face(int n, int i) const override {
        if (n == 2 && i == 1) return face_map(2, 0);
        return face_map(n, i);
    }
};
}  // namespace

TEST_CASE("a corrupted face table fails with a witness") {
    auto rep = verify_simplicial_identities(4, CorruptedTable{});
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("epi-mono factorization in normal form") {
    SUBCASE("identity factors as (empty, empty)") {
        auto fac = epi_mono_factorize(simplex_identity(2));
        CHECK(fac.degeneracy_indices.empty());
        CHECK(fac.face_indices.empty());
    }
    SUBCASE("a generator factors as itself") {
        auto fac = epi_mono_factorize(face_map(2, 1));
        CHECK(fac.degeneracy_indices.empty());
        CHECK(fac.face_indices == std::vector<int>{1});
    }
    SUBCASE("image (0,0,2) on [2]->[2]") {
        MonotoneMap f({2}, {2}, {0, 0, 2});
        auto fac = epi_mono_factorize(f);
        CHECK(fac.degeneracy_indices == std::vector<int>{0});
        CHECK(fac.face_indices == std::vector<int>{1});
        CHECK(recompose(2, 2, fac) == f);
    }
    SUBCASE("recomposition reproduces every map with endpoints <= [4]") {
        for (int m = 0; m <= 4; ++m)
            for (int n = 0; n <= 4; ++n)
                for (const auto& f : all_monotone_maps(m, n)) {
                    auto fac = epi_mono_factorize(f);
                    for (size_t t = 1; t < fac.degeneracy_indices.size(); ++t)
                        CHECK(fac.degeneracy_indices[t - 1] < fac.degeneracy_indices[t]);
                    for (size_t t = 1; t < fac.face_indices.size(); ++t)
                        CHECK(fac.face_indices[t - 1] > fac.face_indices[t]);
                    CHECK(recompose(m, n, fac) == f);
                }
    }
    SUBCASE("brute-force generator closure reaches every monotone map") {
        // oracle: close the identities under postcomposition with generators,
        // dimensions kept <= 3
        const int dim_cap = 3;
        std::vector<MonotoneMap> reached;
        std::set<std::string> seen;
        for (int n = 0; n <= dim_cap; ++n) {
            reached.push_back(simplex_identity(n));
            seen.insert(reached.back().str());
        }
        for (size_t head = 0; head < reached.size(); ++head) {
            MonotoneMap w = reached[head];
            int t = w.target.n;
            std::vector<MonotoneMap> next;
            if (t + 1 <= dim_cap)
                for (int i = 0; i <= t + 1; ++i) next.push_back(compose(face_map(t + 1, i), w));
            if (t >= 1)
                for (int i = 0; i <= t - 1; ++i)
                    next.push_back(compose(degeneracy_map(t - 1, i), w));
            for (const auto& v : next)
                if (seen.insert(v.str()).second) reached.push_back(v);
        }
        for (int m = 0; m <= dim_cap; ++m)
            for (int n = 0; n <= dim_cap; ++n)
                for (const auto& f : all_monotone_maps(m, n)) {
                    CHECK(seen.count(f.str()) == 1);
                    CHECK(recompose(m, n, epi_mono_factorize(f)) == f);
                }
    }
}
