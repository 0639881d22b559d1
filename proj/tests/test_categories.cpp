#include <doctest.h>

#include "homcat/finset.hpp"
#include "homcat/limits.hpp"
#include "homcat/sset_category.hpp"
#include "homcat/table_category.hpp"

using namespace homcat;

namespace {

const char* kDegenerateIntervalTable = R"({
  "objects": ["P", "A", "W"],
  "morphisms": [
    {"id": "idP", "src": "P", "dst": "P"},
    {"id": "idA", "src": "A", "dst": "A"},
    {"id": "idW", "src": "W", "dst": "W"},
    {"id": "a0", "src": "P", "dst": "A"},
    {"id": "a1", "src": "P", "dst": "A"},
    {"id": "bangA", "src": "A", "dst": "P"},
    {"id": "bangW", "src": "W", "dst": "P"},
    {"id": "c0", "src": "A", "dst": "A"},
    {"id": "c1", "src": "A", "dst": "A"},
    {"id": "w0", "src": "W", "dst": "A"},
    {"id": "w1", "src": "W", "dst": "A"}
  ],
  "compose": [
    ["idP", "idP", "idP"],
    ["idA", "idA", "idA"],
    ["idW", "idW", "idW"],
    ["a0", "idP", "a0"], ["idA", "a0", "a0"],
    ["a1", "idP", "a1"], ["idA", "a1", "a1"],
    ["bangA", "idA", "bangA"], ["idP", "bangA", "bangA"],
    ["bangW", "idW", "bangW"], ["idP", "bangW", "bangW"],
    ["c0", "idA", "c0"], ["idA", "c0", "c0"],
    ["c1", "idA", "c1"], ["idA", "c1", "c1"],
    ["w0", "idW", "w0"], ["idA", "w0", "w0"],
    ["w1", "idW", "w1"], ["idA", "w1", "w1"],
    ["bangA", "a0", "idP"], ["bangA", "a1", "idP"],
    ["a0", "bangA", "c0"], ["a1", "bangA", "c1"],
    ["a0", "bangW", "w0"], ["a1", "bangW", "w1"],
    ["bangA", "c0", "bangA"], ["bangA", "c1", "bangA"],
    ["bangA", "w0", "bangW"], ["bangA", "w1", "bangW"],
    ["c0", "a0", "a0"], ["c0", "a1", "a0"],
    ["c1", "a0", "a1"], ["c1", "a1", "a1"],
    ["c0", "c0", "c0"], ["c0", "c1", "c0"],
    ["c1", "c0", "c1"], ["c1", "c1", "c1"],
    ["c0", "w0", "w0"], ["c0", "w1", "w0"],
    ["c1", "w0", "w1"], ["c1", "w1", "w1"]
  ],
  "identities": {"P": "idP", "A": "idA", "W": "idW"}
})";

}  // namespace

TEST_CASE("finset laws, terminal, products") {
    FinSetCategory fs(6);
    SearchBudget budget;

    SUBCASE("laws hold on sets of size <= 3") {
        auto rep = verify_category_laws(fs, {0, 1, 2, 3});
        CHECK(rep.pass);
    }
    SUBCASE("terminal object is the singleton") {
        auto t = find_terminal(fs);
        REQUIRE(t.has_value());
        CHECK(*t == 1);
    }
    SUBCASE("single-object identity-only table passes the laws") {
        TableCategory one({"X"}, {{"idX", "X", "X"}}, {{{"idX", "idX", "idX"}}}, {{"X", "idX"}});
        CHECK(verify_category_laws(one).pass);
    }
    SUBCASE("product of sizes 2 and 3 is the 6-element set with coordinate projections") {
        UniversalityScope scope{{0, 1, 2, 3, 4}};
        auto p = product(fs, 2, 3, scope, budget);
        REQUIRE(p.has_value());
        CHECK(p->object == 6);
        auto t1 = fs.table_of(p->proj1);
        auto t2 = fs.table_of(p->proj2);
        for (int e = 0; e < 6; ++e) {
            CHECK(t1[static_cast<size_t>(e)] == e / 3);
            CHECK(t2[static_cast<size_t>(e)] == e % 3);
        }
    }
    SUBCASE("product with the terminal object is isomorphic to the object") {
        UniversalityScope scope{{0, 1, 2, 3}};
        for (int a = 1; a <= 3; ++a) {
            auto p = product(fs, a, 1, scope, budget);
            REQUIRE(p.has_value());
            auto iso = find_isomorphism(fs, p->object, a, budget);
            CHECK(iso.has_value());
        }
    }
    SUBCASE("pairing satisfies and is forced by the projection equations") {
        UniversalityScope scope{{0, 1, 2}};
        auto p = product(fs, 2, 2, scope, budget);
        REQUIRE(p.has_value());
        auto f = fs.from_table(2, 2, {1, 0});
        auto g = fs.from_table(2, 2, {0, 0});
        auto h = pairing(fs, f, g, *p, budget);
        CHECK(fs.compose(p->proj1, h) == f);
        CHECK(fs.compose(p->proj2, h) == g);
        // uniqueness: scan the hom-set
        int hits = 0;
        for (std::int64_t i = 0; i < fs.hom_size(2, p->object); ++i) {
            Mor cand{2, p->object, i};
            if (fs.compose(p->proj1, cand) == f && fs.compose(p->proj2, cand) == g) ++hits;
        }
        CHECK(hits == 1);
    }
    SUBCASE("product of morphisms acts coordinatewise and is functorial") {
        UniversalityScope scope{{0, 1, 2}};
        auto p22 = product(fs, 2, 2, scope, budget);
        REQUIRE(p22.has_value());
        auto id2 = fs.identity(2);
        auto idp = product_of_morphisms(fs, id2, id2, *p22, *p22, budget);
        CHECK(idp == fs.identity(p22->object));

        auto f = fs.from_table(2, 2, {1, 1});
        auto g = fs.from_table(2, 2, {0, 1});
        auto fp = fs.from_table(2, 2, {1, 0});
        auto gp = fs.from_table(2, 2, {0, 0});
        auto lhs = fs.compose(product_of_morphisms(fs, f, g, *p22, *p22, budget),
                              product_of_morphisms(fs, fp, gp, *p22, *p22, budget));
        auto rhs = product_of_morphisms(fs, fs.compose(f, fp), fs.compose(g, gp), *p22, *p22, budget);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("finset pushout of the glued interval has three elements") {
    FinSetCategory fs(6);
    SearchBudget budget;
    // span {0,1} <- {0} -> {0,1}, gluing element 1 of the left to 0 of the right
    Diagram d;
    d.nodes = {2, 1, 2};
    d.edges.push_back({1, 0, fs.from_table(1, 2, {1})});
    d.edges.push_back({1, 2, fs.from_table(1, 2, {0})});
    UniversalityScope scope{{0, 1, 2, 3}};
    auto col = colimit(fs, d, scope, budget);
    REQUIRE(col.has_value());
    CHECK(col->object == 3);

    SUBCASE("pushout along identities returns the common object") {
        Diagram di;
        di.nodes = {2, 2, 2};
        di.edges.push_back({1, 0, fs.identity(2)});
        di.edges.push_back({1, 2, fs.identity(2)});
        auto c2 = colimit(fs, di, scope, budget);
        REQUIRE(c2.has_value());
        CHECK(c2->object == 2);
    }
}

TEST_CASE("corrupted table category fails the laws with a witness") {
    // c0 o c1 deliberately set to c1 (should be c0)
    std::string text(kDegenerateIntervalTable);
    auto pos = text.find("[\"c0\", \"c1\", \"c0\"]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("[\"c0\", \"c1\", \"c0\"]").size(), "[\"c0\", \"c1\", \"c1\"]");
    auto bad = TableCategory::from_json_text(text);
    auto rep = verify_category_laws(bad);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.witness.empty());
}

TEST_CASE("the degenerate-interval table fixture satisfies the laws") {
    auto cat = TableCategory::from_json_text(kDegenerateIntervalTable);
    CHECK(verify_category_laws(cat).pass);
    auto t = find_terminal(cat);
    REQUIRE(t.has_value());
    CHECK(cat.object_name(*t) == "P");

    SUBCASE("two objects with no morphisms in between have no isomorphism") {
        SearchBudget budget;
        CHECK_FALSE(find_isomorphism(cat, cat.object_index("A"), cat.object_index("W"), budget)
                        .has_value());
    }
    SUBCASE("products with the terminal object exist by search") {
        SearchBudget budget;
        UniversalityScope scope;
        auto p = product(cat, cat.object_index("A"), *t, scope, budget);
        REQUIRE(p.has_value());
        CHECK(p->object == cat.object_index("A"));
    }
}

TEST_CASE("simplicial set category basics") {
    SSetCategory ss(2);
    int d0 = ss.ensure_object(standard_simplex(0, 2), "delta:0");
    int d1 = ss.ensure_object(standard_simplex(1, 2), "delta:1");
    int b2 = ss.ensure_object(boundary_standard_simplex(2, 2), "boundary:2");

    SUBCASE("hom sizes follow the simplex census") {
        CHECK(ss.hom_size(d0, d1) == 2);   // the two vertices
        CHECK(ss.hom_size(d1, d1) == 3);   // Yoneda: 1-simplices of delta[1]
        CHECK(ss.hom_size(d0, b2) == 3);
        CHECK(ss.hom_size(b2, d0) == 1);   // delta[0] is terminal
    }
    SUBCASE("laws hold") { CHECK(verify_category_laws(ss).pass); }
    SUBCASE("terminal object is the point") {
        auto t = find_terminal(ss);
        REQUIRE(t.has_value());
        CHECK(*t == d0);
    }
    SUBCASE("registration deduplicates structurally equal objects") {
        CHECK(ss.ensure_object(standard_simplex(1, 2), "again") == d1);
    }
    SUBCASE("products are degreewise with 9 one-simplices in delta[1]^2") {
        SearchBudget budget;
        UniversalityScope scope{{d0, d1, b2}};
        auto p = product(ss, d1, d1, scope, budget);
        REQUIRE(p.has_value());
        CHECK(ss.object(p->object).size(1) == 9);
    }
    SUBCASE("product with the point is isomorphic to the object") {
        SearchBudget budget;
        UniversalityScope scope{{d0, d1, b2}};
        for (int a : {d1, b2}) {
            auto p = product(ss, a, d0, scope, budget);
            REQUIRE(p.has_value());
            CHECK(find_isomorphism(ss, p->object, a, budget).has_value());
        }
    }
    SUBCASE("no terminal object without morphisms between components") {
        TableCategory two({"X", "Y"}, {{"idX", "X", "X"}, {"idY", "Y", "Y"}},
                          {{{"idX", "idX", "idX"}}, {{"idY", "idY", "idY"}}},
                          {{"X", "idX"}, {"Y", "idY"}});
        CHECK_FALSE(find_terminal(two).has_value());
    }
    SUBCASE("pushout of the two-spine glues degreewise") {
        SearchBudget budget;
        // delta[1] <- delta[0] -> delta[1], end of the first to start of the second
        auto v1 = ss.mor(d0, d1, 1);  // vertex 1
        auto v0 = ss.mor(d0, d1, 0);  // vertex 0
        Diagram d;
        d.nodes = {d1, d0, d1};
        d.edges.push_back({1, 0, v1});
        d.edges.push_back({1, 2, v0});
        UniversalityScope scope{{d0, d1}};
        auto col = colimit(ss, d, scope, budget);
        REQUIRE(col.has_value());
        CHECK(ss.object(col->object).size(0) == 3);  // three vertices on the spine
        // the spine has two nondegenerate edges
        int nondeg = 0;
        for (int k = 0; k < ss.object(col->object).size(1); ++k)
            if (!ss.object(col->object).is_degenerate(1, k)) ++nondeg;
        CHECK(nondeg == 2);
    }
}

TEST_CASE("simplicial set json round-trip and schema errors") {
    auto b2 = boundary_standard_simplex(2, 2);
    auto text = b2.to_json_text();
    auto back = TruncSimplicialSet::from_json_text(text);
    CHECK(back == b2);

    try {
        TruncSimplicialSet::from_json_text("{oops");
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == "parse-error");
    }
}

TEST_CASE("sset act agrees with stored faces and degeneracies") {
    auto d2 = standard_simplex(2, 3);
    for (int n = 1; n <= 3; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k < d2.size(n); ++k)
                CHECK(d2.act(face_map(n, i), k) == d2.face(n, i, k));
    for (int n = 0; n < 3; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k < d2.size(n); ++k)
                CHECK(d2.act(degeneracy_map(n, i), k) == d2.degeneracy(n, i, k));
    // composite action: phi = (1,1) : [1] -> [2] factors as vertex-1 after s_{0,0}
    MonotoneMap phi({1}, {2}, {1, 1});
    for (int k = 0; k < d2.size(2); ++k)
        CHECK(d2.act(phi, k) == d2.degeneracy(0, 0, d2.face(1, 0, d2.face(2, 2, k))));
}
