#include "homcat/instances.hpp"

#include <nlohmann/json.hpp>

namespace homcat {

FinSetInstance make_finset_instance(int max_size, int level) {
    FinSetInstance inst;
    if (max_size < level + 2)
        throw err_index_out_of_range("finset instance needs sets up to size level+1");
    inst.cat = std::make_unique<FinSetCategory>(max_size);

    std::vector<int> cells;
    for (int n = 0; n <= level; ++n) cells.push_back(inst.cat->object_of_size(n + 1));
    inst.F = std::make_unique<Cosimplicial>(*inst.cat, level, cells);

    for (int n = 1; n <= level; ++n)
        for (int i = 0; i <= n; ++i) {
            auto d = face_map(n, i);
            inst.F->set_face(n, i, inst.cat->from_table(n, n + 1, d.image));
        }
    for (int n = 0; n < level; ++n)
        for (int i = 0; i <= n; ++i) {
            auto s = degeneracy_map(n, i);
            inst.F->set_degeneracy(n, i, inst.cat->from_table(n + 2, n + 1, s.image));
        }

    // products are verified against small sets; hom-sets above size 4 grow
    // past any sensible exhaustive scan
    for (int m = 0; m <= std::min(4, max_size); ++m) inst.scope.objects.push_back(m);
    return inst;
}

Mor representable_map(const SSetCategory& cat, int src_obj, int dst_obj, int src_m, int dst_m,
                      const MonotoneMap& psi) {
    if (psi.source.n != src_m || psi.target.n != dst_m)
        throw err_mismatch("classifying map endpoints do not match the representables");
    const int L = cat.level();
    SimplicialMapData data;
    data.component.resize(static_cast<size_t>(L) + 1);
    for (int lv = 0; lv <= L; ++lv) {
        data.component[static_cast<size_t>(lv)].resize(
            static_cast<size_t>(monotone_count(lv, src_m)));
        for (std::int64_t r = 0; r < monotone_count(lv, src_m); ++r) {
            auto rho = monotone_unrank(lv, src_m, r);
            data.component[static_cast<size_t>(lv)][static_cast<size_t>(r)] =
                static_cast<int>(monotone_rank(compose(psi, rho)));
        }
    }
    return cat.from_map_data(src_obj, dst_obj, data);
}

SSetInstance make_sset_instance(int level) {
    SSetInstance inst;
    inst.cat = std::make_unique<SSetCategory>(level);

    std::vector<int> cells;
    for (int m = 0; m <= level; ++m) {
        int obj = inst.cat->ensure_object(standard_simplex(m, level), "delta:" + std::to_string(m));
        inst.named["delta:" + std::to_string(m)] = obj;
        cells.push_back(obj);
    }
    inst.F = std::make_unique<Cosimplicial>(*inst.cat, level, cells);
    for (int n = 1; n <= level; ++n)
        for (int i = 0; i <= n; ++i)
            inst.F->set_face(n, i,
                             representable_map(*inst.cat, cells[static_cast<size_t>(n - 1)],
                                               cells[static_cast<size_t>(n)], n - 1, n,
                                               face_map(n, i)));
    for (int n = 0; n < level; ++n)
        for (int i = 0; i <= n; ++i)
            inst.F->set_degeneracy(n, i,
                                   representable_map(*inst.cat, cells[static_cast<size_t>(n + 1)],
                                                     cells[static_cast<size_t>(n)], n + 1, n,
                                                     degeneracy_map(n, i)));

    for (int m = 2; m <= std::max(3, level); ++m) {
        if (m > level + 1) break;
        int obj = inst.cat->ensure_object(boundary_standard_simplex(m, level),
                                          "boundary:" + std::to_string(m));
        inst.named["boundary:" + std::to_string(m)] = obj;
    }
    inst.named["circle"] = inst.cat->ensure_object(pinched_circle(level), "circle");
    inst.named["two-points"] = inst.cat->ensure_object(
        sset_disjoint_union(standard_simplex(0, level), standard_simplex(0, level)), "two-points");

    // the spine: two segments glued end to start
    {
        SearchBudget budget;
        int d0 = inst.named["delta:0"], d1 = inst.named["delta:1"];
        Diagram d;
        d.nodes = {d1, d0, d1};
        d.edges.push_back({1, 0, representable_map(*inst.cat, d0, d1, 0, 1,
                                                   MonotoneMap({0}, {1}, {1}))});
        d.edges.push_back({1, 2, representable_map(*inst.cat, d0, d1, 0, 1,
                                                   MonotoneMap({0}, {1}, {0}))});
        auto col = inst.cat->colimit_hook(d);
        if (!col) throw Error("internal-inconsistency", "the spine pushout must exist degreewise");
        inst.named["spine"] = col->object;
    }

    // universal properties are quantified over the small representables;
    // hom-sets against products of the top cell grow too fast to scan
    for (int m = 0; m <= std::min(2, level); ++m)
        inst.scope.objects.push_back(inst.named["delta:" + std::to_string(m)]);
    return inst;
}

const char* kDegenerateIntervalCategoryJson = R"({
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

const char* kDegenerateIntervalCosimplicialJson = R"json({
  "level": 3,
  "cells": ["P", "P", "P", "P"],
  "faces": {
    "(1,0)": "idP", "(1,1)": "idP",
    "(2,0)": "idP", "(2,1)": "idP", "(2,2)": "idP",
    "(3,0)": "idP", "(3,1)": "idP", "(3,2)": "idP", "(3,3)": "idP"
  },
  "degeneracies": {
    "(0,0)": "idP",
    "(1,0)": "idP", "(1,1)": "idP",
    "(2,0)": "idP", "(2,1)": "idP", "(2,2)": "idP"
  }
})json";

Cosimplicial cosimplicial_from_json_text(
    const Category& cat, const std::string& text,
    const std::function<int(const std::string&)>& resolve_object,
    const std::function<Mor(const std::string&)>* resolve_mor) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse-error", std::string("invalid JSON: ") + e.what());
    }
    try {
        int level = j.at("level").get<int>();
        std::vector<int> cells;
        for (const auto& c : j.at("cells")) cells.push_back(resolve_object(c.get<std::string>()));
        Cosimplicial F(cat, level, cells);

        auto resolve = [&](const nlohmann::json& v, int src, int dst) -> Mor {
            if (v.is_number_integer()) return Mor{src, dst, v.get<std::int64_t>()};
            if (resolve_mor) return (*resolve_mor)(v.get<std::string>());
            throw Error("parse-error", "morphism references must be hom indices here");
        };
        for (auto it = j.at("faces").begin(); it != j.at("faces").end(); ++it) {
            int n = 0, i = 0;
            if (sscanf(it.key().c_str(), "(%d,%d)", &n, &i) != 2)
                throw Error("parse-error", "bad face key " + it.key());
            F.set_face(n, i, resolve(it.value(), F.cell(n - 1), F.cell(n)));
        }
        if (j.contains("degeneracies"))
            for (auto it = j.at("degeneracies").begin(); it != j.at("degeneracies").end(); ++it) {
                int n = 0, i = 0;
                if (sscanf(it.key().c_str(), "(%d,%d)", &n, &i) != 2)
                    throw Error("parse-error", "bad degeneracy key " + it.key());
                F.set_degeneracy(n, i, resolve(it.value(), F.cell(n + 1), F.cell(n)));
            }
        return F;
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse-error", std::string("cosimplicial schema: ") + e.what());
    }
}

TableInstance make_table_instance(const std::string& category_json_text,
                                  const std::string& cosimplicial_json_text) {
    TableInstance inst;
    inst.cat = std::make_unique<TableCategory>(TableCategory::from_json_text(category_json_text));
    auto resolve_obj = [&](const std::string& name) { return inst.cat->object_index(name); };
    std::function<Mor(const std::string&)> resolve_mor = [&](const std::string& id) {
        return inst.cat->mor_by_id(id);
    };
    inst.F = std::make_unique<Cosimplicial>(cosimplicial_from_json_text(
        *inst.cat, cosimplicial_json_text, resolve_obj, &resolve_mor));
    return inst;
}

TableInstance make_degenerate_interval_fixture(int level) {
    if (level != 3)
        throw err_index_out_of_range("the shipped fixture is authored at truncation level 3");
    return make_table_instance(kDegenerateIntervalCategoryJson, kDegenerateIntervalCosimplicialJson);
}

ConeProvider finset_cone_provider(const FinSetInstance& inst, int /*level*/) {
    const FinSetCategory* cat = inst.cat.get();
    const Cosimplicial* F = inst.F.get();
    return [cat, F](int /*cell_level*/, const Nerve& nv) -> std::optional<ConeFamily> {
        if (cat->size_of(nv.object) == 0) return std::nullopt;
        return finset_prepend_cone(*cat, *F, nv);
    };
}

ConeProvider sset_cone_provider(const SSetInstance& inst, int /*level*/) {
    const SSetCategory* cat = inst.cat.get();
    const Cosimplicial* F = inst.F.get();
    return [cat, F](int cell_level, const Nerve& nv) -> std::optional<ConeFamily> {
        return sset_first_vertex_cone(*cat, *F, nv, cell_level);
    };
}

ConeProvider table_search_cone_provider(const TableInstance& /*inst*/) {
    return [](int /*cell_level*/, const Nerve& nv) -> std::optional<ConeFamily> {
        SearchBudget budget;
        auto cone = search_cone(nv, budget);
        if (!cone) return std::nullopt;
        return cone;
    };
}

}  // namespace homcat
