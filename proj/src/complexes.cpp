#include "homcat/complexes.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "homcat/simplex.hpp"

namespace homcat {

namespace {
Error err_invalid(const std::string& msg) { return {"invalid-diagram", msg}; }
}  // namespace

SphereResult boundary_sphere(Category& cat, const Cosimplicial& F, int k,
                             const UniversalityScope& scope, SearchBudget& budget) {
    if (k < 0 || k + 1 > F.level())
        throw err_index_out_of_range("sphere dimension outside the truncation");

    SphereResult res;
    res.k = k;

    Diagram d;
    // facets first: k+2 copies of F(k)
    for (int i = 0; i <= k + 1; ++i) d.nodes.push_back(F.cell(k));
    // pairwise intersections: F(k-1) glued into facets i and j via the face
    // identity d_{k+1,j} d_{k,i} = d_{k+1,i} d_{k,j-1} for i < j
    if (k >= 1) {
        for (int j = 1; j <= k + 1; ++j)
            for (int i = 0; i < j; ++i) {
                int node = static_cast<int>(d.nodes.size());
                d.nodes.push_back(F.cell(k - 1));
                d.edges.push_back({node, j, F.face(k, i)});
                d.edges.push_back({node, i, F.face(k, j - 1)});
            }
    }

    auto col = colimit(cat, d, scope, budget);
    if (!col) throw err_colimit_not_found("the sphere face diagram has no verified colimit");
    res.colim = *col;
    res.object = col->object;

    // the facet inclusions into F(k+1) form a cocone; factor it
    Cocone into;
    into.nadir = F.cell(k + 1);
    for (int i = 0; i <= k + 1; ++i) into.legs.push_back(F.face(k + 1, i));
    if (k >= 1)
        for (int j = 1; j <= k + 1; ++j)
            for (int i = 0; i < j; ++i)
                into.legs.push_back(cat.compose(F.face(k + 1, j), F.face(k, i)));
    res.inclusion = factor_through_colimit(cat, d, *col, into, budget);
    return res;
}

AttachResult attach_handle(Category& cat, const Cosimplicial& F, int X, int k, const Mor& alpha,
                           const UniversalityScope& scope, SearchBudget& budget) {
    if (k < 1) throw err_index_out_of_range("handles attach along spheres of dimension >= 0");
    auto sphere = boundary_sphere(cat, F, k - 1, scope, budget);
    if (alpha.src != sphere.object || alpha.dst != X)
        throw err_mismatch("attachment map must run from the (k-1)-sphere into the base");

    Diagram d;
    d.nodes = {F.cell(k), sphere.object, X};
    d.edges.push_back({1, 0, sphere.inclusion});
    d.edges.push_back({1, 2, alpha});

    auto col = colimit(cat, d, scope, budget);
    if (!col) throw err_colimit_not_found("the handle pushout has no verified colimit");

    AttachResult res;
    res.pushout = *col;
    res.object = col->object;
    res.cell_leg = col->cocone.legs[0];
    res.base_leg = col->cocone.legs[2];
    return res;
}

CwResult build_cw(Category& cat, const Cosimplicial& F, int x0, const std::vector<int>& ks,
                  const AttachMapProvider& provider, const UniversalityScope& scope,
                  SearchBudget& budget) {
    CwResult res;
    res.skeleta.push_back(x0);
    int current = x0;
    for (size_t step = 0; step < ks.size(); ++step) {
        int k = ks[step];
        auto sphere = boundary_sphere(cat, F, k - 1, scope, budget);
        Mor alpha = provider(static_cast<int>(step), sphere.object, current);
        auto attached = attach_handle(cat, F, current, k, alpha, scope, budget);
        res.inclusions.push_back(attached.base_leg);
        current = attached.object;
        res.skeleta.push_back(current);
    }
    res.object = current;
    return res;
}

int CellComplexDiagram::dimension() const {
    int d = 0;
    for (int lv : node_level) d = std::max(d, lv);
    return d;
}

void CellComplexDiagram::validate(int max_level) const {
    for (int lv : node_level)
        if (lv < 0 || lv > max_level) throw err_invalid("node level outside the truncation");
    for (const auto& e : edges) {
        if (e.from < 0 || e.to < 0 || e.from >= static_cast<int>(node_level.size()) ||
            e.to >= static_cast<int>(node_level.size()))
            throw err_invalid("edge endpoints outside the node list");
        int l = node_level[static_cast<size_t>(e.from)];
        if (node_level[static_cast<size_t>(e.to)] != l + 1)
            throw err_invalid("edges must connect consecutive levels upward");
        if (e.face_index < 0 || e.face_index > l + 1)
            throw err_invalid("face label outside 0..l+1");
    }
}

CellComplexDiagram CellComplexDiagram::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse-error", std::string("invalid JSON: ") + e.what());
    }
    try {
        CellComplexDiagram d;
        d.node_level = j.at("levels").get<std::vector<int>>();
        for (const auto& e : j.at("edges"))
            d.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(),
                               e.at("face").get<int>()});
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse-error", std::string("cell diagram schema: ") + e.what());
    }
}

CellComplexDiagram CellComplexDiagram::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("parse-error", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return from_json_text(os.str());
}

ColimitResult colim_cell_complex(Category& cat, const Cosimplicial& F,
                                 const CellComplexDiagram& d, const UniversalityScope& scope,
                                 SearchBudget& budget) {
    d.validate(F.level());
    Diagram gen;
    for (int lv : d.node_level) gen.nodes.push_back(F.cell(lv));
    for (const auto& e : d.edges) {
        int l = d.node_level[static_cast<size_t>(e.from)];
        gen.edges.push_back({e.from, e.to, F.face(l + 1, e.face_index)});
    }
    auto col = colimit(cat, gen, scope, budget);
    if (!col) throw err_colimit_not_found("the cell-complex diagram has no verified colimit");
    return *col;
}

}  // namespace homcat
