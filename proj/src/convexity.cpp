#include "homcat/convexity.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace homcat {

std::string ConeFamily::to_json_text(const std::string& object_name) const {
    nlohmann::ordered_json j;
    j["object"] = object_name;
    nlohmann::ordered_json maps_json = nlohmann::ordered_json::object();
    for (size_t n = 0; n < maps.size(); ++n) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (size_t k = 0; k < maps[n].size(); ++k)
            row[std::to_string(k)] = maps[n][k];
        maps_json[std::to_string(n)] = row;
    }
    j["maps"] = maps_json;
    return j.dump(2);
}

ConeFamily ConeFamily::from_json_text(const std::string& text, int object) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse-error", std::string("invalid JSON: ") + e.what());
    }
    try {
        ConeFamily cone;
        cone.object = object;
        const auto& maps_json = j.at("maps");
        int levels = static_cast<int>(maps_json.size());
        cone.maps.resize(static_cast<size_t>(levels));
        for (auto it = maps_json.begin(); it != maps_json.end(); ++it) {
            int n = std::stoi(it.key());
            if (n < 0 || n >= levels) throw Error("parse-error", "cone level out of range");
            auto& row = cone.maps[static_cast<size_t>(n)];
            row.assign(it.value().size(), -1);
            for (auto e = it.value().begin(); e != it.value().end(); ++e) {
                int k = std::stoi(e.key());
                if (k < 0 || k >= static_cast<int>(row.size()))
                    throw Error("parse-error", "cone simplex index out of range");
                row[static_cast<size_t>(k)] = e.value().get<int>();
            }
        }
        return cone;
    } catch (const nlohmann::json::exception& e) {
        throw Error("parse-error", std::string("cone schema: ") + e.what());
    }
}

ConeFamily ConeFamily::from_json_file(const std::string& path, int object) {
    std::ifstream in(path);
    if (!in) throw Error("parse-error", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return from_json_text(os.str(), object);
}

ConeReport verify_cone(const Nerve& nv, const ConeFamily& cone) {
    ConeReport rep;
    const auto& s = nv.sset;
    const int L = s.level();
    if (cone.object != nv.object) {
        rep.witness = "cone family belongs to a different object";
        return rep;
    }
    if (static_cast<int>(cone.maps.size()) != L) {
        rep.witness = "cone family must cover levels 0..L-1";
        return rep;
    }
    for (int n = 0; n < L; ++n) {
        if (static_cast<int>(cone.maps[static_cast<size_t>(n)].size()) != s.size(n)) {
            rep.witness = "level-mismatch at n=" + std::to_string(n);
            return rep;
        }
        for (int k = 0; k < s.size(n); ++k) {
            int c = cone.maps[static_cast<size_t>(n)][static_cast<size_t>(k)];
            if (c < 0 || c >= s.size(n + 1)) {
                rep.witness = "cone value out of range";
                return rep;
            }
            if (s.face(n + 1, 0, c) != k) {
                std::ostringstream os;
                os << "right-inverse law fails at n=" << n << " simplex " << k;
                rep.witness = os.str();
                return rep;
            }
            for (int i = 0; i <= n && n >= 1; ++i) {
                int lhs = s.face(n + 1, i + 1, c);
                int rhs = cone.maps[static_cast<size_t>(n - 1)][static_cast<size_t>(s.face(n, i, k))];
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "naturality fails at n=" << n << " i=" << i << " simplex " << k;
                    rep.witness = os.str();
                    return rep;
                }
            }
        }
    }
    // degree-0 naturality against the augmentation: one common apex
    std::optional<int> apex;
    for (int k = 0; k < s.size(0); ++k) {
        int a = s.face(1, 1, cone.maps[0][static_cast<size_t>(k)]);
        if (!apex) apex = a;
        if (*apex != a) {
            rep.witness = "degree-0 cones do not share a single apex vertex";
            return rep;
        }
    }
    rep.pass = true;
    rep.apex = apex;
    return rep;
}

ConeFamily finset_prepend_cone(const FinSetCategory& cat, const Cosimplicial& F, const Nerve& nv) {
    ConeFamily cone;
    cone.object = nv.object;
    const int L = F.level();
    if (cat.size_of(nv.object) == 0)
        throw Error("unsupported-object", "the empty set has no cone family");
    for (int n = 0; n < L; ++n) {
        std::vector<int> row(static_cast<size_t>(nv.sset.size(n)));
        for (int k = 0; k < nv.sset.size(n); ++k) {
            auto t = cat.table_of(Mor{F.cell(n), nv.object, k});
            std::vector<int> up(t.size() + 1);
            up[0] = 0;  // the fixed apex element
            for (size_t j = 0; j < t.size(); ++j) up[j + 1] = t[j];
            row[static_cast<size_t>(k)] =
                static_cast<int>(cat.from_table(F.cell(n + 1), nv.object, up).idx);
        }
        cone.maps.push_back(std::move(row));
    }
    return cone;
}

ConeFamily sset_first_vertex_cone(const SSetCategory& cat, const Cosimplicial& F, const Nerve& nv,
                                  int m) {
    ConeFamily cone;
    cone.object = nv.object;
    const int L = F.level();
    for (int n = 0; n < L; ++n) {
        // identity n-simplex inside Delta[n]
        int id_idx = static_cast<int>(monotone_rank(simplex_identity(n)));
        std::vector<int> row(static_cast<size_t>(nv.sset.size(n)));
        for (int k = 0; k < nv.sset.size(n); ++k) {
            Mor sigma{F.cell(n), nv.object, k};
            int top = cat.level_component(sigma, n, id_idx);
            auto psi = monotone_unrank(n, m, top);
            std::vector<int> img(psi.image.size() + 1);
            img[0] = 0;  // apex vertex
            for (size_t j = 0; j < psi.image.size(); ++j) img[j + 1] = psi.image[j];
            MonotoneMap coned({n + 1}, {m}, img);
            // the simplicial map Delta[n+1] -> Delta[m] classified by `coned`
            SimplicialMapData data;
            data.component.resize(static_cast<size_t>(L) + 1);
            for (int lv = 0; lv <= L; ++lv) {
                data.component[static_cast<size_t>(lv)].resize(
                    static_cast<size_t>(monotone_count(lv, n + 1)));
                for (std::int64_t r = 0; r < monotone_count(lv, n + 1); ++r) {
                    auto rho = monotone_unrank(lv, n + 1, r);
                    data.component[static_cast<size_t>(lv)][static_cast<size_t>(r)] =
                        static_cast<int>(monotone_rank(compose(coned, rho)));
                }
            }
            row[static_cast<size_t>(k)] =
                static_cast<int>(cat.from_map_data(F.cell(n + 1), nv.object, data).idx);
        }
        cone.maps.push_back(std::move(row));
    }
    return cone;
}

ConeFamily product_cone(const Category& cat, const Cosimplicial& F, const ConeFamily& cone_x,
                        const ConeFamily& cone_y, const BinaryProduct& prod, const Nerve& nerve_p,
                        SearchBudget& budget) {
    ConeFamily cone;
    cone.object = prod.object;
    const int L = F.level();
    int x = prod.proj1.dst, y = prod.proj2.dst;
    for (int n = 0; n < L; ++n) {
        std::vector<int> row(static_cast<size_t>(nerve_p.sset.size(n)));
        for (int k = 0; k < nerve_p.sset.size(n); ++k) {
            Mor gamma{F.cell(n), prod.object, k};
            Mor alpha = cat.compose(prod.proj1, gamma);
            Mor beta = cat.compose(prod.proj2, gamma);
            Mor cx{F.cell(n + 1), x, cone_x.maps[static_cast<size_t>(n)][static_cast<size_t>(alpha.idx)]};
            Mor cy{F.cell(n + 1), y, cone_y.maps[static_cast<size_t>(n)][static_cast<size_t>(beta.idx)]};
            row[static_cast<size_t>(k)] = static_cast<int>(pairing(cat, cx, cy, prod, budget).idx);
        }
        cone.maps.push_back(std::move(row));
    }
    return cone;
}

std::optional<ConeFamily> search_cone(const Nerve& nv, SearchBudget& budget) {
    const auto& s = nv.sset;
    const int L = s.level();
    ConeFamily cone;
    cone.object = nv.object;
    cone.maps.resize(static_cast<size_t>(L));
    for (int n = 0; n < L; ++n)
        cone.maps[static_cast<size_t>(n)].assign(static_cast<size_t>(s.size(n)), -1);

    // per-simplex candidate lists under the right-inverse and naturality laws
    std::function<bool(int, int)> assign = [&](int n, int k) -> bool {
        if (n == L) return true;
        if (k == s.size(n)) return assign(n + 1, 0);
        for (int c = 0; c < s.size(n + 1); ++c) {
            budget.spend();
            if (s.face(n + 1, 0, c) != k) continue;
            bool ok = true;
            for (int i = 0; i <= n && n >= 1 && ok; ++i)
                if (s.face(n + 1, i + 1, c) !=
                    cone.maps[static_cast<size_t>(n - 1)][static_cast<size_t>(s.face(n, i, k))])
                    ok = false;
            if (!ok) continue;
            cone.maps[static_cast<size_t>(n)][static_cast<size_t>(k)] = c;
            if (assign(n, k + 1)) return true;
            cone.maps[static_cast<size_t>(n)][static_cast<size_t>(k)] = -1;
        }
        return false;
    };
    if (!assign(0, 0)) return std::nullopt;
    return cone;
}

ChainHomotopyReport cone_chain_homotopy(const Nerve& nv, const ConeFamily& cone) {
    ChainHomotopyReport rep;
    auto check = verify_cone(nv, cone);
    if (!check.pass) throw Error("cone-not-verified", check.witness);
    rep.apex = *check.apex;

    const auto& s = nv.sset;
    const int L = s.level();
    ChainComplex c(s, /*reduced=*/false, /*complete=*/false);

    for (int n = 0; n < L; ++n) {
        IntMat m(c.rank(n + 1), c.rank(n));
        for (int k = 0; k < c.rank(n); ++k)
            m.at(cone.maps[static_cast<size_t>(n)][static_cast<size_t>(k)], k) = 1;
        rep.cone_mats.push_back(std::move(m));
    }

    // degree 0: boundary_1 Cone_0 = Id - (apex section o augmentation)
    IntMat apex_col(c.rank(0), c.rank(0));
    for (int k = 0; k < c.rank(0); ++k) apex_col.at(rep.apex, k) = 1;
    if (!(c.boundary(1) * rep.cone_mats[0] == IntMat::identity(c.rank(0)) - apex_col)) {
        rep.witness = "degree-0 contraction identity fails";
        return rep;
    }
    for (int n = 1; n < L; ++n) {
        IntMat lhs = c.boundary(n + 1) * rep.cone_mats[static_cast<size_t>(n)] +
                     rep.cone_mats[static_cast<size_t>(n - 1)] * c.boundary(n);
        if (!(lhs == IntMat::identity(c.rank(n)))) {
            rep.witness = "contraction identity fails at degree " + std::to_string(n);
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

AcyclicReport check_acyclic(const Nerve& nv, const ConeFamily* cone) {
    AcyclicReport rep;
    ChainComplex reduced(nv.sset, /*reduced=*/true, /*complete=*/false);
    rep.acyclic = true;
    std::ostringstream os;
    for (int n = 0; n < nv.sset.level(); ++n) {
        auto h = homology(reduced, n);
        if (h.betti != 0 || !h.torsion.empty()) {
            rep.acyclic = false;
            os << "reduced homology is nonzero at degree " << n << "; ";
        }
    }
    if (cone) {
        auto ch = cone_chain_homotopy(nv, *cone);
        if (!ch.pass) throw Error("cone-not-verified", ch.witness);
        rep.constructive = true;
        for (int n = 0; n < nv.sset.level() && rep.constructive; ++n) {
            auto h = homology_data(reduced, n);
            for (int j = 0; j < h.z && rep.constructive; ++j) {
                std::vector<Int> z(static_cast<size_t>(h.kernel.rows()));
                for (int i = 0; i < h.kernel.rows(); ++i) z[static_cast<size_t>(i)] = h.kernel.at(i, j);
                // the cone of a cycle bounds it exactly
                auto cz = ch.cone_mats[static_cast<size_t>(n)].apply(z);
                auto back = reduced.boundary(n + 1).apply(cz);
                if (back != z) {
                    rep.constructive = false;
                    os << "constructive witness fails at degree " << n << "; ";
                }
            }
        }
    }
    rep.detail = os.str();
    if (rep.detail.empty()) rep.detail = rep.constructive ? "acyclic (constructive)" : "acyclic";
    return rep;
}

AxiomReport check_axiom_convex(const Cosimplicial& F, const ConeProvider& provider,
                               SearchBudget& budget) {
    AxiomReport rep;
    rep.axiom = "A5";
    const int L = F.level();
    for (int n = 0; n + 1 <= L; ++n) {
        Nerve nv = nerve(F, F.cell(n), budget);
        auto cone = provider(n, nv);
        if (!cone) {
            rep.status = AxiomStatus::Fail;
            rep.detail = "no cone family available for cell F(" + std::to_string(n) + ")";
            return rep;
        }
        auto check = verify_cone(nv, *cone);
        if (!check.pass) {
            rep.status = AxiomStatus::Fail;
            rep.detail = "cone family for F(" + std::to_string(n) + ") rejected: " + check.witness;
            return rep;
        }
    }
    rep.status = AxiomStatus::Pass;
    rep.detail = "every cell through F(" + std::to_string(L - 1) + ") carries a verified cone";
    return rep;
}

}  // namespace homcat
