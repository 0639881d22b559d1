#include "homcat/limits.hpp"

#include <map>
#include <sstream>

namespace homcat {

std::vector<int> UniversalityScope::resolve(const Category& cat) const {
    if (!objects.empty()) return objects;
    std::vector<int> all;
    for (int i = 0; i < cat.num_objects(); ++i) all.push_back(i);
    return all;
}

VerifyReport verify_product(const Category& cat, int a, int b, const BinaryProduct& p,
                            const UniversalityScope& scope, SearchBudget& budget) {
    VerifyReport rep;
    if (p.proj1.src != p.object || p.proj1.dst != a || p.proj2.src != p.object || p.proj2.dst != b) {
        rep.pass = false;
        rep.witness = "projection endpoints do not match the candidate product";
        return rep;
    }
    for (int x : scope.resolve(cat)) {
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> seen;
        std::int64_t nh = cat.hom_size(x, p.object);
        for (std::int64_t h = 0; h < nh; ++h) {
            budget.spend();
            Mor hm{x, p.object, h};
            auto key = std::make_pair(cat.compose(p.proj1, hm).idx, cat.compose(p.proj2, hm).idx);
            if (++seen[key] > 1) {
                rep.pass = false;
                rep.witness = "two morphisms " + cat.object_name(x) +
                              " -> product induce the same span (uniqueness fails)";
                return rep;
            }
        }
        std::int64_t spans = cat.hom_size(x, a) * cat.hom_size(x, b);
        if (static_cast<std::int64_t>(seen.size()) != spans) {
            rep.pass = false;
            rep.witness = "some span from " + cat.object_name(x) + " has no factorization";
            return rep;
        }
    }
    return rep;
}

std::optional<BinaryProduct> product(const Category& cat, int a, int b,
                                     const UniversalityScope& scope, SearchBudget& budget) {
    auto cand = cat.product_hook(a, b);
    if (cand) {
        if (verify_product(cat, a, b, *cand, scope, budget).pass) return cand;
        return std::nullopt;
    }
    if (cat.product_hook_is_authoritative()) return std::nullopt;
    // search: every object with every pair of projections
    for (int p = 0; p < cat.num_objects(); ++p) {
        std::int64_t n1 = cat.hom_size(p, a), n2 = cat.hom_size(p, b);
        for (std::int64_t i = 0; i < n1; ++i)
            for (std::int64_t j = 0; j < n2; ++j) {
                budget.spend();
                BinaryProduct c{p, Mor{p, a, i}, Mor{p, b, j}};
                if (verify_product(cat, a, b, c, scope, budget).pass) return c;
            }
    }
    return std::nullopt;
}

Mor pairing(const Category& cat, const Mor& f, const Mor& g, const BinaryProduct& p,
            SearchBudget& budget) {
    if (f.src != g.src) throw err_mismatch("pairing: sources differ");
    if (f.dst != p.proj1.dst || g.dst != p.proj2.dst)
        throw err_mismatch("pairing: targets do not match the product");
    auto hooked = cat.pairing_hook(f, g, p);
    if (hooked) {
        if (cat.compose(p.proj1, *hooked) != f || cat.compose(p.proj2, *hooked) != g)
            throw err_product_not_found("instance pairing violates the projection equations");
        return *hooked;
    }
    std::optional<Mor> found;
    std::int64_t n = cat.hom_size(f.src, p.object);
    for (std::int64_t h = 0; h < n; ++h) {
        budget.spend();
        Mor hm{f.src, p.object, h};
        if (cat.compose(p.proj1, hm) == f && cat.compose(p.proj2, hm) == g) {
            found = hm;
            break;
        }
    }
    if (!found) throw err_product_not_found("no pairing morphism exists for the given span");
    return *found;
}

Mor product_of_morphisms(const Category& cat, const Mor& f, const Mor& g,
                         const BinaryProduct& src_prod, const BinaryProduct& dst_prod,
                         SearchBudget& budget) {
    // unique morphism commuting with all four projections
    Mor leg1 = cat.compose(f, src_prod.proj1);
    Mor leg2 = cat.compose(g, src_prod.proj2);
    return pairing(cat, leg1, leg2, dst_prod, budget);
}

std::vector<Cocone> enumerate_cocones(const Category& cat, const Diagram& d, int nadir,
                                      SearchBudget& budget) {
    std::vector<Cocone> out;
    std::vector<Mor> legs(d.nodes.size());
    std::function<void(size_t)> assign = [&](size_t node) {
        if (node == d.nodes.size()) {
            out.push_back(Cocone{nadir, legs});
            return;
        }
        std::int64_t n = cat.hom_size(d.nodes[node], nadir);
        for (std::int64_t i = 0; i < n; ++i) {
            budget.spend();
            legs[node] = Mor{d.nodes[node], nadir, i};
            bool ok = true;
            for (const auto& e : d.edges) {
                size_t u = static_cast<size_t>(e.from_node), v = static_cast<size_t>(e.to_node);
                if (u > node || v > node) continue;
                if (cat.compose(legs[v], e.mor) != legs[u]) {
                    ok = false;
                    break;
                }
            }
            if (ok) assign(node + 1);
        }
    };
    assign(0);
    return out;
}

VerifyReport verify_colimit(Category& cat, const Diagram& d, const ColimitResult& col,
                            const UniversalityScope& scope, SearchBudget& budget) {
    VerifyReport rep;
    // the candidate itself must be a cocone
    for (const auto& e : d.edges) {
        if (cat.compose(col.cocone.legs[static_cast<size_t>(e.to_node)], e.mor) !=
            col.cocone.legs[static_cast<size_t>(e.from_node)]) {
            rep.pass = false;
            rep.witness = "candidate legs do not commute with a diagram edge";
            return rep;
        }
    }
    for (int y : scope.resolve(cat)) {
        auto cocones = enumerate_cocones(cat, d, y, budget);
        std::map<std::vector<std::int64_t>, std::int64_t> seen;
        std::int64_t nu = cat.hom_size(col.object, y);
        for (std::int64_t u = 0; u < nu; ++u) {
            budget.spend();
            Mor um{col.object, y, u};
            std::vector<std::int64_t> key;
            for (const auto& leg : col.cocone.legs) key.push_back(cat.compose(um, leg).idx);
            if (++seen[key] > 1) {
                rep.pass = false;
                rep.witness = "factorization through the apex is not unique for nadir " +
                              cat.object_name(y);
                return rep;
            }
        }
        if (static_cast<std::int64_t>(seen.size()) != static_cast<std::int64_t>(cocones.size())) {
            rep.pass = false;
            std::ostringstream os;
            os << "cocones over nadir " << cat.object_name(y) << ": " << cocones.size()
               << ", factorizations: " << seen.size();
            rep.witness = os.str();
            return rep;
        }
        // every enumerated cocone must be hit
        for (const auto& c : cocones) {
            std::vector<std::int64_t> key;
            for (const auto& leg : c.legs) key.push_back(leg.idx);
            if (!seen.count(key)) {
                rep.pass = false;
                rep.witness = "a cocone over " + cat.object_name(y) + " has no factorization";
                return rep;
            }
        }
    }
    return rep;
}

std::optional<ColimitResult> colimit(Category& cat, const Diagram& d,
                                     const UniversalityScope& scope, SearchBudget& budget) {
    auto cand = cat.colimit_hook(d);
    if (cand) {
        if (verify_colimit(cat, d, *cand, scope, budget).pass) return cand;
        return std::nullopt;
    }
    for (int apex = 0; apex < cat.num_objects(); ++apex) {
        for (const auto& c : enumerate_cocones(cat, d, apex, budget)) {
            budget.spend();
            ColimitResult res{apex, c};
            if (verify_colimit(cat, d, res, scope, budget).pass) return res;
        }
    }
    return std::nullopt;
}

Mor factor_through_colimit(const Category& cat, const Diagram& /*d*/, const ColimitResult& col,
                           const Cocone& cocone, SearchBudget& budget) {
    std::optional<Mor> found;
    std::int64_t n = cat.hom_size(col.object, cocone.nadir);
    for (std::int64_t u = 0; u < n; ++u) {
        budget.spend();
        Mor um{col.object, cocone.nadir, u};
        bool ok = true;
        for (size_t k = 0; k < col.cocone.legs.size(); ++k)
            if (cat.compose(um, col.cocone.legs[k]) != cocone.legs[k]) {
                ok = false;
                break;
            }
        if (ok) {
            if (found)
                throw Error("factorization-not-unique",
                            "two factorizations through the colimit (broken witness)");
            found = um;
        }
    }
    if (!found) throw err_colimit_not_found("cocone does not factor through the colimit");
    return *found;
}

std::optional<std::pair<Mor, Mor>> find_isomorphism(const Category& cat, int a, int b,
                                                    SearchBudget& budget) {
    std::int64_t nf = cat.hom_size(a, b), ng = cat.hom_size(b, a);
    for (std::int64_t f = 0; f < nf; ++f)
        for (std::int64_t g = 0; g < ng; ++g) {
            budget.spend();
            Mor fm{a, b, f}, gm{b, a, g};
            if (cat.compose(gm, fm) == cat.identity(a) && cat.compose(fm, gm) == cat.identity(b))
                return std::make_pair(fm, gm);
        }
    return std::nullopt;
}

}  // namespace homcat
