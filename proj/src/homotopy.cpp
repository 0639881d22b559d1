#include "homcat/homotopy.hpp"

#include <algorithm>
#include <numeric>

namespace homcat {

namespace {
Error err_type(const std::string& msg) { return {"type-mismatch", msg}; }
}  // namespace

HomotopyContext::HomotopyContext(const Cosimplicial& F, UniversalityScope scope)
    : f_(&F), scope_(std::move(scope)) {}

const LambdaPair& HomotopyContext::lambda(int object, SearchBudget& budget) {
    auto it = lambdas_.find(object);
    if (it != lambdas_.end()) return it->second;
    auto [it2, inserted] = lambdas_.emplace(object, make_lambda_pair(*this, object, budget));
    return it2->second;
}

Mor HomotopyContext::cross_with_interval(const Mor& sigma, SearchBudget& budget) {
    const auto& ps = lambda(sigma.src, budget).prod;
    const auto& pd = lambda(sigma.dst, budget).prod;
    return product_of_morphisms(cat(), sigma, cat().identity(f_->cell(1)), ps, pd, budget);
}

LambdaPair make_lambda_pair(HomotopyContext& ctx, int object, SearchBudget& budget) {
    const Category& cat = ctx.cat();
    const Cosimplicial& F = ctx.F();

    LambdaPair lp;
    lp.object = object;
    if (cat.hom_size(object, F.cell(0)) != 1)
        throw err_type("F(0) is not terminal for " + cat.object_name(object));
    lp.bang = Mor{object, F.cell(0), 0};

    auto prod = product(cat, object, F.cell(1), ctx.scope(), budget);
    if (!prod)
        throw err_product_not_found("no verified product " + cat.object_name(object) + " x F(1)");
    lp.prod = *prod;

    lp.lambda0 = pairing(cat, cat.identity(object), cat.compose(F.face(1, 0), lp.bang), lp.prod, budget);
    lp.lambda1 = pairing(cat, cat.identity(object), cat.compose(F.face(1, 1), lp.bang), lp.prod, budget);

    // the defining equations
    if (cat.compose(lp.prod.proj1, lp.lambda0) != cat.identity(object) ||
        cat.compose(lp.prod.proj1, lp.lambda1) != cat.identity(object))
        throw Error("internal-inconsistency", "lambda does not section the first projection");

    // compatibility against every element sigma : F(0) -> X:
    //   lambda_j o sigma = (sigma x id) o lambda_j of F(0)
    int f0 = F.cell(0);
    LambdaPair f0_lp;
    const LambdaPair* base = nullptr;
    if (f0 == object) {
        base = &lp;
    } else {
        f0_lp = ctx.lambda(f0, budget);
        base = &f0_lp;
    }
    std::int64_t count = cat.hom_size(f0, object);
    for (std::int64_t si = 0; si < count; ++si) {
        Mor sigma{f0, object, si};
        Mor cross =
            product_of_morphisms(cat, sigma, cat.identity(F.cell(1)), base->prod, lp.prod, budget);
        if (cat.compose(cross, base->lambda0) != cat.compose(lp.lambda0, sigma) ||
            cat.compose(cross, base->lambda1) != cat.compose(lp.lambda1, sigma))
            throw Error("internal-inconsistency",
                        "lambda compatibility square fails for an element of " +
                            cat.object_name(object));
    }
    return lp;
}

VerifyReport verify_lambda_naturality(HomotopyContext& ctx, int X, int max_level,
                                      SearchBudget& budget) {
    // the level-n generalization: (sigma x id) o lambda_j^{F(n)} = lambda_j^X o sigma
    const Category& cat = ctx.cat();
    const Cosimplicial& F = ctx.F();
    VerifyReport rep;
    const auto& lpx = ctx.lambda(X, budget);
    for (int n = 0; n <= max_level; ++n) {
        const auto& lpc = ctx.lambda(F.cell(n), budget);
        std::int64_t count = cat.hom_size(F.cell(n), X);
        for (std::int64_t si = 0; si < count; ++si) {
            budget.spend();
            Mor sigma{F.cell(n), X, si};
            Mor cross =
                product_of_morphisms(cat, sigma, cat.identity(F.cell(1)), lpc.prod, lpx.prod, budget);
            if (cat.compose(cross, lpc.lambda0) != cat.compose(lpx.lambda0, sigma) ||
                cat.compose(cross, lpc.lambda1) != cat.compose(lpx.lambda1, sigma)) {
                rep.pass = false;
                rep.witness = "square fails at level " + std::to_string(n) + " generator " +
                              std::to_string(si);
                return rep;
            }
        }
    }
    return rep;
}

bool is_homotopy(HomotopyContext& ctx, const Homotopy& h, SearchBudget& budget) {
    const Category& cat = ctx.cat();
    if (h.f.src != h.g.src || h.f.dst != h.g.dst) throw err_type("parallel morphisms required");
    const auto& lp = ctx.lambda(h.f.src, budget);
    if (h.h.src != lp.prod.object || h.h.dst != h.f.dst)
        throw err_type("homotopy endpoints do not match X x F(1) -> Y");
    return cat.compose(h.h, lp.lambda0) == h.f && cat.compose(h.h, lp.lambda1) == h.g;
}

Homotopy constant_homotopy(HomotopyContext& ctx, const Mor& f, SearchBudget& budget) {
    const auto& lp = ctx.lambda(f.src, budget);
    Homotopy h{f, f, ctx.cat().compose(f, lp.prod.proj1)};
    if (!is_homotopy(ctx, h, budget))
        throw Error("internal-inconsistency", "constant homotopy failed its endpoint equations");
    return h;
}

Homotopy reverse_homotopy(HomotopyContext& ctx, const Homotopy& h, SearchBudget& budget) {
    if (!ctx.swap_witness())
        throw Error("axiom-3-unavailable", "no swap witness registered for F(1)");
    const Category& cat = ctx.cat();
    const auto& lp = ctx.lambda(h.f.src, budget);
    Mor id_swap = product_of_morphisms(cat, cat.identity(h.f.src), *ctx.swap_witness(), lp.prod,
                                       lp.prod, budget);
    Homotopy rev{h.g, h.f, cat.compose(h.h, id_swap)};
    if (!is_homotopy(ctx, rev, budget))
        throw Error("internal-inconsistency", "reversed homotopy failed its endpoint equations");
    return rev;
}

Homotopy concat_homotopy(HomotopyContext& ctx, const Homotopy& h, const Homotopy& k,
                         SearchBudget& budget) {
    if (!ctx.join_witness())
        throw Error("axiom-4-unavailable", "no colimit witness registered for the face span");
    if (h.g != k.f) throw err_type("concatenation needs a shared middle morphism");
    const Category& cat = ctx.cat();
    const Cosimplicial& F = ctx.F();
    int X = h.f.src, Y = h.f.dst;
    const auto& lp = ctx.lambda(X, budget);

    // X x F(0), with its canonical section of proj1
    auto pc = product(cat, X, F.cell(0), ctx.scope(), budget);
    if (!pc) throw err_product_not_found("no verified product X x F(0)");

    const Cocone& legs = *ctx.join_witness();  // left, center, right on F(1)
    Mor x_left = product_of_morphisms(cat, cat.identity(X), legs.legs[0], lp.prod, lp.prod, budget);
    Mor x_center = product_of_morphisms(cat, cat.identity(X), legs.legs[1], *pc, lp.prod, budget);
    Mor x_right = product_of_morphisms(cat, cat.identity(X), legs.legs[2], lp.prod, lp.prod, budget);

    // the cocone to factor: k on the left copy, h on the right, g in the middle
    Mor center_leg = cat.compose(h.g, pc->proj1);

    std::optional<Mor> found;
    std::int64_t n = cat.hom_size(lp.prod.object, Y);
    for (std::int64_t u = 0; u < n; ++u) {
        budget.spend();
        Mor um{lp.prod.object, Y, u};
        if (cat.compose(um, x_left) == k.h && cat.compose(um, x_center) == center_leg &&
            cat.compose(um, x_right) == h.h) {
            if (found)
                throw Error("factorization-not-unique",
                            "the producted span does not determine the concatenation");
            found = um;
        }
    }
    if (!found)
        throw err_colimit_not_found("the homotopy cocone does not factor through X x F(1)");
    Homotopy out{h.f, k.g, *found};
    if (!is_homotopy(ctx, out, budget))
        throw Error("internal-inconsistency",
                    "concatenation violated its endpoints; the join witness lacks compatible ends");
    return out;
}

Homotopy post_compose(HomotopyContext& ctx, const Mor& m, const Homotopy& h, SearchBudget& budget) {
    if (m.src != h.f.dst) throw err_type("post_compose endpoint mismatch");
    const Category& cat = ctx.cat();
    Homotopy out{cat.compose(m, h.f), cat.compose(m, h.g), cat.compose(m, h.h)};
    if (!is_homotopy(ctx, out, budget))
        throw Error("internal-inconsistency", "post-composed homotopy failed its equations");
    return out;
}

Homotopy pre_compose(HomotopyContext& ctx, const Homotopy& h, const Mor& m, SearchBudget& budget) {
    if (m.dst != h.f.src) throw err_type("pre_compose endpoint mismatch");
    const Category& cat = ctx.cat();
    Mor cross = ctx.cross_with_interval(m, budget);
    Homotopy out{cat.compose(h.f, m), cat.compose(h.g, m), cat.compose(h.h, cross)};
    if (!is_homotopy(ctx, out, budget))
        throw Error("internal-inconsistency", "pre-composed homotopy failed its equations");
    return out;
}

std::optional<Homotopy> homotopic(HomotopyContext& ctx, const Mor& f, const Mor& g,
                                  SearchBudget& budget) {
    if (f.src != g.src || f.dst != g.dst) throw err_type("parallel morphisms required");
    const Category& cat = ctx.cat();
    const auto& lp = ctx.lambda(f.src, budget);
    std::int64_t n = cat.hom_size(lp.prod.object, f.dst);
    for (std::int64_t i = 0; i < n; ++i) {
        budget.spend();
        Mor hm{lp.prod.object, f.dst, i};
        if (cat.compose(hm, lp.lambda0) == f && cat.compose(hm, lp.lambda1) == g)
            return Homotopy{f, g, hm};
    }
    return std::nullopt;
}

int ClassPartition::class_of(std::int64_t idx) const {
    for (size_t c = 0; c < classes.size(); ++c)
        if (std::binary_search(classes[c].begin(), classes[c].end(), idx)) return static_cast<int>(c);
    throw err_index_out_of_range("morphism index not covered by the partition");
}

ClassPartition homotopy_classes(HomotopyContext& ctx, int X, int Y, SearchBudget& budget) {
    const Category& cat = ctx.cat();
    std::int64_t n = cat.hom_size(X, Y);

    std::vector<std::vector<bool>> raw(static_cast<size_t>(n),
                                       std::vector<bool>(static_cast<size_t>(n), false));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            raw[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                homotopic(ctx, Mor{X, Y, i}, Mor{X, Y, j}, budget).has_value();

    // reflexive-symmetric-transitive closure by union-find
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (raw[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
                if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
            }

    ClassPartition part;
    part.src = X;
    part.dst = Y;
    std::map<int, int> root_to_class;
    for (std::int64_t i = 0; i < n; ++i) {
        int r = find(static_cast<int>(i));
        auto it = root_to_class.find(r);
        if (it == root_to_class.end()) {
            it = root_to_class.emplace(r, static_cast<int>(part.classes.size())).first;
            part.classes.emplace_back();
        }
        part.classes[static_cast<size_t>(it->second)].push_back(i);
    }

    // does the raw relation already coincide with its closure?
    part.raw_equals_closure = true;
    for (std::int64_t i = 0; i < n && part.raw_equals_closure; ++i)
        for (std::int64_t j = 0; j < n && part.raw_equals_closure; ++j) {
            bool same = find(static_cast<int>(i)) == find(static_cast<int>(j));
            if (raw[static_cast<size_t>(i)][static_cast<size_t>(j)] != same)
                part.raw_equals_closure = false;
        }
    return part;
}

QuotientCategory::QuotientCategory(HomotopyContext& ctx, SearchBudget& budget)
    : base_(&ctx.cat()) {
    const Category& cat = *base_;
    int n = cat.num_objects();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) parts_[{a, b}] = homotopy_classes(ctx, a, b, budget);

    // composition tables, representative independence checked on every pair
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const auto& pab = parts_[{a, b}];
                const auto& pbc = parts_[{b, c}];
                const auto& pac = parts_[{a, c}];
                auto& table = comp_[{a * n + b, b * n + c}];
                table.assign(pbc.classes.size(),
                             std::vector<std::int64_t>(pab.classes.size(), -1));
                for (size_t cg = 0; cg < pbc.classes.size(); ++cg)
                    for (size_t cf = 0; cf < pab.classes.size(); ++cf) {
                        int result = -1;
                        for (std::int64_t gi : pbc.classes[cg])
                            for (std::int64_t fi : pab.classes[cf]) {
                                budget.spend();
                                int cls = pac.class_of(cat.compose(Mor{b, c, gi}, Mor{a, b, fi}).idx);
                                if (result < 0) result = cls;
                                if (result != cls)
                                    throw Error("composition-ill-defined",
                                                "class composition depends on representatives (" +
                                                    cat.object_name(a) + "->" + cat.object_name(b) +
                                                    "->" + cat.object_name(c) + ")");
                            }
                        table[cg][cf] = result;
                    }
            }
}

int QuotientCategory::num_objects() const { return base_->num_objects(); }

std::string QuotientCategory::object_name(int obj) const { return base_->object_name(obj); }

std::int64_t QuotientCategory::hom_size(int src, int dst) const {
    return static_cast<std::int64_t>(parts_.at({src, dst}).classes.size());
}

Mor QuotientCategory::compose(const Mor& g, const Mor& f) const {
    if (f.dst != g.src) throw err_mismatch("quotient compose endpoint mismatch");
    int n = base_->num_objects();
    const auto& table = comp_.at({f.src * n + f.dst, g.src * n + g.dst});
    return Mor{f.src, g.dst, table[static_cast<size_t>(g.idx)][static_cast<size_t>(f.idx)]};
}

Mor QuotientCategory::identity(int obj) const {
    const auto& part = parts_.at({obj, obj});
    return Mor{obj, obj, part.class_of(base_->identity(obj).idx)};
}

const ClassPartition& QuotientCategory::partition(int src, int dst) const {
    return parts_.at({src, dst});
}

std::optional<Mor> find_homotopy_equivalence(HomotopyContext& ctx, const Mor& f,
                                             SearchBudget& budget) {
    const Category& cat = ctx.cat();
    std::int64_t n = cat.hom_size(f.dst, f.src);
    for (std::int64_t gi = 0; gi < n; ++gi) {
        budget.spend();
        Mor g{f.dst, f.src, gi};
        if (homotopic(ctx, cat.compose(f, g), cat.identity(f.dst), budget) &&
            homotopic(ctx, cat.compose(g, f), cat.identity(f.src), budget))
            return g;
    }
    return std::nullopt;
}

bool is_homotopy_equivalence(HomotopyContext& ctx, const Mor& f, SearchBudget& budget) {
    return find_homotopy_equivalence(ctx, f, budget).has_value();
}

std::optional<std::pair<Mor, Mor>> find_homotopy_equivalence_pair(HomotopyContext& ctx, int A,
                                                                  int B, SearchBudget& budget) {
    const Category& cat = ctx.cat();
    std::int64_t n = cat.hom_size(A, B);
    for (std::int64_t fi = 0; fi < n; ++fi) {
        Mor f{A, B, fi};
        auto g = find_homotopy_equivalence(ctx, f, budget);
        if (g) return std::make_pair(f, *g);
    }
    return std::nullopt;
}

bool is_contractible(HomotopyContext& ctx, int X, SearchBudget& budget) {
    const Category& cat = ctx.cat();
    const Cosimplicial& F = ctx.F();
    if (cat.hom_size(X, F.cell(0)) != 1) return false;
    Mor bang{X, F.cell(0), 0};
    std::int64_t n = cat.hom_size(F.cell(0), X);
    for (std::int64_t xi = 0; xi < n; ++xi) {
        budget.spend();
        Mor point{F.cell(0), X, xi};
        Mor constant = cat.compose(point, bang);
        if (homotopic(ctx, cat.identity(X), constant, budget)) return true;
    }
    return false;
}

}  // namespace homcat
