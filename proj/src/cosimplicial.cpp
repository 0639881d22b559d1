#include "homcat/cosimplicial.hpp"

#include <sstream>

#include "homcat/simplex.hpp"

namespace homcat {

Cosimplicial::Cosimplicial(const Category& cat, int level, std::vector<int> cells)
    : cat_(&cat), level_(level), cells_(std::move(cells)) {
    if (level_ < 1) throw err_index_out_of_range("cosimplicial objects need level >= 1");
    if (static_cast<int>(cells_.size()) != level_ + 1)
        throw err_mismatch("cells must list level+1 objects");
}

int Cosimplicial::cell(int n) const {
    if (n < 0 || n > level_) throw err_index_out_of_range("cell index outside truncation");
    return cells_[static_cast<size_t>(n)];
}

void Cosimplicial::set_face(int n, int i, const Mor& m) {
    if (n < 1 || n > level_ || i < 0 || i > n) throw err_index_out_of_range("face image indices");
    if (m.src != cell(n - 1) || m.dst != cell(n))
        throw err_mismatch("face image endpoints must be F(n-1) -> F(n)");
    cat_->check_mor(m);
    face_img_[{n, i}] = m;
}

void Cosimplicial::set_degeneracy(int n, int i, const Mor& m) {
    if (n < 0 || n >= level_ || i < 0 || i > n)
        throw err_index_out_of_range("degeneracy image indices");
    if (m.src != cell(n + 1) || m.dst != cell(n))
        throw err_mismatch("degeneracy image endpoints must be F(n+1) -> F(n)");
    cat_->check_mor(m);
    degen_img_[{n, i}] = m;
    has_degen_ = true;
}

Mor Cosimplicial::face(int n, int i) const {
    auto it = face_img_.find({n, i});
    if (it == face_img_.end())
        throw Error("missing-morphism",
                    "face image (" + std::to_string(n) + "," + std::to_string(i) + ") absent");
    return it->second;
}

Mor Cosimplicial::degeneracy(int n, int i) const {
    auto it = degen_img_.find({n, i});
    if (it == degen_img_.end())
        throw Error("missing-morphism",
                    "degeneracy image (" + std::to_string(n) + "," + std::to_string(i) + ") absent");
    return it->second;
}

Mor Cosimplicial::image(const MonotoneMap& phi) const {
    if (phi.source.n > level_ || phi.target.n > level_)
        throw err_index_out_of_range("monotone map exceeds the truncation");
    auto fac = epi_mono_factorize(phi);
    Mor cur = cat_->identity(cell(phi.source.n));
    int n = phi.source.n;
    // degeneracies innermost-largest first, then faces innermost-smallest first
    for (auto it = fac.degeneracy_indices.rbegin(); it != fac.degeneracy_indices.rend(); ++it) {
        cur = cat_->compose(degeneracy(n - 1, *it), cur);
        --n;
    }
    for (auto it = fac.face_indices.rbegin(); it != fac.face_indices.rend(); ++it) {
        cur = cat_->compose(face(n + 1, *it), cur);
        ++n;
    }
    return cur;
}

FunctorialityReport verify_functoriality(const Cosimplicial& F) {
    const Category& cat = F.category();
    FunctorialityReport rep;
    auto fail = [&](const std::string& id, int n, int i, int j) {
        rep.pass = false;
        std::ostringstream os;
        os << "identity " << id << " violated at n=" << n << " i=" << i << " j=" << j;
        rep.witness = os.str();
        return rep;
    };

    const int L = F.level();

    // face-face
    for (int n = 1; n + 1 <= L; ++n)
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 0; i < j; ++i)
                if (cat.compose(F.face(n + 1, j), F.face(n, i)) !=
                    cat.compose(F.face(n + 1, i), F.face(n, j - 1)))
                    return fail("face-face", n, i, j);

    if (!F.has_degeneracies()) return rep;

    // degeneracy-degeneracy
    for (int n = 0; n + 2 <= L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (cat.compose(F.degeneracy(n, j), F.degeneracy(n + 1, i)) !=
                    cat.compose(F.degeneracy(n, i), F.degeneracy(n + 1, j + 1)))
                    return fail("deg-deg", n, i, j);

    // mixed
    for (int n = 0; n + 1 <= L; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                Mor lhs = cat.compose(F.degeneracy(n, j), F.face(n + 1, i));
                if (i == j || i == j + 1) {
                    if (lhs != cat.identity(F.cell(n))) return fail("deg-face identity", n, i, j);
                } else if (i < j) {
                    if (lhs != cat.compose(F.face(n, i), F.degeneracy(n - 1, j - 1)))
                        return fail("deg-face i<j", n, i, j);
                } else {
                    if (lhs != cat.compose(F.face(n, i - 1), F.degeneracy(n - 1, j)))
                        return fail("deg-face i>j+1", n, i, j);
                }
            }
    return rep;
}

std::pair<AxiomReport, AxiomReport> check_axiom_1_2(const Cosimplicial& F,
                                                    const UniversalityScope& scope,
                                                    SearchBudget& budget) {
    const Category& cat = F.category();
    AxiomReport a1, a2;
    a1.axiom = "A1";
    a2.axiom = "A2";

    auto term = find_terminal(cat);
    if (!term) {
        a1.status = AxiomStatus::Fail;
        a1.detail = "no terminal object";
        a2.status = AxiomStatus::NotCheckable;
        a2.detail = "depends on A1";
        return {a1, a2};
    }
    a1.terminal = *term;

    // finite products: F(n) x X for all cells and all scope objects
    std::string missing;
    for (int n = 0; n <= F.level() && missing.empty(); ++n)
        for (int x : scope.resolve(cat)) {
            auto p = product(cat, F.cell(n), x, scope, budget);
            if (!p) {
                missing = "no verified product " + cat.object_name(F.cell(n)) + " x " +
                          cat.object_name(x);
                break;
            }
        }
    if (!missing.empty()) {
        a1.status = AxiomStatus::Fail;
        a1.detail = missing;
    } else {
        a1.status = AxiomStatus::Pass;
        a1.detail = "terminal object " + cat.object_name(*term) + ", products verified on scope";
    }

    // A2: F(0) must itself satisfy the terminal property
    bool f0_terminal = true;
    for (int a = 0; a < cat.num_objects() && f0_terminal; ++a)
        if (cat.hom_size(a, F.cell(0)) != 1) f0_terminal = false;
    if (f0_terminal) {
        a2.status = AxiomStatus::Pass;
        a2.detail = "F(0) = " + cat.object_name(F.cell(0)) + " is terminal";
    } else {
        a2.status = AxiomStatus::Fail;
        a2.detail = "F(0) = " + cat.object_name(F.cell(0)) + " is not terminal";
    }
    return {a1, a2};
}

AxiomReport check_axiom_swap(const Cosimplicial& F, SearchBudget& budget) {
    const Category& cat = F.category();
    AxiomReport rep;
    rep.axiom = "A3";

    int f1 = F.cell(1);
    Mor d0 = F.face(1, 0), d1 = F.face(1, 1);
    std::int64_t n = cat.hom_size(f1, f1);
    for (std::int64_t wi = 0; wi < n; ++wi) {
        Mor w{f1, f1, wi};
        budget.spend();
        std::optional<Mor> winv;
        for (std::int64_t vi = 0; vi < n; ++vi) {
            Mor v{f1, f1, vi};
            if (cat.compose(v, w) == cat.identity(f1) && cat.compose(w, v) == cat.identity(f1)) {
                winv = v;
                break;
            }
        }
        if (!winv) continue;
        if (cat.compose(w, d0) == d1 && cat.compose(*winv, d1) == d0) {
            rep.status = AxiomStatus::Pass;
            rep.swap = w;
            rep.swap_involutive = (cat.compose(w, w) == cat.identity(f1));
            rep.detail = "swap = " + cat.mor_name(w) +
                         (rep.swap_involutive ? " (involutive)" : " (not involutive)");
            return rep;
        }
    }
    rep.status = AxiomStatus::Fail;
    rep.detail = "no automorphism of F(1) interchanges the two face images";
    return rep;
}

Diagram join_span(const Cosimplicial& F) {
    // nodes: left F(1), middle F(0), right F(1); edges are the level-1 faces
    Diagram d;
    d.nodes = {F.cell(1), F.cell(0), F.cell(1)};
    d.edges.push_back({1, 0, F.face(1, 0)});
    d.edges.push_back({1, 2, F.face(1, 1)});
    return d;
}

AxiomReport check_axiom_join(const Cosimplicial& F, Category& cat, const UniversalityScope& scope,
                             SearchBudget& budget) {
    AxiomReport rep;
    rep.axiom = "A4";

    Diagram span = join_span(F);
    auto col = colimit(cat, span, scope, budget);
    if (!col) {
        rep.status = AxiomStatus::Fail;
        rep.detail = "the face span has no verified colimit";
        return rep;
    }

    int f1 = F.cell(1);
    auto iso = find_isomorphism(cat, col->object, f1, budget);
    if (!iso) {
        rep.status = AxiomStatus::Fail;
        std::ostringstream os;
        os << "colimit apex " << cat.object_name(col->object) << " is not isomorphic to F(1)";
        rep.detail = os.str();
        rep.join_legs = col->cocone;  // witness of the failure
        return rep;
    }

    Mor d0 = F.face(1, 0), d1 = F.face(1, 1);
    // transport the cocone onto F(1) along each isomorphism; prefer a witness
    // whose free ends agree with the face images of F(1)
    std::optional<Cocone> first_valid;
    std::int64_t nf = cat.hom_size(col->object, f1);
    for (std::int64_t fi = 0; fi < nf; ++fi) {
        Mor phi{col->object, f1, fi};
        budget.spend();
        bool is_iso = false;
        for (std::int64_t gi = 0; gi < cat.hom_size(f1, col->object); ++gi) {
            Mor psi{f1, col->object, gi};
            if (cat.compose(psi, phi) == cat.identity(col->object) &&
                cat.compose(phi, psi) == cat.identity(f1)) {
                is_iso = true;
                break;
            }
        }
        if (!is_iso) continue;
        Cocone moved;
        moved.nadir = f1;
        for (const auto& leg : col->cocone.legs) moved.legs.push_back(cat.compose(phi, leg));
        if (!first_valid) first_valid = moved;
        const Mor& left = moved.legs[0];
        const Mor& right = moved.legs[2];
        if (cat.compose(left, d1) == d1 && cat.compose(right, d0) == d0) {
            rep.status = AxiomStatus::Pass;
            rep.join_legs = moved;
            rep.join_endpoint_compatible = true;
            rep.detail = "colimit is F(1); legs left/center/right have compatible free ends";
            return rep;
        }
    }
    rep.status = AxiomStatus::Pass;
    rep.join_legs = *first_valid;
    rep.join_endpoint_compatible = false;
    rep.detail = "colimit is F(1); no endpoint-compatible leg normalization found";
    return rep;
}

}  // namespace homcat
