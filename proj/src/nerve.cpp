#include "homcat/nerve.hpp"

namespace homcat {

Nerve nerve(const Cosimplicial& F, int object, SearchBudget& budget) {
    const Category& cat = F.category();
    const int L = F.level();

    Nerve nv;
    nv.F = &F;
    nv.object = object;

    std::vector<int> sizes;
    for (int n = 0; n <= L; ++n) {
        std::int64_t sz = cat.hom_size(F.cell(n), object);
        budget.spend(sz);
        sizes.push_back(static_cast<int>(sz));
    }
    TruncSimplicialSet s(L, sizes, F.has_degeneracies());

    for (int n = 1; n <= L; ++n)
        for (int i = 0; i <= n; ++i) {
            Mor d = F.face(n, i);
            for (int k = 0; k < sizes[static_cast<size_t>(n)]; ++k) {
                Mor sigma{F.cell(n), object, k};
                s.set_face(n, i, k, static_cast<int>(cat.compose(sigma, d).idx));
            }
        }
    if (F.has_degeneracies())
        for (int n = 0; n < L; ++n)
            for (int i = 0; i <= n; ++i) {
                Mor sd = F.degeneracy(n, i);
                for (int k = 0; k < sizes[static_cast<size_t>(n)]; ++k) {
                    Mor sigma{F.cell(n), object, k};
                    s.set_degeneracy(n, i, k, static_cast<int>(cat.compose(sigma, sd).idx));
                }
            }

    s.validate();  // the contravariant identities, asserted independently
    nv.sset = std::move(s);
    return nv;
}

SimplicialMapData nerve_map(const Cosimplicial& F, const Mor& f, const Nerve& src,
                            const Nerve& dst) {
    if (src.object != f.src || dst.object != f.dst)
        throw err_mismatch("nerve_map endpoints do not match the nerves");
    const Category& cat = F.category();
    const int L = F.level();
    SimplicialMapData out;
    out.component.resize(static_cast<size_t>(L) + 1);
    for (int n = 0; n <= L; ++n) {
        out.component[static_cast<size_t>(n)].resize(static_cast<size_t>(src.sset.size(n)));
        for (int k = 0; k < src.sset.size(n); ++k) {
            Mor sigma{F.cell(n), src.object, k};
            out.component[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                static_cast<int>(cat.compose(f, sigma).idx);
        }
    }
    validate_simplicial_map(src.sset, dst.sset, out);
    return out;
}

BaseTransform base_transform(const Cosimplicial& F, const Nerve& nv) {
    const Category& cat = F.category();
    const int L = F.level();
    BaseTransform base;
    base.levels.resize(static_cast<size_t>(L));
    for (int n = 0; n < L; ++n) {
        Mor d0 = F.face(n + 1, 0);
        base.levels[static_cast<size_t>(n)].resize(static_cast<size_t>(nv.sset.size(n + 1)));
        for (int k = 0; k < nv.sset.size(n + 1); ++k) {
            Mor sigma{F.cell(n + 1), nv.object, k};
            base.levels[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                static_cast<int>(cat.compose(sigma, d0).idx);
        }
    }
    // naturality: precomposing with d_{n+1,i+1} then taking Base agrees with
    // Base then precomposing with d_{n,i}
    for (int n = 1; n < L; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k < nv.sset.size(n + 1); ++k) {
                int via_top = nv.sset.face(n + 1, i + 1, k);
                int lhs = base.levels[static_cast<size_t>(n - 1)][static_cast<size_t>(via_top)];
                int via_base = base.levels[static_cast<size_t>(n)][static_cast<size_t>(k)];
                int rhs = nv.sset.face(n, i, via_base);
                if (lhs != rhs)
                    throw Error("base-naturality",
                                "naturality square fails at n=" + std::to_string(n) +
                                    " i=" + std::to_string(i));
            }
    base.naturality_checked = true;
    return base;
}

}  // namespace homcat
