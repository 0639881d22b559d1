// The nerve of an object: level n holds hom(F(n), X) in canonical order,
// faces act by precomposition with the face images, degeneracies likewise
// when the cosimplicial object carries them.
#pragma once

#include "homcat/cosimplicial.hpp"
#include "homcat/sset.hpp"

namespace homcat {

struct Nerve {
    const Cosimplicial* F = nullptr;
    int object = -1;
    TruncSimplicialSet sset;

    // the morphism behind the k-th n-simplex
    Mor simplex(int n, std::int64_t k) const { return Mor{F->cell(n), object, k}; }
    std::int64_t index_of(const Mor& m) const { return m.idx; }
};

Nerve nerve(const Cosimplicial& F, int object, SearchBudget& budget);

// levelwise postcomposition with f; functorial in f
SimplicialMapData nerve_map(const Cosimplicial& F, const Mor& f, const Nerve& src,
                            const Nerve& dst);

// Base_n : hom(F(n+1), X) -> hom(F(n), X), right-composition with the zeroth
// faces; construction checks the naturality squares against all shifted
// faces exhaustively.
struct BaseTransform {
    std::vector<std::vector<int>> levels;  // levels[n][k] for 0 <= n < L
    bool naturality_checked = false;
};

BaseTransform base_transform(const Cosimplicial& F, const Nerve& nv);

}  // namespace homcat
