// Products and colimits with their universal properties verified by
// exhaustive enumeration: a candidate passes only when, for every object y
// in scope, composing with the candidate's legs is a bijection between
// hom(apex, y)-style data and the spans/cocones it must classify.
#pragma once

#include "homcat/category.hpp"

namespace homcat {

// Objects over which universal properties are quantified. Empty = every
// object of the category at call time.
struct UniversalityScope {
    std::vector<int> objects;

    std::vector<int> resolve(const Category& cat) const;
};

struct VerifyReport {
    bool pass = true;
    std::string witness;
};

// Universal property of a binary product: for every x in scope the map
// hom(x, p) -> hom(x, a) x hom(x, b), h |-> (proj1 o h, proj2 o h), is a
// bijection.
VerifyReport verify_product(const Category& cat, int a, int b, const BinaryProduct& p,
                            const UniversalityScope& scope, SearchBudget& budget);

// Canonical product from the instance hook, then verified. Returns nullopt
// when the instance offers no candidate or the candidate fails.
std::optional<BinaryProduct> product(const Category& cat, int a, int b,
                                     const UniversalityScope& scope, SearchBudget& budget);

// The unique h with proj1 o h = f and proj2 o h = g (hook, else search).
Mor pairing(const Category& cat, const Mor& f, const Mor& g, const BinaryProduct& p,
            SearchBudget& budget);

// f x g : src(f) x src(g) -> dst(f) x dst(g) against chosen product data.
Mor product_of_morphisms(const Category& cat, const Mor& f, const Mor& g,
                         const BinaryProduct& src_prod, const BinaryProduct& dst_prod,
                         SearchBudget& budget);

// all cocones over d with the given nadir, in deterministic order
std::vector<Cocone> enumerate_cocones(const Category& cat, const Diagram& d, int nadir,
                                      SearchBudget& budget);

VerifyReport verify_colimit(Category& cat, const Diagram& d, const ColimitResult& col,
                            const UniversalityScope& scope, SearchBudget& budget);

// Canonical colimit from the instance hook when available, otherwise a
// search over all objects and leg families; always verified before return.
std::optional<ColimitResult> colimit(Category& cat, const Diagram& d,
                                     const UniversalityScope& scope, SearchBudget& budget);

// The unique factorization of a cocone through a verified colimit.
Mor factor_through_colimit(const Category& cat, const Diagram& d, const ColimitResult& col,
                           const Cocone& cocone, SearchBudget& budget);

// mutually inverse pair (a -> b, b -> a), first in enumeration order
std::optional<std::pair<Mor, Mor>> find_isomorphism(const Category& cat, int a, int b,
                                                    SearchBudget& budget);

}  // namespace homcat
