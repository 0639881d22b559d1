// Ready-made instances: the finite-set category with the standard ordinal
// cells, the truncated simplicial-set category with the representable cells,
// and table categories loaded from files (including the degenerate-interval
// fixture that satisfies all five axioms at once).
#pragma once

#include <memory>

#include "homcat/convexity.hpp"
#include "homcat/cosimplicial.hpp"
#include "homcat/finset.hpp"
#include "homcat/sset_category.hpp"
#include "homcat/table_category.hpp"

namespace homcat {

struct FinSetInstance {
    std::unique_ptr<FinSetCategory> cat;
    std::unique_ptr<Cosimplicial> F;
    UniversalityScope scope;  // product verification quantifies over these
};

// cells F(n) = {0,...,n}; face and degeneracy images are the evaluation
// tables of the generator formulas
FinSetInstance make_finset_instance(int max_size, int level);

struct SSetInstance {
    std::unique_ptr<SSetCategory> cat;
    std::unique_ptr<Cosimplicial> F;
    UniversalityScope scope;
    std::map<std::string, int> named;  // corpus objects by name
};

// cells F(n) = Delta[n]; the corpus registers the boundaries, the spine, the
// pinched circle and the two-point object alongside the representables
SSetInstance make_sset_instance(int level);

// the simplicial map Delta[src_m] -> Delta[dst_m] classified by psi
Mor representable_map(const SSetCategory& cat, int src_obj, int dst_obj, int src_m, int dst_m,
                      const MonotoneMap& psi);

struct TableInstance {
    std::unique_ptr<TableCategory> cat;
    std::unique_ptr<Cosimplicial> F;
    UniversalityScope scope;
};

// table category plus a cosimplicial spec, both from JSON
TableInstance make_table_instance(const std::string& category_json_text,
                                  const std::string& cosimplicial_json_text);

// all five axioms hold: F(1) = F(0) = the terminal object of a three-object
// table with a two-element set A and a hom-empty witness object W
extern const char* kDegenerateIntervalCategoryJson;
extern const char* kDegenerateIntervalCosimplicialJson;
TableInstance make_degenerate_interval_fixture(int level);

// cone providers for Axiom 5 on the built-in instances
ConeProvider finset_cone_provider(const FinSetInstance& inst, int level);
ConeProvider sset_cone_provider(const SSetInstance& inst, int level);
ConeProvider table_search_cone_provider(const TableInstance& inst);

// parse a cosimplicial spec against an existing category; object references
// are resolved by resolve_object, morphism references are hom indices or,
// when resolve_mor is given, instance-specific ids
Cosimplicial cosimplicial_from_json_text(
    const Category& cat, const std::string& text,
    const std::function<int(const std::string&)>& resolve_object,
    const std::function<Mor(const std::string&)>* resolve_mor = nullptr);

}  // namespace homcat
