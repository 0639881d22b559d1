// The homotopy relation H : X x F(1) -> Y restricting to f and g along the
// two endpoint inclusions, the constructions witnessing its structure
// (constant, reversed, concatenated, whiskered homotopies), homotopy classes
// and the quotient category, homotopy equivalence, contractibility.
#pragma once

#include <map>

#include "homcat/cosimplicial.hpp"

namespace homcat {

struct LambdaPair {
    int object = -1;          // X
    BinaryProduct prod;       // X x F(1)
    Mor bang;                 // X -> F(0)
    Mor lambda0, lambda1;     // X -> X x F(1), through F(d_{1,0}) resp. F(d_{1,1})
};

struct Homotopy {
    Mor f, g;  // endpoints, f along lambda0, g along lambda1
    Mor h;     // X x F(1) -> Y
};

// Caches one lambda pair per object and carries the axiom witnesses the
// higher constructions depend on.
class HomotopyContext {
  public:
    HomotopyContext(const Cosimplicial& F, UniversalityScope scope);

    const Cosimplicial& F() const { return *f_; }
    const Category& cat() const { return f_->category(); }
    const UniversalityScope& scope() const { return scope_; }

    const LambdaPair& lambda(int object, SearchBudget& budget);

    void set_swap(const Mor& w) { swap_ = w; }
    void set_join(const Cocone& legs) { join_ = legs; }
    const std::optional<Mor>& swap_witness() const { return swap_; }
    const std::optional<Cocone>& join_witness() const { return join_; }

    // sigma x id_{F(1)} between the cached products
    Mor cross_with_interval(const Mor& sigma, SearchBudget& budget);

  private:
    const Cosimplicial* f_;
    UniversalityScope scope_;
    std::map<int, LambdaPair> lambdas_;
    std::optional<Mor> swap_;
    std::optional<Cocone> join_;
};

// construction asserts the defining projection equations and the
// compatibility squares lambda_j o sigma = (sigma x id) o lambda_j of F(0)
LambdaPair make_lambda_pair(HomotopyContext& ctx, int object, SearchBudget& budget);

// the level-n generalization of the compatibility square, checked for every
// generator sigma : F(n) -> X with n <= max_level
VerifyReport verify_lambda_naturality(HomotopyContext& ctx, int X, int max_level,
                                      SearchBudget& budget);

bool is_homotopy(HomotopyContext& ctx, const Homotopy& h, SearchBudget& budget);

Homotopy constant_homotopy(HomotopyContext& ctx, const Mor& f, SearchBudget& budget);

// requires the swap witness; exchanges the endpoint roles
Homotopy reverse_homotopy(HomotopyContext& ctx, const Homotopy& h, SearchBudget& budget);

// requires the join witness; glues h : f => g with k : g => l into f => l
Homotopy concat_homotopy(HomotopyContext& ctx, const Homotopy& h, const Homotopy& k,
                         SearchBudget& budget);

Homotopy post_compose(HomotopyContext& ctx, const Mor& m, const Homotopy& h, SearchBudget& budget);
Homotopy pre_compose(HomotopyContext& ctx, const Homotopy& h, const Mor& m, SearchBudget& budget);

// first H in canonical order with the required restrictions, if any
std::optional<Homotopy> homotopic(HomotopyContext& ctx, const Mor& f, const Mor& g,
                                  SearchBudget& budget);

struct ClassPartition {
    int src = -1, dst = -1;
    std::vector<std::vector<std::int64_t>> classes;  // sorted morphism indices
    bool raw_equals_closure = false;

    int class_of(std::int64_t idx) const;
};

ClassPartition homotopy_classes(HomotopyContext& ctx, int X, int Y, SearchBudget& budget);

// hom-sets become the partitions; composition via representatives, checked
// independent of the choice on every pair
class QuotientCategory : public Category {
  public:
    QuotientCategory(HomotopyContext& ctx, SearchBudget& budget);

    int num_objects() const override;
    std::string object_name(int obj) const override;
    std::int64_t hom_size(int src, int dst) const override;
    Mor compose(const Mor& g, const Mor& f) const override;
    Mor identity(int obj) const override;

    const ClassPartition& partition(int src, int dst) const;

  private:
    const Category* base_;
    std::map<std::pair<int, int>, ClassPartition> parts_;
    std::map<std::pair<int, int>, std::vector<std::vector<std::int64_t>>> comp_;  // class tables
};

std::optional<Mor> find_homotopy_equivalence(HomotopyContext& ctx, const Mor& f,
                                             SearchBudget& budget);
bool is_homotopy_equivalence(HomotopyContext& ctx, const Mor& f, SearchBudget& budget);
std::optional<std::pair<Mor, Mor>> find_homotopy_equivalence_pair(HomotopyContext& ctx, int A,
                                                                  int B, SearchBudget& budget);

bool is_contractible(HomotopyContext& ctx, int X, SearchBudget& budget);

}  // namespace homcat
