// A category with finitely many tracked objects and finite, enumerable
// hom-sets. Morphisms are addressed by (src, dst, rank) where rank indexes
// the canonical enumeration of hom(src, dst); equality of morphisms is
// equality of addresses, which every instance keeps extensional.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "homcat/error.hpp"

namespace homcat {

struct Mor {
    int src = -1;
    int dst = -1;
    std::int64_t idx = -1;

    friend bool operator==(const Mor&, const Mor&) = default;
    friend auto operator<=>(const Mor&, const Mor&) = default;
};

// Counts work done by exhaustive searches; throws once the limit is hit.
class SearchBudget {
  public:
    explicit SearchBudget(std::int64_t limit = kDefaultLimit) : limit_(limit) {}

    void spend(std::int64_t amount = 1) {
        used_ += amount;
        if (used_ > limit_)
            throw err_resource_limit("search budget of " + std::to_string(limit_) + " exhausted");
    }
    std::int64_t used() const { return used_; }
    std::int64_t limit() const { return limit_; }

    static constexpr std::int64_t kDefaultLimit = 10'000'000;

  private:
    std::int64_t limit_;
    std::int64_t used_ = 0;
};

struct BinaryProduct {
    int object = -1;
    Mor proj1, proj2;
};

// Finite diagram: nodes carry objects, edges carry morphisms between the
// objects at their endpoints.
struct Diagram {
    struct Edge {
        int from_node;
        int to_node;
        Mor mor;
    };
    std::vector<int> nodes;  // object indices
    std::vector<Edge> edges;
};

struct Cocone {
    int nadir = -1;
    std::vector<Mor> legs;  // one per diagram node
};

struct ColimitResult {
    int object = -1;
    Cocone cocone;
};

class Category {
  public:
    virtual ~Category() = default;

    virtual int num_objects() const = 0;
    virtual std::string object_name(int obj) const = 0;
    virtual std::int64_t hom_size(int src, int dst) const = 0;
    virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g after f
    virtual Mor identity(int obj) const = 0;
    virtual std::string mor_name(const Mor& m) const;

    // Canonical constructions an instance may provide; the generic operations
    // in limits.hpp verify whatever these return before trusting it. When the
    // hook is authoritative, a nullopt means the product genuinely does not
    // exist here and the blind search is skipped.
    virtual bool product_hook_is_authoritative() const { return false; }
    virtual std::optional<BinaryProduct> product_hook(int /*a*/, int /*b*/) const {
        return std::nullopt;
    }
    virtual std::optional<Mor> pairing_hook(const Mor& /*f*/, const Mor& /*g*/,
                                            const BinaryProduct& /*p*/) const {
        return std::nullopt;
    }
    virtual std::optional<ColimitResult> colimit_hook(const Diagram& /*d*/) { return std::nullopt; }

    Mor mor(int src, int dst, std::int64_t idx) const;
    void check_mor(const Mor& m) const;
};

struct LawReport {
    bool pass = true;
    std::string witness;
};

// Identity and associativity laws, checked by enumeration over the objects
// listed in scope (all objects when scope is empty).
LawReport verify_category_laws(const Category& cat, const std::vector<int>& scope = {},
                               SearchBudget budget = SearchBudget());

// Object t with |hom(a, t)| = 1 for every object a.
std::optional<int> find_terminal(const Category& cat);

// The unique morphism a -> terminal.
Mor terminal_map(const Category& cat, int a, int terminal);

}  // namespace homcat
