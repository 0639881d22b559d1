// The category of truncated simplicial sets at a fixed level, restricted to
// a registry of explicitly constructed objects. Morphisms are all levelwise
// maps commuting with faces and degeneracies, enumerated by backtracking and
// cached per hom-set. The registry grows as products and colimits are built;
// queries never mutate what is already registered.
#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>

#include "homcat/category.hpp"
#include "homcat/sset.hpp"

namespace homcat {

class SSetCategory : public Category {
  public:
    explicit SSetCategory(int level) : level_(level) {}

    int num_objects() const override;
    std::string object_name(int obj) const override;
    std::int64_t hom_size(int src, int dst) const override;
    Mor compose(const Mor& g, const Mor& f) const override;
    Mor identity(int obj) const override;
    std::string mor_name(const Mor& m) const override;

    bool product_hook_is_authoritative() const override { return true; }
    std::optional<BinaryProduct> product_hook(int a, int b) const override;
    std::optional<Mor> pairing_hook(const Mor& f, const Mor& g,
                                    const BinaryProduct& p) const override;
    std::optional<ColimitResult> colimit_hook(const Diagram& d) override;

    int level() const { return level_; }

    // Registers the object (deduplicating structurally equal ones) and
    // returns its index.
    int ensure_object(const TruncSimplicialSet& x, const std::string& name);
    std::optional<int> find_object(const TruncSimplicialSet& x) const;

    const TruncSimplicialSet& object(int obj) const;

    const SimplicialMapData& map_data(const Mor& m) const;
    Mor from_map_data(int src, int dst, const SimplicialMapData& f) const;

    // convenience: image of the top identity simplex under the Yoneda view
    int level_component(const Mor& m, int n, int simplex) const;

  private:
    int level_;
    mutable std::mutex mu_;
    std::deque<TruncSimplicialSet> objects_;  // reference-stable under growth
    std::vector<std::string> names_;
    std::map<std::string, int> by_key_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const std::vector<SimplicialMapData>>>
        hom_cache_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const std::map<SimplicialMapData, std::int64_t>>>
        hom_index_;

    std::shared_ptr<const std::vector<SimplicialMapData>> hom_list(int src, int dst) const;
    std::shared_ptr<const std::map<SimplicialMapData, std::int64_t>> hom_lookup(int src,
                                                                                int dst) const;
};

}  // namespace homcat
