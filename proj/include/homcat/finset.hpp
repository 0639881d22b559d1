// The category of finite sets {0,...,m-1} for m <= max_size, with all
// functions as morphisms. A function f : a -> b is addressed by the rank of
// its image tuple (f(0),...,f(|a|-1)) in lexicographic order, so nothing is
// ever stored: composition and enumeration are pure arithmetic.
#pragma once

#include "homcat/category.hpp"

namespace homcat {

class FinSetCategory : public Category {
  public:
    explicit FinSetCategory(int max_size);

    int num_objects() const override { return max_size_ + 1; }
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

    int size_of(int obj) const { return obj; }  // object index == cardinality
    int object_of_size(int m) const;

    std::vector<int> table_of(const Mor& m) const;           // image tuple
    Mor from_table(int src, int dst, const std::vector<int>& table) const;

    int max_size() const { return max_size_; }

  private:
    int max_size_;
};

}  // namespace homcat
