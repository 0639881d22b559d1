// A category given explicitly by tables: declared objects, morphisms,
// identities and a composition table. Every law is checkable; nothing is
// assumed about the entries beyond what verify_category_laws confirms.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "homcat/category.hpp"

namespace homcat {

class TableCategory : public Category {
  public:
    struct MorDecl {
        std::string id;
        std::string src;
        std::string dst;
    };

    TableCategory(std::vector<std::string> objects, std::vector<MorDecl> morphisms,
                  std::vector<std::array<std::string, 3>> compose_entries,
                  std::map<std::string, std::string> identities);

    static TableCategory from_json_text(const std::string& text);
    static TableCategory from_json_file(const std::string& path);

    int num_objects() const override { return static_cast<int>(object_names_.size()); }
    std::string object_name(int obj) const override { return object_names_.at(static_cast<size_t>(obj)); }
    std::int64_t hom_size(int src, int dst) const override;
    Mor compose(const Mor& g, const Mor& f) const override;
    Mor identity(int obj) const override;
    std::string mor_name(const Mor& m) const override;

    int object_index(const std::string& name) const;
    Mor mor_by_id(const std::string& id) const;
    const std::string& mor_id(const Mor& m) const;

  private:
    struct MorInfo {
        std::string id;
        int src, dst;
        std::int64_t rank;  // position within hom(src, dst)
    };

    std::vector<std::string> object_names_;
    std::vector<MorInfo> mors_;                           // declaration order
    std::map<std::string, size_t> mor_by_id_;             // id -> mors_ index
    std::map<std::pair<int, int>, std::vector<size_t>> hom_;  // (src,dst) -> mors_ indices
    std::map<std::pair<size_t, size_t>, size_t> comp_;    // (g,f) -> g o f
    std::vector<size_t> identity_;                        // per object

    size_t global_of(const Mor& m) const;
    Mor mor_of_global(size_t g) const;
};

}  // namespace homcat
