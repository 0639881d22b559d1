#include "homcat/category.hpp"

#include <sstream>

namespace homcat {

std::string Category::mor_name(const Mor& m) const {
    std::ostringstream os;
    os << object_name(m.src) << "->" << object_name(m.dst) << "#" << m.idx;
    return os.str();
}

Mor Category::mor(int src, int dst, std::int64_t idx) const {
    Mor m{src, dst, idx};
    check_mor(m);
    return m;
}

void Category::check_mor(const Mor& m) const {
    if (m.src < 0 || m.src >= num_objects() || m.dst < 0 || m.dst >= num_objects())
        throw err_index_out_of_range("morphism endpoints outside object range");
    if (m.idx < 0 || m.idx >= hom_size(m.src, m.dst))
        throw err_index_out_of_range("morphism index outside hom-set");
}

LawReport verify_category_laws(const Category& cat, const std::vector<int>& scope_in,
                               SearchBudget budget) {
    std::vector<int> scope = scope_in;
    if (scope.empty())
        for (int i = 0; i < cat.num_objects(); ++i) scope.push_back(i);

    LawReport rep;

    // identity laws
    for (int a : scope)
        for (int b : scope) {
            std::int64_t n = cat.hom_size(a, b);
            for (std::int64_t i = 0; i < n; ++i) {
                budget.spend();
                Mor f{a, b, i};
                if (cat.compose(cat.identity(b), f) != f) {
                    rep.pass = false;
                    rep.witness = "id_dst o f != f for f = " + cat.mor_name(f);
                    return rep;
                }
                if (cat.compose(f, cat.identity(a)) != f) {
                    rep.pass = false;
                    rep.witness = "f o id_src != f for f = " + cat.mor_name(f);
                    return rep;
                }
            }
        }

    // associativity on all composable triples within scope
    for (int a : scope)
        for (int b : scope)
            for (int c : scope)
                for (int d : scope) {
                    std::int64_t nf = cat.hom_size(a, b), ng = cat.hom_size(b, c),
                                 nh = cat.hom_size(c, d);
                    for (std::int64_t fi = 0; fi < nf; ++fi)
                        for (std::int64_t gi = 0; gi < ng; ++gi)
                            for (std::int64_t hi = 0; hi < nh; ++hi) {
                                budget.spend();
                                Mor f{a, b, fi}, g{b, c, gi}, h{c, d, hi};
                                Mor lhs = cat.compose(cat.compose(h, g), f);
                                Mor rhs = cat.compose(h, cat.compose(g, f));
                                if (lhs != rhs) {
                                    rep.pass = false;
                                    rep.witness = "associativity fails on (" + cat.mor_name(h) +
                                                  ", " + cat.mor_name(g) + ", " + cat.mor_name(f) +
                                                  ")";
                                    return rep;
                                }
                            }
                }
    return rep;
}

std::optional<int> find_terminal(const Category& cat) {
    for (int t = 0; t < cat.num_objects(); ++t) {
        bool ok = true;
        for (int a = 0; a < cat.num_objects() && ok; ++a)
            if (cat.hom_size(a, t) != 1) ok = false;
        if (ok) return t;
    }
    return std::nullopt;
}

Mor terminal_map(const Category& cat, int a, int terminal) {
    if (cat.hom_size(a, terminal) != 1)
        throw err_mismatch("terminal_map: target is not terminal for " + cat.object_name(a));
    return Mor{a, terminal, 0};
}

}  // namespace homcat
