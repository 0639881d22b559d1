#include "homcat/finset.hpp"

#include <numeric>
#include <sstream>

namespace homcat {

FinSetCategory::FinSetCategory(int max_size) : max_size_(max_size) {
    if (max_size < 1) throw err_index_out_of_range("FinSet needs max_size >= 1");
}

std::string FinSetCategory::object_name(int obj) const {
    return "set:" + std::to_string(obj);
}

int FinSetCategory::object_of_size(int m) const {
    if (m < 0 || m > max_size_)
        throw err_index_out_of_range("no FinSet object of size " + std::to_string(m));
    return m;
}

std::int64_t FinSetCategory::hom_size(int src, int dst) const {
    // |dst|^|src|; the empty source has exactly the empty function
    if (src == 0) return 1;
    if (dst == 0) return 0;
    std::int64_t n = 1;
    for (int i = 0; i < src; ++i) n *= dst;
    return n;
}

std::vector<int> FinSetCategory::table_of(const Mor& m) const {
    check_mor(m);
    std::vector<int> t(static_cast<size_t>(m.src));
    std::int64_t idx = m.idx;
    for (int i = m.src - 1; i >= 0; --i) {
        t[static_cast<size_t>(i)] = static_cast<int>(idx % m.dst);
        idx /= m.dst;
    }
    return t;
}

Mor FinSetCategory::from_table(int src, int dst, const std::vector<int>& table) const {
    if (static_cast<int>(table.size()) != src)
        throw err_mismatch("function table length must equal source size");
    std::int64_t idx = 0;
    for (int v : table) {
        if (v < 0 || v >= dst) throw err_index_out_of_range("function value outside target set");
        idx = idx * dst + v;
    }
    return Mor{src, dst, idx};
}

Mor FinSetCategory::compose(const Mor& g, const Mor& f) const {
    if (f.dst != g.src) throw err_mismatch("FinSet compose endpoint mismatch");
    auto tf = table_of(f);
    auto tg = table_of(g);
    std::vector<int> t(tf.size());
    for (size_t i = 0; i < tf.size(); ++i) t[i] = tg[static_cast<size_t>(tf[i])];
    return from_table(f.src, g.dst, t);
}

Mor FinSetCategory::identity(int obj) const {
    std::vector<int> t(static_cast<size_t>(obj));
    std::iota(t.begin(), t.end(), 0);
    return from_table(obj, obj, t);
}

std::string FinSetCategory::mor_name(const Mor& m) const {
    auto t = table_of(m);
    std::ostringstream os;
    os << object_name(m.src) << "->" << object_name(m.dst) << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

std::optional<BinaryProduct> FinSetCategory::product_hook(int a, int b) const {
    // pair (x, y) encoded as x*|b| + y
    std::int64_t size = std::int64_t(a) * b;
    if (size > max_size_) return std::nullopt;
    int p = static_cast<int>(size);
    std::vector<int> t1(static_cast<size_t>(p)), t2(static_cast<size_t>(p));
    for (int e = 0; e < p; ++e) {
        t1[static_cast<size_t>(e)] = e / b;
        t2[static_cast<size_t>(e)] = e % b;
    }
    BinaryProduct prod;
    prod.object = p;
    prod.proj1 = from_table(p, a, t1);
    prod.proj2 = from_table(p, b, t2);
    return prod;
}

std::optional<Mor> FinSetCategory::pairing_hook(const Mor& f, const Mor& g,
                                                const BinaryProduct& p) const {
    if (f.src != g.src) throw err_mismatch("pairing: sources differ");
    int b = p.proj2.dst;
    auto tf = table_of(f);
    auto tg = table_of(g);
    std::vector<int> t(tf.size());
    for (size_t i = 0; i < tf.size(); ++i) t[i] = tf[i] * b + tg[i];
    return from_table(f.src, p.object, t);
}

std::optional<ColimitResult> FinSetCategory::colimit_hook(const Diagram& d) {
    // quotient of the disjoint union by the relations generated by the edges
    std::vector<int> offset(d.nodes.size() + 1, 0);
    for (size_t k = 0; k < d.nodes.size(); ++k)
        offset[k + 1] = offset[k] + d.nodes[k];
    int total = offset[d.nodes.size()];

    std::vector<int> parent(static_cast<size_t>(total));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[parent[static_cast<size_t>(x)]];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    };

    for (const auto& e : d.edges) {
        auto t = table_of(e.mor);
        for (int x = 0; x < d.nodes[static_cast<size_t>(e.from_node)]; ++x)
            unite(offset[static_cast<size_t>(e.from_node)] + x,
                  offset[static_cast<size_t>(e.to_node)] + t[static_cast<size_t>(x)]);
    }

    // classes numbered by first appearance
    std::vector<int> label(static_cast<size_t>(total), -1);
    int classes = 0;
    for (int x = 0; x < total; ++x) {
        int r = find(x);
        if (label[static_cast<size_t>(r)] < 0) label[static_cast<size_t>(r)] = classes++;
        label[static_cast<size_t>(x)] = label[static_cast<size_t>(r)];
    }
    if (classes > max_size_) return std::nullopt;

    ColimitResult res;
    res.object = classes;
    res.cocone.nadir = classes;
    for (size_t k = 0; k < d.nodes.size(); ++k) {
        std::vector<int> t(static_cast<size_t>(d.nodes[k]));
        for (int x = 0; x < d.nodes[k]; ++x)
            t[static_cast<size_t>(x)] = label[static_cast<size_t>(offset[k] + x)];
        res.cocone.legs.push_back(from_table(d.nodes[k], classes, t));
    }
    return res;
}

}  // namespace homcat
