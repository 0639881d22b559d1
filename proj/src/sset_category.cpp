#include "homcat/sset_category.hpp"

#include <numeric>

namespace homcat {

int SSetCategory::num_objects() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(objects_.size());
}

std::string SSetCategory::object_name(int obj) const {
    std::lock_guard<std::mutex> lock(mu_);
    return names_.at(static_cast<size_t>(obj));
}

const TruncSimplicialSet& SSetCategory::object(int obj) const {
    std::lock_guard<std::mutex> lock(mu_);
    return objects_.at(static_cast<size_t>(obj));
}

int SSetCategory::ensure_object(const TruncSimplicialSet& x, const std::string& name) {
    if (x.level() != level_) throw err_mismatch("object truncation level differs from category");
    if (!x.has_degeneracies())
        throw Error("degeneracies-missing",
                    "the simplicial-set instance tracks full simplicial sets");
    x.validate();
    std::lock_guard<std::mutex> lock(mu_);
    auto key = x.structural_key();
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;
    int idx = static_cast<int>(objects_.size());
    objects_.push_back(x);
    names_.push_back(name);
    by_key_[key] = idx;
    return idx;
}

std::optional<int> SSetCategory::find_object(const TruncSimplicialSet& x) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_key_.find(x.structural_key());
    if (it == by_key_.end()) return std::nullopt;
    return it->second;
}

std::shared_ptr<const std::vector<SimplicialMapData>> SSetCategory::hom_list(int src,
                                                                             int dst) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = hom_cache_.find({src, dst});
        if (it != hom_cache_.end()) return it->second;
    }
    auto maps = std::make_shared<std::vector<SimplicialMapData>>(
        enumerate_simplicial_maps(object(src), object(dst)));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = hom_cache_.emplace(std::make_pair(src, dst), maps);
    return it->second;
}

std::shared_ptr<const std::map<SimplicialMapData, std::int64_t>> SSetCategory::hom_lookup(
    int src, int dst) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = hom_index_.find({src, dst});
        if (it != hom_index_.end()) return it->second;
    }
    auto list = hom_list(src, dst);
    auto index = std::make_shared<std::map<SimplicialMapData, std::int64_t>>();
    for (size_t i = 0; i < list->size(); ++i) (*index)[(*list)[i]] = static_cast<std::int64_t>(i);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = hom_index_.emplace(std::make_pair(src, dst), index);
    return it->second;
}

std::int64_t SSetCategory::hom_size(int src, int dst) const {
    return static_cast<std::int64_t>(hom_list(src, dst)->size());
}

const SimplicialMapData& SSetCategory::map_data(const Mor& m) const {
    auto list = hom_list(m.src, m.dst);
    if (m.idx < 0 || m.idx >= static_cast<std::int64_t>(list->size()))
        throw err_index_out_of_range("morphism index outside hom-set");
    return (*list)[static_cast<size_t>(m.idx)];
}

Mor SSetCategory::from_map_data(int src, int dst, const SimplicialMapData& f) const {
    auto index = hom_lookup(src, dst);
    auto it = index->find(f);
    if (it == index->end())
        throw err_mismatch("map data is not a simplicial map between the given objects");
    return Mor{src, dst, it->second};
}

Mor SSetCategory::compose(const Mor& g, const Mor& f) const {
    if (f.dst != g.src) throw err_mismatch("sset compose endpoint mismatch");
    return from_map_data(f.src, g.dst, compose_simplicial_maps(map_data(g), map_data(f)));
}

Mor SSetCategory::identity(int obj) const {
    return from_map_data(obj, obj, sset_identity_map(object(obj)));
}

std::string SSetCategory::mor_name(const Mor& m) const {
    return object_name(m.src) + "->" + object_name(m.dst) + "#" + std::to_string(m.idx);
}

int SSetCategory::level_component(const Mor& m, int n, int simplex) const {
    return map_data(m).component.at(static_cast<size_t>(n)).at(static_cast<size_t>(simplex));
}

std::optional<BinaryProduct> SSetCategory::product_hook(int a, int b) const {
    TruncSimplicialSet prod = sset_product(object(a), object(b));
    auto* self = const_cast<SSetCategory*>(this);
    int p = self->ensure_object(prod, "(" + object_name(a) + "x" + object_name(b) + ")");

    SimplicialMapData p1, p2;
    p1.component.resize(static_cast<size_t>(level_) + 1);
    p2.component.resize(static_cast<size_t>(level_) + 1);
    const auto& xb = object(b);
    for (int n = 0; n <= level_; ++n) {
        int bn = xb.size(n);
        p1.component[static_cast<size_t>(n)].resize(static_cast<size_t>(prod.size(n)));
        p2.component[static_cast<size_t>(n)].resize(static_cast<size_t>(prod.size(n)));
        for (int k = 0; k < prod.size(n); ++k) {
            p1.component[static_cast<size_t>(n)][static_cast<size_t>(k)] = k / bn;
            p2.component[static_cast<size_t>(n)][static_cast<size_t>(k)] = k % bn;
        }
    }
    BinaryProduct out;
    out.object = p;
    out.proj1 = from_map_data(p, a, p1);
    out.proj2 = from_map_data(p, b, p2);
    return out;
}

std::optional<Mor> SSetCategory::pairing_hook(const Mor& f, const Mor& g,
                                              const BinaryProduct& p) const {
    if (f.src != g.src) throw err_mismatch("pairing: sources differ");
    const auto& df = map_data(f);
    const auto& dg = map_data(g);
    const auto& xb = object(g.dst);
    SimplicialMapData h;
    h.component.resize(df.component.size());
    for (size_t n = 0; n < df.component.size(); ++n) {
        int bn = xb.size(static_cast<int>(n));
        h.component[n].resize(df.component[n].size());
        for (size_t k = 0; k < df.component[n].size(); ++k)
            h.component[n][k] = df.component[n][k] * bn + dg.component[n][k];
    }
    return from_map_data(f.src, p.object, h);
}

std::optional<ColimitResult> SSetCategory::colimit_hook(const Diagram& d) {
    // degreewise colimit: quotient of the disjoint union of the node objects
    // by the relations generated by the edge maps, one level at a time.
    // Objects are copied: registering the quotient reallocates the registry.
    const int L = level_;
    std::vector<TruncSimplicialSet> node_copy;
    for (int n : d.nodes) node_copy.push_back(object(n));
    std::vector<const TruncSimplicialSet*> node_obj;
    for (const auto& x : node_copy) node_obj.push_back(&x);

    std::vector<std::vector<int>> offset(static_cast<size_t>(L) + 1,
                                         std::vector<int>(d.nodes.size() + 1, 0));
    for (int lv = 0; lv <= L; ++lv)
        for (size_t k = 0; k < d.nodes.size(); ++k)
            offset[static_cast<size_t>(lv)][k + 1] =
                offset[static_cast<size_t>(lv)][k] + node_obj[k]->size(lv);

    std::vector<std::vector<int>> parent(static_cast<size_t>(L) + 1);
    for (int lv = 0; lv <= L; ++lv) {
        parent[static_cast<size_t>(lv)].resize(
            static_cast<size_t>(offset[static_cast<size_t>(lv)][d.nodes.size()]));
        std::iota(parent[static_cast<size_t>(lv)].begin(), parent[static_cast<size_t>(lv)].end(), 0);
    }
    std::function<int(int, int)> find = [&](int lv, int x) {
        auto& par = parent[static_cast<size_t>(lv)];
        while (par[static_cast<size_t>(x)] != x) {
            par[static_cast<size_t>(x)] = par[static_cast<size_t>(par[static_cast<size_t>(x)])];
            x = par[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int lv, int x, int y) {
        x = find(lv, x);
        y = find(lv, y);
        if (x != y)
            parent[static_cast<size_t>(lv)][static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    };

    for (const auto& e : d.edges) {
        const auto& data = map_data(e.mor);
        for (int lv = 0; lv <= L; ++lv)
            for (int x = 0; x < node_obj[static_cast<size_t>(e.from_node)]->size(lv); ++x)
                unite(lv, offset[static_cast<size_t>(lv)][static_cast<size_t>(e.from_node)] + x,
                      offset[static_cast<size_t>(lv)][static_cast<size_t>(e.to_node)] +
                          data.component[static_cast<size_t>(lv)][static_cast<size_t>(x)]);
    }

    std::vector<std::vector<int>> label(static_cast<size_t>(L) + 1);
    std::vector<int> classes(static_cast<size_t>(L) + 1, 0);
    for (int lv = 0; lv <= L; ++lv) {
        label[static_cast<size_t>(lv)].assign(parent[static_cast<size_t>(lv)].size(), -1);
        for (size_t x = 0; x < parent[static_cast<size_t>(lv)].size(); ++x) {
            int r = find(lv, static_cast<int>(x));
            if (label[static_cast<size_t>(lv)][static_cast<size_t>(r)] < 0)
                label[static_cast<size_t>(lv)][static_cast<size_t>(r)] = classes[static_cast<size_t>(lv)]++;
            label[static_cast<size_t>(lv)][x] = label[static_cast<size_t>(lv)][static_cast<size_t>(r)];
        }
    }

    std::vector<int> sizes;
    for (int lv = 0; lv <= L; ++lv) sizes.push_back(classes[static_cast<size_t>(lv)]);
    TruncSimplicialSet q(L, sizes, true);
    // structure maps descend to the quotient; set from any representative and
    // confirm well-definedness by overwrite checks
    for (int lv = 0; lv <= L; ++lv) {
        for (size_t k = 0; k < d.nodes.size(); ++k) {
            const auto& obj = *node_obj[k];
            for (int s = 0; s < obj.size(lv); ++s) {
                int cls = label[static_cast<size_t>(lv)]
                               [static_cast<size_t>(offset[static_cast<size_t>(lv)][k] + s)];
                if (lv >= 1)
                    for (int i = 0; i <= lv; ++i) {
                        int img = label[static_cast<size_t>(lv - 1)][static_cast<size_t>(
                            offset[static_cast<size_t>(lv - 1)][k] + obj.face(lv, i, s))];
                        int prev = q.face(lv, i, cls);
                        if (prev >= 0 && prev != img) return std::nullopt;  // not well-defined
                        q.set_face(lv, i, cls, img);
                    }
                if (lv < L)
                    for (int i = 0; i <= lv; ++i) {
                        int img = label[static_cast<size_t>(lv + 1)][static_cast<size_t>(
                            offset[static_cast<size_t>(lv + 1)][k] + obj.degeneracy(lv, i, s))];
                        int prev = q.degeneracy(lv, i, cls);
                        if (prev >= 0 && prev != img) return std::nullopt;
                        q.set_degeneracy(lv, i, cls, img);
                    }
            }
        }
    }
    q.validate();

    std::string name = "colim(";
    for (size_t k = 0; k < d.nodes.size(); ++k) {
        if (k) name += ",";
        name += object_name(d.nodes[k]);
    }
    name += ")";
    int qi = ensure_object(q, name);

    ColimitResult res;
    res.object = qi;
    res.cocone.nadir = qi;
    for (size_t k = 0; k < d.nodes.size(); ++k) {
        SimplicialMapData leg;
        leg.component.resize(static_cast<size_t>(L) + 1);
        for (int lv = 0; lv <= L; ++lv) {
            leg.component[static_cast<size_t>(lv)].resize(
                static_cast<size_t>(node_obj[k]->size(lv)));
            for (int s = 0; s < node_obj[k]->size(lv); ++s)
                leg.component[static_cast<size_t>(lv)][static_cast<size_t>(s)] =
                    label[static_cast<size_t>(lv)]
                         [static_cast<size_t>(offset[static_cast<size_t>(lv)][k] + s)];
        }
        res.cocone.legs.push_back(from_map_data(d.nodes[static_cast<size_t>(k)], qi, leg));
    }
    return res;
}

}  // namespace homcat
