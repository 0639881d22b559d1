#include "homcat/table_category.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace homcat {

namespace {
Error err_parse(const std::string& msg) { return {"parse-error", msg}; }
}  // namespace

TableCategory::TableCategory(std::vector<std::string> objects, std::vector<MorDecl> morphisms,
                             std::vector<std::array<std::string, 3>> compose_entries,
                             std::map<std::string, std::string> identities)
    : object_names_(std::move(objects)) {
    std::map<std::string, int> obj_index;
    for (size_t i = 0; i < object_names_.size(); ++i) {
        if (obj_index.count(object_names_[i])) throw err_parse("duplicate object " + object_names_[i]);
        obj_index[object_names_[i]] = static_cast<int>(i);
    }

    for (const auto& d : morphisms) {
        if (mor_by_id_.count(d.id)) throw err_parse("duplicate morphism id " + d.id);
        if (!obj_index.count(d.src) || !obj_index.count(d.dst))
            throw err_parse("morphism " + d.id + " references unknown object");
        MorInfo info;
        info.id = d.id;
        info.src = obj_index[d.src];
        info.dst = obj_index[d.dst];
        auto& bucket = hom_[{info.src, info.dst}];
        info.rank = static_cast<std::int64_t>(bucket.size());
        mor_by_id_[d.id] = mors_.size();
        bucket.push_back(mors_.size());
        mors_.push_back(info);
    }

    for (const auto& entry : compose_entries) {
        auto git = mor_by_id_.find(entry[0]);
        auto fit = mor_by_id_.find(entry[1]);
        auto rit = mor_by_id_.find(entry[2]);
        if (git == mor_by_id_.end() || fit == mor_by_id_.end() || rit == mor_by_id_.end())
            throw err_parse("compose entry references unknown morphism");
        const auto& g = mors_[git->second];
        const auto& f = mors_[fit->second];
        const auto& r = mors_[rit->second];
        if (f.dst != g.src || r.src != f.src || r.dst != g.dst)
            throw err_parse("compose entry endpoints inconsistent: " + entry[0] + " o " + entry[1]);
        comp_[{git->second, fit->second}] = rit->second;
    }

    identity_.resize(object_names_.size());
    for (size_t i = 0; i < object_names_.size(); ++i) {
        auto it = identities.find(object_names_[i]);
        if (it == identities.end()) throw err_parse("missing identity for object " + object_names_[i]);
        auto mit = mor_by_id_.find(it->second);
        if (mit == mor_by_id_.end()) throw err_parse("identity references unknown morphism");
        const auto& m = mors_[mit->second];
        if (m.src != static_cast<int>(i) || m.dst != static_cast<int>(i))
            throw err_parse("identity of " + object_names_[i] + " is not an endomorphism");
        identity_[i] = mit->second;
    }
}

TableCategory TableCategory::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw err_parse(std::string("invalid JSON: ") + e.what());
    }
    try {
        std::vector<std::string> objects = j.at("objects").get<std::vector<std::string>>();
        std::vector<MorDecl> morphisms;
        for (const auto& m : j.at("morphisms"))
            morphisms.push_back({m.at("id").get<std::string>(), m.at("src").get<std::string>(),
                                 m.at("dst").get<std::string>()});
        std::vector<std::array<std::string, 3>> compose_entries;
        for (const auto& c : j.at("compose"))
            compose_entries.push_back({c.at(0).get<std::string>(), c.at(1).get<std::string>(),
                                       c.at(2).get<std::string>()});
        std::map<std::string, std::string> identities;
        for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it)
            identities[it.key()] = it.value().get<std::string>();
        return TableCategory(std::move(objects), std::move(morphisms), std::move(compose_entries),
                             std::move(identities));
    } catch (const nlohmann::json::exception& e) {
        throw err_parse(std::string("category table schema: ") + e.what());
    }
}

TableCategory TableCategory::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw err_parse("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return from_json_text(os.str());
}

std::int64_t TableCategory::hom_size(int src, int dst) const {
    auto it = hom_.find({src, dst});
    return it == hom_.end() ? 0 : static_cast<std::int64_t>(it->second.size());
}

size_t TableCategory::global_of(const Mor& m) const {
    check_mor(m);
    return hom_.at({m.src, m.dst})[static_cast<size_t>(m.idx)];
}

Mor TableCategory::mor_of_global(size_t g) const {
    const auto& info = mors_.at(g);
    return Mor{info.src, info.dst, info.rank};
}

Mor TableCategory::compose(const Mor& g, const Mor& f) const {
    if (f.dst != g.src) throw err_mismatch("table compose endpoint mismatch");
    auto it = comp_.find({global_of(g), global_of(f)});
    if (it == comp_.end())
        throw Error("composition-undefined",
                    "no table entry for " + mor_name(g) + " o " + mor_name(f));
    return mor_of_global(it->second);
}

Mor TableCategory::identity(int obj) const {
    if (obj < 0 || obj >= num_objects()) throw err_index_out_of_range("identity: bad object");
    return mor_of_global(identity_[static_cast<size_t>(obj)]);
}

std::string TableCategory::mor_name(const Mor& m) const { return mors_[global_of(m)].id; }

int TableCategory::object_index(const std::string& name) const {
    for (size_t i = 0; i < object_names_.size(); ++i)
        if (object_names_[i] == name) return static_cast<int>(i);
    throw err_index_out_of_range("unknown object " + name);
}

Mor TableCategory::mor_by_id(const std::string& id) const {
    auto it = mor_by_id_.find(id);
    if (it == mor_by_id_.end()) throw err_index_out_of_range("unknown morphism id " + id);
    return mor_of_global(it->second);
}

const std::string& TableCategory::mor_id(const Mor& m) const { return mors_[global_of(m)].id; }

}  // namespace homcat
