#include "homcat/sset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace homcat {

namespace {
Error err_parse(const std::string& msg) { return {"parse-error", msg}; }
Error err_invalid(const std::string& msg) { return {"invalid-simplicial-set", msg}; }
}  // namespace

TruncSimplicialSet::TruncSimplicialSet(int level, std::vector<int> level_sizes,
                                       bool with_degeneracies)
    : level_(level), with_degeneracies_(with_degeneracies), sizes_(std::move(level_sizes)) {
    if (level_ < 0) throw err_invalid("negative truncation level");
    if (static_cast<int>(sizes_.size()) != level_ + 1)
        throw err_invalid("level_sizes must have level+1 entries");
    faces_.resize(static_cast<size_t>(level_));
    for (int n = 1; n <= level_; ++n) {
        faces_[static_cast<size_t>(n - 1)].assign(static_cast<size_t>(n) + 1,
                                                  std::vector<int>(static_cast<size_t>(size(n)), -1));
    }
    if (with_degeneracies_) {
        degens_.resize(static_cast<size_t>(level_));
        for (int n = 0; n < level_; ++n)
            degens_[static_cast<size_t>(n)].assign(
                static_cast<size_t>(n) + 1, std::vector<int>(static_cast<size_t>(size(n)), -1));
    }
    names_.resize(sizes_.size());
    for (size_t n = 0; n < sizes_.size(); ++n) {
        names_[n].resize(static_cast<size_t>(sizes_[n]));
        for (int k = 0; k < sizes_[n]; ++k)
            names_[n][static_cast<size_t>(k)] = std::to_string(n) + ":" + std::to_string(k);
    }
}

int TruncSimplicialSet::size(int n) const {
    if (n < 0 || n > level_) return 0;
    return sizes_[static_cast<size_t>(n)];
}

int TruncSimplicialSet::face(int n, int i, int simplex) const {
    if (n < 1 || n > level_ || i < 0 || i > n) throw err_index_out_of_range("face indices");
    return faces_[static_cast<size_t>(n - 1)][static_cast<size_t>(i)].at(
        static_cast<size_t>(simplex));
}

void TruncSimplicialSet::set_face(int n, int i, int simplex, int value) {
    if (n < 1 || n > level_ || i < 0 || i > n) throw err_index_out_of_range("face indices");
    if (value < 0 || value >= size(n - 1)) throw err_index_out_of_range("face value");
    faces_[static_cast<size_t>(n - 1)][static_cast<size_t>(i)].at(static_cast<size_t>(simplex)) =
        value;
}

int TruncSimplicialSet::degeneracy(int n, int i, int simplex) const {
    if (!with_degeneracies_) throw Error("degeneracies-missing", "simplicial set has faces only");
    if (n < 0 || n >= level_ || i < 0 || i > n) throw err_index_out_of_range("degeneracy indices");
    return degens_[static_cast<size_t>(n)][static_cast<size_t>(i)].at(static_cast<size_t>(simplex));
}

void TruncSimplicialSet::set_degeneracy(int n, int i, int simplex, int value) {
    if (!with_degeneracies_) throw Error("degeneracies-missing", "simplicial set has faces only");
    if (n < 0 || n >= level_ || i < 0 || i > n) throw err_index_out_of_range("degeneracy indices");
    if (value < 0 || value >= size(n + 1)) throw err_index_out_of_range("degeneracy value");
    degens_[static_cast<size_t>(n)][static_cast<size_t>(i)].at(static_cast<size_t>(simplex)) = value;
}

const std::string& TruncSimplicialSet::simplex_name(int n, int k) const {
    return names_.at(static_cast<size_t>(n)).at(static_cast<size_t>(k));
}

void TruncSimplicialSet::set_simplex_name(int n, int k, std::string name) {
    names_.at(static_cast<size_t>(n)).at(static_cast<size_t>(k)) = std::move(name);
}

std::optional<int> TruncSimplicialSet::simplex_by_name(int n, const std::string& name) const {
    if (n < 0 || n > level_) return std::nullopt;
    const auto& row = names_[static_cast<size_t>(n)];
    for (size_t k = 0; k < row.size(); ++k)
        if (row[k] == name) return static_cast<int>(k);
    return std::nullopt;
}

void TruncSimplicialSet::validate() const {
    for (int n = 1; n <= level_; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k < size(n); ++k)
                if (face(n, i, k) < 0) throw err_invalid("unset face entry");

    // d_i d_j = d_{j-1} d_i for i < j (as functions on (n+1)-simplices)
    for (int n = 1; n + 1 <= level_; ++n)
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 0; i < j; ++i)
                for (int k = 0; k < size(n + 1); ++k)
                    if (face(n, i, face(n + 1, j, k)) != face(n, j - 1, face(n + 1, i, k)))
                        throw err_invalid("face-face identity fails at level " + std::to_string(n + 1));

    if (!with_degeneracies_) return;

    for (int n = 0; n < level_; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k < size(n); ++k)
                if (degeneracy(n, i, k) < 0) throw err_invalid("unset degeneracy entry");

    // s_i s_j = s_{j+1} s_i for i <= j (functions on n-simplices)
    for (int n = 0; n + 2 <= level_; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                for (int k = 0; k < size(n); ++k)
                    if (degeneracy(n + 1, i, degeneracy(n, j, k)) !=
                        degeneracy(n + 1, j + 1, degeneracy(n, i, k)))
                        throw err_invalid("degeneracy-degeneracy identity fails");

    // mixed identities: d_i s_j on n-simplices
    for (int n = 0; n < level_; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i)
                for (int k = 0; k < size(n); ++k) {
                    int lhs = face(n + 1, i, degeneracy(n, j, k));
                    int rhs;
                    if (i == j || i == j + 1)
                        rhs = k;
                    else if (i < j)
                        rhs = degeneracy(n - 1, j - 1, face(n, i, k));
                    else
                        rhs = degeneracy(n - 1, j, face(n, i - 1, k));
                    if (lhs != rhs) throw err_invalid("face-degeneracy identity fails");
                }
}

bool TruncSimplicialSet::is_degenerate(int n, int simplex) const {
    if (!with_degeneracies_ || n == 0) return false;
    for (int i = 0; i <= n - 1; ++i)
        for (int k = 0; k < size(n - 1); ++k)
            if (degeneracy(n - 1, i, k) == simplex) return true;
    return false;
}

int TruncSimplicialSet::act(const MonotoneMap& phi, int simplex) const {
    // contravariant action: phi : [m] -> [n] acts X_n -> X_m
    if (phi.target.n > level_) throw err_index_out_of_range("act: map exceeds truncation");
    auto fac = epi_mono_factorize(phi);
    int cur = simplex;
    int n = phi.target.n;
    // contravariance reverses the composition order: apply faces first
    // (outermost-largest first), then degeneracies (outermost-smallest first)
    for (int fi : fac.face_indices) {
        cur = face(n, fi, cur);
        --n;
    }
    for (int di : fac.degeneracy_indices) {
        cur = degeneracy(n, di, cur);
        ++n;
    }
    if (n != phi.source.n) throw err_mismatch("act: factorization bookkeeping");
    return cur;
}

std::string TruncSimplicialSet::structural_key() const {
    std::ostringstream os;
    os << level_ << (with_degeneracies_ ? "D" : "F");
    for (int s : sizes_) os << "," << s;
    os << "|";
    for (const auto& per_level : faces_)
        for (const auto& per_index : per_level)
            for (int v : per_index) os << v << ",";
    os << "|";
    for (const auto& per_level : degens_)
        for (const auto& per_index : per_level)
            for (int v : per_index) os << v << ",";
    return os.str();
}

bool operator==(const TruncSimplicialSet& a, const TruncSimplicialSet& b) {
    return a.level_ == b.level_ && a.with_degeneracies_ == b.with_degeneracies_ &&
           a.sizes_ == b.sizes_ && a.faces_ == b.faces_ && a.degens_ == b.degens_;
}

std::string TruncSimplicialSet::to_json_text() const {
    nlohmann::ordered_json j;
    j["level"] = level_;
    j["simplices"] = nlohmann::ordered_json::array();
    for (int n = 0; n <= level_; ++n) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int k = 0; k < size(n); ++k) row.push_back(simplex_name(n, k));
        j["simplices"].push_back(row);
    }
    nlohmann::ordered_json faces = nlohmann::ordered_json::object();
    for (int n = 1; n <= level_; ++n)
        for (int i = 0; i <= n; ++i) {
            nlohmann::ordered_json table = nlohmann::ordered_json::object();
            for (int k = 0; k < size(n); ++k)
                table[simplex_name(n, k)] = simplex_name(n - 1, face(n, i, k));
            faces["(" + std::to_string(n) + "," + std::to_string(i) + ")"] = table;
        }
    j["faces"] = faces;
    if (with_degeneracies_) {
        nlohmann::ordered_json degens = nlohmann::ordered_json::object();
        for (int n = 0; n < level_; ++n)
            for (int i = 0; i <= n; ++i) {
                nlohmann::ordered_json table = nlohmann::ordered_json::object();
                for (int k = 0; k < size(n); ++k)
                    table[simplex_name(n, k)] = simplex_name(n + 1, degeneracy(n, i, k));
                degens["(" + std::to_string(n) + "," + std::to_string(i) + ")"] = table;
            }
        j["degeneracies"] = degens;
    }
    return j.dump(2);
}

TruncSimplicialSet TruncSimplicialSet::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw err_parse(std::string("invalid JSON: ") + e.what());
    }
    try {
        int level = j.at("level").get<int>();
        auto simplices = j.at("simplices");
        if (static_cast<int>(simplices.size()) != level + 1)
            throw err_parse("simplices must list level+1 levels");
        std::vector<int> sizes;
        for (const auto& row : simplices) sizes.push_back(static_cast<int>(row.size()));
        bool with_deg = j.contains("degeneracies");
        TruncSimplicialSet x(level, sizes, with_deg);
        for (int n = 0; n <= level; ++n)
            for (int k = 0; k < sizes[static_cast<size_t>(n)]; ++k)
                x.set_simplex_name(n, k, simplices[static_cast<size_t>(n)][static_cast<size_t>(k)]
                                             .get<std::string>());

        auto parse_tables = [&](const nlohmann::json& tables, bool is_face) {
            for (auto it = tables.begin(); it != tables.end(); ++it) {
                int n = 0, i = 0;
                if (sscanf(it.key().c_str(), "(%d,%d)", &n, &i) != 2)
                    throw err_parse("bad structure-map key " + it.key());
                for (auto e = it.value().begin(); e != it.value().end(); ++e) {
                    auto from = x.simplex_by_name(n, e.key());
                    auto to = x.simplex_by_name(is_face ? n - 1 : n + 1, e.value().get<std::string>());
                    if (!from || !to)
                        throw err_parse("structure map references unknown simplex in " + it.key());
                    if (is_face)
                        x.set_face(n, i, *from, *to);
                    else
                        x.set_degeneracy(n, i, *from, *to);
                }
            }
        };
        parse_tables(j.at("faces"), true);
        if (with_deg) parse_tables(j.at("degeneracies"), false);
        x.validate();
        return x;
    } catch (const nlohmann::json::exception& e) {
        throw err_parse(std::string("simplicial set schema: ") + e.what());
    }
}

TruncSimplicialSet TruncSimplicialSet::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw err_parse("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return from_json_text(os.str());
}

TruncSimplicialSet standard_simplex(int m, int level) {
    std::vector<int> sizes;
    for (int n = 0; n <= level; ++n) sizes.push_back(static_cast<int>(monotone_count(n, m)));
    TruncSimplicialSet x(level, sizes, true);
    for (int n = 0; n <= level; ++n) {
        auto maps = all_monotone_maps(n, m);
        for (int k = 0; k < static_cast<int>(maps.size()); ++k) {
            std::string nm;
            for (int v : maps[static_cast<size_t>(k)].image) nm += std::to_string(v);
            x.set_simplex_name(n, k, nm);
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    x.set_face(n, i, k,
                               static_cast<int>(monotone_rank(
                                   compose(maps[static_cast<size_t>(k)], face_map(n, i)))));
            if (n < level)
                for (int i = 0; i <= n; ++i)
                    x.set_degeneracy(n, i, k,
                                     static_cast<int>(monotone_rank(
                                         compose(maps[static_cast<size_t>(k)], degeneracy_map(n, i)))));
        }
    }
    x.validate();
    return x;
}

TruncSimplicialSet boundary_standard_simplex(int m, int level) {
    // keep the monotone maps [n] -> [m] that miss at least one vertex
    std::vector<std::vector<int>> keep(static_cast<size_t>(level) + 1);
    std::vector<std::vector<int>> reindex(static_cast<size_t>(level) + 1);
    std::vector<std::vector<MonotoneMap>> maps;
    for (int n = 0; n <= level; ++n) {
        maps.push_back(all_monotone_maps(n, m));
        reindex[static_cast<size_t>(n)].assign(maps.back().size(), -1);
        for (int k = 0; k < static_cast<int>(maps.back().size()); ++k)
            if (!maps.back()[static_cast<size_t>(k)].is_surjective()) {
                reindex[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                    static_cast<int>(keep[static_cast<size_t>(n)].size());
                keep[static_cast<size_t>(n)].push_back(k);
            }
    }
    std::vector<int> sizes;
    for (int n = 0; n <= level; ++n) sizes.push_back(static_cast<int>(keep[static_cast<size_t>(n)].size()));
    TruncSimplicialSet x(level, sizes, true);
    for (int n = 0; n <= level; ++n)
        for (int kk = 0; kk < sizes[static_cast<size_t>(n)]; ++kk) {
            const auto& f = maps[static_cast<size_t>(n)][static_cast<size_t>(
                keep[static_cast<size_t>(n)][static_cast<size_t>(kk)])];
            std::string nm;
            for (int v : f.image) nm += std::to_string(v);
            x.set_simplex_name(n, kk, nm);
            if (n >= 1)
                for (int i = 0; i <= n; ++i) {
                    auto g = compose(f, face_map(n, i));
                    x.set_face(n, i, kk,
                               reindex[static_cast<size_t>(n - 1)][static_cast<size_t>(
                                   monotone_rank(g))]);
                }
            if (n < level)
                for (int i = 0; i <= n; ++i) {
                    auto g = compose(f, degeneracy_map(n, i));
                    x.set_degeneracy(n, i, kk,
                                     reindex[static_cast<size_t>(n + 1)][static_cast<size_t>(
                                         monotone_rank(g))]);
                }
        }
    x.validate();
    return x;
}

TruncSimplicialSet pinched_circle(int level) {
    // quotient of Delta[1] identifying the two vertices: at level n the
    // simplices are the monotone maps [n] -> [1] with the two constants glued
    std::vector<std::vector<int>> reindex(static_cast<size_t>(level) + 1);
    std::vector<int> sizes;
    for (int n = 0; n <= level; ++n) {
        auto maps = all_monotone_maps(n, 1);  // lexicographic: constant-0 first, constant-1 last
        reindex[static_cast<size_t>(n)].resize(maps.size());
        int next = 0;
        for (int k = 0; k < static_cast<int>(maps.size()); ++k) {
            if (k == static_cast<int>(maps.size()) - 1 && maps.size() > 1)
                reindex[static_cast<size_t>(n)][static_cast<size_t>(k)] = 0;  // glue 1...1 to 0...0
            else
                reindex[static_cast<size_t>(n)][static_cast<size_t>(k)] = next++;
        }
        sizes.push_back(next);
    }
    TruncSimplicialSet x(level, sizes, true);
    for (int n = 0; n <= level; ++n) {
        auto maps = all_monotone_maps(n, 1);
        for (int k = 0; k < static_cast<int>(maps.size()); ++k) {
            int kk = reindex[static_cast<size_t>(n)][static_cast<size_t>(k)];
            std::string nm;
            for (int v : maps[static_cast<size_t>(k)].image) nm += std::to_string(v);
            if (kk == 0) nm = std::string(static_cast<size_t>(n) + 1, '0');
            x.set_simplex_name(n, kk, nm);
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    x.set_face(n, i, kk,
                               reindex[static_cast<size_t>(n - 1)][static_cast<size_t>(monotone_rank(
                                   compose(maps[static_cast<size_t>(k)], face_map(n, i))))]);
            if (n < level)
                for (int i = 0; i <= n; ++i)
                    x.set_degeneracy(n, i, kk,
                                     reindex[static_cast<size_t>(n + 1)][static_cast<size_t>(
                                         monotone_rank(compose(maps[static_cast<size_t>(k)],
                                                               degeneracy_map(n, i))))]);
        }
    }
    x.validate();
    return x;
}

TruncSimplicialSet sset_product(const TruncSimplicialSet& a, const TruncSimplicialSet& b) {
    if (a.level() != b.level()) throw err_mismatch("product factors at different truncations");
    if (!a.has_degeneracies() || !b.has_degeneracies())
        throw Error("degeneracies-missing", "degreewise products need degeneracy structure");
    int level = a.level();
    std::vector<int> sizes;
    for (int n = 0; n <= level; ++n) sizes.push_back(a.size(n) * b.size(n));
    TruncSimplicialSet x(level, sizes, true);
    for (int n = 0; n <= level; ++n)
        for (int p = 0; p < a.size(n); ++p)
            for (int q = 0; q < b.size(n); ++q) {
                int k = p * b.size(n) + q;
                x.set_simplex_name(n, k, "(" + a.simplex_name(n, p) + "|" + b.simplex_name(n, q) + ")");
                if (n >= 1)
                    for (int i = 0; i <= n; ++i)
                        x.set_face(n, i, k, a.face(n, i, p) * b.size(n - 1) + b.face(n, i, q));
                if (n < level)
                    for (int i = 0; i <= n; ++i)
                        x.set_degeneracy(n, i, k,
                                         a.degeneracy(n, i, p) * b.size(n + 1) + b.degeneracy(n, i, q));
            }
    x.validate();
    return x;
}

TruncSimplicialSet sset_disjoint_union(const TruncSimplicialSet& a, const TruncSimplicialSet& b) {
    if (a.level() != b.level()) throw err_mismatch("union of sets at different truncations");
    if (a.has_degeneracies() != b.has_degeneracies())
        throw err_mismatch("union of sets with mixed degeneracy structure");
    int level = a.level();
    std::vector<int> sizes;
    for (int n = 0; n <= level; ++n) sizes.push_back(a.size(n) + b.size(n));
    TruncSimplicialSet x(level, sizes, a.has_degeneracies());
    for (int n = 0; n <= level; ++n) {
        for (int k = 0; k < a.size(n); ++k) {
            x.set_simplex_name(n, k, "L." + a.simplex_name(n, k));
            if (n >= 1)
                for (int i = 0; i <= n; ++i) x.set_face(n, i, k, a.face(n, i, k));
            if (a.has_degeneracies() && n < level)
                for (int i = 0; i <= n; ++i) x.set_degeneracy(n, i, k, a.degeneracy(n, i, k));
        }
        for (int k = 0; k < b.size(n); ++k) {
            int kk = a.size(n) + k;
            x.set_simplex_name(n, kk, "R." + b.simplex_name(n, k));
            if (n >= 1)
                for (int i = 0; i <= n; ++i) x.set_face(n, i, kk, a.size(n - 1) + b.face(n, i, k));
            if (a.has_degeneracies() && n < level)
                for (int i = 0; i <= n; ++i)
                    x.set_degeneracy(n, i, kk, a.size(n + 1) + b.degeneracy(n, i, k));
        }
    }
    x.validate();
    return x;
}

void validate_simplicial_map(const TruncSimplicialSet& src, const TruncSimplicialSet& dst,
                             const SimplicialMapData& f) {
    if (src.level() != dst.level()) throw err_mismatch("simplicial map across truncations");
    if (static_cast<int>(f.component.size()) != src.level() + 1)
        throw err_mismatch("simplicial map must have level+1 components");
    for (int n = 0; n <= src.level(); ++n) {
        if (static_cast<int>(f.component[static_cast<size_t>(n)].size()) != src.size(n))
            throw err_mismatch("simplicial map component size mismatch at level " + std::to_string(n));
        for (int k = 0; k < src.size(n); ++k) {
            int v = f.component[static_cast<size_t>(n)][static_cast<size_t>(k)];
            if (v < 0 || v >= dst.size(n)) throw err_index_out_of_range("simplicial map value");
        }
    }
    bool degen = src.has_degeneracies() && dst.has_degeneracies();
    for (int n = 1; n <= src.level(); ++n)
        for (int i = 0; i <= n; ++i)
            for (int k = 0; k < src.size(n); ++k)
                if (dst.face(n, i, f.component[static_cast<size_t>(n)][static_cast<size_t>(k)]) !=
                    f.component[static_cast<size_t>(n - 1)][static_cast<size_t>(src.face(n, i, k))])
                    throw err_invalid("map does not commute with face (" + std::to_string(n) + "," +
                                      std::to_string(i) + ")");
    if (degen)
        for (int n = 0; n < src.level(); ++n)
            for (int i = 0; i <= n; ++i)
                for (int k = 0; k < src.size(n); ++k)
                    if (dst.degeneracy(n, i,
                                       f.component[static_cast<size_t>(n)][static_cast<size_t>(k)]) !=
                        f.component[static_cast<size_t>(n + 1)]
                                   [static_cast<size_t>(src.degeneracy(n, i, k))])
                        throw err_invalid("map does not commute with degeneracy");
}

SimplicialMapData sset_identity_map(const TruncSimplicialSet& x) {
    SimplicialMapData f;
    f.component.resize(static_cast<size_t>(x.level()) + 1);
    for (int n = 0; n <= x.level(); ++n) {
        f.component[static_cast<size_t>(n)].resize(static_cast<size_t>(x.size(n)));
        for (int k = 0; k < x.size(n); ++k)
            f.component[static_cast<size_t>(n)][static_cast<size_t>(k)] = k;
    }
    return f;
}

SimplicialMapData compose_simplicial_maps(const SimplicialMapData& g, const SimplicialMapData& f) {
    SimplicialMapData h;
    h.component.resize(f.component.size());
    for (size_t n = 0; n < f.component.size(); ++n) {
        h.component[n].resize(f.component[n].size());
        for (size_t k = 0; k < f.component[n].size(); ++k)
            h.component[n][k] = g.component[n][static_cast<size_t>(f.component[n][k])];
    }
    return h;
}

std::vector<SimplicialMapData> enumerate_simplicial_maps(const TruncSimplicialSet& src,
                                                         const TruncSimplicialSet& dst) {
    if (src.level() != dst.level()) throw err_mismatch("hom across truncations");
    const int L = src.level();
    const bool degen = src.has_degeneracies() && dst.has_degeneracies();

    // face-tuple index of the target: per level, all simplices sharing a
    // given boundary, so candidate images are looked up instead of scanned
    std::vector<std::map<std::vector<int>, std::vector<int>>> index(static_cast<size_t>(L) + 1);
    for (int n = 1; n <= L; ++n)
        for (int v = 0; v < dst.size(n); ++v) {
            std::vector<int> key(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) key[static_cast<size_t>(i)] = dst.face(n, i, v);
            index[static_cast<size_t>(n)][key].push_back(v);
        }

    std::vector<SimplicialMapData> out;
    SimplicialMapData cur;
    cur.component.assign(static_cast<size_t>(L) + 1, {});
    for (int n = 0; n <= L; ++n)
        cur.component[static_cast<size_t>(n)].assign(static_cast<size_t>(src.size(n)), -1);

    // If a simplex is a degeneracy of a lower one, its image is forced; track
    // one witness (lower simplex, index) per degenerate simplex.
    std::vector<std::vector<std::pair<int, int>>> forced(static_cast<size_t>(L) + 1);
    if (degen)
        for (int n = 1; n <= L; ++n) {
            forced[static_cast<size_t>(n)].assign(static_cast<size_t>(src.size(n)), {-1, -1});
            for (int k = 0; k < src.size(n - 1); ++k)
                for (int i = 0; i <= n - 1; ++i) {
                    int img = src.degeneracy(n - 1, i, k);
                    if (forced[static_cast<size_t>(n)][static_cast<size_t>(img)].first < 0)
                        forced[static_cast<size_t>(n)][static_cast<size_t>(img)] = {k, i};
                }
        }

    std::function<void(int, int)> assign = [&](int n, int k) {
        if (n > L) {
            out.push_back(cur);
            return;
        }
        if (k == src.size(n)) {
            assign(n + 1, 0);
            return;
        }
        auto& slot = cur.component[static_cast<size_t>(n)][static_cast<size_t>(k)];
        std::vector<int> key;
        if (n >= 1) {
            key.resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                key[static_cast<size_t>(i)] =
                    cur.component[static_cast<size_t>(n - 1)][static_cast<size_t>(src.face(n, i, k))];
        }
        auto face_compatible = [&](int v) {
            if (n == 0) return true;
            for (int i = 0; i <= n; ++i)
                if (dst.face(n, i, v) != key[static_cast<size_t>(i)]) return false;
            return true;
        };
        if (degen && n >= 1 && forced[static_cast<size_t>(n)][static_cast<size_t>(k)].first >= 0) {
            auto [lower, i] = forced[static_cast<size_t>(n)][static_cast<size_t>(k)];
            int v = dst.degeneracy(
                n - 1, i, cur.component[static_cast<size_t>(n - 1)][static_cast<size_t>(lower)]);
            if (face_compatible(v)) {
                slot = v;
                assign(n, k + 1);
                slot = -1;
            }
            return;
        }
        if (n == 0) {
            for (int v = 0; v < dst.size(0); ++v) {
                slot = v;
                assign(n, k + 1);
                slot = -1;
            }
            return;
        }
        auto it = index[static_cast<size_t>(n)].find(key);
        if (it == index[static_cast<size_t>(n)].end()) return;
        for (int v : it->second) {
            slot = v;
            assign(n, k + 1);
            slot = -1;
        }
    };
    assign(0, 0);
    return out;
}

}  // namespace homcat
