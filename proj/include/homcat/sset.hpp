// Truncated simplicial sets: finite indexed sets of simplices per level with
// face maps, and optionally degeneracy maps. All structure maps are stored as
// plain index tables; validation re-checks every simplicial identity that
// fits inside the truncation.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcat/error.hpp"
#include "homcat/simplex.hpp"

namespace homcat {

class TruncSimplicialSet {
  public:
    TruncSimplicialSet() = default;
    TruncSimplicialSet(int level, std::vector<int> level_sizes, bool with_degeneracies);

    int level() const { return level_; }
    bool has_degeneracies() const { return with_degeneracies_; }
    int size(int n) const;  // number of n-simplices (0 above the stored data)

    // face(n, i): simplices[n] -> simplices[n-1], for 1 <= n <= level, 0 <= i <= n
    int face(int n, int i, int simplex) const;
    void set_face(int n, int i, int simplex, int value);

    // degeneracy(n, i): simplices[n] -> simplices[n+1], for 0 <= n < level, 0 <= i <= n
    int degeneracy(int n, int i, int simplex) const;
    void set_degeneracy(int n, int i, int simplex, int value);

    // the simplex names are optional; defaults are "n:k"
    const std::string& simplex_name(int n, int k) const;
    void set_simplex_name(int n, int k, std::string name);
    std::optional<int> simplex_by_name(int n, const std::string& name) const;

    // checks the contravariant simplicial identities inside the truncation
    void validate() const;

    bool is_degenerate(int n, int simplex) const;  // lies in the image of some degeneracy

    // action of a monotone map: X(phi) : X_n -> X_m for phi : [m] -> [n],
    // assembled from the stored faces/degeneracies via epi-mono factorization
    int act(const MonotoneMap& phi, int simplex) const;

    std::string to_json_text() const;
    static TruncSimplicialSet from_json_text(const std::string& text);
    static TruncSimplicialSet from_json_file(const std::string& path);

    // canonical form used for dedup: sizes plus all structure tables
    std::string structural_key() const;

    friend bool operator==(const TruncSimplicialSet&, const TruncSimplicialSet&);

  private:
    int level_ = 0;
    bool with_degeneracies_ = false;
    std::vector<int> sizes_;
    // faces_[n-1][i][k] = face(n, i, k); degens_[n][i][k] = degeneracy(n, i, k)
    std::vector<std::vector<std::vector<int>>> faces_;
    std::vector<std::vector<std::vector<int>>> degens_;
    std::vector<std::vector<std::string>> names_;
};

// The representable Delta[m], truncated at `level`, with degeneracies; the
// n-simplices are the monotone maps [n] -> [m] in lexicographic order.
TruncSimplicialSet standard_simplex(int m, int level);

// Subcomplex of Delta[m] of simplices whose image omits at least one vertex.
TruncSimplicialSet boundary_standard_simplex(int m, int level);

// Delta[1] with both endpoints identified: the smallest circle model.
TruncSimplicialSet pinched_circle(int level);

// Degreewise product (requires both factors to carry degeneracies).
// The (i, j) pair at level n is indexed i * b.size(n) + j.
TruncSimplicialSet sset_product(const TruncSimplicialSet& a, const TruncSimplicialSet& b);

TruncSimplicialSet sset_disjoint_union(const TruncSimplicialSet& a, const TruncSimplicialSet& b);

// A levelwise map of simplicial sets; commutes with faces (and degeneracies
// when both sides carry them) -- checked by validate().
struct SimplicialMapData {
    std::vector<std::vector<int>> component;  // per level: simplex -> simplex

    friend bool operator==(const SimplicialMapData&, const SimplicialMapData&) = default;
    friend auto operator<=>(const SimplicialMapData&, const SimplicialMapData&) = default;
};

void validate_simplicial_map(const TruncSimplicialSet& src, const TruncSimplicialSet& dst,
                             const SimplicialMapData& f);

SimplicialMapData sset_identity_map(const TruncSimplicialSet& x);
SimplicialMapData compose_simplicial_maps(const SimplicialMapData& g, const SimplicialMapData& f);

// All simplicial maps src -> dst, in the deterministic backtracking order.
std::vector<SimplicialMapData> enumerate_simplicial_maps(const TruncSimplicialSet& src,
                                                         const TruncSimplicialSet& dst);

}  // namespace homcat
