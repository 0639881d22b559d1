// Exact combinatorics of the simplex category: objects [n] = {0,...,n},
// monotone maps stored as image tuples, the face/degeneracy generators,
// and mechanical verification of the simplicial identities.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcat/error.hpp"

namespace homcat {

struct SimplexObject {
    int n = 0;  // the object [n] = {0,...,n}, n >= 0

    friend bool operator==(const SimplexObject&, const SimplexObject&) = default;
};

// A monotone map [m] -> [n], stored as the tuple (f(0),...,f(m)).
struct MonotoneMap {
    SimplexObject source;
    SimplexObject target;
    std::vector<int> image;

    MonotoneMap(SimplexObject src, SimplexObject dst, std::vector<int> img);

    int operator()(int j) const { return image.at(static_cast<size_t>(j)); }
    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;

    std::string str() const;

    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

MonotoneMap simplex_identity(int n);

// d_{n,i} : [n-1] -> [n], the injective map whose image omits i.
MonotoneMap face_map(int n, int i);

// s_{n,i} : [n+1] -> [n], the surjection whose fiber over i has two elements.
MonotoneMap degeneracy_map(int n, int i);

// g after f; requires f.target == g.source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

// All monotone maps [m] -> [n] in lexicographic order of image tuples.
std::vector<MonotoneMap> all_monotone_maps(int m, int n);

// Lexicographic rank of a monotone [m] -> [n] map among all_monotone_maps(m, n),
// and its inverse. Used wherever hom-sets of the simplex category are indexed.
std::int64_t monotone_rank(const MonotoneMap& f);
std::int64_t monotone_count(int m, int n);
MonotoneMap monotone_unrank(int m, int n, std::int64_t rank);

// Pluggable generator tables so the identity suite can be run against a
// deliberately corrupted family of generators.
struct GeneratorTable {
    virtual ~GeneratorTable() = default;
    virtual MonotoneMap face(int n, int i) const { return face_map(n, i); }
    virtual MonotoneMap degeneracy(int n, int i) const { return degeneracy_map(n, i); }
};

struct IdentityReport {
    bool pass = true;
    std::string witness;  // first violated identity, when pass == false
};

// Exhaustively checks the five families of simplicial identities for all
// valid indices whose composites stay within [0..n_max].
IdentityReport verify_simplicial_identities(int n_max);
IdentityReport verify_simplicial_identities(int n_max, const GeneratorTable& gen);

// Canonical epi-mono factorization: f = (faces, decreasing indices) after
// (degeneracies, increasing indices). Recomposing reproduces f exactly.
struct EpiMonoFactorization {
    std::vector<int> degeneracy_indices;  // strictly increasing
    std::vector<int> face_indices;        // strictly decreasing
};

EpiMonoFactorization epi_mono_factorize(const MonotoneMap& f);
MonotoneMap recompose(int source_n, int target_n, const EpiMonoFactorization& fac);

}  // namespace homcat
