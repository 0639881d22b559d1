// Spheres as colimits of face diagrams, handle attachment by pushout, CW
// builds as folds of attachments, and labeled cell-complex diagrams with
// their colimits. Every colimit is verified against its universal property.
#pragma once

#include <functional>

#include "homcat/cosimplicial.hpp"

namespace homcat {

struct SphereResult {
    int k = 0;
    int object = -1;       // the glued sphere
    Mor inclusion;         // into F(k+1), from the universal property
    ColimitResult colim;   // the verified cocone over the face diagram
};

// the k-sphere: facets F(k) glued along their pairwise F(k-1) intersections
SphereResult boundary_sphere(Category& cat, const Cosimplicial& F, int k,
                             const UniversalityScope& scope, SearchBudget& budget);

struct AttachResult {
    int object = -1;
    Mor base_leg;    // X -> result
    Mor cell_leg;    // F(k) -> result
    ColimitResult pushout;
};

// pushout of F(k) <- S^{k-1} -> X along the sphere inclusion and alpha
AttachResult attach_handle(Category& cat, const Cosimplicial& F, int X, int k, const Mor& alpha,
                           const UniversalityScope& scope, SearchBudget& budget);

// alpha for step t, given the sphere object and the current skeleton
using AttachMapProvider = std::function<Mor(int step, int sphere_object, int skeleton)>;

struct CwResult {
    std::vector<int> skeleta;    // X_0, then one entry per instruction
    std::vector<Mor> inclusions; // skeleton -> next skeleton
    int object = -1;             // the final skeleton
};

CwResult build_cw(Category& cat, const Cosimplicial& F, int x0, const std::vector<int>& ks,
                  const AttachMapProvider& provider, const UniversalityScope& scope,
                  SearchBudget& budget);

struct CellComplexDiagram {
    std::vector<int> node_level;  // one level per node
    struct Edge {
        int from, to;     // nodes on consecutive levels
        int face_index;   // labels F(d_{l+1, j})
    };
    std::vector<Edge> edges;

    int dimension() const;
    void validate(int max_level) const;  // throws invalid-diagram

    static CellComplexDiagram from_json_text(const std::string& text);
    static CellComplexDiagram from_json_file(const std::string& path);
};

ColimitResult colim_cell_complex(Category& cat, const Cosimplicial& F,
                                 const CellComplexDiagram& d, const UniversalityScope& scope,
                                 SearchBudget& budget);

}  // namespace homcat
