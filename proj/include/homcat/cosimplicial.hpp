// Truncated image of the simplex category under a functor into a finite
// category: cell objects F(0..L), face images F(d_{n,i}), optional degeneracy
// images F(s_{n,i}). Functoriality is checked mechanically, never assumed.
#pragma once

#include <map>
#include <optional>

#include "homcat/category.hpp"
#include "homcat/limits.hpp"
#include "homcat/simplex.hpp"

namespace homcat {

class Cosimplicial {
  public:
    Cosimplicial(const Category& cat, int level, std::vector<int> cells);

    const Category& category() const { return *cat_; }
    int level() const { return level_; }
    int cell(int n) const;

    void set_face(int n, int i, const Mor& m);         // F(d_{n,i}) : F(n-1) -> F(n)
    void set_degeneracy(int n, int i, const Mor& m);   // F(s_{n,i}) : F(n+1) -> F(n)

    Mor face(int n, int i) const;
    Mor degeneracy(int n, int i) const;
    bool has_degeneracies() const { return has_degen_; }

    // image of an arbitrary monotone map whose endpoints fit the truncation
    Mor image(const MonotoneMap& phi) const;

  private:
    const Category* cat_;
    int level_;
    std::vector<int> cells_;
    std::map<std::pair<int, int>, Mor> face_img_;
    std::map<std::pair<int, int>, Mor> degen_img_;
    bool has_degen_ = false;
};

struct FunctorialityReport {
    bool pass = true;
    std::string witness;
};

// every simplicial identity whose indices fit inside the truncation must map
// to an equality of composites in C
FunctorialityReport verify_functoriality(const Cosimplicial& F);

enum class AxiomStatus { Pass, Fail, NotCheckable };

struct AxiomReport {
    std::string axiom;  // "A1" .. "A5"
    AxiomStatus status = AxiomStatus::NotCheckable;
    std::string detail;

    std::optional<int> terminal;             // A1
    std::optional<Mor> swap;                 // A3 witness
    bool swap_involutive = false;            // reported, not required
    std::optional<Cocone> join_legs;         // A4 witness: left, center, right
    bool join_endpoint_compatible = false;

    bool pass() const { return status == AxiomStatus::Pass; }
};

// A1 (terminal object and finite products over the scope) and A2 (F(0) is
// terminal), reported together since A2 is meaningless without A1.
std::pair<AxiomReport, AxiomReport> check_axiom_1_2(const Cosimplicial& F,
                                                    const UniversalityScope& scope,
                                                    SearchBudget& budget);

// A3: an isomorphism w of F(1) with w o F(d_{1,0}) = F(d_{1,1}) and
// w^{-1} o F(d_{1,1}) = F(d_{1,0}).
AxiomReport check_axiom_swap(const Cosimplicial& F, SearchBudget& budget);

// A4: the span F(1) <- F(0) -> F(1) along the two face images has a colimit
// isomorphic to F(1); the returned legs are transported onto F(1) itself.
AxiomReport check_axiom_join(const Cosimplicial& F, Category& cat, const UniversalityScope& scope,
                             SearchBudget& budget);

// the three-node span diagram used by A4 and by homotopy concatenation
Diagram join_span(const Cosimplicial& F);

}  // namespace homcat
