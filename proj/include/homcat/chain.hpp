// Chain complexes over Z from truncated simplicial sets, homology through
// Smith normal form, induced maps on homology, and the boundary-equation
// solver. Coefficients are Z by default; Z/m presentations are derived from
// the integral invariant factors.
#pragma once

#include "homcat/matrix.hpp"
#include "homcat/sset.hpp"

namespace homcat {

struct CoeffSpec {
    bool cyclic = false;
    Int modulus = 0;  // only read when cyclic

    static CoeffSpec integers() { return {}; }
    static CoeffSpec mod(Int m) { return {true, std::move(m)}; }
};

class ChainComplex {
  public:
    // `complete` distinguishes a fully known complex (no simplices above the
    // stored level) from a truncation of something larger; only complete
    // complexes have trustworthy homology at the top degree.
    ChainComplex(const TruncSimplicialSet& s, bool reduced, bool complete);

    // direct construction; boundaries[n] : C_n -> C_{n-1} for n = 1..level,
    // the degree-0 row (augmentation or empty) is synthesized from `reduced`
    ChainComplex(std::vector<int> ranks, std::vector<IntMat> boundaries, bool reduced,
                 bool complete);

    int level() const { return level_; }
    bool reduced() const { return reduced_; }
    bool complete() const { return complete_; }
    int rank(int n) const;

    // boundary[n] : C_n -> C_{n-1} for 1 <= n <= level; boundary[0] is the
    // augmentation row when reduced, a 0 x rank[0] matrix otherwise
    const IntMat& boundary(int n) const;

    bool degree_valid(int n) const { return n >= 0 && (n < level_ || complete_); }

  private:
    int level_;
    bool reduced_, complete_;
    std::vector<int> ranks_;
    std::vector<IntMat> boundary_;
};

struct HomologyPresentation {
    int degree = 0;
    int betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next
    bool valid = true;         // false at the truncation edge: rank data only
    std::vector<std::vector<Int>> free_reps;
    std::vector<std::vector<Int>> torsion_reps;
};

// internal presentation data reused by induced maps
struct HomologyData {
    int degree = 0;
    bool valid = true;
    int z = 0;       // cycle rank
    int a_rank = 0;  // rank of boundary[n]
    int t = 0;       // rank of the presentation matrix
    IntMat kernel;   // rank[n] x z, basis of the cycle lattice
    IntMat v_inv;    // V^{-1} of the snf of boundary[n]
    SmithForm snf_m;
    std::vector<Int> orders;    // per summand: 0 = free, d >= 2 = cyclic order
    std::vector<int> summand;   // SNF coordinate of each summand (free first)
};

HomologyData homology_data(const ChainComplex& c, int n);
HomologyPresentation homology(const ChainComplex& c, int n);
HomologyPresentation homology(const ChainComplex& c, int n, const CoeffSpec& coeff);

// all degrees 0..level-1 (plus the top degree when the complex is complete)
std::vector<HomologyPresentation> homology_all(const ChainComplex& c, const CoeffSpec& coeff);

// matrices of a simplicial map between the complexes of src and dst;
// commutation with the boundaries is asserted
std::vector<IntMat> chain_map(const SimplicialMapData& f, const ChainComplex& src,
                              const ChainComplex& dst);

struct InducedMap {
    int degree = 0;
    std::vector<Int> src_orders, dst_orders;  // 0 = free summand
    IntMat matrix;                            // dst_summands x src_summands

    friend bool operator==(const InducedMap&, const InducedMap&) = default;
};

InducedMap induced_homology_map(const IntMat& chain_matrix_n, const HomologyData& src,
                                const HomologyData& dst);

// composition g after f on homology, entries reduced into the target orders
InducedMap compose_induced(const InducedMap& g, const InducedMap& f);
InducedMap identity_induced(const HomologyData& h);
bool is_identity_induced(const InducedMap& m);

// any integer solution of boundary[n] x = b
SolveResult solve_boundary(const ChainComplex& c, int n, const std::vector<Int>& b);

struct RetractReport {
    bool x_nonzero = false;      // H_n(X) != 0
    bool y_zero = false;         // H_n(Y) == 0
    bool composite_identity = false;
    bool obstructed = false;     // retractness impossible at this degree
    bool violation = false;      // functoriality inconsistency (never expected)
};

// composite H(g) o H(f) for f : X -> Y, g : Y -> X at degree n
RetractReport check_retract_obstruction(const InducedMap& hf, const InducedMap& hg,
                                        const HomologyData& hx, const HomologyData& hy);

// complex on the nondegenerate simplices; degenerate faces are dropped
ChainComplex normalized_chains(const TruncSimplicialSet& s, bool reduced, bool complete);

// the generators of the normalized complex, as indices into the full levels
std::vector<std::vector<int>> nondegenerate_index(const TruncSimplicialSet& s);

}  // namespace homcat
