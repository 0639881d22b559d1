#include "homcat/chain.hpp"

#include <numeric>

namespace homcat {

namespace {
Error err_internal(const std::string& msg) { return {"internal-inconsistency", msg}; }

Int gcd_int(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

IntMat boundary_from_faces(const TruncSimplicialSet& s, int n) {
    IntMat m(s.size(n - 1), s.size(n));
    for (int k = 0; k < s.size(n); ++k)
        for (int i = 0; i <= n; ++i) {
            Int sign = (i % 2 == 0) ? 1 : -1;
            m.at(s.face(n, i, k), k) += sign;
        }
    return m;
}
}  // namespace

ChainComplex::ChainComplex(const TruncSimplicialSet& s, bool reduced, bool complete)
    : level_(s.level()), reduced_(reduced), complete_(complete) {
    for (int n = 0; n <= level_; ++n) ranks_.push_back(s.size(n));
    boundary_.resize(static_cast<size_t>(level_) + 1);
    if (reduced_) {
        IntMat aug(1, ranks_[0]);
        for (int k = 0; k < ranks_[0]; ++k) aug.at(0, k) = 1;
        boundary_[0] = std::move(aug);
    } else {
        boundary_[0] = IntMat(0, ranks_[0]);
    }
    for (int n = 1; n <= level_; ++n) boundary_[static_cast<size_t>(n)] = boundary_from_faces(s, n);

    // boundary o boundary = 0, asserted at construction for every complex
    for (int n = 1; n <= level_; ++n)
        if (!(boundary_[static_cast<size_t>(n - 1)] * boundary_[static_cast<size_t>(n)]).is_zero())
            throw err_internal("boundary composition is nonzero at degree " + std::to_string(n));
}

ChainComplex::ChainComplex(std::vector<int> ranks, std::vector<IntMat> boundaries, bool reduced,
                           bool complete)
    : level_(static_cast<int>(ranks.size()) - 1),
      reduced_(reduced),
      complete_(complete),
      ranks_(std::move(ranks)) {
    if (level_ < 0) throw err_mismatch("chain complex needs at least degree 0");
    if (static_cast<int>(boundaries.size()) != level_)
        throw err_mismatch("need one boundary matrix per degree 1..level");
    boundary_.resize(static_cast<size_t>(level_) + 1);
    if (reduced_) {
        IntMat aug(1, ranks_[0]);
        for (int k = 0; k < ranks_[0]; ++k) aug.at(0, k) = 1;
        boundary_[0] = std::move(aug);
    } else {
        boundary_[0] = IntMat(0, ranks_[0]);
    }
    for (int n = 1; n <= level_; ++n) {
        IntMat& b = boundaries[static_cast<size_t>(n - 1)];
        if (b.rows() != ranks_[static_cast<size_t>(n - 1)] || b.cols() != ranks_[static_cast<size_t>(n)])
            throw err_mismatch("boundary matrix dimensions at degree " + std::to_string(n));
        boundary_[static_cast<size_t>(n)] = std::move(b);
    }
    for (int n = 1; n <= level_; ++n)
        if (!(boundary_[static_cast<size_t>(n - 1)] * boundary_[static_cast<size_t>(n)]).is_zero())
            throw err_internal("boundary composition is nonzero at degree " + std::to_string(n));
}

int ChainComplex::rank(int n) const {
    if (n < 0 || n > level_) return 0;
    return ranks_[static_cast<size_t>(n)];
}

const IntMat& ChainComplex::boundary(int n) const {
    if (n < 0 || n > level_) throw err_index_out_of_range("boundary degree outside range");
    return boundary_[static_cast<size_t>(n)];
}

HomologyData homology_data(const ChainComplex& c, int n) {
    if (n < 0 || n > c.level()) throw Error("degree-out-of-range", "degree " + std::to_string(n));
    HomologyData h;
    h.degree = n;
    h.valid = c.degree_valid(n);

    const IntMat& a = c.boundary(n);
    auto snf_a = smith_normal_form(a);
    h.a_rank = snf_a.rank;
    h.z = c.rank(n) - snf_a.rank;
    h.v_inv = snf_a.V_inv;

    h.kernel = IntMat(c.rank(n), h.z);
    for (int j = 0; j < h.z; ++j)
        for (int i = 0; i < c.rank(n); ++i) h.kernel.at(i, j) = snf_a.V.at(i, snf_a.rank + j);

    // boundaries from above, expressed in kernel coordinates
    IntMat m(h.z, n < c.level() ? c.rank(n + 1) : 0);
    if (n < c.level()) {
        IntMat w = snf_a.V_inv * c.boundary(n + 1);
        for (int i = 0; i < snf_a.rank; ++i)
            for (int j = 0; j < w.cols(); ++j)
                if (w.at(i, j) != 0) throw err_internal("image of boundary is not in the kernel");
        for (int i = 0; i < h.z; ++i)
            for (int j = 0; j < w.cols(); ++j) m.at(i, j) = w.at(snf_a.rank + i, j);
    }
    h.snf_m = smith_normal_form(m);
    h.t = h.snf_m.rank;

    for (int j = h.t; j < h.z; ++j) {  // free summands first
        h.orders.push_back(0);
        h.summand.push_back(j);
    }
    for (int j = 0; j < h.t; ++j) {
        const Int& d = h.snf_m.invariants[static_cast<size_t>(j)];
        if (d > 1) {
            h.orders.push_back(d);
            h.summand.push_back(j);
        }
    }
    return h;
}

namespace {

std::vector<Int> representative(const HomologyData& h, size_t summand_pos) {
    int j = h.summand[summand_pos];
    std::vector<Int> e(static_cast<size_t>(h.z));
    e[static_cast<size_t>(j)] = 1;
    auto y = h.snf_m.U_inv.apply(e);
    return h.kernel.apply(y);
}

}  // namespace

HomologyPresentation homology(const ChainComplex& c, int n) {
    auto h = homology_data(c, n);
    HomologyPresentation p;
    p.degree = n;
    p.valid = h.valid;
    for (size_t s = 0; s < h.orders.size(); ++s) {
        if (h.orders[s] == 0) {
            ++p.betti;
            p.free_reps.push_back(representative(h, s));
        } else {
            p.torsion.push_back(h.orders[s]);
            p.torsion_reps.push_back(representative(h, s));
        }
    }
    return p;
}

HomologyPresentation homology(const ChainComplex& c, int n, const CoeffSpec& coeff) {
    if (!coeff.cyclic) return homology(c, n);
    if (coeff.modulus < 2) throw Error("bad-coefficients", "cyclic modulus must be >= 2");
    // universal coefficients: H_n(C; Z/m) =
    //   (Z/m)^{b_n}  +  sum_d Z/gcd(d, m) over torsion of H_n  +  over torsion of H_{n-1}
    auto hn = homology(c, n);
    HomologyPresentation p;
    p.degree = n;
    p.valid = hn.valid;
    p.betti = hn.betti;  // number of full Z/m summands
    for (const auto& d : hn.torsion) {
        Int g = gcd_int(d, coeff.modulus);
        if (g > 1) p.torsion.push_back(g);
    }
    if (n >= 1) {
        auto hprev = homology(c, n - 1);
        p.valid = p.valid && hprev.valid;
        for (const auto& d : hprev.torsion) {
            Int g = gcd_int(d, coeff.modulus);
            if (g > 1) p.torsion.push_back(g);
        }
    }
    return p;
}

std::vector<HomologyPresentation> homology_all(const ChainComplex& c, const CoeffSpec& coeff) {
    // the top degree of a truncated complex is included with its validity
    // flag down: boundaries from above are unknown there
    std::vector<HomologyPresentation> out;
    for (int n = 0; n <= c.level(); ++n) out.push_back(homology(c, n, coeff));
    return out;
}

std::vector<IntMat> chain_map(const SimplicialMapData& f, const ChainComplex& src,
                              const ChainComplex& dst) {
    if (src.level() != dst.level()) throw err_mismatch("chain map across truncations");
    if (src.reduced() != dst.reduced()) throw err_mismatch("chain map across reduction conventions");
    const int L = src.level();
    std::vector<IntMat> mats;
    for (int n = 0; n <= L; ++n) {
        IntMat m(dst.rank(n), src.rank(n));
        for (int k = 0; k < src.rank(n); ++k)
            m.at(f.component[static_cast<size_t>(n)][static_cast<size_t>(k)], k) = 1;
        mats.push_back(std::move(m));
    }
    // the chain functor square: boundary o f = f o boundary
    for (int n = 1; n <= L; ++n)
        if (!(dst.boundary(n) * mats[static_cast<size_t>(n)] ==
              mats[static_cast<size_t>(n - 1)] * src.boundary(n)))
            throw err_internal("chain map does not commute with the boundary at degree " +
                               std::to_string(n));
    if (src.reduced()) {
        if (!(dst.boundary(0) * mats[0] == src.boundary(0)))
            throw err_internal("chain map does not respect the augmentation");
    }
    return mats;
}

InducedMap induced_homology_map(const IntMat& chain_matrix_n, const HomologyData& src,
                                const HomologyData& dst) {
    InducedMap out;
    out.degree = src.degree;
    out.src_orders = src.orders;
    out.dst_orders = dst.orders;
    out.matrix = IntMat(static_cast<int>(dst.orders.size()), static_cast<int>(src.orders.size()));

    for (size_t col = 0; col < src.orders.size(); ++col) {
        auto v = representative(src, col);
        auto fv = chain_matrix_n.apply(v);
        // express the image class in target coordinates
        auto y_full = dst.v_inv.apply(fv);
        for (int i = 0; i < dst.a_rank; ++i)
            if (y_full[static_cast<size_t>(i)] != 0)
                throw Error("representative-not-a-cycle",
                            "image of a cycle representative is not a cycle");
        std::vector<Int> y(static_cast<size_t>(dst.z));
        for (int i = 0; i < dst.z; ++i) y[static_cast<size_t>(i)] = y_full[static_cast<size_t>(dst.a_rank + i)];
        auto w = dst.snf_m.U.apply(y);
        for (size_t row = 0; row < dst.orders.size(); ++row) {
            int j = dst.summand[row];
            Int entry = w[static_cast<size_t>(j)];
            if (dst.orders[row] != 0) {
                entry %= dst.orders[row];
                if (entry < 0) entry += dst.orders[row];
            }
            out.matrix.at(static_cast<int>(row), static_cast<int>(col)) = entry;
        }
        // coordinates landing on killed summands (order 1) need no record; the
        // source order must annihilate every recorded entry
        if (src.orders[col] != 0)
            for (size_t row = 0; row < dst.orders.size(); ++row) {
                Int e = out.matrix.at(static_cast<int>(row), static_cast<int>(col));
                if (dst.orders[row] == 0) {
                    if (e != 0)
                        throw err_internal("torsion class maps to a free class");
                } else if ((src.orders[col] * e) % dst.orders[row] != 0) {
                    throw err_internal("induced map ill-defined on a torsion class");
                }
            }
    }
    return out;
}

InducedMap compose_induced(const InducedMap& g, const InducedMap& f) {
    if (g.src_orders != f.dst_orders) throw err_mismatch("induced map composition mismatch");
    InducedMap out;
    out.degree = f.degree;
    out.src_orders = f.src_orders;
    out.dst_orders = g.dst_orders;
    out.matrix = g.matrix * f.matrix;
    for (int i = 0; i < out.matrix.rows(); ++i)
        if (out.dst_orders[static_cast<size_t>(i)] != 0)
            for (int j = 0; j < out.matrix.cols(); ++j) {
                Int& e = out.matrix.at(i, j);
                e %= out.dst_orders[static_cast<size_t>(i)];
                if (e < 0) e += out.dst_orders[static_cast<size_t>(i)];
            }
    return out;
}

InducedMap identity_induced(const HomologyData& h) {
    InducedMap out;
    out.degree = h.degree;
    out.src_orders = h.orders;
    out.dst_orders = h.orders;
    out.matrix = IntMat::identity(static_cast<int>(h.orders.size()));
    return out;
}

bool is_identity_induced(const InducedMap& m) {
    return m.src_orders == m.dst_orders && m.matrix.is_identity();
}

SolveResult solve_boundary(const ChainComplex& c, int n, const std::vector<Int>& b) {
    return solve_integer(c.boundary(n), b);
}

RetractReport check_retract_obstruction(const InducedMap& hf, const InducedMap& hg,
                                        const HomologyData& hx, const HomologyData& hy) {
    RetractReport rep;
    rep.x_nonzero = !hx.orders.empty();
    rep.y_zero = hy.orders.empty();
    auto comp = compose_induced(hg, hf);
    rep.composite_identity = is_identity_induced(comp);
    rep.obstructed = rep.x_nonzero && rep.y_zero && !rep.composite_identity;
    rep.violation = rep.x_nonzero && rep.y_zero && rep.composite_identity;
    return rep;
}

std::vector<std::vector<int>> nondegenerate_index(const TruncSimplicialSet& s) {
    std::vector<std::vector<int>> idx(static_cast<size_t>(s.level()) + 1);
    for (int n = 0; n <= s.level(); ++n)
        for (int k = 0; k < s.size(n); ++k)
            if (!s.is_degenerate(n, k)) idx[static_cast<size_t>(n)].push_back(k);
    return idx;
}

ChainComplex normalized_chains(const TruncSimplicialSet& s, bool reduced, bool complete) {
    if (!s.has_degeneracies())
        throw Error("degeneracies-missing", "normalization needs degeneracy data");
    auto idx = nondegenerate_index(s);
    std::vector<int> sizes;
    for (const auto& level : idx) sizes.push_back(static_cast<int>(level.size()));

    // positions of nondegenerate simplices inside the full level
    std::vector<std::vector<int>> pos(static_cast<size_t>(s.level()) + 1);
    for (int n = 0; n <= s.level(); ++n) {
        pos[static_cast<size_t>(n)].assign(static_cast<size_t>(s.size(n)), -1);
        for (size_t t = 0; t < idx[static_cast<size_t>(n)].size(); ++t)
            pos[static_cast<size_t>(n)][static_cast<size_t>(idx[static_cast<size_t>(n)][t])] =
                static_cast<int>(t);
    }

    std::vector<IntMat> boundaries;
    for (int n = 1; n <= s.level(); ++n) {
        IntMat b(sizes[static_cast<size_t>(n - 1)], sizes[static_cast<size_t>(n)]);
        for (size_t col = 0; col < idx[static_cast<size_t>(n)].size(); ++col) {
            int k = idx[static_cast<size_t>(n)][col];
            for (int i = 0; i <= n; ++i) {
                int f = s.face(n, i, k);
                int row = pos[static_cast<size_t>(n - 1)][static_cast<size_t>(f)];
                if (row < 0) continue;  // degenerate face vanishes in the quotient
                b.at(row, static_cast<int>(col)) += (i % 2 == 0) ? 1 : -1;
            }
        }
        boundaries.push_back(std::move(b));
    }
    return ChainComplex(std::move(sizes), std::move(boundaries), reduced, complete);
}

}  // namespace homcat
