#include "homcat/matrix.hpp"

#include <sstream>

#include "homcat/error.hpp"

namespace homcat {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

bool IntMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != ((i == j) ? 1 : 0)) return false;
    return true;
}

IntMat IntMat::operator*(const IntMat& rhs) const {
    if (cols_ != rhs.rows_) throw err_mismatch("matrix product dimension mismatch");
    IntMat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += v * rhs.at(k, j);
        }
    return out;
}

IntMat IntMat::operator+(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw err_mismatch("matrix sum dimension mismatch");
    IntMat out(rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] + rhs.a_[t];
    return out;
}

IntMat IntMat::operator-(const IntMat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw err_mismatch("matrix difference dimension mismatch");
    IntMat out(rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] - rhs.a_[t];
    return out;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw err_mismatch("matrix-vector dimension mismatch");
    std::vector<Int> out(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
    return out;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row(int dst, int src, const Int& factor) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += factor * at(src, c);
}

void IntMat::add_col(int dst, int src, const Int& factor) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += factor * at(r, src);
}

void IntMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(int j) {
    for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

std::string IntMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << at(i, j);
        }
        os << "\n";
    }
    return os.str();
}

namespace {

// Row/column operations applied simultaneously to S and the basis-change
// matrices. U tracks row operations (and U_inv their inverses), V columns.
struct SnfWork {
    IntMat S, U, U_inv, V, V_inv;

    void row_swap(int i, int j) {
        S.swap_rows(i, j);
        U.swap_rows(i, j);
        U_inv.swap_cols(i, j);
    }
    void col_swap(int i, int j) {
        S.swap_cols(i, j);
        V.swap_cols(i, j);
        V_inv.swap_rows(i, j);
    }
    void row_add(int dst, int src, const Int& f) {  // row[dst] += f*row[src]
        S.add_row(dst, src, f);
        U.add_row(dst, src, f);
        U_inv.add_col(src, dst, -f);  // inverse acts on the other side
    }
    void col_add(int dst, int src, const Int& f) {
        S.add_col(dst, src, f);
        V.add_col(dst, src, f);
        V_inv.add_row(src, dst, -f);
    }
    void row_negate(int i) {
        S.negate_row(i);
        U.negate_row(i);
        U_inv.negate_col(i);
    }
};

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

// smallest nonzero |entry| in the trailing submatrix, lexicographic tie-break
bool find_pivot(const IntMat& S, int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < S.rows(); ++i)
        for (int j = t; j < S.cols(); ++j) {
            const Int& v = S.at(i, j);
            if (v == 0) continue;
            Int av = int_abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMat& M) {
    const int r = M.rows(), c = M.cols();
    SnfWork w{M, IntMat::identity(r), IntMat::identity(r), IntMat::identity(c), IntMat::identity(c)};

    const int nmin = std::min(r, c);
    int t = 0;
    for (; t < nmin; ++t) {
        int pi = 0, pj = 0;
        if (!find_pivot(w.S, t, pi, pj)) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            // clear column t below the pivot
            for (int i = t + 1; i < r; ++i) {
                if (w.S.at(i, t) == 0) continue;
                Int q = w.S.at(i, t) / w.S.at(t, t);
                if (q != 0) w.row_add(i, t, -q);
                if (w.S.at(i, t) != 0) {
                    // remainder smaller than pivot: promote it and restart
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            // clear row t right of the pivot
            for (int j = t + 1; j < c; ++j) {
                if (w.S.at(t, j) == 0) continue;
                Int q = w.S.at(t, j) / w.S.at(t, t);
                if (q != 0) w.col_add(j, t, -q);
                if (w.S.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix
            for (int i = t + 1; i < r && clean; ++i)
                for (int j = t + 1; j < c && clean; ++j)
                    if (w.S.at(i, j) % w.S.at(t, t) != 0) {
                        w.row_add(t, i, 1);
                        clean = false;
                    }
        }
        if (w.S.at(t, t) < 0) w.row_negate(t);
    }

    SmithForm out;
    out.rank = 0;
    for (int i = 0; i < nmin; ++i)
        if (w.S.at(i, i) != 0) ++out.rank;
    for (int i = 0; i < out.rank; ++i) out.invariants.push_back(w.S.at(i, i));
    out.S = std::move(w.S);
    out.U = std::move(w.U);
    out.U_inv = std::move(w.U_inv);
    out.V = std::move(w.V);
    out.V_inv = std::move(w.V_inv);
    return out;
}

SolveResult solve_integer(const IntMat& M, const std::vector<Int>& b) {
    return solve_integer(smith_normal_form(M), M, b);
}

SolveResult solve_integer(const SmithForm& snf, const IntMat& M, const std::vector<Int>& b) {
    if (static_cast<int>(b.size()) != M.rows()) throw err_mismatch("solve: rhs dimension mismatch");
    SolveResult res;
    std::vector<Int> c = snf.U.apply(b);
    std::vector<Int> y(static_cast<size_t>(M.cols()));
    for (int i = 0; i < M.rows(); ++i) {
        const Int& ci = c[static_cast<size_t>(i)];
        if (i < snf.rank) {
            const Int& d = snf.invariants[static_cast<size_t>(i)];
            if (ci % d != 0) {
                std::ostringstream os;
                os << "divisibility failure: invariant factor " << d << " does not divide " << ci
                   << " at position " << i;
                res.obstruction = os.str();
                return res;
            }
            if (i < M.cols()) y[static_cast<size_t>(i)] = ci / d;
        } else if (ci != 0) {
            std::ostringstream os;
            os << "zero-row obstruction: transformed rhs entry " << ci << " at position " << i;
            res.obstruction = os.str();
            return res;
        }
    }
    res.solution = snf.V.apply(y);
    return res;
}

}  // namespace homcat
