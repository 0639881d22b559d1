// Dense integer matrices with arbitrary-precision entries, Smith normal
// form by gcd-driven row/column elimination, and exact linear solving.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace homcat {

using Int = boost::multiprecision::cpp_int;

class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * size_t(cols)) {}

    static IntMat identity(int n);
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * size_t(cols_) + size_t(j)]; }

    bool is_zero() const;
    bool is_identity() const;

    IntMat operator*(const IntMat& rhs) const;
    IntMat operator+(const IntMat& rhs) const;
    IntMat operator-(const IntMat& rhs) const;
    friend bool operator==(const IntMat&, const IntMat&) = default;

    std::vector<Int> apply(const std::vector<Int>& x) const;  // matrix * vector

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row(int dst, int src, const Int& factor);   // row[dst] += factor * row[src]
    void add_col(int dst, int src, const Int& factor);
    void negate_row(int i);
    void negate_col(int j);

    std::string str() const;  // dense row-major text, for debugging dumps

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// U * M * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... ; the
// inverses are tracked alongside so change-of-basis both ways is exact.
struct SmithForm {
    IntMat U, U_inv;
    IntMat S;
    IntMat V, V_inv;
    int rank = 0;                 // number of nonzero diagonal entries
    std::vector<Int> invariants;  // the nonzero diagonal entries, in order
};

SmithForm smith_normal_form(const IntMat& M);

// Any integer solution x of M x = b, via the Smith form; nullopt plus a
// witness string when no solution exists.
struct SolveResult {
    std::optional<std::vector<Int>> solution;
    std::string obstruction;  // set when solution is empty
};

SolveResult solve_integer(const IntMat& M, const std::vector<Int>& b);
SolveResult solve_integer(const SmithForm& snf, const IntMat& M, const std::vector<Int>& b);

}  // namespace homcat
