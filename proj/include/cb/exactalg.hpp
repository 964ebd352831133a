#pragma once

// Exact integer and mod-2 linear algebra: dense arbitrary-precision
// matrices, Smith normal form with transformation matrices, integer
// kernels and cokernels, and GF(2) solving.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace cb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense row-major matrix of arbitrary-precision integers. All arithmetic
// is exact; dimensions of 0 are legal and denote zero maps.
class IntegerMatrix {
public:
    IntegerMatrix() = default;

    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntegerMatrix identity(std::size_t n);

    static IntegerMatrix column(const std::vector<Int>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntegerMatrix&) const = default;

    IntegerMatrix transposed() const;
    IntegerMatrix operator*(const IntegerMatrix& rhs) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    // Fraction-free Bareiss determinant; square matrices only.
    Int determinant() const;

    // Elementary operations, used by the normal-form routines.
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);  // row dst += c*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

// U*A*V = D with U, V unimodular and D diagonal in divisor-chain form
// (nonnegative entries, d_i | d_{i+1}, trailing zeros allowed).
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;

    std::size_t rank() const;
    std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& A);

std::size_t rank(const IntegerMatrix& A);

// Finitely generated abelian group in canonical form: free rank plus a
// divisor chain t_1 | t_2 | ... with every t_i >= 2. Two groups are
// isomorphic iff the representations are field-wise equal.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbelianGroup&) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }

    // Order of the group; 0 when infinite.
    Int order() const;

    static FgAbelianGroup free(std::size_t rank) { return {rank, {}}; }
    static FgAbelianGroup trivial() { return {0, {}}; }

    std::string display() const;
};

// gcd of the entries; 0 for the zero (or empty) vector. A vector is
// primitive iff its content is 1.
Int content(const std::vector<Int>& v);

// Z^rows / column-span(A), in canonical form.
FgAbelianGroup cokernel(const IntegerMatrix& A);

// Columns form a basis of the lattice {x : A*x = 0};
// column count is cols(A) - rank(A).
IntegerMatrix kernel_basis(const IntegerMatrix& A);

// GF(2) vectors/matrices; entries are 0 or 1.
using Mod2Vector = std::vector<std::uint8_t>;
using Mod2Matrix = std::vector<Mod2Vector>;

// Solve A*x = b over GF(2). Gaussian elimination with lowest-index
// pivots, free variables set to 0; nullopt when inconsistent.
std::optional<Mod2Vector> solve_mod2(const Mod2Matrix& A, const Mod2Vector& b);

}  // namespace cb
