#include "cb/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cb {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("IntegerMatrix: ragged initializer");
        for (long long x : row) entries_.emplace_back(x);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::column(const std::vector<Int>& v) {
    IntegerMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Int& x) { return x == 0; });
}

bool IntegerMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Int IntegerMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;

    // Bareiss fraction-free elimination; every division below is exact.
    IntegerMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntegerMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j);
        }
        os << '\n';
    }
    return os.str();
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(D.rows(), D.cols());
    while (r < n && D(r, r) != 0) ++r;
    return r;
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i) d.push_back(D(i, i));
    return d;
}

namespace {

// Minimal-absolute-value nonzero entry of D in the trailing submatrix
// starting at (t, t); ties broken by lowest (row, col).
bool find_pivot(const IntegerMatrix& D, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < D.rows(); ++i)
        for (std::size_t j = t; j < D.cols(); ++j) {
            if (D(i, j) == 0) continue;
            Int a = abs(D(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithDecomposition s{IntegerMatrix::identity(m), A, IntegerMatrix::identity(n)};
    IntegerMatrix& D = s.D;
    IntegerMatrix& U = s.U;
    IntegerMatrix& V = s.V;

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t pi, pj;
        if (!find_pivot(D, t, pi, pj)) break;  // trailing submatrix is zero
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);

        for (;;) {
            // Reduce column t below the pivot.
            bool reduced = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Int q = D(i, t) / D(t, t);
                D.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (D(i, t) != 0) {
                    // Remainder is smaller than the pivot; promote it.
                    D.swap_rows(t, i);
                    U.swap_rows(t, i);
                    reduced = false;
                }
            }
            if (!reduced) continue;

            // Reduce row t to the right of the pivot.
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Int q = D(t, j) / D(t, t);
                D.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (D(t, j) != 0) {
                    D.swap_cols(t, j);
                    V.swap_cols(t, j);
                    reduced = false;
                }
            }
            if (!reduced) continue;

            // Divisor-chain condition: the pivot must divide everything
            // remaining. Fold an offending row into row t and restart.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        D.add_row_multiple(t, i, 1);
                        U.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }

        if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return s;
}

std::size_t rank(const IntegerMatrix& A) { return smith_normal_form(A).rank(); }

Int FgAbelianGroup::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const Int& t : torsion) o *= t;
    return o;
}

std::string FgAbelianGroup::display() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (const Int& t : torsion) {
        sep();
        os << "Z/" << t;
    }
    return os.str();
}

Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return abs(g);
}

FgAbelianGroup cokernel(const IntegerMatrix& A) {
    SmithDecomposition s = smith_normal_form(A);
    FgAbelianGroup g;
    const std::size_t r = s.rank();
    g.free_rank = A.rows() - r;
    for (std::size_t i = 0; i < r; ++i)
        if (s.D(i, i) > 1) g.torsion.push_back(s.D(i, i));
    return g;
}

IntegerMatrix kernel_basis(const IntegerMatrix& A) {
    // A*V has zero columns exactly where D does, so the trailing columns
    // of V span the integer kernel.
    SmithDecomposition s = smith_normal_form(A);
    const std::size_t r = s.rank();
    const std::size_t n = A.cols();
    IntegerMatrix K(n, n - r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = r; j < n; ++j) K(i, j - r) = s.V(i, j);
    return K;
}

std::optional<Mod2Vector> solve_mod2(const Mod2Matrix& A, const Mod2Vector& b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("solve_mod2: dimension mismatch");
    const std::size_t n = m == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("solve_mod2: ragged matrix");

    // Augmented elimination.
    Mod2Matrix M(m, Mod2Vector(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) M[i][j] = A[i][j] & 1;
        M[i][n] = b[i] & 1;
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && M[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(M[row], M[p]);
        for (std::size_t i = 0; i < m; ++i)
            if (i != row && M[i][col])
                for (std::size_t j = col; j <= n; ++j) M[i][j] ^= M[row][j];
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (M[i][n]) return std::nullopt;

    Mod2Vector x(n, 0);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = M[i][n];
    return x;
}

}  // namespace cb
