#include "cb/fourmanifold.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cb {

namespace {

IntegerMatrix make_e8() {
    // E8 in the Dynkin-diagram convention: 2's on the diagonal, -1 for
    // adjacent nodes. Arms of lengths 4, 2, 1 meet at node 4:
    //   0 - 1 - 2 - 3 - 4 - 5 - 6
    //                   |
    //                   7
    // Positive definite with determinant 1.
    IntegerMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
    const std::pair<int, int> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
    for (auto [a, b] : edges) {
        m(a, b) = -1;
        m(b, a) = -1;
    }
    return m;
}

IntegerMatrix negated(IntegerMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
    return m;
}

IntegerMatrix direct_sum(const std::vector<const IntegerMatrix*>& parts) {
    std::size_t n = 0;
    for (auto* p : parts) n += p->rows();
    IntegerMatrix m(n, n);
    std::size_t off = 0;
    for (auto* p : parts) {
        for (std::size_t i = 0; i < p->rows(); ++i)
            for (std::size_t j = 0; j < p->cols(); ++j) m(off + i, off + j) = (*p)(i, j);
        off += p->rows();
    }
    return m;
}

IntegerMatrix make_k3() {
    // 3H + 2(-E8), rank 22, signature -16.
    static const IntegerMatrix h{{0, 1}, {1, 0}};
    static const IntegerMatrix e8bar = negated(make_e8());
    return direct_sum({&h, &h, &h, &e8bar, &e8bar});
}

}  // namespace

const IntegerMatrix& block_gram(Block b) {
    static const IntegerMatrix cp2{{1}};
    static const IntegerMatrix cp2bar{{-1}};
    static const IntegerMatrix s2xs2{{0, 1}, {1, 0}};
    static const IntegerMatrix e8 = make_e8();
    static const IntegerMatrix e8bar = negated(make_e8());
    static const IntegerMatrix k3 = make_k3();
    switch (b) {
        case Block::CP2: return cp2;
        case Block::CP2Bar: return cp2bar;
        case Block::S2xS2: return s2xs2;
        case Block::E8: return e8;
        case Block::E8Bar: return e8bar;
        case Block::K3: return k3;
    }
    throw std::invalid_argument("block_gram: unknown block");
}

std::string block_name(Block b) {
    switch (b) {
        case Block::CP2: return "CP2";
        case Block::CP2Bar: return "-CP2";
        case Block::S2xS2: return "S2xS2";
        case Block::E8: return "E8";
        case Block::E8Bar: return "-E8";
        case Block::K3: return "K3";
    }
    throw std::invalid_argument("block_name: unknown block");
}

std::size_t block_rank(Block b) { return block_gram(b).rows(); }

bool Mod2Class::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](std::uint8_t c) { return c == 0; });
}

FourManifold::FourManifold(IntegerMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
    if (!gram_.is_square()) throw std::invalid_argument("FourManifold: Gram matrix must be square");
    if (gram_.rows() == 0)
        throw std::invalid_argument(
            "FourManifold: rank 0 rejected (H^2 = 0 admits no primitive Euler class)");
    if (!gram_.is_symmetric())
        throw std::invalid_argument("FourManifold: Gram matrix must be symmetric");
    Int d = gram_.determinant();
    if (d != 1 && d != -1)
        throw std::invalid_argument("FourManifold: intersection form must be unimodular (|det| = 1)");
}

FourManifold FourManifold::from_blocks(const std::vector<std::pair<Block, std::size_t>>& expression) {
    std::vector<const IntegerMatrix*> parts;
    std::ostringstream label;
    bool first = true;
    for (const auto& [block, mult] : expression) {
        for (std::size_t k = 0; k < mult; ++k) parts.push_back(&block_gram(block));
        if (mult == 0) continue;
        if (!first) label << " # ";
        first = false;
        if (mult > 1) label << mult << "*";
        label << block_name(block);
    }
    if (parts.empty())
        throw std::invalid_argument("from_blocks: empty expression (total rank 0 is not allowed)");
    return FourManifold(direct_sum(parts), label.str());
}

long long FourManifold::signature() const {
    // Symmetric congruence diagonalization over the rationals.
    const std::size_t n = rank();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram_(i, j));

    long long sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Prefer a symmetric swap with a later nonzero diagonal entry.
            std::size_t i = k + 1;
            while (i < n && a[i][i] == 0) ++i;
            if (i < n) {
                std::swap(a[k], a[i]);
                for (std::size_t j = 0; j < n; ++j) std::swap(a[j][k], a[j][i]);
            } else {
                // All remaining diagonal entries vanish; fold in a row with
                // a nonzero off-diagonal entry, making the pivot 2*a[k][i].
                i = k + 1;
                while (i < n && a[k][i] == 0) ++i;
                if (i == n) throw std::logic_error("signature: degenerate form");
                for (std::size_t j = 0; j < n; ++j) a[k][j] += a[i][j];
                for (std::size_t j = 0; j < n; ++j) a[j][k] += a[j][i];
            }
        }
        sig += a[k][k] > 0 ? 1 : -1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational c = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= c * a[k][j];
            for (std::size_t j = k; j < n; ++j) a[j][i] -= c * a[j][k];
        }
    }
    return sig;
}

Mod2Class FourManifold::wu_class() const {
    const std::size_t n = rank();
    Mod2Matrix q(n, Mod2Vector(n));
    Mod2Vector diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            q[i][j] = static_cast<std::uint8_t>(gram_(i, j) % 2 != 0);
        diag[i] = q[i][i];
    }
    // Q is invertible mod 2, so the characteristic-vector equation
    // Q*w = diag(Q) has a unique solution.
    auto w = solve_mod2(q, diag);
    if (!w) throw std::logic_error("wu_class: characteristic equation unsolvable");
    return Mod2Class{*w};
}

bool FourManifold::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_(i, i) % 2 != 0) return false;
    return true;
}

FourManifold FourManifold::change_basis(const IntegerMatrix& P) const {
    if (!P.is_square() || P.rows() != rank())
        throw std::invalid_argument("change_basis: P must be rank x rank");
    Int d = P.determinant();
    if (d != 1 && d != -1) throw std::invalid_argument("change_basis: P must be unimodular");
    return FourManifold(P.transposed() * gram_ * P, label_);
}

}  // namespace cb
