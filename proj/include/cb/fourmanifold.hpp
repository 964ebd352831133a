#pragma once

// Simply connected topological 4-manifolds modeled by their intersection
// forms: symmetric unimodular Gram matrices with a chosen basis. Computes
// rank, signature, parity, and the characteristic (Wu) class mod 2.

#include "cb/exactalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cb {

// Standard building blocks for connected sums.
enum class Block { CP2, CP2Bar, S2xS2, E8, E8Bar, K3 };

const IntegerMatrix& block_gram(Block b);
std::string block_name(Block b);
std::size_t block_rank(Block b);

// Mod-2 cohomology class in the manifold's chosen basis.
struct Mod2Class {
    Mod2Vector coords;

    bool operator==(const Mod2Class&) const = default;
    bool is_zero() const;
};

class FourManifold {
public:
    // Validates: square, symmetric, |det| = 1, rank >= 1.
    explicit FourManifold(IntegerMatrix gram, std::string label = "");

    static FourManifold from_blocks(const std::vector<std::pair<Block, std::size_t>>& expression);

    const IntegerMatrix& gram() const { return gram_; }
    const std::string& label() const { return label_; }

    std::size_t rank() const { return gram_.rows(); }

    // (# positive) - (# negative) eigenvalues, by exact symmetric
    // congruence reduction over the rationals.
    long long signature() const;

    // The unique w with Q*w = diag(Q) mod 2; zero iff the form is even.
    Mod2Class wu_class() const;

    bool is_even() const;

    // Gram -> P^T * Gram * P for unimodular P. A class with old
    // coordinates v has new coordinates P^{-1} * v.
    FourManifold change_basis(const IntegerMatrix& P) const;

private:
    IntegerMatrix gram_;
    std::string label_;
};

}  // namespace cb
