#pragma once

// Invariants of the circle-bundle total space M(alpha): integral
// cohomology H^0..H^5 from the long exact sequence of the bundle, the
// fundamental group, and the spin condition w2(M(alpha)) = 0.

#include "cb/exactalg.hpp"
#include "cb/fourmanifold.hpp"

#include <array>
#include <vector>

namespace cb {

// Euler class of an oriented circle bundle, as coordinates in the base
// manifold's chosen basis for H^2.
struct EulerClass {
    std::vector<Int> coords;

    bool operator==(const EulerClass&) const = default;
    bool is_zero() const;
    Mod2Class mod2() const;
};

struct CohomologyProfile {
    // h[k] = H^k(M(alpha); Z) for k = 0..5.
    std::array<FgAbelianGroup, 6> h;
    // Order of the cyclic group pi_1(M(alpha)); 0 means infinite cyclic.
    Int pi1_order;

    bool operator==(const CohomologyProfile&) const = default;

    // Alternating sum of free ranks; 0 for every circle bundle.
    long long euler_characteristic() const;
};

// The 1 x rank matrix of cup product with alpha, H^2(M) -> H^4(M) = Z:
// x -> x^T * Q * alpha.
IntegerMatrix cup_alpha_matrix(const FourManifold& m, const EulerClass& alpha);

// content(alpha); 1 means primitive, 0 means alpha = 0.
Int divisibility(const FourManifold& m, const EulerClass& alpha);

CohomologyProfile cohomology(const FourManifold& m, const EulerClass& alpha);

// True iff w2(M(alpha)) = 0, i.e. w2(M) = 0 or w2(M) = alpha mod 2
// (the kernel of p* on H^2 mod 2 is spanned by alpha mod 2).
bool is_total_space_spin(const FourManifold& m, const EulerClass& alpha);

}  // namespace cb
