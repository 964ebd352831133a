#include "cb/gysin.hpp"

#include <algorithm>
#include <stdexcept>

namespace cb {

namespace {

void check_length(const FourManifold& m, const EulerClass& alpha) {
    if (alpha.coords.size() != m.rank())
        throw std::invalid_argument("Euler class length does not match the manifold rank");
}

}  // namespace

bool EulerClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Int& c) { return c == 0; });
}

Mod2Class EulerClass::mod2() const {
    Mod2Vector v(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        v[i] = static_cast<std::uint8_t>(coords[i] % 2 != 0);
    return Mod2Class{v};
}

long long CohomologyProfile::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t k = 0; k < h.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h[k].free_rank);
    return chi;
}

IntegerMatrix cup_alpha_matrix(const FourManifold& m, const EulerClass& alpha) {
    check_length(m, alpha);
    const std::size_t r = m.rank();
    IntegerMatrix row(1, r);
    for (std::size_t j = 0; j < r; ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < r; ++k) s += m.gram()(j, k) * alpha.coords[k];
        row(0, j) = s;
    }
    return row;
}

Int divisibility(const FourManifold& m, const EulerClass& alpha) {
    check_length(m, alpha);
    return content(alpha.coords);
}

CohomologyProfile cohomology(const FourManifold& m, const EulerClass& alpha) {
    check_length(m, alpha);

    // The long exact sequence of the bundle splits into
    //   0 -> H^1(M(a)) -> H^0(M) --a--> H^2(M) -> H^2(M(a)) -> 0
    //   0 -> H^3(M(a)) -> H^2(M) --Ua--> H^4(M) -> H^4(M(a)) -> 0
    //   0 -> H^5(M(a)) -> H^4(M) -> 0
    // so every group is a kernel or cokernel of an explicit integer map.
    IntegerMatrix incl = IntegerMatrix::column(alpha.coords);  // Z -> H^2, 1 -> alpha
    IntegerMatrix cup = cup_alpha_matrix(m, alpha);            // H^2 -> H^4

    CohomologyProfile p;
    p.h[0] = FgAbelianGroup::free(1);
    p.h[1] = FgAbelianGroup::free(kernel_basis(incl).cols());
    p.h[2] = cokernel(incl);
    p.h[3] = FgAbelianGroup::free(kernel_basis(cup).cols());
    p.h[4] = cokernel(cup);
    p.h[5] = FgAbelianGroup::free(1);  // total space orientable
    p.pi1_order = divisibility(m, alpha);
    return p;
}

bool is_total_space_spin(const FourManifold& m, const EulerClass& alpha) {
    check_length(m, alpha);
    Mod2Class w = m.wu_class();
    return w.is_zero() || w == alpha.mod2();
}

}  // namespace cb
