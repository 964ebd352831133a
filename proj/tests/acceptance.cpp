// Acceptance suite: one pass/fail line per criterion, exit 1 on any
// failure. All checks are exact; expected total runtime well under a
// minute.

#include "cb/classify.hpp"
#include "cb/cli.hpp"
#include "cb/exactalg.hpp"
#include "cb/fourmanifold.hpp"
#include "cb/gysin.hpp"
#include "oracles.hpp"

#include <cstdio>
#include <random>
#include <string>

using namespace cb;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, name.c_str());
    if (!ok) ++failures;
}

using Kind = FiveManifoldType::Kind;

// 1. Every primitive alpha over S2xS2 with |alpha|_inf <= 10 gives S^2 x S^3.
bool giblin_reproduction() {
    auto m = FourManifold::from_blocks({{Block::S2xS2, 1}});
    PrimitiveEnumerator en(2, 10);
    while (auto alpha = en.next())
        if (classify(m, *alpha) != FiveManifoldType{Kind::ConnSum, 1}) return false;
    return true;
}

// 2. Closed forms for primitive alpha: H^4 = 0, H^5 = Z, H^2 = H^3 = Z^{r-1},
//    pi_1 trivial, over every block manifold of rank <= 6 and |alpha|_inf <= 3.
bool closed_forms() {
    for (const auto& m : test::block_manifolds_up_to_rank(6)) {
        const std::size_t r = m.rank();
        PrimitiveEnumerator en(r, 3);
        while (auto alpha = en.next()) {
            auto p = cohomology(m, *alpha);
            if (p.h[0] != FgAbelianGroup::free(1)) return false;
            if (!p.h[1].is_trivial()) return false;
            if (p.h[2] != FgAbelianGroup::free(r - 1)) return false;
            if (p.h[3] != FgAbelianGroup::free(r - 1)) return false;
            if (!p.h[4].is_trivial()) return false;
            if (p.h[5] != FgAbelianGroup::free(1)) return false;
            if (p.pi1_order != 1) return false;
        }
    }
    return true;
}

// Independent route for the spin test: w2(M(alpha)) = 0 iff wu lies in the
// kernel of p* on H^2 mod 2, which is the span of alpha mod 2 -- decided
// here by a GF(2) linear solve rather than the direct comparisons.
bool spin_via_gysin_kernel(const FourManifold& m, const EulerClass& alpha) {
    const std::size_t r = m.rank();
    Mod2Matrix col(r, Mod2Vector(1));
    Mod2Vector a = alpha.mod2().coords;
    for (std::size_t i = 0; i < r; ++i) col[i][0] = a[i];
    return solve_mod2(col, m.wu_class().coords).has_value();
}

// 3. classify = B_CONN_SUM(r-2) exactly when wu != 0 and wu != alpha mod 2,
//    cross-checked against the independent GF(2)-kernel route.
bool dichotomy() {
    for (const auto& m : test::block_manifolds_up_to_rank(6)) {
        PrimitiveEnumerator en(m.rank(), 3);
        while (auto alpha = en.next()) {
            auto t = classify(m, *alpha);
            Mod2Class wu = m.wu_class();
            bool case2 = !wu.is_zero() && wu != alpha->mod2();
            if (case2 != (t == FiveManifoldType{Kind::BConnSum, m.rank() - 2})) return false;
            if (!case2 && t != FiveManifoldType{Kind::ConnSum, m.rank() - 1}) return false;
            if (spin_via_gysin_kernel(m, *alpha) != (t.kind == Kind::ConnSum)) return false;
        }
    }
    return true;
}

// 4. find_spin_euler_class succeeds on every block manifold up to rank 22
//    and lands in CONN_SUM(r-1); spot checks for CP2 # -CP2 and K3.
bool spin_class_construction() {
    for (const auto& m : test::block_manifolds_up_to_rank(22)) {
        EulerClass alpha = find_spin_euler_class(m);
        if (divisibility(m, alpha) != 1) return false;
        if (classify(m, alpha) != FiveManifoldType{Kind::ConnSum, m.rank() - 1}) return false;
    }
    auto odd = FourManifold::from_blocks({{Block::CP2, 1}, {Block::CP2Bar, 1}});
    if (classify(odd, find_spin_euler_class(odd)).display() != "S^2 x S^3") return false;
    auto k3 = FourManifold::from_blocks({{Block::K3, 1}});
    return classify(k3, find_spin_euler_class(k3)).display() == "#_21 S^2 x S^3";
}

// 5. The three-case table for circle bundles over S^2, p in [-10, 10].
bool s2_bundle_table() {
    for (long long p = -10; p <= 10; ++p) {
        std::string got = cli::s2_bundle_total_space(p);
        std::string want;
        if (p == 0)
            want = "S^2 x S^1";
        else if (p == 1 || p == -1)
            want = "S^3";
        else
            want = "L(" + std::to_string(p < 0 ? -p : p) + ",1)";
        if (got != want) return false;
    }
    return true;
}

// 6. SNF vs the minor-gcd oracle on >= 10^4 random matrices.
bool snf_oracle_equivalence() {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 10000; ++trial) {
        std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
        IntegerMatrix a = test::random_matrix(rng, m, n);
        auto s = smith_normal_form(a);
        if (s.U * a * s.V != s.D) return false;
        if (abs(s.U.determinant()) != 1) return false;
        if (abs(s.V.determinant()) != 1) return false;
        if (s.diagonal() != test::minor_gcd_divisor_chain(a)) return false;
    }
    return true;
}

// 7. Characteristic-vector equation, exhaustive over 2^rank vectors for
//    every block manifold of rank <= 10.
bool wu_exhaustive() {
    for (const auto& m : test::block_manifolds_up_to_rank(10)) {
        const auto w = m.wu_class().coords;
        const auto& q = m.gram();
        const std::size_t n = m.rank();
        for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
            Int xqx = 0, xqw = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (!((bits >> i) & 1)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if ((bits >> j) & 1) xqx += q(i, j);
                    if (w[j]) xqw += q(i, j);
                }
            }
            if ((xqx - xqw) % 2 != 0) return false;
        }
    }
    return true;
}

// 8. 1000 random unimodular basis changes per test manifold leave every
//    computed invariant unchanged.
bool invariance_suite() {
    std::mt19937_64 rng(31337);
    const std::vector<FourManifold> manifolds = {
        FourManifold::from_blocks({{Block::CP2, 1}}),
        FourManifold::from_blocks({{Block::S2xS2, 1}}),
        FourManifold::from_blocks({{Block::CP2, 1}, {Block::CP2Bar, 1}}),
        FourManifold::from_blocks({{Block::S2xS2, 1}, {Block::CP2, 1}}),
        FourManifold::from_blocks({{Block::S2xS2, 2}, {Block::CP2Bar, 2}}),
    };
    for (const auto& m : manifolds) {
        const std::size_t r = m.rank();
        for (int trial = 0; trial < 1000; ++trial) {
            IntegerMatrix p = test::random_unimodular(rng, r);
            FourManifold m2 = m.change_basis(p);
            if (m2.rank() != r) return false;
            if (m2.signature() != m.signature()) return false;
            if (m2.is_even() != m.is_even()) return false;

            IntegerMatrix v = test::random_matrix(rng, r, 1, -3, 3);
            IntegerMatrix pv = p * v;
            std::vector<Int> a_old(r), a_new(r);
            for (std::size_t i = 0; i < r; ++i) {
                a_old[i] = pv(i, 0);
                a_new[i] = v(i, 0);
            }
            EulerClass old_class{a_old}, new_class{a_new};
            if (divisibility(m, old_class) != divisibility(m2, new_class)) return false;
            if (!(cohomology(m, old_class) == cohomology(m2, new_class))) return false;
            if (divisibility(m2, new_class) == 1 &&
                !(classify(m, old_class) == classify(m2, new_class)))
                return false;
        }
    }
    return true;
}

// 9. Euler characteristic of every computed profile is 0, including
//    non-primitive and zero classes.
bool euler_characteristic_vanishes() {
    std::mt19937_64 rng(271828);
    for (const auto& m : test::block_manifolds_up_to_rank(5)) {
        const std::size_t r = m.rank();
        if (cohomology(m, EulerClass{std::vector<Int>(r, 0)}).euler_characteristic() != 0)
            return false;
        for (int trial = 0; trial < 50; ++trial) {
            IntegerMatrix v = test::random_matrix(rng, r, 1, -8, 8);
            std::vector<Int> a(r);
            for (std::size_t i = 0; i < r; ++i) a[i] = v(i, 0);
            if (cohomology(m, EulerClass{a}).euler_characteristic() != 0) return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    report(1, "Giblin reproduction over S2xS2, bound 10", giblin_reproduction());
    report(2, "closed-form cohomology for primitive classes, rank <= 6", closed_forms());
    report(3, "spin dichotomy with independent GF(2)-kernel cross-check", dichotomy());
    report(4, "spin Euler class construction up to rank 22", spin_class_construction());
    report(5, "circle bundles over S^2, p in [-10, 10]", s2_bundle_table());
    report(6, "SNF vs minor-gcd oracle on 10^4 random matrices", snf_oracle_equivalence());
    report(7, "characteristic-vector equation, exhaustive to rank 10", wu_exhaustive());
    report(8, "invariance under 1000 random basis changes per manifold", invariance_suite());
    report(9, "Euler characteristic vanishes for every profile", euler_characteristic_vanishes());
    return failures == 0 ? 0 : 1;
}
