#include <doctest.h>

#include "cb/gysin.hpp"
#include "oracles.hpp"

#include <random>

using namespace cb;

namespace {

EulerClass ec(std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return EulerClass{std::move(c)};
}

const FgAbelianGroup Z = FgAbelianGroup::free(1);
const FgAbelianGroup ZERO = FgAbelianGroup::trivial();

}  // namespace

TEST_CASE("cup_alpha_matrix") {
    auto s2xs2 = FourManifold::from_blocks({{Block::S2xS2, 1}});
    CHECK(cup_alpha_matrix(s2xs2, ec({1, 0})) == IntegerMatrix{{0, 1}});

    auto cp2 = FourManifold::from_blocks({{Block::CP2, 1}});
    CHECK(cup_alpha_matrix(cp2, ec({1})) == IntegerMatrix{{1}});

    CHECK(cup_alpha_matrix(s2xs2, ec({0, 0})).is_zero());
    CHECK_THROWS_AS(cup_alpha_matrix(s2xs2, ec({1})), std::invalid_argument);
}

TEST_CASE("divisibility") {
    auto s2xs2 = FourManifold::from_blocks({{Block::S2xS2, 1}});
    CHECK(divisibility(s2xs2, ec({2, 4})) == 2);
    CHECK(divisibility(s2xs2, ec({1, 0})) == 1);
    CHECK(divisibility(s2xs2, ec({0, 0})) == 0);
}

TEST_CASE("content(Q*alpha) = content(alpha) for unimodular Q") {
    std::mt19937_64 rng(29);
    for (const auto& m : test::block_manifolds_up_to_rank(4)) {
        for (int trial = 0; trial < 30; ++trial) {
            IntegerMatrix v = test::random_matrix(rng, m.rank(), 1, -5, 5);
            std::vector<Int> a(m.rank());
            for (std::size_t i = 0; i < m.rank(); ++i) a[i] = v(i, 0);
            IntegerMatrix row = cup_alpha_matrix(m, EulerClass{a});
            std::vector<Int> qa(m.rank());
            for (std::size_t j = 0; j < m.rank(); ++j) qa[j] = row(0, j);
            CHECK(content(qa) == content(a));
        }
    }
}

TEST_CASE("cohomology of the primitive case matches the closed forms") {
    auto s2xs2 = FourManifold::from_blocks({{Block::S2xS2, 1}});
    auto p = cohomology(s2xs2, ec({1, 0}));
    CHECK(p.h == std::array<FgAbelianGroup, 6>{Z, ZERO, Z, Z, ZERO, Z});
    CHECK(p.pi1_order == 1);
}

TEST_CASE("cohomology of the zero class is the product with the circle") {
    for (const auto& m : test::block_manifolds_up_to_rank(4)) {
        auto p = cohomology(m, EulerClass{std::vector<Int>(m.rank(), 0)});
        const std::size_t r = m.rank();
        CHECK(p.h == std::array<FgAbelianGroup, 6>{Z, Z, FgAbelianGroup::free(r),
                                                   FgAbelianGroup::free(r), Z, Z});
        CHECK(p.pi1_order == 0);
    }
}

TEST_CASE("cohomology of a non-primitive class carries torsion") {
    auto s2xs2 = FourManifold::from_blocks({{Block::S2xS2, 1}});
    auto p = cohomology(s2xs2, ec({2, 0}));
    CHECK(p.h[0] == Z);
    CHECK(p.h[1] == ZERO);
    CHECK(p.h[2] == FgAbelianGroup{1, {2}});
    CHECK(p.h[3] == Z);
    CHECK(p.h[4] == FgAbelianGroup{0, {2}});
    CHECK(p.h[5] == Z);
    CHECK(p.pi1_order == 2);
    CHECK(p.euler_characteristic() == 0);

    auto p6 = cohomology(s2xs2, ec({6, 10}));
    CHECK(p6.pi1_order == 2);
    CHECK(p6.h[2] == FgAbelianGroup{1, {2}});
}

TEST_CASE("euler characteristic vanishes and torsion is dual for every alpha") {
    std::mt19937_64 rng(31);
    for (const auto& m : test::block_manifolds_up_to_rank(4)) {
        for (int trial = 0; trial < 40; ++trial) {
            IntegerMatrix v = test::random_matrix(rng, m.rank(), 1, -6, 6);
            std::vector<Int> a(m.rank());
            for (std::size_t i = 0; i < m.rank(); ++i) a[i] = v(i, 0);
            EulerClass alpha{a};
            auto p = cohomology(m, alpha);
            CHECK(p.euler_characteristic() == 0);
            // Free ranks are Poincare dual.
            for (std::size_t k = 0; k < 6; ++k)
                CHECK(p.h[k].free_rank == p.h[5 - k].free_rank);
            Int d = divisibility(m, alpha);
            if (d != 0) {
                CHECK(p.h[1] == ZERO);
                // Z_d torsion in both H^2 and H^4 (absent when d = 1).
                std::vector<Int> t = d > 1 ? std::vector<Int>{d} : std::vector<Int>{};
                CHECK(p.h[2].torsion == t);
                CHECK(p.h[4].torsion == t);
                CHECK(p.pi1_order == d);
            }
        }
    }
}

TEST_CASE("is_total_space_spin") {
    auto s2xs2 = FourManifold::from_blocks({{Block::S2xS2, 1}});
    CHECK(is_total_space_spin(s2xs2, ec({1, 0})));
    CHECK(is_total_space_spin(s2xs2, ec({3, -7})));

    auto odd = FourManifold::from_blocks({{Block::CP2, 1}, {Block::CP2Bar, 1}});
    CHECK(!is_total_space_spin(odd, ec({1, 0})));
    CHECK(is_total_space_spin(odd, ec({1, 1})));
}

TEST_CASE("cohomology and spin test are basis independent") {
    std::mt19937_64 rng(37);
    for (const auto& m : test::block_manifolds_up_to_rank(3)) {
        for (int trial = 0; trial < 25; ++trial) {
            IntegerMatrix p = test::random_unimodular(rng, m.rank());
            FourManifold m2 = m.change_basis(p);
            IntegerMatrix v = test::random_matrix(rng, m.rank(), 1, -4, 4);
            // Old coordinates alpha = P * alpha_new, so alpha_new = v gives
            // a matching pair (m, P*v) vs (m2, v).
            IntegerMatrix pv = p * v;
            std::vector<Int> a_old(m.rank()), a_new(m.rank());
            for (std::size_t i = 0; i < m.rank(); ++i) {
                a_old[i] = pv(i, 0);
                a_new[i] = v(i, 0);
            }
            CHECK(cohomology(m, EulerClass{a_old}) == cohomology(m2, EulerClass{a_new}));
            CHECK(is_total_space_spin(m, EulerClass{a_old}) ==
                  is_total_space_spin(m2, EulerClass{a_new}));
        }
    }
}
