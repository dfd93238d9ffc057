#include <doctest.h>

#include <weylbranch/character.hpp>
#include <weylbranch/levi.hpp>

#include <random>

using namespace weylbranch;

namespace {

Weight fund(const RootSystem& rs, std::initializer_list<Int> coords) {
    return rs.from_fundamental(std::vector<Int>(coords));
}

Character sum_of(const WeightLattice& lat, const std::vector<std::pair<Weight, Int>>& parts) {
    Character c(lat);
    for (const auto& [top, mult] : parts)
        for (const auto& [w, m] : irreducible_character(lat, top).mults())
            c.add(w, mult * m);
    return c;
}

} // namespace

TEST_CASE("sl2 strings") {
    const RootSystem& a1 = RootSystem::get(Family::A, 1);
    const Character& c = irreducible_character(a1, fund(a1, {2}));
    CHECK(c.mass() == 3);
    CHECK(c.mult(fund(a1, {2})) == 1);
    CHECK(c.mult(fund(a1, {0})) == 1);
    CHECK(c.mult(fund(a1, {-2})) == 1);
}

TEST_CASE("trivial character") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        const RootSystem& rs = RootSystem::get(f, f == Family::D ? 3 : 2);
        const Character& c = irreducible_character(rs, Weight::zero(rs.ambient_dim()));
        CHECK(c.mults().size() == 1);
        CHECK(c.mult(rs.canonical(Weight::zero(rs.ambient_dim()))) == 1);
    }
}

TEST_CASE("adjoint of A2: dimension 8, zero weight multiplicity 2") {
    const RootSystem& a2 = RootSystem::get(Family::A, 2);
    const Character& c = irreducible_character(a2, fund(a2, {1, 1}));
    CHECK(c.mass() == 8);
    CHECK(c.mult(a2.canonical(Weight::zero(3))) == 2);
    CHECK(is_weyl_invariant(c));
}

TEST_CASE("irreducible characters reject non-dominant weights") {
    const RootSystem& a2 = RootSystem::get(Family::A, 2);
    CHECK_THROWS_AS(irreducible_character(a2, fund(a2, {-1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(dim_irreducible(a2, fund(a2, {-1, 0})), std::invalid_argument);
}

TEST_CASE("Weyl dimension formula values") {
    const RootSystem& a1 = RootSystem::get(Family::A, 1);
    for (Int m = 0; m <= 6; ++m)
        CHECK(dim_irreducible(a1, fund(a1, {m})) == m + 1);

    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    CHECK(dim_irreducible(b3, fund(b3, {0, 1, 0})) == 21);

    const RootSystem& c2 = RootSystem::get(Family::C, 2);
    CHECK(dim_irreducible(c2, fund(c2, {0, 1})) == 5);
}

TEST_CASE("classical dimension table values") {
    const RootSystem& a2 = RootSystem::get(Family::A, 2);
    CHECK(dim_irreducible(a2, fund(a2, {3, 0})) == 10);
    const RootSystem& a4 = RootSystem::get(Family::A, 4);
    CHECK(dim_irreducible(a4, a4.fundamental_weight(1)) == 10);
    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    CHECK(dim_irreducible(b3, fund(b3, {2, 0, 0})) == 27);
    CHECK(dim_irreducible(b3, b3.fundamental_weight(2)) == 8);
    const RootSystem& b4 = RootSystem::get(Family::B, 4);
    CHECK(dim_irreducible(b4, b4.fundamental_weight(3)) == 16);
    const RootSystem& c2 = RootSystem::get(Family::C, 2);
    CHECK(dim_irreducible(c2, fund(c2, {1, 1})) == 16);
    const RootSystem& c3 = RootSystem::get(Family::C, 3);
    CHECK(dim_irreducible(c3, c3.fundamental_weight(2)) == 14);
    const RootSystem& d4 = RootSystem::get(Family::D, 4);
    CHECK(dim_irreducible(d4, d4.fundamental_weight(1)) == 28);
    CHECK(dim_irreducible(d4, d4.scaled(d4.fundamental_weight(3), 2)) == 35);
    const RootSystem& d5 = RootSystem::get(Family::D, 5);
    CHECK(dim_irreducible(d5, d5.fundamental_weight(0)) == 10);
    CHECK(dim_irreducible(d5, d5.fundamental_weight(4)) == 16);
}

TEST_CASE("Freudenthal mass equals the Weyl dimension formula, small grid") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        const int rank = f == Family::D ? 3 : 2;
        const RootSystem& rs = RootSystem::get(f, rank);
        std::vector<Int> c(rank, 0);
        for (;;) {
            const Weight lam = rs.from_fundamental(c);
            CHECK(freudenthal_mass(rs, lam) == dim_irreducible(rs, lam));
            int k = 0;
            while (k < rank && c[k] == 2) c[k++] = 0;
            if (k == rank) break;
            ++c[k];
        }
    }
}

TEST_CASE("tensor products") {
    const RootSystem& a1 = RootSystem::get(Family::A, 1);
    const WeightLattice& lat = WeightLattice::single(a1);
    const Character& two = irreducible_character(a1, fund(a1, {2}));

    SUBCASE("identity with the trivial character") {
        const Character& triv = irreducible_character(a1, fund(a1, {0}));
        CHECK(tensor_character(two, triv) == two);
    }
    SUBCASE("V(2) x V(2) = V(4) + V(2) + V(0)") {
        const auto parts = decompose(tensor_character(two, two));
        REQUIRE(parts.size() == 3);
        CHECK(parts[0] == std::make_pair(fund(a1, {4}), Int(1)));
        CHECK(parts[1] == std::make_pair(fund(a1, {2}), Int(1)));
        CHECK(parts[2] == std::make_pair(lat.canonical(fund(a1, {0})), Int(1)));
    }
    SUBCASE("ambient mismatch is a domain error") {
        const RootSystem& a2 = RootSystem::get(Family::A, 2);
        CHECK_THROWS_AS(tensor_character(two, irreducible_character(a2, fund(a2, {1, 0}))),
                        std::invalid_argument);
    }
}

TEST_CASE("tensor mass is multiplicative on random small characters") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Family f = std::vector<Family>{Family::A, Family::B, Family::C}[rng() % 3];
        const RootSystem& rs = RootSystem::get(f, 2);
        std::vector<Int> c1{static_cast<Int>(rng() % 3), static_cast<Int>(rng() % 3)};
        std::vector<Int> c2{static_cast<Int>(rng() % 3), static_cast<Int>(rng() % 3)};
        const Character& x = irreducible_character(rs, rs.from_fundamental(c1));
        const Character& y = irreducible_character(rs, rs.from_fundamental(c2));
        CHECK(tensor_character(x, y).mass() == x.mass() * y.mass());
    }
}

TEST_CASE("decompose") {
    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    const WeightLattice& lat = WeightLattice::single(b3);

    SUBCASE("round trip of a single irreducible") {
        const Weight lam = fund(b3, {1, 0, 1});
        const auto parts = decompose(irreducible_character(b3, lam));
        REQUIRE(parts.size() == 1);
        CHECK(parts[0] == std::make_pair(lam, Int(1)));
    }
    SUBCASE("additivity") {
        const Character c = sum_of(lat, {{fund(b3, {1, 0, 0}), 1}, {lat.canonical(Weight::zero(3)), 1}});
        const auto parts = decompose(c);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].first == fund(b3, {1, 0, 0}));
        CHECK(parts[1].first == lat.canonical(Weight::zero(3)));
    }
    SUBCASE("A2: V(w1) x V(w2) = V(w1+w2) + V(0)") {
        const RootSystem& a2 = RootSystem::get(Family::A, 2);
        const Character t = tensor_character(irreducible_character(a2, fund(a2, {1, 0})),
                                             irreducible_character(a2, fund(a2, {0, 1})));
        const auto parts = decompose(t);
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].first == fund(a2, {1, 1}));
        CHECK(parts[1].first == a2.canonical(Weight::zero(3)));
    }
    SUBCASE("a non-character input is rejected") {
        Character bad(lat);
        bad.add(fund(b3, {1, 0, 0}), 1);   // a bare dominant weight, no orbit
        CHECK_THROWS_WITH_AS(decompose(bad), doctest::Contains("not a module character"),
                             std::invalid_argument);
    }
}

TEST_CASE("decompose round trips random nonnegative combinations") {
    std::mt19937 rng(20250811);
    for (int trial = 0; trial < 25; ++trial) {
        const std::vector<const RootSystem*> pool{
            &RootSystem::get(Family::A, 2), &RootSystem::get(Family::B, 2),
            &RootSystem::get(Family::C, 2), &RootSystem::get(Family::A, 3),
            &RootSystem::get(Family::D, 3)};
        const RootSystem& rs = *pool[rng() % pool.size()];
        const WeightLattice& lat = WeightLattice::single(rs);
        std::map<Weight, Int> input;
        const int summands = 1 + static_cast<int>(rng() % 3);
        for (int s = 0; s < summands; ++s) {
            std::vector<Int> c(rs.rank());
            for (auto& x : c) x = static_cast<Int>(rng() % 3);
            input[rs.from_fundamental(c)] += 1 + static_cast<Int>(rng() % 3);
        }
        Character c(lat);
        for (const auto& [top, mult] : input)
            for (const auto& [w, m] : irreducible_character(lat, top).mults())
                c.add(w, mult * m);
        std::map<Weight, Int> recovered;
        for (const auto& [top, mult] : decompose(c)) recovered[top] += mult;
        CHECK(recovered == input);
    }
}

TEST_CASE("restriction") {
    const RootSystem& a3 = RootSystem::get(Family::A, 3);
    // the sl3 inside sl4 spanned by e1-e2, e2-e4 and their closure
    const LeviSubalgebra levi = LeviSubalgebra::from_simple_roots(
        a3, {a3.sub(Weight::eps(4, 1), Weight::eps(4, 2)), a3.sub(Weight::eps(4, 2), Weight::eps(4, 4))});

    SUBCASE("restricting the trivial character") {
        const Character r = restrict_character(
            irreducible_character(a3, Weight::zero(4)), levi);
        CHECK(r.mass() == 1);
        CHECK(r.mult(levi.lattice().zero()) == 1);
    }
    SUBCASE("defining representation: mass 4, tau_1 with multiplicity 1") {
        const Character r = restrict_character(irreducible_character(a3, fund(a3, {1, 0, 0})), levi);
        CHECK(r.mass() == 4);
        CHECK(r.mult(levi.embed_fundamental(std::vector<Int>{1, 0})) == 1);
    }
    SUBCASE("restriction preserves mass") {
        for (std::initializer_list<Int> c : {std::initializer_list<Int>{0, 1, 0},
                                             std::initializer_list<Int>{1, 0, 1},
                                             std::initializer_list<Int>{2, 0, 0}}) {
            const Character& full = irreducible_character(a3, fund(a3, c));
            CHECK(restrict_character(full, levi).mass() == full.mass());
        }
    }
    SUBCASE("ambient mismatch is rejected") {
        const RootSystem& b3 = RootSystem::get(Family::B, 3);
        CHECK_THROWS_AS(restrict_character(irreducible_character(b3, fund(b3, {1, 0, 0})), levi),
                        std::invalid_argument);
    }
    SUBCASE("the vector module of B3 restricts to a B2 as V(t1) + 2 V(0)") {
        const RootSystem& b3 = RootSystem::get(Family::B, 3);
        const LeviSubalgebra b2 = LeviSubalgebra::from_simple_roots(
            b3, {b3.simple_root(1), b3.simple_root(2)});
        const auto b = branching_multiplicities(b3, fund(b3, {1, 0, 0}), b2);
        const std::map<std::vector<Int>, Int> expected{{{1, 0}, 1}, {{0, 0}, 2}};
        CHECK(b == expected);
    }
}

TEST_CASE("branching multiplicities") {
    const RootSystem& a2 = RootSystem::get(Family::A, 2);

    SUBCASE("the full Levi branches trivially") {
        const LeviSubalgebra full =
            LeviSubalgebra::from_simple_roots(a2, {a2.simple_root(0), a2.simple_root(1)});
        const auto b = branching_multiplicities(a2, fund(a2, {1, 1}), full);
        REQUIRE(b.size() == 1);
        CHECK(b.at(std::vector<Int>{1, 1}) == 1);
    }
    SUBCASE("A2 to the A1 on alpha_1") {
        const LeviSubalgebra levi = LeviSubalgebra::from_simple_roots(a2, {a2.simple_root(0)});
        const auto b = branching_multiplicities(a2, fund(a2, {1, 0}), levi);
        REQUIRE(b.size() == 2);
        CHECK(b.at(std::vector<Int>{1}) == 1);
        CHECK(b.at(std::vector<Int>{0}) == 1);
    }
    SUBCASE("the projected highest weight always occurs") {
        const RootSystem& b3 = RootSystem::get(Family::B, 3);
        for (const LeviSubalgebra& levi : enumerate_simple_levis(b3)) {
            const Weight lam = b3.fundamental_weight(1);
            const auto b = branching_multiplicities(b3, lam, levi);
            CHECK(b.at(levi.project(lam)) >= 1);
        }
    }
}

TEST_CASE("branching over a two-component Levi") {
    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    const LeviSubalgebra levi = LeviSubalgebra::from_simple_roots(
        b3, {b3.simple_root(0), b3.simple_root(2)});
    REQUIRE(levi.components().size() == 2);
    const auto b = branching_multiplicities(b3, fund(b3, {1, 0, 1}), levi);
    // V(w1 + w3), dimension 48, against A1 x A1; the dimension sum is
    // asserted inside branching_multiplicities
    const std::map<std::vector<Int>, Int> expected{
        {{0, 1}, 2}, {{0, 3}, 2}, {{1, 1}, 4}, {{1, 3}, 1}, {{2, 1}, 2}};
    CHECK(b == expected);
    CHECK(b.at(levi.project(fund(b3, {1, 0, 1}))) >= 1);
}

TEST_CASE("irreducible characters are reflection invariant") {
    const RootSystem& c3 = RootSystem::get(Family::C, 3);
    CHECK(is_weyl_invariant(irreducible_character(c3, fund(c3, {1, 0, 1}))));
    const RootSystem& d4 = RootSystem::get(Family::D, 4);
    CHECK(is_weyl_invariant(irreducible_character(d4, fund(d4, {0, 0, 1, 1}))));
}
