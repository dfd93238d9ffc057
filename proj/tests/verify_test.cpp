#include <doctest.h>

#include <weylbranch/verify.hpp>

using namespace weylbranch;

namespace {

LeviSubalgebra subset_levi(const RootSystem& rs, std::initializer_list<int> nodes) {
    std::vector<Weight> roots;
    for (int i : nodes) roots.push_back(rs.simple_root(i));
    return LeviSubalgebra::from_simple_roots(rs, roots);
}

} // namespace

TEST_CASE("highest component dimension") {
    const RootSystem& b3 = RootSystem::get(Family::B, 3);

    SUBCASE("the full Levi collects the whole module") {
        const LeviSubalgebra full = subset_levi(b3, {0, 1, 2});
        CHECK(highest_component_dim(b3, full, std::vector<Int>{0, 1, 0}) ==
              local_weyl_dim(b3, std::vector<Int>{0, 1, 0}));
    }
    SUBCASE("the zero weight gives a line") {
        const LeviSubalgebra a1 = subset_levi(b3, {0});
        CHECK(highest_component_dim(b3, a1, std::vector<Int>{0, 0, 0}) == 1);
    }
    SUBCASE("the short-root A1 against the spin module") {
        const LeviSubalgebra a1 = subset_levi(b3, {2});
        CHECK(highest_component_dim(b3, a1, std::vector<Int>{0, 0, 1}) == 2);
    }
    SUBCASE("Levis not generated by simple roots are refused") {
        const LeviSubalgebra off = LeviSubalgebra::from_simple_roots(
            b3, {b3.sub(Weight::eps(3, 1), Weight::eps(3, 3))});
        CHECK_THROWS_WITH_AS(highest_component_dim(b3, off, std::vector<Int>{1, 0, 0}),
                             doctest::Contains("simple roots"), std::invalid_argument);
    }
}

TEST_CASE("restriction dimension check (local)") {
    SUBCASE("A2 to the A1 on alpha_1 at w1") {
        const RootSystem& a2 = RootSystem::get(Family::A, 2);
        const VerificationReport r = check_thm2i(a2, subset_levi(a2, {0}), std::vector<Int>{1, 0});
        CHECK(r.status == CheckStatus::Pass);
        CHECK(r.expected == "2");
        CHECK(r.computed == "2");
    }
    SUBCASE("B3 to the B2 on {alpha_2, alpha_3} at w2: both sides 5") {
        const RootSystem& b3 = RootSystem::get(Family::B, 3);
        const VerificationReport r =
            check_thm2i(b3, subset_levi(b3, {1, 2}), std::vector<Int>{0, 1, 0});
        CHECK(r.status == CheckStatus::Pass);
        CHECK(r.expected == "5");
        CHECK(r.computed == "5");
    }
    SUBCASE("the zero weight passes trivially") {
        const RootSystem& b3 = RootSystem::get(Family::B, 3);
        const VerificationReport r =
            check_thm2i(b3, subset_levi(b3, {0}), std::vector<Int>{0, 0, 0});
        CHECK(r.status == CheckStatus::Pass);
        CHECK(r.computed == "1");
    }
}

TEST_CASE("restriction dimension check (global bookkeeping)") {
    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    SUBCASE("vacuous at zero") {
        const VerificationReport r =
            check_thm2ii(b3, subset_levi(b3, {1, 2}), std::vector<Int>{0, 0, 0});
        CHECK(r.status == CheckStatus::Pass);
    }
    SUBCASE("variable counts never grow under projection") {
        const LeviSubalgebra levi = subset_levi(b3, {1, 2});
        for (std::vector<Int> lambda : {std::vector<Int>{0, 1, 1}, std::vector<Int>{1, 1, 0},
                                        std::vector<Int>{1, 0, 1}}) {
            const VerificationReport r = check_thm2ii(b3, levi, lambda);
            CHECK(r.status == CheckStatus::Pass);
        }
    }
    SUBCASE("non-admissible pairs are refused") {
        const LeviSubalgebra off = LeviSubalgebra::from_simple_roots(
            b3, {b3.sub(Weight::eps(3, 1), Weight::eps(3, 2)), b3.canonical(Weight::eps(3, 2))});
        CHECK_THROWS_AS(check_thm2ii(b3, off, std::vector<Int>{0, 1, 0}), std::invalid_argument);
    }
}

TEST_CASE("support independence products") {
    SUBCASE("single part partitions are trivially equal") {
        const RootSystem& b2 = RootSystem::get(Family::B, 2);
        const VerificationReport r = check_support_independence(
            b2, subset_levi(b2, {0}), std::vector<Int>{1, 1}, {{1, 1}});
        CHECK(r.status == CheckStatus::Pass);
    }
    SUBCASE("B2, A1 on alpha_1, split of w1 + w2") {
        const RootSystem& b2 = RootSystem::get(Family::B, 2);
        const VerificationReport r = check_support_independence(
            b2, subset_levi(b2, {0}), std::vector<Int>{1, 1}, {{1, 0}, {0, 1}});
        CHECK(r.status == CheckStatus::Pass);
    }
    SUBCASE("A3, A2 Levi, split of 2 w1") {
        const RootSystem& a3 = RootSystem::get(Family::A, 3);
        const VerificationReport r = check_support_independence(
            a3, subset_levi(a3, {0, 1}), std::vector<Int>{2, 0, 0}, {{1, 0, 0}, {1, 0, 0}});
        CHECK(r.status == CheckStatus::Pass);
    }
    SUBCASE("partitions must sum to the weight") {
        const RootSystem& b2 = RootSystem::get(Family::B, 2);
        CHECK_THROWS_AS(check_support_independence(b2, subset_levi(b2, {0}),
                                                   std::vector<Int>{1, 1}, {{1, 0}}),
                        std::invalid_argument);
    }
}

TEST_CASE("simple restriction necessary conditions") {
    SUBCASE("the full Levi") {
        const RootSystem& a2 = RootSystem::get(Family::A, 2);
        const VerificationReport r =
            check_simple_restriction(a2, subset_levi(a2, {0, 1}), std::vector<Int>{1, 1});
        CHECK(r.status == CheckStatus::Pass);
    }
    SUBCASE("the sl3 inside sl4 at w2") {
        const RootSystem& a3 = RootSystem::get(Family::A, 3);
        const LeviSubalgebra levi = LeviSubalgebra::from_simple_roots(
            a3, {a3.sub(Weight::eps(4, 1), Weight::eps(4, 2)),
                 a3.sub(Weight::eps(4, 2), Weight::eps(4, 4))});
        const VerificationReport r = check_simple_restriction(a3, levi, std::vector<Int>{0, 1, 0});
        CHECK(r.status == CheckStatus::Pass);
    }
    SUBCASE("zero weight") {
        const RootSystem& a2 = RootSystem::get(Family::A, 2);
        const VerificationReport r =
            check_simple_restriction(a2, subset_levi(a2, {0}), std::vector<Int>{0, 0});
        CHECK(r.status == CheckStatus::Pass);
    }
}

TEST_CASE("case identity checks dispatch on the projection") {
    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    const LeviSubalgebra d3 = LeviSubalgebra::from_simple_roots(
        b3, {b3.sub(Weight::eps(3, 1), Weight::eps(3, 2)),
             b3.sub(Weight::eps(3, 2), Weight::eps(3, 3)),
             b3.add(Weight::eps(3, 2), Weight::eps(3, 3))});

    SUBCASE("split spin projection: tensor of the two spin modules") {
        const auto reports = check_lemma_identities(b3, d3, 2);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].check == "lemmas/lem2");
        CHECK(reports[0].status == CheckStatus::Pass);
    }
    SUBCASE("spin node is a simple case, no identity") {
        CHECK(check_lemma_identities(b3, d3, 3).empty());
    }
    SUBCASE("doubled spin projection inside B4") {
        const RootSystem& b4 = RootSystem::get(Family::B, 4);
        const LeviSubalgebra d3_in_b4 = LeviSubalgebra::from_simple_roots(
            b4, {b4.sub(Weight::eps(4, 1), Weight::eps(4, 2)),
                 b4.sub(Weight::eps(4, 2), Weight::eps(4, 3)),
                 b4.add(Weight::eps(4, 2), Weight::eps(4, 3))});
        const auto reports = check_lemma_identities(b4, d3_in_b4, 3);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].check == "lemmas/lem3");
        CHECK(reports[0].status == CheckStatus::Pass);
    }
    SUBCASE("locally non-admissible pairs claim nothing") {
        const LeviSubalgebra b2 = LeviSubalgebra::from_simple_roots(
            b3, {b3.sub(Weight::eps(3, 1), Weight::eps(3, 2)), b3.canonical(Weight::eps(3, 2))});
        CHECK(check_lemma_identities(b3, b2, 2).empty());
    }
    SUBCASE("long-root string projections decompose as two-row chains") {
        const LeviSubalgebra a1_long = LeviSubalgebra::from_simple_roots(
            b3, {b3.add(Weight::eps(3, 1), Weight::eps(3, 2))});
        const auto reports = check_lemma_identities(b3, a1_long, 2);
        REQUIRE(reports.size() == 1);
        CHECK(reports[0].check == "lemmas/lem5");
        CHECK(reports[0].status == CheckStatus::Pass);
    }
}

TEST_CASE("spin tensor identities at rank four") {
    // D4: V(t4) x V(t3) = V(t3 + t4) + V(t1)   (dimensions 8*8 = 56 + 8)
    const RootSystem& d4 = RootSystem::get(Family::D, 4);
    const WeightLattice& lat = WeightLattice::single(d4);
    const Weight t3 = d4.fundamental_weight(2), t4 = d4.fundamental_weight(3);
    {
        const auto parts = decompose(tensor_character(irreducible_character(d4, t4),
                                                      irreducible_character(d4, t3)));
        std::map<Weight, Int> got(parts.begin(), parts.end());
        std::map<Weight, Int> expected{{d4.add(t3, t4), 1}, {d4.fundamental_weight(0), 1}};
        CHECK(got == expected);
    }
    // D4: V(t4) x V(t4) = V(2 t4) + V(t2) + V(0)   (35 + 28 + 1)
    {
        const auto parts = decompose(tensor_character(irreducible_character(d4, t4),
                                                      irreducible_character(d4, t4)));
        std::map<Weight, Int> got(parts.begin(), parts.end());
        std::map<Weight, Int> expected{{d4.scaled(t4, 2), 1},
                                       {d4.fundamental_weight(1), 1},
                                       {lat.canonical(Weight::zero(4)), 1}};
        CHECK(got == expected);
    }
}

TEST_CASE("sweeps") {
    SUBCASE("an empty check list selected by an unknown name yields no reports") {
        SweepConfig cfg;
        cfg.checks = {"nothing"};
        CHECK(run_sweep(cfg).empty());
    }
    SUBCASE("the rank-2 grid completes with zero failures") {
        SweepConfig cfg;
        cfg.max_rank = 2;
        const auto reports = run_sweep(cfg);
        CHECK(!reports.empty());
        CHECK(all_passed(reports));
    }
    SUBCASE("sweeps are deterministic") {
        SweepConfig cfg;
        cfg.max_rank = 2;
        cfg.checks = {"thm2i", "surjectivity"};
        const auto a = run_sweep(cfg);
        const auto b = run_sweep(cfg);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].check == b[i].check);
            CHECK(a[i].g == b[i].g);
            CHECK(a[i].levi == b[i].levi);
            CHECK(a[i].lambda == b[i].lambda);
            CHECK(a[i].computed == b[i].computed);
            CHECK(a[i].status == b[i].status);
        }
    }
}
