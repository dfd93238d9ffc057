#include <doctest.h>

#include <weylbranch/admissibility.hpp>

using namespace weylbranch;

namespace {

LeviSubalgebra b2_in_b3() {
    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    return LeviSubalgebra::from_simple_roots(
        b3, {b3.sub(Weight::eps(3, 1), Weight::eps(3, 2)), b3.canonical(Weight::eps(3, 2))});
}

LeviSubalgebra d3_in_b3() {
    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    return LeviSubalgebra::from_simple_roots(
        b3, {b3.sub(Weight::eps(3, 1), Weight::eps(3, 2)),
             b3.sub(Weight::eps(3, 2), Weight::eps(3, 3)),
             b3.add(Weight::eps(3, 2), Weight::eps(3, 3))});
}

} // namespace

TEST_CASE("the doubled short-node projection in type B is locally non-admissible") {
    const LeviSubalgebra levi = b2_in_b3();
    const AdmissibilityVerdict v = classify_fundamental_pair(levi, 0, 2);
    CHECK_FALSE(v.globally);
    CHECK_FALSE(v.locally);
    REQUIRE(v.reasons.size() == 1);
    CHECK(v.reasons[0].projection == std::vector<Int>{0, 2});
    CHECK(v.reasons[0].label == "locally-non-admissible");
}

TEST_CASE("the split spin projection in type D is locally but not globally admissible") {
    const AdmissibilityVerdict v = classify_fundamental_pair(d3_in_b3(), 0, 2);
    CHECK_FALSE(v.globally);
    CHECK(v.locally);
    REQUIRE(v.reasons.size() == 1);
    CHECK(v.reasons[0].projection == std::vector<Int>{0, 1, 1});
    CHECK(v.reasons[0].label == "local-only");
}

TEST_CASE("simple-root-generated Levis are globally admissible everywhere, ranks <= 4") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        const int lo = f == Family::A ? 1 : f == Family::D ? 3 : 2;
        for (int rank = lo; rank <= 4; ++rank) {
            const RootSystem& rs = RootSystem::get(f, rank);
            for (unsigned mask = 1; mask < (1u << rank); ++mask) {
                std::vector<Weight> subset;
                for (int i = 0; i < rank; ++i)
                    if (mask & (1u << i)) subset.push_back(rs.simple_root(i));
                const LeviSubalgebra levi = LeviSubalgebra::from_simple_roots(rs, subset);
                std::vector<Int> all_ones(rank, 1);
                const AdmissibilityVerdict v = classify_pair(levi, all_ones);
                CHECK(v.globally);
                CHECK(v.locally);
            }
        }
    }
}

TEST_CASE("composite weights classify by conjunction over contributing fundamentals") {
    const LeviSubalgebra levi = b2_in_b3();

    SUBCASE("the zero weight is vacuously admissible") {
        const AdmissibilityVerdict v = classify_pair(levi, std::vector<Int>{0, 0, 0});
        CHECK(v.globally);
        CHECK(v.locally);
        CHECK(v.reasons.empty());
    }
    SUBCASE("one bad fundamental poisons the pair") {
        const AdmissibilityVerdict v = classify_pair(levi, std::vector<Int>{1, 1, 0});
        CHECK_FALSE(v.locally);
    }
    SUBCASE("the verdict ignores multiplicities") {
        for (std::vector<Int> lambda :
             {std::vector<Int>{0, 1, 0}, std::vector<Int>{0, 3, 0}, std::vector<Int>{0, 2, 0}}) {
            const AdmissibilityVerdict v = classify_pair(levi, lambda);
            CHECK_FALSE(v.globally);
            CHECK_FALSE(v.locally);
        }
        for (std::vector<Int> lambda : {std::vector<Int>{1, 0, 1}, std::vector<Int>{2, 0, 2}}) {
            const AdmissibilityVerdict v = classify_pair(levi, lambda);
            CHECK(v.globally == classify_pair(levi, std::vector<Int>{1, 0, 1}).globally);
        }
    }
    SUBCASE("dominance is required") {
        CHECK_THROWS_AS(classify_pair(levi, std::vector<Int>{-1, 0, 0}), std::invalid_argument);
    }
}

TEST_CASE("globally admissible implies locally admissible on enumerated pairs") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        const int lo = f == Family::A ? 1 : f == Family::D ? 3 : 2;
        for (int rank = lo; rank <= 3; ++rank) {
            const RootSystem& rs = RootSystem::get(f, rank);
            for (const LeviSubalgebra& levi : enumerate_simple_levis(rs))
                for (int k = 1; k <= rank; ++k) {
                    const AdmissibilityVerdict v = classify_fundamental_pair(levi, 0, k);
                    CHECK((!v.globally || v.locally));
                }
        }
    }
}

TEST_CASE("surjectivity oracle") {
    const RootSystem& b3 = RootSystem::get(Family::B, 3);
    const LeviSubalgebra levi = b2_in_b3();

    SUBCASE("fundamental projections admit only the trivial decomposition") {
        // pi(w3) = tau_2
        CHECK(surjectivity_oracle(levi, std::vector<Int>{0, 0, 1}) ==
              SurjectivityResult::Surjective);
    }
    SUBCASE("the doubled projection of w2 has an unliftable decomposition") {
        CHECK(surjectivity_oracle(levi, std::vector<Int>{0, 1, 0}) ==
              SurjectivityResult::NotSurjective);
    }
    SUBCASE("2 w3 lifts both decompositions of 2 tau_2") {
        CHECK(surjectivity_oracle(levi, std::vector<Int>{0, 0, 2}) ==
              SurjectivityResult::Surjective);
    }
    SUBCASE("a tiny bound yields an explicit inconclusive result") {
        CHECK(surjectivity_oracle(levi, std::vector<Int>{0, 0, 2}, 1) ==
              SurjectivityResult::Inconclusive);
    }
    SUBCASE("oracle agrees with the classifier across B2") {
        const RootSystem& b2 = RootSystem::get(Family::B, 2);
        for (const LeviSubalgebra& l : enumerate_simple_levis(b2))
            for (Int m1 = 0; m1 <= 2; ++m1)
                for (Int m2 = 0; m1 + m2 <= 2; ++m2) {
                    const std::vector<Int> lambda{m1, m2};
                    const bool globally = classify_pair(l, lambda).globally;
                    const SurjectivityResult r = surjectivity_oracle(l, lambda);
                    CHECK(r != SurjectivityResult::Inconclusive);
                    CHECK((r == SurjectivityResult::Surjective) == globally);
                }
    }
    (void)b3;
}
