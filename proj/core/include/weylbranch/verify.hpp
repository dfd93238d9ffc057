/*
  verify.hpp — independent verification checks and the sweep harness.

  Every check compares two exact integers (or exact decompositions) computed
  along independent routes and reports pass/fail/skipped; there are no
  tolerance parameters anywhere. Sweeps never abort on a failing check.
*/
#pragma once

#include "weylbranch/admissibility.hpp"
#include "weylbranch/weyl_module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylbranch {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct VerificationReport {
    std::string check;        // e.g. "thm2i", "lemmas/lem2", "surjectivity"
    std::string g;            // ambient system, e.g. "B3"
    std::string levi;         // canonical root string, "" when not applicable
    std::string lambda;       // fundamental coordinates, "" when not applicable
    std::string expected;
    std::string computed;
    std::string provenance;   // where the expected value comes from
    CheckStatus status = CheckStatus::Pass;
    std::string reason;       // for skipped checks
};

// dimension of the span of the weight spaces lambda - mu, mu in the
// nonnegative root span of the Levi, inside the local Weyl module character.
// Refuses Levis not generated by simple roots.
BigInt highest_component_dim(const RootSystem& rs, const LeviSubalgebra& a,
                             std::span<const Int> lambda);

// highest-weight-component count vs the Levi-side local Weyl dimension
VerificationReport check_thm2i(const RootSystem& rs, const LeviSubalgebra& a,
                               std::span<const Int> lambda);

// check_thm2i plus the polynomial-variable bookkeeping of the global side
VerificationReport check_thm2ii(const RootSystem& rs, const LeviSubalgebra& a,
                                std::span<const Int> lambda);

// joint highest-component count equals the product over the partition parts
VerificationReport check_support_independence(const RootSystem& rs, const LeviSubalgebra& a,
                                              std::span<const Int> lambda,
                                              const std::vector<std::vector<Int>>& parts);

// branching multiplicity at pi(lambda) is >= 1 and pi(lambda) is a maximal
// constituent in dominance order
VerificationReport check_simple_restriction(const RootSystem& rs, const LeviSubalgebra& a,
                                            std::span<const Int> lambda);

// the case identities lem1..lem5 for the pair (a, w_k), a simple, k 1-based;
// empty when the projection makes the pair a simple or inadmissible case
std::vector<VerificationReport> check_lemma_identities(const RootSystem& rs,
                                                       const LeviSubalgebra& a, int k);

struct SweepConfig {
    int max_rank = 4;
    int max_parts = 3;        // sum of fundamental multiplicities in the weight grid
    int oracle_parts = 2;     // weight grid cap for the surjectivity sweep
    int oracle_bound = 16;
    std::vector<std::string> checks;   // subset of the check names; empty = all
    std::optional<std::pair<Family, int>> only_system;
};

// deterministic grid sweep; individual failures are recorded, never thrown
std::vector<VerificationReport> run_sweep(const SweepConfig& config);

bool all_passed(const std::vector<VerificationReport>& reports);

} // namespace weylbranch
