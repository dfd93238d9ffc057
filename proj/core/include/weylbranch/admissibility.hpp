/*
  admissibility.hpp — classification of pairs (Levi, dominant weight).

  A pair (a, w_k) with a simple is globally admissible iff the projection of
  w_k is zero or a single fundamental weight of a. It is locally
  non-admissible iff the ambient is B_n, the component is of type B_s (s > 1)
  and the projection is twice the last fundamental weight, or the ambient is
  C_n, the component is of type A_s and the projection is not zero or a single
  fundamental weight. Composite weights and semisimple Levis classify as the
  conjunction over contributing fundamentals and components.
*/
#pragma once

#include "weylbranch/levi.hpp"

#include <string>
#include <vector>

namespace weylbranch {

struct AdmissibilityReason {
    int component;                 // 0-based component index
    int fundamental;               // 1-based ambient node k
    std::string label;             // "local-only" or "locally-non-admissible"
    std::vector<Int> projection;   // pi(w_k) restricted to the component
};

struct AdmissibilityVerdict {
    bool globally = true;
    bool locally = true;
    std::vector<AdmissibilityReason> reasons;   // one entry per non-global (component, k)
};

// verdict for a single (component, w_k) pair; k is 1-based
AdmissibilityVerdict classify_fundamental_pair(const LeviSubalgebra& a, int component, int k);

// conjunction over all components and all fundamentals with m_i > 0
AdmissibilityVerdict classify_pair(const LeviSubalgebra& a, std::span<const Int> lambda);

enum class SurjectivityResult { Surjective, NotSurjective, Inconclusive };

const char* to_string(SurjectivityResult r);

// decides whether every multiset decomposition of pi(lambda) into nonzero
// dominant Levi weights lifts to a matching decomposition of lambda.
// `bound` guards the number of parts explored; exceeding it without finding a
// failing decomposition yields Inconclusive rather than a silent truncation.
SurjectivityResult surjectivity_oracle(const LeviSubalgebra& a, std::span<const Int> lambda,
                                       int bound = 16);

} // namespace weylbranch
