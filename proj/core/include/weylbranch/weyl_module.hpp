/*
  weyl_module.hpp — characters and dimensions of local Weyl modules for
  current algebras, plus the bookkeeping data of global Weyl modules.

  The classical character of a local Weyl module depends only on the total
  weight of its current highest weight, so the API takes the weight in
  fundamental coordinates; current-weight accessors delegate to wt(psi).
  Fundamental modules follow the classical case table: types A and C give the
  irreducible V(w_i); types B and D (non-spin nodes) give the alternating
  chain V(w_i) + V(w_{i-2}) + ... ending at V(w_1) or V(0) by parity.
*/
#pragma once

#include "weylbranch/character.hpp"
#include "weylbranch/levi.hpp"

#include <map>
#include <set>
#include <string>

namespace weylbranch {

// finitely supported map from opaque point labels to nonzero dominant weights
// (fundamental coordinates of the context it was built for)
class CurrentWeight {
public:
    CurrentWeight(int rank, std::map<std::string, std::vector<Int>> entries);

    static CurrentWeight empty(int rank) { return CurrentWeight(rank, {}); }

    int rank() const { return rank_; }
    const std::map<std::string, std::vector<Int>>& entries() const { return entries_; }
    std::set<std::string> support() const;
    std::vector<Int> weight() const;   // wt: componentwise sum over the support

private:
    int rank_;
    std::map<std::string, std::vector<Int>> entries_;
};

// pointwise projection; points mapped to zero drop out of the support
CurrentWeight project_current_weight(const LeviSubalgebra& a, const CurrentWeight& psi);

// highest weights of the irreducible constituents of the fundamental local
// Weyl module at node i (1-based)
std::vector<Weight> fundamental_weyl_chain(const RootSystem& rs, int i);
const Character& fundamental_weyl_character(const RootSystem& rs, int i);
BigInt fundamental_weyl_dim(const RootSystem& rs, int i);

// local Weyl module character/dimension at a dominant weight given in
// fundamental coordinates (concatenated over blocks for a Levi)
const Character& local_weyl_character(const RootSystem& rs, std::span<const Int> lambda);
Character local_weyl_character(const LeviSubalgebra& a, std::span<const Int> lambda);
BigInt local_weyl_dim(const RootSystem& rs, std::span<const Int> lambda);
BigInt local_weyl_dim(const WeightLattice& lat, std::span<const Int> lambda);
BigInt local_weyl_dim(const LeviSubalgebra& a, std::span<const Int> lambda);

// current-weight accessors (support independence: everything factors
// through wt(psi))
const Character& local_weyl_character(const RootSystem& rs, const CurrentWeight& psi);
BigInt local_weyl_dim(const RootSystem& rs, const CurrentWeight& psi);

struct GlobalWeylDescriptor {
    std::vector<Int> lambda;                              // fundamental coordinates
    std::vector<std::pair<int, Int>> variable_multiplicities;  // (1-based node, m_i > 0)
    BigInt rank;                                          // free rank = local dimension
    Int variable_count() const;
};

GlobalWeylDescriptor global_weyl_descriptor(const RootSystem& rs, std::span<const Int> lambda);

} // namespace weylbranch
