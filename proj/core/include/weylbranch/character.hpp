/*
  character.hpp — exact character arithmetic.

  Characters are finite multiplicity maps over a WeightLattice. Irreducible
  characters come from the Freudenthal recursion over the dominant chamber
  followed by orbit expansion; dimensions from the Weyl dimension formula
  (an independent route, used to cross-check the recursion).
*/
#pragma once

#include "weylbranch/lattice.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <vector>

namespace weylbranch {

using BigInt = boost::multiprecision::cpp_int;

class LeviSubalgebra;

class Character {
public:
    explicit Character(const WeightLattice& lat) : lat_(&lat) {}

    const WeightLattice& lattice() const { return *lat_; }
    const std::map<Weight, Int>& mults() const { return mults_; }
    Int mult(const Weight& w) const;
    bool empty() const { return mults_.empty(); }

    // accumulate; zero entries are erased (no zero multiplicities stored)
    void add(const Weight& w, Int m);

    BigInt mass() const;

    bool operator==(const Character& o) const {
        return lat_->same_as(*o.lat_) && mults_ == o.mults_;
    }

private:
    const WeightLattice* lat_;
    std::map<Weight, Int> mults_;
};

// multiplicities of the dominant weights of V(lambda), by Freudenthal's
// recursion; lambda must be dominant integral (else std::invalid_argument)
std::map<Weight, Int> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);

// total dimension from the dominant-chamber table and orbit sizes, without
// materializing the full character
BigInt freudenthal_mass(const RootSystem& rs, const Weight& lambda);

// full character of V(lambda); cached. Over a product lattice the character
// is the convolution of the block characters.
const Character& irreducible_character(const RootSystem& rs, const Weight& lambda);
const Character& irreducible_character(const WeightLattice& lat, const Weight& lambda);

// Weyl dimension formula, exact
BigInt dim_irreducible(const RootSystem& rs, const Weight& lambda);
BigInt dim_irreducible(const WeightLattice& lat, const Weight& lambda);

// weight convolution; both factors must live over the same lattice
Character tensor_character(const Character& c1, const Character& c2);

// decomposition into irreducibles: repeatedly strip the dominant weight of
// maximal squared norm (lexicographic tie-break). Throws std::invalid_argument
// ("not a module character") if any multiplicity is driven negative.
std::vector<std::pair<Weight, Int>> decompose(const Character& c);

// pushforward of a character along the weight projection onto a Levi
Character restrict_character(const Character& c, const LeviSubalgebra& a);

// branching multiplicities of V(lambda) restricted to a, keyed by the
// a-dominant weights in concatenated fundamental coordinates
std::map<std::vector<Int>, Int> branching_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                         const LeviSubalgebra& a);

bool is_weyl_invariant(const Character& c);

} // namespace weylbranch
