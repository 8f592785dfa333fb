#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fstype/algebra.hpp"

namespace fstype {

// Where a generator of the defining ideal came from.
struct Provenance {
    enum class Kind { dc_family, ic_family, ic_top };

    Kind kind = Kind::dc_family;
    int index = 0;  // N for dc_family, r for ic_family, unused for ic_top

    std::string str() const;
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Generator {
    Polynomial poly;  // homogeneous, canonically normalized
    Provenance provenance;
};

// Homogeneous generators of the ideal, linearly independent within each
// (degree, weight) block.
struct GeneratorSet {
    std::vector<Generator> entries;
};

// Coefficient of total depth N in the (k+1)-st power of the x_{11} current:
// the sum over ordered compositions n_1+...+n_{k+1} = N, n_i >= 1, of
// x_{11}(-n_1)...x_{11}(-n_{k+1}). Returned unnormalized, so repeated
// monomials carry their multinomial coefficients.
Polynomial seed_dc(int N, int level);

// x_{11}(-1)^{k^{(r)}+1} where k^{(r)} = k_0 + ... + k_{r-1}.
Polynomial seed_ic(int r, const HighestWeight& lambda);

// Linearly independent list spanning the closure of {seed} under lower(t,.)
// for t in `allowed`, found breadth-first with exact row-reduction
// deduplication. Entries are canonically normalized; the seed comes first.
std::vector<Polynomial> lowering_orbit(int ell, const Polynomial& seed,
                                       const std::set<int>& allowed,
                                       std::optional<int> degree_cap = std::nullopt);

// All ideal generators of degree <= d_max: the lowering orbits of the
// dc seeds for k+1 <= N <= d_max under every operator, the orbits of the
// ic seeds for r = 2..ell under operators below r, and x_{11}(-1)^{k_0+1}.
// Duplicates across families reduce away; the first discoverer keeps the tag.
GeneratorSet generators(const HighestWeight& lambda, int d_max);

// leading_term applied entrywise, duplicates collapsed (first tag kept).
std::vector<std::pair<Monomial, Provenance>> leading_terms(const GeneratorSet& g);

}  // namespace fstype
