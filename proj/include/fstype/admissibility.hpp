#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fstype/algebra.hpp"

namespace fstype {

// A violating chain configuration. For a difference-condition witness,
// `anchor` is n >= 1 and the colors live at depths n+1 (deep) and n
// (shallow). An initial-condition witness uses the marker anchor == -1 and
// carries its depth-1 chain in `shallow`.
struct ChainWitness {
    int anchor = 1;
    std::vector<Color> deep;     // strictly nested, outermost first
    std::vector<Color> shallow;  // strictly nested, outermost first
    int total = 0;
    int bound = 0;

    static constexpr int kInitialConditionAnchor = -1;
};

struct CheckResult {
    bool ok = true;
    std::optional<ChainWitness> witness;
};

using ColorWeights = std::map<Color, int, ColorLess>;

struct ChainMax {
    int value = 0;
    std::vector<Color> chain;  // outermost first
};

// Maximum of sum(w) over strictly nested chains of distinct colors contained
// in [lo,hi], by the interval recurrence
//   best[i,j] = w[i,j] + max(0, best over [i',j'] strictly inside [i,j]).
// Ties resolve to the first maximizer in ascending (i,j) scan order.
ChainMax max_nested_chain(int ell, const ColorWeights& w, int lo, int hi);

// Difference conditions: for every adjacent depth pair (n+1, n) and every
// split column c, the best deep chain in [1,c] plus the best shallow chain
// in [c,ell] must not exceed the level.
CheckResult dc_check(int ell, const Monomial& m, int level);

// Initial conditions: every strictly nested chain of depth-1 colors with
// outermost color (i,j) has exponent sum at most k_0 + ... + k_{j-1}.
CheckResult ic_check(const Monomial& m, const HighestWeight& lambda);

// Admissible monomials (DC and IC) per degree 0..d_max, ascending in the
// monomial order.
std::vector<std::vector<Monomial>> enumerate_basis(const HighestWeight& lambda, int d_max);

struct CharacterSeries {
    struct Block {
        int degree = 0;
        std::vector<int> weight;
        long long count = 0;
    };
    std::vector<long long> coefficients;  // index = degree
    std::vector<Block> refined;           // empty unless requested
};

CharacterSeries character(const HighestWeight& lambda, int d_max, bool refined = false);

}  // namespace fstype
