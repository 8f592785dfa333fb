#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fstype/algebra.hpp"
#include "fstype/relations.hpp"

namespace fstype {

// One (degree, weight) block of the truncated quotient.
struct BlockReport {
    std::vector<int> weight;
    int num_monomials = 0;
    int ideal_rank = 0;
    std::vector<Monomial> pivots;    // leading terms of the ideal block
    std::vector<Monomial> standard;  // non-pivotal monomials of the block
    std::vector<Monomial> basis;     // admissible monomials of the block
    bool match = false;
};

struct GradedReport {
    int degree = 0;
    std::vector<BlockReport> blocks;  // weights ascending lexicographically
    bool match = false;
};

struct VerificationReport {
    HighestWeight lambda;
    int max_degree = 0;
    std::vector<GradedReport> degrees;
    bool match = false;
};

// The degree-d (optionally weight-mu) slice of the ideal spanned by g: all
// products m * p with p in g and m a monomial of the complementary grade.
// Complete for the graded piece because the generators are homogeneous.
std::vector<Polynomial> graded_component(int ell, const GeneratorSet& g, int d,
                                         const std::optional<std::vector<int>>& mu = std::nullopt);

struct EliminationResult {
    std::vector<Monomial> pivots;    // ascending
    std::vector<Monomial> standard;  // ascending
};

// Exact elimination of the (homogeneous, grade (d, mu)) rows, pivoting on
// minimal monomials; standard = monomials of the grade not pivotal.
EliminationResult standard_monomials(int ell, const std::vector<Polynomial>& polys, int d,
                                     const std::optional<std::vector<int>>& mu = std::nullopt);

// Blockwise comparison of the quotient's standard monomials against the
// admissible monomials, for every degree d <= d_max and every weight block.
// Blocks run in parallel; FSTYPE_THREADS caps the worker count.
VerificationReport verify_presentation(const HighestWeight& lambda, int d_max);

std::string report_json(const VerificationReport& report);
std::string report_csv(const VerificationReport& report);
std::string report_text(const VerificationReport& report);

}  // namespace fstype
