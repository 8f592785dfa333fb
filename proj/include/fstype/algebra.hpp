#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

// Symbolic layer for the commuting algebra C[x_{ij}(-n)] attached to the
// type C_l root system: colors (i,j), negative-mode variables x_{ij}(-n),
// exponent-map monomials, rational-coefficient polynomials, the linear
// order used for leading terms, and the lowering (adjoint) action.

namespace fstype {

using Int = mpz_class;
using Rat = mpq_class;

// Unordered index pair (i,j), 1 <= i <= j <= ell, naming the root e_i + e_j.
struct Color {
    int i = 1;
    int j = 1;

    bool valid(int ell) const { return 1 <= i && i <= j && j <= ell; }
    friend bool operator==(const Color&, const Color&) = default;
};

// Color order: (i'j') < (ij) iff i' > i, or i' = i and j' > j.
// (1,1) is the maximum color.
std::strong_ordering compare_colors(const Color& a, const Color& b);

struct ColorLess {
    bool operator()(const Color& a, const Color& b) const {
        return compare_colors(a, b) < 0;
    }
};

// All colors for rank ell, ascending in the color order; size ell*(ell+1)/2.
std::vector<Color> all_colors(int ell);

// x_color(-depth), depth >= 1.
struct Variable {
    Color color;
    int depth = 1;

    bool valid(int ell) const { return color.valid(ell) && depth >= 1; }
    friend bool operator==(const Variable&, const Variable&) = default;
};

// Deeper modes are smaller; ties broken by the color order.
std::strong_ordering compare_variables(const Variable& a, const Variable& b);

struct VariableLess {
    bool operator()(const Variable& a, const Variable& b) const {
        return compare_variables(a, b) < 0;
    }
};

// `x[i,j](-n)`
std::string to_string(const Variable& v);

// Finite exponent map on variables. Factors are stored ascending in the
// variable order (deepest first), which is also the canonical display order.
class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;

    static Monomial unit() { return Monomial{}; }
    static Monomial of(const Variable& v, int exponent = 1);
    // Accepts factors in any order, merges repeats, drops zero exponents.
    static Monomial from_factors(const std::vector<Factor>& factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    // t-degree: sum of depth * exponent.
    int degree() const;
    // Total number of factors counted with multiplicity.
    int factor_count() const;
    int max_depth() const;
    // Component r counts occurrences of index r over all colors, with
    // multiplicity; (i,i) contributes twice to component i.
    std::vector<int> weight(int ell) const;
    int exponent(const Variable& v) const;

    Monomial times(const Monomial& other) const;
    Monomial times(const Variable& v, int exponent = 1) const;
    // Removes one power of v; nullopt if v does not divide this monomial.
    std::optional<Monomial> divided_by(const Variable& v) const;

    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

// Write both monomials as factor sequences descending from the greatest
// factor and compare lexicographically. When one sequence is a proper
// prefix of the other, the monomial with more factors is smaller. Total;
// compatible with multiplication on equal factor counts.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b) < 0;
    }
};

inline Monomial multiply(const Monomial& a, const Monomial& b) { return a.times(b); }

// Finite map monomial -> nonzero rational.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, MonomialLess>;

    Polynomial() = default;

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial of(const Monomial& m, const Rat& coeff = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coefficient(const Monomial& m) const;

    // Accumulates coeff onto m, erasing the term if it cancels.
    Polynomial& add_term(const Monomial& m, const Rat& coeff);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;

    Polynomial scaled(const Rat& c) const;
    Polynomial times_monomial(const Monomial& m) const;

    // Canonical form: coefficients are coprime integers and the coefficient
    // of the minimal monomial is positive. Zero stays zero.
    Polynomial normalized() const;
    bool integer_coefficients() const;

    // (degree, weight) shared by all terms, or nullopt. Zero counts as
    // homogeneous of every grade and returns nullopt.
    std::optional<std::pair<int, std::vector<int>>> homogeneous_grade(int ell) const;

    // Minimal monomial of the support; throws std::domain_error on zero.
    Monomial leading_term() const;

    // `c1*m1 + c2*m2 + ...`, terms ascending, integer display requires a
    // normalized polynomial; general rationals print as num/den.
    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

inline Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial poly_scale(const Polynomial& p, const Rat& c) { return p.scaled(c); }
inline Polynomial poly_multiply_by_monomial(const Polynomial& p, const Monomial& m) {
    return p.times_monomial(m);
}

inline Monomial leading_term(const Polynomial& p) { return p.leading_term(); }

// Adjoint action of x_{-alpha_t}, 1 <= t <= ell-1, extended to C[x_ij(-n)]
// as a derivation. On a variable: x_{tt} -> 2 x_{t,t+1}, x_{tj} -> x_{t+1,j}
// (t < j), x_{it} -> x_{i,t+1} (i < t), else 0. Depth is preserved.
Polynomial lower(int ell, int t, const Polynomial& p);
Polynomial lower(int ell, int t, const Monomial& m);

// Dominant weight vector (k_0,...,k_ell) of an affine highest weight.
class HighestWeight {
public:
    explicit HighestWeight(std::vector<int> components);

    int ell() const { return static_cast<int>(components_.size()) - 1; }
    int level() const;
    // k_0 + ... + k_{r-1}, 1 <= r <= ell.
    int partial(int r) const;
    const std::vector<int>& components() const { return components_; }

    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

private:
    std::vector<int> components_;
};

// All variables with depth <= max_depth, ascending in the variable order.
std::vector<Variable> all_variables(int ell, int max_depth);

// All monomials of the given t-degree (no admissibility filter), ascending.
std::vector<Monomial> monomials_of_degree(int ell, int degree);
// As above, restricted to a fixed weight vector.
std::vector<Monomial> monomials_of_grade(int ell, int degree, const std::vector<int>& weight);

}  // namespace fstype
