#pragma once

#include <map>

#include "fstype/algebra.hpp"

namespace fstype {

// Incremental exact row reduction over C[x_ij(-n)], pivoting on each row's
// minimal monomial. Rows are kept fraction-free: integer, content-free,
// positive pivot coefficient. The pivot set and the row space are invariant
// under reordering, rescaling and row-combining of the input.
class EchelonBasis {
public:
    // Reduces p against the basis; absorbs the remainder and returns true
    // if it was nonzero (p independent of the current row space).
    bool insert(const Polynomial& p);

    // Reduced remainder of p, in canonical form (zero iff p is in the span).
    Polynomial reduce(const Polynomial& p) const;
    bool contains(const Polynomial& p) const { return reduce(p).is_zero(); }

    std::size_t rank() const { return rows_.size(); }
    const std::map<Monomial, Polynomial, MonomialLess>& rows() const { return rows_; }

    // Row-space equality via mutual containment.
    static bool same_span(const EchelonBasis& a, const EchelonBasis& b);

private:
    std::map<Monomial, Polynomial, MonomialLess> rows_;
};

}  // namespace fstype
