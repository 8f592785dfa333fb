#include "fstype/echelon.hpp"

namespace fstype {

Polynomial EchelonBasis::reduce(const Polynomial& p) const {
    Polynomial r = p.normalized();
    while (!r.is_zero()) {
        auto it = rows_.find(r.leading_term());
        if (it == rows_.end()) break;
        const Polynomial& row = it->second;
        // Fraction-free combination; renormalizing keeps the integers small.
        Rat a = row.coefficient(it->first);
        Rat b = r.coefficient(it->first);
        r = (r.scaled(a) - row.scaled(b)).normalized();
    }
    return r;
}

bool EchelonBasis::insert(const Polynomial& p) {
    Polynomial r = reduce(p);
    if (r.is_zero()) return false;
    rows_.emplace(r.leading_term(), std::move(r));
    return true;
}

bool EchelonBasis::same_span(const EchelonBasis& a, const EchelonBasis& b) {
    if (a.rank() != b.rank()) return false;
    for (const auto& [lt, row] : a.rows_)
        if (!b.contains(row)) return false;
    return true;
}

}  // namespace fstype
