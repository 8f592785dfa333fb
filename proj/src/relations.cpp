#include "fstype/relations.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "fstype/echelon.hpp"

namespace fstype {

std::string Provenance::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::dc_family: os << "dcFamily(" << index << ")"; break;
        case Kind::ic_family: os << "icFamily(" << index << ")"; break;
        case Kind::ic_top: os << "icTop"; break;
    }
    return os.str();
}

namespace {

void compositions_rec(int remaining, int parts, std::vector<int>& acc, Polynomial& out) {
    if (parts == 1) {
        if (remaining >= 1) {
            std::vector<Monomial::Factor> factors;
            factors.reserve(acc.size() + 1);
            for (int n : acc) factors.emplace_back(Variable{Color{1, 1}, n}, 1);
            factors.emplace_back(Variable{Color{1, 1}, remaining}, 1);
            out.add_term(Monomial::from_factors(factors), 1);
        }
        return;
    }
    for (int n = 1; n <= remaining - (parts - 1); ++n) {
        acc.push_back(n);
        compositions_rec(remaining - n, parts - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

Polynomial seed_dc(int N, int level) {
    if (level < 1 || N < level + 1) throw std::invalid_argument("seed_dc: need N >= k+1 >= 2");
    Polynomial out;
    std::vector<int> acc;
    compositions_rec(N, level + 1, acc, out);
    return out;
}

Polynomial seed_ic(int r, const HighestWeight& lambda) {
    if (r < 1 || r > lambda.ell()) throw std::invalid_argument("seed_ic: index out of range");
    int exponent = lambda.partial(r) + 1;
    return Polynomial::of(Monomial::of(Variable{Color{1, 1}, 1}, exponent));
}

std::vector<Polynomial> lowering_orbit(int ell, const Polynomial& seed,
                                       const std::set<int>& allowed,
                                       std::optional<int> degree_cap) {
    auto grade = seed.homogeneous_grade(ell);
    if (seed.is_zero() || !grade) throw std::invalid_argument("lowering_orbit: seed must be nonzero homogeneous");
    if (degree_cap && grade->first > *degree_cap) return {};

    // Every lowering application moves one weight index up by one, so the
    // total number of useful applications is bounded by the weight mass
    // times the distance to the last index.
    int max_layers = 0;
    for (int r = 1; r <= ell; ++r) max_layers += grade->second[static_cast<std::size_t>(r) - 1] * (ell - r);

    std::vector<Polynomial> orbit;
    EchelonBasis span;
    std::deque<Polynomial> frontier;

    Polynomial start = seed.normalized();
    span.insert(start);
    orbit.push_back(start);
    frontier.push_back(start);

    for (int layer = 0; layer < max_layers && !frontier.empty(); ++layer) {
        std::deque<Polynomial> next;
        for (const Polynomial& p : frontier) {
            for (int t : allowed) {
                Polynomial image = lower(ell, t, p);
                if (image.is_zero()) continue;
                Polynomial canonical = image.normalized();
                if (span.insert(canonical)) {
                    orbit.push_back(canonical);
                    next.push_back(canonical);
                }
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

GeneratorSet generators(const HighestWeight& lambda, int d_max) {
    GeneratorSet out;
    if (d_max < 1) return out;

    const int ell = lambda.ell();
    const int level = lambda.level();
    std::set<int> all_ops;
    for (int t = 1; t < ell; ++t) all_ops.insert(t);

    EchelonBasis dedup;
    auto absorb = [&](const Polynomial& p, Provenance prov) {
        if (dedup.insert(p)) out.entries.push_back(Generator{p, prov});
    };

    for (int N = level + 1; N <= d_max; ++N)
        for (const Polynomial& p : lowering_orbit(ell, seed_dc(N, level), all_ops))
            absorb(p, Provenance{Provenance::Kind::dc_family, N});

    for (int r = 2; r <= ell; ++r) {
        if (lambda.partial(r) + 1 > d_max) continue;
        std::set<int> ops;
        for (int t = 1; t < r; ++t) ops.insert(t);
        for (const Polynomial& p : lowering_orbit(ell, seed_ic(r, lambda), ops))
            absorb(p, Provenance{Provenance::Kind::ic_family, r});
    }

    if (lambda.components()[0] + 1 <= d_max)
        absorb(seed_ic(1, lambda).normalized(), Provenance{Provenance::Kind::ic_top, 0});

    return out;
}

std::vector<std::pair<Monomial, Provenance>> leading_terms(const GeneratorSet& g) {
    std::vector<std::pair<Monomial, Provenance>> out;
    std::set<Monomial, MonomialLess> seen;
    for (const Generator& gen : g.entries) {
        Monomial lt = gen.poly.leading_term();
        if (seen.insert(lt).second) out.emplace_back(lt, gen.provenance);
    }
    return out;
}

}  // namespace fstype
