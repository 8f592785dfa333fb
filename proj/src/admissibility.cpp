#include "fstype/admissibility.hpp"

#include <algorithm>
#include <cassert>

namespace fstype {

namespace {

struct IntervalTable {
    // best[i][j]: max chain sum with outermost color exactly (i,j);
    // inner[i][j]: index of the maximizing strict subinterval, or {0,0}.
    std::vector<std::vector<int>> best;
    std::vector<std::vector<std::pair<int, int>>> inner;
};

int weight_at(const ColorWeights& w, int i, int j) {
    auto it = w.find(Color{i, j});
    return it == w.end() ? 0 : it->second;
}

// Fills the chain DP for all intervals [i,j] inside [lo,hi], scanning by
// increasing width so inner intervals are ready first.
IntervalTable chain_table(const ColorWeights& w, int lo, int hi) {
    IntervalTable t;
    t.best.assign(static_cast<std::size_t>(hi) + 1, std::vector<int>(static_cast<std::size_t>(hi) + 1, 0));
    t.inner.assign(static_cast<std::size_t>(hi) + 1,
                   std::vector<std::pair<int, int>>(static_cast<std::size_t>(hi) + 1, {0, 0}));
    for (int width = 0; width <= hi - lo; ++width) {
        for (int i = lo; i + width <= hi; ++i) {
            int j = i + width;
            int best_inner = 0;
            std::pair<int, int> arg{0, 0};
            for (int i2 = i; i2 <= j; ++i2) {
                for (int j2 = i2; j2 <= j; ++j2) {
                    if (i2 == i && j2 == j) continue;
                    if (t.best[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)] > best_inner) {
                        best_inner = t.best[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)];
                        arg = {i2, j2};
                    }
                }
            }
            t.best[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = weight_at(w, i, j) + best_inner;
            t.inner[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = arg;
        }
    }
    return t;
}

std::vector<Color> unwind_chain(const IntervalTable& t, int i, int j) {
    std::vector<Color> chain;
    while (i != 0) {
        chain.push_back(Color{i, j});
        auto [i2, j2] = t.inner[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        i = i2;
        j = j2;
    }
    return chain;
}

ColorWeights weights_at_depth(const Monomial& m, int depth) {
    ColorWeights w;
    for (const auto& [v, e] : m.factors())
        if (v.depth == depth) w[v.color] = e;
    return w;
}

}  // namespace

ChainMax max_nested_chain(int ell, const ColorWeights& w, int lo, int hi) {
    if (lo < 1 || lo > hi || hi > ell) throw std::invalid_argument("max_nested_chain: invalid interval");
    IntervalTable t = chain_table(w, lo, hi);
    ChainMax out;
    int bi = 0, bj = 0;
    for (int i = lo; i <= hi; ++i) {
        for (int j = i; j <= hi; ++j) {
            if (t.best[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > out.value) {
                out.value = t.best[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                bi = i;
                bj = j;
            }
        }
    }
    if (bi != 0) out.chain = unwind_chain(t, bi, bj);
    return out;
}

CheckResult dc_check(int ell, const Monomial& m, int level) {
    if (level < 1) throw std::invalid_argument("dc_check: level must be >= 1");
    for (int n = 1; n <= m.max_depth(); ++n) {
        ColorWeights deep = weights_at_depth(m, n + 1);
        ColorWeights shallow = weights_at_depth(m, n);
        if (deep.empty() && shallow.empty()) continue;
        for (int c = 1; c <= ell; ++c) {
            ChainMax d = max_nested_chain(ell, deep, 1, c);
            ChainMax s = max_nested_chain(ell, shallow, c, ell);
            if (d.value + s.value > level) {
                ChainWitness wit;
                wit.anchor = n;
                wit.deep = d.chain;
                wit.shallow = s.chain;
                wit.total = d.value + s.value;
                wit.bound = level;
                return {false, wit};
            }
        }
    }
    return {true, std::nullopt};
}

CheckResult ic_check(const Monomial& m, const HighestWeight& lambda) {
    const int ell = lambda.ell();
    ColorWeights w = weights_at_depth(m, 1);
    if (w.empty()) return {true, std::nullopt};
    IntervalTable t = chain_table(w, 1, ell);
    // Only positive-weight outermost colors can give the tightest violation;
    // zero-weight outer extensions only weaken the bound.
    for (int i = 1; i <= ell; ++i) {
        for (int j = i; j <= ell; ++j) {
            if (weight_at(w, i, j) == 0) continue;
            int value = t.best[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            int bound = lambda.partial(j);
            if (value > bound) {
                ChainWitness wit;
                wit.anchor = ChainWitness::kInitialConditionAnchor;
                wit.shallow = unwind_chain(t, i, j);
                wit.total = value;
                wit.bound = bound;
                return {false, wit};
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

void enumerate_admissible(const HighestWeight& lambda, int d_max,
                          const std::vector<Variable>& vars_desc, std::size_t idx, int remaining,
                          Monomial current, std::vector<std::vector<Monomial>>& buckets) {
    if (idx == vars_desc.size() || remaining == 0) {
        buckets[static_cast<std::size_t>(d_max - remaining)].push_back(current);
        return;
    }
    const Variable& v = vars_desc[idx];
    const int level = lambda.level();
    int cap = std::min(remaining / v.depth, level);
    Monomial extended = current;
    for (int e = 0; e <= cap; ++e) {
        if (e == 0) {
            enumerate_admissible(lambda, d_max, vars_desc, idx + 1, remaining, current, buckets);
            continue;
        }
        extended = extended.times(v);
        // Admissibility is divisor-closed, so a failing prefix prunes every
        // extension, and higher powers of v fail as well.
        if (!dc_check(lambda.ell(), extended, level).ok) break;
        if (!ic_check(extended, lambda).ok) break;
        enumerate_admissible(lambda, d_max, vars_desc, idx + 1, remaining - e * v.depth, extended,
                             buckets);
    }
}

}  // namespace

std::vector<std::vector<Monomial>> enumerate_basis(const HighestWeight& lambda, int d_max) {
    if (d_max < 0) throw std::invalid_argument("enumerate_basis: negative degree bound");
    std::vector<std::vector<Monomial>> buckets(static_cast<std::size_t>(d_max) + 1);
    auto vars = all_variables(lambda.ell(), std::max(d_max, 1));
    std::reverse(vars.begin(), vars.end());  // greatest variable first
    enumerate_admissible(lambda, d_max, vars, 0, d_max, Monomial::unit(), buckets);
    return buckets;
}

CharacterSeries character(const HighestWeight& lambda, int d_max, bool refined) {
    CharacterSeries out;
    auto basis = enumerate_basis(lambda, d_max);
    out.coefficients.reserve(basis.size());
    for (const auto& bucket : basis) out.coefficients.push_back(static_cast<long long>(bucket.size()));
    if (refined) {
        const int ell = lambda.ell();
        for (int d = 0; d <= d_max; ++d) {
            std::map<std::vector<int>, long long> counts;
            for (const Monomial& m : basis[static_cast<std::size_t>(d)]) ++counts[m.weight(ell)];
            for (const auto& [w, c] : counts)
                out.refined.push_back(CharacterSeries::Block{d, w, c});
        }
    }
    return out;
}

}  // namespace fstype
