#include "fstype/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace fstype {

std::strong_ordering compare_colors(const Color& a, const Color& b) {
    // (i'j') < (ij) iff i' > i, or i' = i and j' > j.
    if (a.i != b.i) return a.i > b.i ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.j != b.j) return a.j > b.j ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::vector<Color> all_colors(int ell) {
    if (ell < 1) throw std::invalid_argument("all_colors: rank must be >= 1");
    std::vector<Color> out;
    out.reserve(static_cast<std::size_t>(ell) * (ell + 1) / 2);
    for (int i = ell; i >= 1; --i)
        for (int j = ell; j >= i; --j) out.push_back(Color{i, j});
    return out;
}

std::strong_ordering compare_variables(const Variable& a, const Variable& b) {
    // Larger depth means more negative mode, hence smaller.
    if (a.depth != b.depth)
        return a.depth > b.depth ? std::strong_ordering::less : std::strong_ordering::greater;
    return compare_colors(a.color, b.color);
}

std::string to_string(const Variable& v) {
    std::ostringstream os;
    os << "x[" << v.color.i << "," << v.color.j << "](-" << v.depth << ")";
    return os.str();
}

Monomial Monomial::of(const Variable& v, int exponent) {
    return from_factors({{v, exponent}});
}

Monomial Monomial::from_factors(const std::vector<Factor>& factors) {
    std::map<Variable, int, VariableLess> merged;
    for (const auto& [v, e] : factors) {
        if (v.depth < 1) throw std::invalid_argument("Monomial: depth must be >= 1");
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (e > 0) merged[v] += e;
    }
    Monomial m;
    m.factors_.assign(merged.begin(), merged.end());
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += v.depth * e;
    return d;
}

int Monomial::factor_count() const {
    int n = 0;
    for (const auto& [v, e] : factors_) n += e;
    return n;
}

int Monomial::max_depth() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d = std::max(d, v.depth);
    return d;
}

std::vector<int> Monomial::weight(int ell) const {
    std::vector<int> w(static_cast<std::size_t>(ell), 0);
    for (const auto& [v, e] : factors_) {
        assert(v.color.valid(ell));
        w[static_cast<std::size_t>(v.color.i) - 1] += e;
        w[static_cast<std::size_t>(v.color.j) - 1] += e;
    }
    return w;
}

int Monomial::exponent(const Variable& v) const {
    for (const auto& [u, e] : factors_)
        if (u == v) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    // Merge of two ascending factor lists.
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        auto cmp = compare_variables(a->first, b->first);
        if (cmp < 0)
            out.factors_.push_back(*a++);
        else if (cmp > 0)
            out.factors_.push_back(*b++);
        else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

Monomial Monomial::times(const Variable& v, int exponent) const {
    return times(Monomial::of(v, exponent));
}

std::optional<Monomial> Monomial::divided_by(const Variable& v) const {
    Monomial out = *this;
    for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
        if (it->first == v) {
            if (--it->second == 0) out.factors_.erase(it);
            return out;
        }
    }
    return std::nullopt;
}

std::string Monomial::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) os << ' ';
        first = false;
        os << to_string(v);
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b) {
    // Walk both factor lists from the greatest factor down (the lists are
    // stored ascending), spending exponents one at a time.
    auto ia = a.factors().rbegin();
    auto ib = b.factors().rbegin();
    int ra = ia != a.factors().rend() ? ia->second : 0;
    int rb = ib != b.factors().rend() ? ib->second : 0;
    while (ia != a.factors().rend() && ib != b.factors().rend()) {
        auto cmp = compare_variables(ia->first, ib->first);
        if (cmp != 0) return cmp;
        int step = std::min(ra, rb);
        ra -= step;
        rb -= step;
        if (ra == 0 && ++ia != a.factors().rend()) ra = ia->second;
        if (rb == 0 && ++ib != b.factors().rend()) rb = ib->second;
    }
    // Proper prefix: the monomial with more factors is smaller.
    if (ia != a.factors().rend()) return std::strong_ordering::less;
    if (ib != b.factors().rend()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Polynomial Polynomial::of(const Monomial& m, const Rat& coeff) {
    Polynomial p;
    p.add_term(m, coeff);
    return p;
}

Rat Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rat& coeff) {
    // Caller-built rationals may arrive non-canonical (e.g. Rat(-4, 6)).
    Rat c = coeff;
    c.canonicalize();
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator-() const { return scaled(Rat(-1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
    Rat factor = c;
    factor.canonicalize();
    Polynomial out;
    if (factor == 0) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * factor);
    return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial out;
    for (const auto& [t, c] : terms_) out.terms_.emplace(t.times(m), c);
    return out;
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) return *this;
    Int den_lcm = 1;
    for (const auto& [m, c] : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Int num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        Int scaled_num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (terms_.begin()->second < 0) factor = -factor;
    return scaled(factor);
}

bool Polynomial::integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.get_den() == 1; });
}

std::optional<std::pair<int, std::vector<int>>> Polynomial::homogeneous_grade(int ell) const {
    if (terms_.empty()) return std::nullopt;
    auto it = terms_.begin();
    std::pair<int, std::vector<int>> grade{it->first.degree(), it->first.weight(ell)};
    for (++it; it != terms_.end(); ++it)
        if (it->first.degree() != grade.first || it->first.weight(ell) != grade.second)
            return std::nullopt;
    return grade;
}

Monomial Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
    return terms_.begin()->first;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << '-';
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        os << a << '*' << m.str();
        first = false;
    }
    return os.str();
}

namespace {

// [x_{-alpha_t}, x_color] as a list of (color, coefficient).
std::vector<std::pair<Color, int>> bracket(int t, const Color& c) {
    std::vector<std::pair<Color, int>> out;
    if (t == c.i && t == c.j) {
        out.push_back({Color{t, t + 1}, 2});
        return out;
    }
    if (t == c.i) out.push_back({Color{c.i + 1, c.j}, 1});
    if (t == c.j) out.push_back({Color{c.i, c.j + 1}, 1});
    return out;
}

}  // namespace

Polynomial lower(int ell, int t, const Monomial& m) {
    if (t < 1 || t >= ell) throw std::invalid_argument("lower: operator index out of range");
    Polynomial out;
    for (const auto& [v, e] : m.factors()) {
        auto images = bracket(t, v.color);
        if (images.empty()) continue;
        Monomial rest = *m.divided_by(v);
        for (const auto& [color, coeff] : images) {
            assert((Color{color.i, color.j}.valid(ell)));
            out.add_term(rest.times(Variable{color, v.depth}), Rat(coeff) * e);
        }
    }
    return out;
}

Polynomial lower(int ell, int t, const Polynomial& p) {
    if (t < 1 || t >= ell) throw std::invalid_argument("lower: operator index out of range");
    Polynomial out;
    for (const auto& [m, c] : p.terms()) out += lower(ell, t, m).scaled(c);
    return out;
}

HighestWeight::HighestWeight(std::vector<int> components) : components_(std::move(components)) {
    if (components_.size() < 2)
        throw std::invalid_argument("HighestWeight: need components (k_0,...,k_ell) with ell >= 1");
    int sum = 0;
    for (int k : components_) {
        if (k < 0) throw std::invalid_argument("HighestWeight: negative component");
        sum += k;
    }
    if (sum < 1) throw std::invalid_argument("HighestWeight: level must be >= 1");
}

int HighestWeight::level() const {
    int sum = 0;
    for (int k : components_) sum += k;
    return sum;
}

int HighestWeight::partial(int r) const {
    if (r < 1 || r > ell()) throw std::invalid_argument("HighestWeight: partial index out of range");
    int sum = 0;
    for (int s = 0; s < r; ++s) sum += components_[static_cast<std::size_t>(s)];
    return sum;
}

std::vector<Variable> all_variables(int ell, int max_depth) {
    std::vector<Variable> out;
    const auto colors = all_colors(ell);
    for (int depth = max_depth; depth >= 1; --depth)
        for (const Color& c : colors) out.push_back(Variable{c, depth});
    return out;
}

namespace {

// Shared backtracking enumerator: variables descending, exponents ascending,
// which emits each fixed-degree slice in ascending monomial order.
void enumerate_rec(const std::vector<Variable>& vars_desc, std::size_t idx, int remaining,
                   const std::vector<int>* weight_left, int ell, std::vector<Monomial::Factor>& acc,
                   const std::function<void(const std::vector<Monomial::Factor>&, int)>& emit) {
    if (idx == vars_desc.size()) {
        emit(acc, remaining);
        return;
    }
    const Variable& v = vars_desc[idx];
    int cap = remaining / v.depth;
    if (weight_left) {
        int wi = (*weight_left)[static_cast<std::size_t>(v.color.i) - 1];
        int wj = (*weight_left)[static_cast<std::size_t>(v.color.j) - 1];
        cap = v.color.i == v.color.j ? std::min(cap, std::min(wi, wj) / 2)
                                     : std::min(cap, std::min(wi, wj));
    }
    for (int e = 0; e <= cap; ++e) {
        if (e > 0) {
            acc.emplace_back(v, e);
        }
        if (weight_left && e > 0) {
            auto w = *weight_left;
            w[static_cast<std::size_t>(v.color.i) - 1] -= e;
            w[static_cast<std::size_t>(v.color.j) - 1] -= e;
            enumerate_rec(vars_desc, idx + 1, remaining - e * v.depth, &w, ell, acc, emit);
        } else {
            enumerate_rec(vars_desc, idx + 1, remaining - e * v.depth, weight_left, ell, acc, emit);
        }
        if (e > 0) acc.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int ell, int degree) {
    if (degree < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
    auto vars = all_variables(ell, std::max(degree, 1));
    std::reverse(vars.begin(), vars.end());
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> acc;
    enumerate_rec(vars, 0, degree, nullptr, ell, acc,
                  [&](const std::vector<Monomial::Factor>& factors, int remaining) {
                      if (remaining == 0) out.push_back(Monomial::from_factors(factors));
                  });
    return out;
}

std::vector<Monomial> monomials_of_grade(int ell, int degree, const std::vector<int>& weight) {
    if (degree < 0) throw std::invalid_argument("monomials_of_grade: negative degree");
    if (static_cast<int>(weight.size()) != ell)
        throw std::invalid_argument("monomials_of_grade: weight length must equal rank");
    auto vars = all_variables(ell, std::max(degree, 1));
    std::reverse(vars.begin(), vars.end());
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> acc;
    std::vector<int> wl = weight;
    enumerate_rec(vars, 0, degree, &wl, ell, acc,
                  [&](const std::vector<Monomial::Factor>& factors, int remaining) {
                      if (remaining != 0) return;
                      Monomial m = Monomial::from_factors(factors);
                      if (m.weight(ell) == weight) out.push_back(m);
                  });
    return out;
}

}  // namespace fstype
