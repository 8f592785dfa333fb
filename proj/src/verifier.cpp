#include "fstype/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "fstype/admissibility.hpp"
#include "fstype/echelon.hpp"

namespace fstype {

namespace {

bool weight_dominates(const std::vector<int>& outer, const std::vector<int>& inner) {
    for (std::size_t r = 0; r < outer.size(); ++r)
        if (inner[r] > outer[r]) return false;
    return true;
}

std::vector<int> weight_difference(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> d(outer.size());
    for (std::size_t r = 0; r < outer.size(); ++r) d[r] = outer[r] - inner[r];
    return d;
}

int worker_count(std::size_t items) {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("FSTYPE_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return std::min<int>(n, static_cast<int>(std::max<std::size_t>(items, 1)));
}

// Index-parallel map with deterministic slot assignment.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    int workers = worker_count(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = static_cast<std::size_t>(w); i < count;
                     i += static_cast<std::size_t>(workers))
                    fn(i);
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<Polynomial> graded_component(int ell, const GeneratorSet& g, int d,
                                         const std::optional<std::vector<int>>& mu) {
    if (d < 0) throw std::invalid_argument("graded_component: negative degree");
    std::vector<Polynomial> out;
    for (const Generator& gen : g.entries) {
        auto grade = gen.poly.homogeneous_grade(ell);
        if (!grade || grade->first > d) continue;
        std::vector<Monomial> multipliers;
        if (mu) {
            if (!weight_dominates(*mu, grade->second)) continue;
            multipliers = monomials_of_grade(ell, d - grade->first, weight_difference(*mu, grade->second));
        } else {
            multipliers = monomials_of_degree(ell, d - grade->first);
        }
        for (const Monomial& m : multipliers) out.push_back(gen.poly.times_monomial(m));
    }
    return out;
}

EliminationResult standard_monomials(int ell, const std::vector<Polynomial>& polys, int d,
                                     const std::optional<std::vector<int>>& mu) {
    std::vector<Monomial> all =
        mu ? monomials_of_grade(ell, d, *mu) : monomials_of_degree(ell, d);

    EchelonBasis basis;
    for (const Polynomial& p : polys) {
        if (p.is_zero()) continue;
        auto grade = p.homogeneous_grade(ell);
        if (!grade || grade->first != d || (mu && grade->second != *mu))
            throw std::invalid_argument("standard_monomials: row of the wrong grade");
        basis.insert(p);
    }

    EliminationResult out;
    for (const auto& [pivot, row] : basis.rows()) out.pivots.push_back(pivot);
    for (const Monomial& m : all)
        if (basis.rows().find(m) == basis.rows().end()) out.standard.push_back(m);
    return out;
}

VerificationReport verify_presentation(const HighestWeight& lambda, int d_max) {
    if (d_max < 0) throw std::invalid_argument("verify_presentation: negative degree bound");
    const int ell = lambda.ell();
    VerificationReport report{lambda, d_max, {}, true};

    GeneratorSet gens = generators(lambda, d_max);
    auto basis = enumerate_basis(lambda, d_max);

    // Work list: one entry per (degree, weight) block, weights ascending.
    struct Task {
        int degree;
        std::vector<int> weight;
        std::vector<Monomial> monomials;
    };
    std::vector<Task> tasks;
    std::vector<std::size_t> degree_starts;
    for (int d = 0; d <= d_max; ++d) {
        degree_starts.push_back(tasks.size());
        std::map<std::vector<int>, std::vector<Monomial>> blocks;
        for (const Monomial& m : monomials_of_degree(ell, d)) blocks[m.weight(ell)].push_back(m);
        for (auto& [w, ms] : blocks) tasks.push_back(Task{d, w, std::move(ms)});
    }
    degree_starts.push_back(tasks.size());

    std::vector<BlockReport> results(tasks.size());
    parallel_for(tasks.size(), [&](std::size_t idx) {
        const Task& task = tasks[idx];
        BlockReport block;
        block.weight = task.weight;
        block.num_monomials = static_cast<int>(task.monomials.size());

        auto rows = graded_component(ell, gens, task.degree, task.weight);
        auto elim = standard_monomials(ell, rows, task.degree, task.weight);
        block.ideal_rank = static_cast<int>(elim.pivots.size());
        block.pivots = std::move(elim.pivots);
        block.standard = std::move(elim.standard);

        for (const Monomial& m : basis[static_cast<std::size_t>(task.degree)])
            if (m.weight(ell) == task.weight) block.basis.push_back(m);

        block.match = block.standard == block.basis;
        results[idx] = std::move(block);
    });

    for (int d = 0; d <= d_max; ++d) {
        GradedReport graded;
        graded.degree = d;
        graded.match = true;
        for (std::size_t idx = degree_starts[static_cast<std::size_t>(d)];
             idx < degree_starts[static_cast<std::size_t>(d) + 1]; ++idx) {
            graded.match = graded.match && results[idx].match;
            graded.blocks.push_back(std::move(results[idx]));
        }
        report.match = report.match && graded.match;
        report.degrees.push_back(std::move(graded));
    }
    return report;
}

namespace {

nlohmann::ordered_json monomial_strings(const std::vector<Monomial>& ms) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Monomial& m : ms) arr.push_back(m.str());
    return arr;
}

}  // namespace

std::string report_json(const VerificationReport& report) {
    nlohmann::ordered_json root;
    root["ell"] = report.lambda.ell();
    root["weights"] = report.lambda.components();
    root["maxDegree"] = report.max_degree;
    root["degrees"] = nlohmann::ordered_json::array();
    for (const GradedReport& graded : report.degrees) {
        nlohmann::ordered_json jd;
        jd["degree"] = graded.degree;
        jd["blocks"] = nlohmann::ordered_json::array();
        for (const BlockReport& block : graded.blocks) {
            nlohmann::ordered_json jb;
            jb["weight"] = block.weight;
            jb["numMonomials"] = block.num_monomials;
            jb["idealRank"] = block.ideal_rank;
            jb["pivots"] = monomial_strings(block.pivots);
            jb["standard"] = monomial_strings(block.standard);
            jb["basis"] = monomial_strings(block.basis);
            jb["match"] = block.match;
            jd["blocks"].push_back(std::move(jb));
        }
        jd["match"] = graded.match;
        root["degrees"].push_back(std::move(jd));
    }
    root["match"] = report.match;
    return root.dump(2) + "\n";
}

namespace {

std::string weight_key(const std::vector<int>& w) {
    std::ostringstream os;
    for (std::size_t r = 0; r < w.size(); ++r) {
        if (r) os << ':';
        os << w[r];
    }
    return os.str();
}

}  // namespace

std::string report_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "degree,weight,numMonomials,idealRank,standardCount,basisCount,match\n";
    for (const GradedReport& graded : report.degrees)
        for (const BlockReport& block : graded.blocks)
            os << graded.degree << ',' << weight_key(block.weight) << ',' << block.num_monomials
               << ',' << block.ideal_rank << ',' << block.standard.size() << ','
               << block.basis.size() << ',' << (block.match ? "true" : "false") << '\n';
    return os.str();
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "presentation check: ell=" << report.lambda.ell() << " weights=(";
    const auto& ks = report.lambda.components();
    for (std::size_t s = 0; s < ks.size(); ++s) os << (s ? "," : "") << ks[s];
    os << ") maxDegree=" << report.max_degree << "\n";
    for (const GradedReport& graded : report.degrees) {
        long long standard_count = 0, basis_count = 0;
        for (const BlockReport& block : graded.blocks) {
            standard_count += static_cast<long long>(block.standard.size());
            basis_count += static_cast<long long>(block.basis.size());
        }
        os << "degree " << graded.degree << ": blocks=" << graded.blocks.size()
           << " standard=" << standard_count << " basis=" << basis_count
           << " match=" << (graded.match ? "yes" : "no") << "\n";
        for (const BlockReport& block : graded.blocks) {
            if (block.match) continue;
            os << "  MISMATCH weight=(" << weight_key(block.weight) << ")\n";
            os << "    standard:";
            for (const Monomial& m : block.standard) os << "  " << m.str();
            os << "\n    basis:";
            for (const Monomial& m : block.basis) os << "  " << m.str();
            os << "\n";
        }
    }
    os << "aggregate match: " << (report.match ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace fstype
