#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fstype/admissibility.hpp"
#include "fstype/algebra.hpp"
#include "fstype/relations.hpp"
#include "fstype/verifier.hpp"

namespace {

enum class Format { json, csv, text };

struct JobConfig {
    int ell = 1;
    std::vector<int> weights;
    int max_degree = 0;
    Format format = Format::text;
    bool refined = false;
    std::string out_path;
};

constexpr int kExitMatch = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

int emit(const JobConfig& config, const std::string& payload) {
    if (config.out_path.empty()) {
        std::cout << payload;
        return kExitMatch;
    }
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << config.out_path << "'\n";
        return kExitUsage;
    }
    out << payload;
    return kExitMatch;
}

std::string weight_key(const std::vector<int>& w) {
    std::ostringstream os;
    for (std::size_t r = 0; r < w.size(); ++r) os << (r ? ":" : "") << w[r];
    return os.str();
}

nlohmann::ordered_json header_json(const JobConfig& config) {
    nlohmann::ordered_json root;
    root["ell"] = config.ell;
    root["weights"] = config.weights;
    root["maxDegree"] = config.max_degree;
    return root;
}

int run_basis(const JobConfig& config, const fstype::HighestWeight& lambda) {
    auto basis = fstype::enumerate_basis(lambda, config.max_degree);
    std::ostringstream os;
    if (config.format == Format::json) {
        nlohmann::ordered_json root = header_json(config);
        root["degrees"] = nlohmann::ordered_json::array();
        for (std::size_t d = 0; d < basis.size(); ++d) {
            nlohmann::ordered_json jd;
            jd["degree"] = d;
            jd["count"] = basis[d].size();
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& m : basis[d]) arr.push_back(m.str());
            jd["monomials"] = std::move(arr);
            root["degrees"].push_back(std::move(jd));
        }
        os << root.dump(2) << "\n";
    } else if (config.format == Format::csv) {
        os << "degree,monomial\n";
        for (std::size_t d = 0; d < basis.size(); ++d)
            for (const auto& m : basis[d]) os << d << ",\"" << m.str() << "\"\n";
    } else {
        for (std::size_t d = 0; d < basis.size(); ++d) {
            os << "degree " << d << " (" << basis[d].size() << "):";
            for (const auto& m : basis[d]) os << "  " << m.str();
            os << "\n";
        }
    }
    return emit(config, os.str());
}

int run_character(const JobConfig& config, const fstype::HighestWeight& lambda) {
    auto series = fstype::character(lambda, config.max_degree, config.refined);
    std::ostringstream os;
    if (config.format == Format::json) {
        nlohmann::ordered_json root = header_json(config);
        root["coefficients"] = series.coefficients;
        if (config.refined) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& block : series.refined) {
                nlohmann::ordered_json jb;
                jb["degree"] = block.degree;
                jb["weight"] = block.weight;
                jb["count"] = block.count;
                arr.push_back(std::move(jb));
            }
            root["refined"] = std::move(arr);
        }
        os << root.dump(2) << "\n";
    } else if (config.format == Format::csv) {
        if (config.refined) {
            os << "degree,weight,count\n";
            for (const auto& block : series.refined)
                os << block.degree << ',' << weight_key(block.weight) << ',' << block.count << "\n";
        } else {
            os << "degree,count\n";
            for (std::size_t d = 0; d < series.coefficients.size(); ++d)
                os << d << ',' << series.coefficients[d] << "\n";
        }
    } else {
        os << "character:";
        for (long long c : series.coefficients) os << ' ' << c;
        os << "\n";
        if (config.refined)
            for (const auto& block : series.refined)
                os << "degree " << block.degree << " weight (" << weight_key(block.weight)
                   << "): " << block.count << "\n";
    }
    return emit(config, os.str());
}

int run_relations(const JobConfig& config, const fstype::HighestWeight& lambda) {
    auto gens = fstype::generators(lambda, config.max_degree);
    std::ostringstream os;
    if (config.format == Format::json) {
        nlohmann::ordered_json root = header_json(config);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& gen : gens.entries) {
            auto grade = gen.poly.homogeneous_grade(config.ell);
            nlohmann::ordered_json jg;
            jg["tag"] = gen.provenance.str();
            jg["degree"] = grade->first;
            jg["weight"] = grade->second;
            jg["polynomial"] = gen.poly.str();
            arr.push_back(std::move(jg));
        }
        root["generators"] = std::move(arr);
        os << root.dump(2) << "\n";
    } else if (config.format == Format::csv) {
        os << "tag,degree,weight,polynomial\n";
        for (const auto& gen : gens.entries) {
            auto grade = gen.poly.homogeneous_grade(config.ell);
            os << gen.provenance.str() << ',' << grade->first << ',' << weight_key(grade->second)
               << ",\"" << gen.poly.str() << "\"\n";
        }
    } else {
        for (const auto& gen : gens.entries)
            os << gen.provenance.str() << ": " << gen.poly.str() << "\n";
    }
    return emit(config, os.str());
}

int run_verify(const JobConfig& config, const fstype::HighestWeight& lambda) {
    auto report = fstype::verify_presentation(lambda, config.max_degree);
    std::string payload;
    if (config.format == Format::json)
        payload = fstype::report_json(report);
    else if (config.format == Format::csv)
        payload = fstype::report_csv(report);
    else
        payload = fstype::report_text(report);
    int status = emit(config, payload);
    if (status != kExitMatch) return status;
    return report.match ? kExitMatch : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Admissible bases and ideal presentations of type C principal-like subspaces"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::simple);

    JobConfig config;
    std::string format_name = "text";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--ell", config.ell, "rank of the underlying simple algebra")->required();
        cmd->add_option("--weights", config.weights,
                        "comma-separated components k0,k1,...,kl of the highest weight")
            ->required()
            ->delimiter(',');
        cmd->add_option("--max-degree", config.max_degree, "degree truncation")->required();
        cmd->add_option("--format", format_name, "output format: json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->add_option("--out", config.out_path, "write output to a file instead of stdout");
    };

    CLI::App* basis_cmd = app.add_subcommand("basis", "enumerate admissible monomials per degree");
    CLI::App* character_cmd =
        app.add_subcommand("character", "graded dimensions of the admissible basis");
    CLI::App* relations_cmd = app.add_subcommand("relations", "generators of the defining ideal");
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "compare standard monomials of the quotient with the admissible basis");
    add_common(basis_cmd);
    add_common(character_cmd);
    add_common(relations_cmd);
    add_common(verify_cmd);
    character_cmd->add_flag("--refined", config.refined, "also report per-weight counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (format_name == "json")
        config.format = Format::json;
    else if (format_name == "csv")
        config.format = Format::csv;
    else
        config.format = Format::text;

    if (config.ell < 1) {
        std::cerr << "error: --ell must be >= 1\n";
        return kExitUsage;
    }
    if (config.max_degree < 0) {
        std::cerr << "error: --max-degree must be >= 0\n";
        return kExitUsage;
    }
    if (static_cast<int>(config.weights.size()) != config.ell + 1) {
        std::cerr << "error: --weights needs exactly ell+1 components\n";
        return kExitUsage;
    }
    int sum = 0;
    for (int k : config.weights) {
        if (k < 0) {
            std::cerr << "error: --weights components must be >= 0\n";
            return kExitUsage;
        }
        sum += k;
    }
    if (sum < 1) {
        std::cerr << "error: --weights must have a positive component\n";
        return kExitUsage;
    }

    try {
        fstype::HighestWeight lambda(config.weights);
        if (app.got_subcommand(basis_cmd)) return run_basis(config, lambda);
        if (app.got_subcommand(character_cmd)) return run_character(config, lambda);
        if (app.got_subcommand(relations_cmd)) return run_relations(config, lambda);
        if (app.got_subcommand(verify_cmd)) return run_verify(config, lambda);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
