// Command-line front end: analyze, presentation, bounds, preset, cover,
// quotient, selftest. Exit status 0 = pass, 1 = failed verdict, 2 = bad input.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "milnor/bounds.hpp"
#include "milnor/checks.hpp"
#include "milnor/presets.hpp"
#include "milnor/report.hpp"

using namespace milnor;
using nlohmann::json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_verdict = 1;
constexpr int exit_input = 2;

std::string slurp(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool is_incidence_text(const std::string& text)
{
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        line = line.substr(0, line.find('#'));
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos)
            continue;
        return line.compare(start, 9, "incidence") == 0;
    }
    return false;
}

// Affine chart of the input; projective input is deconed along `infinity`.
AffineArrangement affine_chart(const ParsedArrangement& parsed, std::optional<int> infinity)
{
    if (const auto* arr = std::get_if<Arrangement>(&parsed)) {
        int inf = infinity.value_or(static_cast<int>(arr->size()) - 1);
        if (inf < 0 || inf >= static_cast<int>(arr->size()))
            throw std::out_of_range("infinity line index out of range");
        return decone(*arr, inf).affine;
    }
    if (infinity)
        throw std::invalid_argument("--infinity applies to projective input only");
    return std::get<AffineArrangement>(parsed);
}

std::string format_bounds(const BoundReport& b, const Prediction& p)
{
    std::ostringstream out;
    out << "lower bound: " << b.lower_bound << "\n";
    out << "one-line bound per line:";
    for (long v : b.onehyp_per_line)
        out << " " << v;
    out << "\none-line best: " << b.onehyp_best << "\n";
    out << "cdo per k:";
    for (long v : b.cdo_per_k)
        out << " " << v;
    out << "\ncdo total: " << b.cdo_total << "\n";
    for (const auto& w : b.applicable) {
        out << "fires: " << w.criterion;
        if (w.criterion == "oka_sakamoto")
            out << " (line " << w.infinity_line << " at infinity)";
        else
            out << " (line " << w.line << ")";
        out << "\n";
    }
    for (int h : b.guard_blocked)
        out << "guard blocks one-point criterion on line " << h << "\n";
    out << "prediction: " << (p.exact ? p.exact->to_string() : std::string("none")) << ", " << p.lower
        << " <= b1 <= " << p.upper << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"H1 of the Milnor fiber of a real line arrangement"};
    app.require_subcommand(1);

    std::string file;
    std::optional<int> infinity;
    std::optional<int> modulus;
    std::vector<long> primes;
    bool as_json = false;
    bool projective = false;
    std::uint64_t seed = 1;
    std::string name, d1_file, d2_file;

    auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline with consistency verdicts");
    analyze_cmd->add_option("file", file, "arrangement file, or - for stdin")->required();
    analyze_cmd->add_option("--infinity", infinity, "projective line sent to infinity");
    analyze_cmd->add_option("--primes", primes, "extra torsion-probe primes")->delimiter(',');
    analyze_cmd->add_option("--modulus", modulus, "cover degree override")->check(CLI::PositiveNumber);
    analyze_cmd->add_flag("--json", as_json, "emit JSON");

    auto* pres_cmd = app.add_subcommand("presentation", "print the fundamental group presentation");
    pres_cmd->add_option("file", file, "arrangement file, or - for stdin")->required();
    pres_cmd->add_option("--infinity", infinity, "projective line sent to infinity");
    pres_cmd->add_flag("--projective", projective, "presentation of the projective complement");

    auto* bounds_cmd = app.add_subcommand("bounds", "combinatorial bounds from incidence data");
    bounds_cmd->add_option("file", file, "arrangement or incidence file, or - for stdin")->required();
    bounds_cmd->add_flag("--json", as_json, "emit JSON");

    auto* preset_cmd = app.add_subcommand("preset", "print a named arrangement");
    preset_cmd->add_option("name", name, "triangle, pencil:n, nearpencil:n, generic:n[:seed], braid-a3, "
                                         "parallel-family, random:n[:seed]")
        ->required();
    preset_cmd->add_option("--seed", seed, "seed when the name omits one");

    std::string prefix;
    auto* cover_cmd = app.add_subcommand("cover", "write the cover boundary matrices as triplets");
    cover_cmd->add_option("file", file, "arrangement file, or - for stdin")->required();
    cover_cmd->add_option("--infinity", infinity, "projective line sent to infinity");
    cover_cmd->add_option("--modulus", modulus, "cover degree override")->check(CLI::PositiveNumber);
    cover_cmd->add_option("--out", prefix, "write <out>.d1 and <out>.d2 instead of printing");

    auto* quotient_cmd = app.add_subcommand("quotient", "ker(d1) / im(d2) for column-convention triplets");
    quotient_cmd->add_option("d1", d1_file, "triplet file for d1")->required();
    quotient_cmd->add_option("d2", d2_file, "triplet file for d2")->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");
    selftest_cmd->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*analyze_cmd) {
            AnalyzeOptions options;
            options.infinity = infinity;
            options.modulus = modulus;
            options.primes = primes;
            ParsedArrangement parsed = parse_arrangement(slurp(file));
            if (infinity && std::holds_alternative<AffineArrangement>(parsed))
                throw std::invalid_argument("--infinity applies to projective input only");
            Report r = analyze(parsed, options);
            if (as_json)
                std::cout << to_json(r).dump(2) << "\n";
            else
                std::cout << format_report(r);
            for (const auto& note : r.notes)
                if (note.rfind("guard", 0) == 0)
                    std::cerr << "warning: " << note << "\n";
            return r.all_passed() ? exit_pass : exit_verdict;
        }
        if (*pres_cmd) {
            ParsedArrangement parsed = parse_arrangement(slurp(file));
            Presentation p;
            if (projective) {
                Arrangement arr = std::holds_alternative<Arrangement>(parsed)
                                      ? std::get<Arrangement>(parsed)
                                      : cone(std::get<AffineArrangement>(parsed));
                p = projective_presentation(arr, infinity.value_or(static_cast<int>(arr.size()) - 1));
            } else {
                p = arvola_randell(shear_to_generic(affine_chart(parsed, infinity)));
            }
            std::cout << format_presentation(p);
            return exit_pass;
        }
        if (*bounds_cmd) {
            std::string text = slurp(file);
            IncidenceData inc;
            if (is_incidence_text(text)) {
                inc = parse_incidence(text);
            } else {
                ParsedArrangement parsed = parse_arrangement(text);
                inc = intersection_points(std::holds_alternative<Arrangement>(parsed)
                                              ? std::get<Arrangement>(parsed)
                                              : cone(std::get<AffineArrangement>(parsed)));
            }
            BoundReport b = evaluate_bounds(inc);
            Prediction p = predict(b, inc.line_count);
            if (as_json)
                std::cout << json{{"bounds", bounds_to_json(b)}, {"prediction", prediction_to_json(p)}}.dump(2)
                          << "\n";
            else
                std::cout << format_bounds(b, p);
            return exit_pass;
        }
        if (*preset_cmd) {
            std::cout << format_arrangement(preset(name, seed));
            return exit_pass;
        }
        if (*cover_cmd) {
            ParsedArrangement parsed = parse_arrangement(slurp(file));
            Presentation p = free_reduce_and_strip(arvola_randell(shear_to_generic(affine_chart(parsed, infinity))));
            CoverComplex c = build_cover_complex(p, modulus);
            // Column convention, as read by `quotient`.
            std::string d1 = write_triplets(c.d1.transpose());
            std::string d2 = write_triplets(c.d2.transpose());
            if (prefix.empty()) {
                std::cout << "# d1\n" << d1 << "# d2\n" << d2;
                return exit_pass;
            }
            std::ofstream(prefix + ".d1") << d1;
            std::ofstream(prefix + ".d2") << d2;
            return exit_pass;
        }
        if (*quotient_cmd) {
            AbelianGroup g = quotient(read_triplets(slurp(d1_file)), read_triplets(slurp(d2_file)));
            std::cout << g.to_string() << "\n";
            return exit_pass;
        }
        if (*selftest_cmd) {
            std::vector<CriterionResult> results = run_acceptance();
            bool ok = true;
            json summary = json::array();
            for (const auto& r : results) {
                ok = ok && r.passed();
                if (as_json)
                    summary.push_back({{"id", r.id},
                                       {"title", r.title},
                                       {"passed", r.passed()},
                                       {"seconds", r.seconds},
                                       {"budget", r.budget},
                                       {"detail", r.detail}});
                else
                    std::cout << r.line() << "\n";
            }
            if (as_json)
                std::cout << json{{"passed", ok}, {"criteria", summary}}.dump(2) << "\n";
            return ok ? exit_pass : exit_verdict;
        }
    } catch (const std::invalid_argument& e) {  // ParseError derives from runtime_error
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
