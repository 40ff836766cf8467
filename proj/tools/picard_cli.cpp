// picard: command-line front end. Reads one JSON document, writes one report.

#include "picard/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using picard::ExitCode;

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    std::string bound;
    std::size_t max_steps = picard::default_reduce_step_cap;
};

picard::InputSpec load(const Options& opt) {
    picard::InputSpec spec;
    if (opt.input.empty() || opt.input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        spec = picard::parse_input(buf.str());
    } else {
        spec = picard::parse_input_file(opt.input);
    }
    if (!opt.bound.empty()) {
        try {
            spec.bound.max_ample_pairing = picard::parse_bigint(opt.bound);
        } catch (const picard::ParseError& e) {
            throw picard::ParseError(std::string("--bound: ") + e.what());
        }
        if (spec.bound.max_ample_pairing < 1) throw picard::ParseError("--bound: must be positive");
    }
    return spec;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty() || opt.output == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) throw picard::Error(ExitCode::internal, "cannot write " + opt.output);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of Picard lattices of IHS manifolds"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", opt.input, "input JSON document (default: stdin)");
        sub->add_option("--output,-o", opt.output, "output file (default: stdout)");
        sub->add_option("--format", opt.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    };
    auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--bound,-B", opt.bound, "maximal pairing with the ample class (overrides the input)");
    };

    auto* analyze = app.add_subcommand("analyze", "full cone analysis");
    auto* enumerate = app.add_subcommand("enumerate", "numerically exceptional classes up to the bound");
    auto* reduce = app.add_subcommand("reduce", "reflect a vector into the chamber of a root set");
    auto* alpha = app.add_subcommand("alpha", "alpha classes from Pell equations");
    auto* pell = app.add_subcommand("pell", "solutions of x^2 - N y^2 = 1");
    auto* plot = app.add_subcommand("plot-section", "SVG section of a rank-3 analysis");
    auto* rank2 = app.add_subcommand("rank2", "rank-2 boundary rays");
    for (auto* sub : {analyze, enumerate, reduce, alpha, pell, plot, rank2}) add_common(sub);
    for (auto* sub : {analyze, enumerate, plot, rank2}) add_bound(sub);
    reduce->add_option("--max-steps", opt.max_steps, "reflection cap")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitCode::parse);
    }

    const picard::OutputFormat format = opt.format == "pretty" ? picard::OutputFormat::pretty
                                                               : picard::OutputFormat::json;
    try {
        const picard::InputSpec spec = load(opt);
        if (plot->parsed()) {
            emit(opt, picard::run_plot_section(spec));
            return 0;
        }
        picard::Json report;
        if (analyze->parsed()) report = picard::run_analyze(spec);
        else if (enumerate->parsed()) report = picard::run_enumerate(spec);
        else if (reduce->parsed()) report = picard::run_reduce(spec, opt.max_steps);
        else if (alpha->parsed()) report = picard::run_alpha(spec);
        else if (pell->parsed()) report = picard::run_pell(spec);
        else report = picard::run_rank2(spec);
        emit(opt, picard::render(report, format));
        return 0;
    } catch (const picard::Error& e) {
        std::cerr << picard::render(picard::error_to_json(e.code(), e.what()), format);
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << picard::render(picard::error_to_json(ExitCode::internal, e.what()), format);
        return static_cast<int>(ExitCode::internal);
    }
}
