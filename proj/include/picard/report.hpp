#pragma once

// JSON front end: input documents, report documents and their rendering.
// Integers travel as decimal strings in both directions so that no consumer
// loses precision; plain JSON integers are also accepted on input.

#include "picard/alpha.hpp"
#include "picard/cone.hpp"
#include "picard/errors.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace picard {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema_version = "1.0.0";

/// A parsed input document. Which fields are required depends on the
/// subcommand; parse_input only checks the fields that are present and their
/// mutual consistency.
struct InputSpec {
    std::optional<IntMatrix> gram;
    std::optional<DeformationType> type;
    std::optional<LatticeVector> ample;
    EnumerationBound bound;
    std::string label;

    // alpha
    std::optional<LatticeVector> d_class;
    std::optional<LatticeVector> e_class;
    std::optional<LatticeVector> alpha;
    std::optional<LatticeVector> alpha_prime;
    std::optional<BigInt> k;

    // reduce
    std::optional<std::vector<LatticeVector>> roots;
    std::optional<LatticeVector> vector;

    // pell
    std::optional<BigInt> pell_n;
    std::optional<BigInt> modulus;
    std::optional<BigInt> residue;
    std::optional<std::size_t> count;
};

/// Throws ParseError with the offending field path (or the line and column
/// for malformed JSON).
InputSpec parse_input(std::string_view text);
InputSpec parse_input_file(const std::string& path);

Lattice lattice_of(const InputSpec& spec);

Json run_analyze(const InputSpec& spec);
Json run_enumerate(const InputSpec& spec);
Json run_reduce(const InputSpec& spec, std::size_t max_steps = default_reduce_step_cap);
Json run_alpha(const InputSpec& spec);
Json run_pell(const InputSpec& spec);
Json run_rank2(const InputSpec& spec);
/// Throws PreconditionError unless the lattice has rank 3.
std::string run_plot_section(const InputSpec& spec);

Json analysis_to_json(const ConeAnalysis& analysis);
Json rank2_to_json(const Rank2Report& report);
Json error_to_json(ExitCode code, const std::string& message);

enum class OutputFormat { json, pretty };

/// `json`: the canonical document, two-space indented, trailing newline.
/// `pretty`: an indented key/value outline for reading in a terminal.
std::string render(const Json& report, OutputFormat format);

}  // namespace picard
