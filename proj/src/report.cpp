#include "picard/report.hpp"

#include "picard/svg.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace picard {

namespace {

// ---------------------------------------------------------------------------
// Input

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("field " + path + ": " + what);
}

BigInt integer_at(const Json& node, const std::string& path) {
    if (node.is_number_integer()) {
        if (node.is_number_unsigned()) return BigInt(node.get<std::uint64_t>());
        return BigInt(node.get<std::int64_t>());
    }
    if (node.is_string()) {
        try {
            return parse_bigint(node.get<std::string>());
        } catch (const ParseError& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a decimal string");
}

std::size_t size_at(const Json& node, const std::string& path) {
    const BigInt v = integer_at(node, path);
    if (v < 1 || v > BigInt(std::numeric_limits<std::int32_t>::max())) fail(path, "expected a positive count");
    return static_cast<std::size_t>(v);
}

IntVector vector_at(const Json& node, const std::string& path) {
    if (!node.is_array()) fail(path, "expected an array of integers");
    IntVector out;
    for (std::size_t i = 0; i < node.size(); ++i) out.push_back(integer_at(node[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

IntMatrix gram_at(const Json& node) {
    if (!node.is_array() || node.empty()) fail("gram", "expected a nonempty array of rows");
    IntMatrix g;
    for (std::size_t i = 0; i < node.size(); ++i) {
        g.push_back(vector_at(node[i], "gram[" + std::to_string(i) + "]"));
        if (g.back().size() != node.size())
            fail("gram[" + std::to_string(i) + "]", "row has length " + std::to_string(g.back().size()) +
                                                         ", expected " + std::to_string(node.size()));
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g[i][j] != g[j][i])
                fail("gram", "not symmetric: gram[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                                 g[i][j].str() + " but gram[" + std::to_string(j) + "][" + std::to_string(i) +
                                 "] = " + g[j][i].str());
    return g;
}

LatticeVector lattice_vector_at(const Json& node, const std::string& path, const std::optional<IntMatrix>& gram) {
    IntVector v = vector_at(node, path);
    if (gram && v.size() != gram->size())
        fail(path, "has length " + std::to_string(v.size()) + " but the lattice has rank " +
                       std::to_string(gram->size()));
    return LatticeVector(std::move(v));
}

const std::vector<std::string>& known_fields() {
    static const std::vector<std::string> fields{"gram", "type",  "n",     "ample", "bound",    "label",
                                                 "D",    "E",     "alpha", "alpha_prime", "k", "roots",
                                                 "vector", "N",   "modulus", "residue", "count"};
    return fields;
}

}  // namespace

InputSpec parse_input(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("input document must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        const auto& known = known_fields();
        if (std::find(known.begin(), known.end(), key) == known.end()) fail(key, "unknown field");
    }

    InputSpec spec;
    if (doc.contains("gram")) spec.gram = gram_at(doc["gram"]);

    if (doc.contains("type")) {
        if (!doc["type"].is_string()) fail("type", "expected a string tag");
        std::optional<std::int64_t> n;
        if (doc.contains("n")) {
            const BigInt nv = integer_at(doc["n"], "n");
            if (nv < 2 || nv > BigInt(std::numeric_limits<std::int32_t>::max())) fail("n", "expected an integer >= 2");
            n = static_cast<std::int64_t>(nv);
        }
        try {
            spec.type = DeformationType::from_tag(doc["type"].get<std::string>(), n);
        } catch (const ParseError& e) {
            fail("type", e.what());
        } catch (const PreconditionError& e) {
            fail(n ? "n" : "type", e.what());
        }
    } else if (doc.contains("n")) {
        fail("n", "given without a type");
    }

    if (doc.contains("ample")) spec.ample = lattice_vector_at(doc["ample"], "ample", spec.gram);

    if (doc.contains("bound")) {
        const Json& b = doc["bound"];
        if (!b.is_object()) fail("bound", "expected an object");
        for (const auto& [key, value] : b.items()) {
            const std::string path = "bound." + key;
            if (key == "max_ample_pairing") {
                spec.bound.max_ample_pairing = integer_at(value, path);
                if (spec.bound.max_ample_pairing < 1) fail(path, "must be positive");
            } else if (key == "wall_test_limit") {
                spec.bound.wall_test_limit = size_at(value, path);
            } else if (key == "pell_index_cap") {
                spec.bound.pell_index_cap = size_at(value, path);
            } else {
                fail(path, "unknown field");
            }
        }
    }

    if (doc.contains("label")) {
        if (!doc["label"].is_string()) fail("label", "expected a string");
        spec.label = doc["label"].get<std::string>();
    }

    if (doc.contains("D")) spec.d_class = lattice_vector_at(doc["D"], "D", spec.gram);
    if (doc.contains("E")) spec.e_class = lattice_vector_at(doc["E"], "E", spec.gram);
    if (doc.contains("alpha")) spec.alpha = lattice_vector_at(doc["alpha"], "alpha", spec.gram);
    if (doc.contains("alpha_prime")) spec.alpha_prime = lattice_vector_at(doc["alpha_prime"], "alpha_prime", spec.gram);
    if (doc.contains("k")) {
        spec.k = integer_at(doc["k"], "k");
        if (*spec.k < 1) fail("k", "must be positive");
    }
    if (doc.contains("vector")) spec.vector = lattice_vector_at(doc["vector"], "vector", spec.gram);
    if (doc.contains("roots")) {
        const Json& r = doc["roots"];
        if (!r.is_array()) fail("roots", "expected an array of vectors");
        spec.roots.emplace();
        for (std::size_t i = 0; i < r.size(); ++i)
            spec.roots->push_back(lattice_vector_at(r[i], "roots[" + std::to_string(i) + "]", spec.gram));
    }

    if (doc.contains("N")) spec.pell_n = integer_at(doc["N"], "N");
    if (doc.contains("modulus")) {
        spec.modulus = integer_at(doc["modulus"], "modulus");
        if (*spec.modulus < 1) fail("modulus", "must be positive");
    }
    if (doc.contains("residue")) spec.residue = integer_at(doc["residue"], "residue");
    if (spec.residue && !spec.modulus) fail("residue", "given without a modulus");
    if (doc.contains("count")) spec.count = size_at(doc["count"], "count");
    return spec;
}

InputSpec parse_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input(buf.str());
}

namespace {

template <class T>
const T& require(const std::optional<T>& field, const char* name, const char* command) {
    if (!field) throw ParseError(std::string("field ") + name + ": required by " + command);
    return *field;
}

// ---------------------------------------------------------------------------
// Output helpers

Json str(const BigInt& v) { return v.str(); }

Json vec(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json vec(const LatticeVector& v) { return vec(v.coords()); }

Json mat(const IntMatrix& m) {
    Json a = Json::array();
    for (const auto& row : m) a.push_back(vec(row));
    return a;
}

Json rational_vec(const RatVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

Json header(const char* kind) {
    Json j;
    j["schema_version"] = report_schema_version;
    j["kind"] = kind;
    return j;
}

Json bound_json(const EnumerationBound& b) {
    Json j;
    j["max_ample_pairing"] = str(b.max_ample_pairing);
    j["wall_test_limit"] = b.wall_test_limit;
    j["pell_index_cap"] = b.pell_index_cap;
    return j;
}

Json type_json(const std::optional<DeformationType>& t) {
    if (!t) return nullptr;
    Json j;
    j["tag"] = t->tag();
    j["n"] = t->n() ? Json(std::to_string(*t->n())) : Json(nullptr);
    j["name"] = t->display_name();
    return j;
}

Json input_echo(const InputSpec& spec) {
    Json j;
    j["label"] = spec.label;
    j["type"] = type_json(spec.type);
    j["gram"] = spec.gram ? mat(*spec.gram) : Json(nullptr);
    j["ample"] = spec.ample ? vec(*spec.ample) : Json(nullptr);
    j["bound"] = bound_json(spec.bound);
    return j;
}

Json class_json(const Lattice& lattice, const DeformationType& type, const LatticeVector& v,
                const LatticeVector& ample) {
    Json j;
    j["vector"] = vec(v);
    j["square"] = str(norm(lattice, v));
    j["divisibility"] = str(divisibility(lattice, v));
    j["ambient_divisibility"] = str(ambient_divisibility(lattice, type, v));
    j["ample_pairing"] = str(pairing(lattice, v, ample));
    return j;
}

Json signature_json(const Signature& s) {
    Json j;
    j["positive"] = s.positive;
    j["negative"] = s.negative;
    return j;
}

Json disc_group_json(const Lattice& lattice, const std::optional<DeformationType>& type) {
    const DiscriminantGroup& g = lattice.discriminant_group();
    Json j;
    j["invariant_factors"] = vec(g.invariant_factors);
    j["order"] = str(g.order);
    if (type) {
        const IntVector expected = expected_disc_group(*type);
        j["expected_invariant_factors"] = vec(expected);
        j["disc_group_mismatch"] = expected != g.invariant_factors;
    } else {
        j["expected_invariant_factors"] = nullptr;
        j["disc_group_mismatch"] = nullptr;
    }
    return j;
}

Json flag_json(const TruncatedFlag& f) {
    Json j;
    j["value"] = f.value;
    j["bound"] = str(f.bound);
    return j;
}

Json surd_json(const QuadraticSurd& s) {
    Json j;
    j["p"] = str(s.p);
    j["q"] = str(s.q);
    j["d"] = str(s.d);
    return j;
}

Json ray_json(const RayDescriptor& r) {
    Json j;
    j["source"] = r.source == RaySource::exceptional_class ? "exceptional_class" : "isotropic";
    j["rational"] = r.rational;
    j["vector"] = r.vector ? vec(*r.vector) : Json(nullptr);
    if (r.components) {
        Json c = Json::array();
        for (const auto& s : *r.components) c.push_back(surd_json(s));
        j["surd_components"] = c;
    } else {
        j["surd_components"] = nullptr;
    }
    if (r.source == RaySource::isotropic && r.slope_c != 0) {
        Json s;
        s["a"] = str(r.slope_a);
        s["sign"] = r.slope_sign;
        s["c"] = str(r.slope_c);
        s["discriminant"] = str(r.discriminant);
        j["slope"] = s;
    } else {
        j["slope"] = nullptr;
    }
    return j;
}

Lattice lattice_for(const InputSpec& spec, const char* command) {
    const IntMatrix& g = require(spec.gram, "gram", command);
    return Lattice(g, spec.label);
}

}  // namespace

Lattice lattice_of(const InputSpec& spec) { return lattice_for(spec, "this command"); }

Json rank2_to_json(const Rank2Report& r) {
    Json j;
    j["ray1"] = ray_json(r.ray1);
    j["ray2"] = ray_json(r.ray2);
    j["both_rational"] = r.both_rational;
    j["bir_finite"] = r.bir_finite;
    j["discriminant"] = str(r.discriminant);
    j["discriminant_is_square"] = exact_sqrt(r.discriminant).has_value();
    j["bound"] = str(r.bound);
    return j;
}

Json analysis_to_json(const ConeAnalysis& an) {
    const Lattice& L = an.lattice;
    const std::string B = an.bound.max_ample_pairing.str();
    Json j = header("analyze");

    InputSpec echo;
    echo.gram = L.gram();
    echo.type = an.type;
    echo.ample = an.ample;
    echo.bound = an.bound;
    echo.label = L.label();
    j["input"] = input_echo(echo);

    j["signature"] = signature_json(an.sig);
    j["discriminant_group"] = disc_group_json(L, an.type);
    const TypeFlags flags = rlf_and_cone_flags(an.type);
    j["type_flags"] = {{"rlf_conjecture", flags.rlf_conjecture},
                       {"mov_plus_equals_mov_e", flags.mov_plus_equals_mov_e},
                       {"contains_two_hyperbolic_planes", flags.contains_two_hyperbolic_planes}};

    Json profs = Json::array();
    for (const auto& p : profiles(an.type)) profs.push_back({{"square", str(p.square)}, {"divisibility", str(p.div)}});
    j["profiles"] = profs;

    Json found = Json::array();
    for (const auto& v : an.exceptional_found) found.push_back(class_json(L, an.type, v, an.ample));
    j["exceptional_classes"] = {{"bound", B}, {"count", an.exceptional_found.size()}, {"classes", found}};

    Json walls = Json::array();
    for (const auto& v : an.chamber_walls) walls.push_back(vec(v));
    j["walls"] = {{"bound", B}, {"count", an.chamber_walls.size()}, {"classes", walls}};

    j["verdict"] = {{"value", to_string(an.verdict)}, {"bound", B}};

    Json rays = Json::array();
    for (const auto& v : an.extremal_rays) rays.push_back(vec(v));
    j["extremal_rays"] = rays;

    Json mov;
    Json ineq = Json::array();
    for (const auto& row : an.mov_candidate) ineq.push_back(vec(row));
    mov["inequalities"] = ineq;
    Json gens = Json::array();
    for (const auto& g : an.mov_generators.rays) gens.push_back(vec(g));
    mov["rays"] = gens;
    Json lines = Json::array();
    for (const auto& l : an.mov_generators.lines) lines.push_back(vec(l));
    mov["lines"] = lines;
    mov["inside_positive_cone"] = an.mov_inside_positive_cone;
    mov["duality_checked"] = an.duality_checked;
    mov["bound"] = B;
    j["mov_candidate"] = mov;

    j["ample_reduction_steps"] = an.ample_reduction_steps;
    Json orth = Json::array();
    for (const auto& v : an.orthogonal_classes) orth.push_back(vec(v));
    j["orthogonal_classes"] = orth;
    j["rank2"] = an.rank2 ? rank2_to_json(*an.rank2) : Json(nullptr);

    const FinitenessReport& f = an.finiteness;
    j["finiteness"] = {{"eff_rational_polyhedral_up_to_bound", flag_json(f.eff_rational_polyhedral_up_to_bound)},
                       {"bir_finite", flag_json(f.bir_finite)},
                       {"quotient_finite", flag_json(f.quotient_finite)},
                       {"finitely_many_exceptional_up_to_bound", flag_json(f.finitely_many_exceptional_up_to_bound)},
                       {"equivalence_applicable", f.equivalence_applicable},
                       {"neg_count_at_least_rank",
                        f.neg_count_at_least_rank ? Json(*f.neg_count_at_least_rank) : Json(nullptr)},
                       {"note", f.note}};
    j["mds"] = {{"is_mds", an.mds.is_mds}, {"reason", to_string(an.mds.reason)}, {"bound", B}};

    Json caveats = Json::array();
    caveats.push_back("exceptional classes are enumerated only up to ample pairing " + B +
                      "; every infinite statement is truncated there");
    caveats.push_back("chamber walls stand in for prime exceptional divisors");
    if (j["discriminant_group"]["disc_group_mismatch"] == true)
        caveats.push_back("the discriminant group differs from that of the deformation type; divisibility in H^2 is "
                          "read as gcd(divisibility, exponent of the expected group)");
    if (!an.orthogonal_classes.empty())
        caveats.push_back("the ample class is orthogonal to " + std::to_string(an.orthogonal_classes.size()) +
                          " profile class(es) up to sign; they are excluded from the enumeration, which requires "
                          "a strictly positive ample pairing");
    if (an.verdict == Verdict::circular_up_to_bound)
        caveats.push_back("circularity is reported symbolically: the boundary candidate is the quadric q = 0");
    if (f.neg_count_at_least_rank && !*f.neg_count_at_least_rank)
        caveats.push_back("fewer walls than the Picard rank were found: increase the bound");
    j["caveats"] = caveats;
    return j;
}

namespace {

ConeAnalysis analysis_for(const InputSpec& spec, const char* command) {
    const Lattice L = lattice_for(spec, command);
    const DeformationType& type = require(spec.type, "type", command);
    const LatticeVector& ample = require(spec.ample, "ample", command);
    return analyze(L, type, ample, spec.bound);
}

}  // namespace

Json run_analyze(const InputSpec& spec) { return analysis_to_json(analysis_for(spec, "analyze")); }

Json run_enumerate(const InputSpec& spec) {
    const Lattice L = lattice_for(spec, "enumerate");
    const DeformationType& type = require(spec.type, "type", "enumerate");
    const LatticeVector& ample = require(spec.ample, "ample", "enumerate");
    const auto found = enumerate_exceptional(L, type, ample, spec.bound);
    Json j = header("enumerate");
    j["input"] = input_echo(spec);
    Json classes = Json::array();
    for (const auto& v : found) classes.push_back(class_json(L, type, v, ample));
    j["bound"] = str(spec.bound.max_ample_pairing);
    j["count"] = found.size();
    j["classes"] = classes;
    return j;
}

Json run_reduce(const InputSpec& spec, std::size_t max_steps) {
    const Lattice L = lattice_for(spec, "reduce");
    const auto& roots = require(spec.roots, "roots", "reduce");
    const LatticeVector& v = require(spec.vector, "vector", "reduce");
    const ChamberReduction red = weyl_reduce(L, roots, v, max_steps);
    Json j = header("reduce");
    j["input"] = input_echo(spec);
    Json rj = Json::array();
    for (const auto& r : roots) rj.push_back(vec(r));
    j["roots"] = rj;
    j["vector"] = vec(v);
    j["representative"] = vec(red.representative);
    Json word = Json::array();
    for (const auto& r : red.word) word.push_back(vec(r));
    j["word"] = word;
    j["steps"] = red.steps;
    j["max_steps"] = max_steps;
    return j;
}

namespace {

Json alpha_result_json(const AlphaContext& ctx, const AlphaResult& r) {
    Json j;
    j["branch"] = to_string(r.branch);
    j["alpha"] = vec(r.alpha);
    j["square"] = str(norm(ctx.lattice, r.alpha));
    j["coefficients"] = {{"D", str(r.d_coeff)}, {"E", str(r.e_coeff)}};
    if (r.pell_solution_used)
        j["pell_solution"] = {{"x", str(r.pell_solution_used->x)}, {"y", str(r.pell_solution_used->y)}};
    else
        j["pell_solution"] = nullptr;
    j["certified_effective"] = r.certified_effective;
    j["certified_primitive"] = r.certified_primitive;
    j["div_alpha"] = r.div_alpha ? str(*r.div_alpha) : Json(nullptr);
    j["disc_class_negated"] = r.disc_class_negated ? Json(*r.disc_class_negated) : Json(nullptr);
    j["congruence_modulus"] = r.congruence_modulus ? str(*r.congruence_modulus) : Json(nullptr);
    return j;
}

}  // namespace

Json run_alpha(const InputSpec& spec) {
    const Lattice L = lattice_for(spec, "alpha");
    const LatticeVector& D = require(spec.d_class, "D", "alpha");
    const LatticeVector& E = require(spec.e_class, "E", "alpha");
    const AlphaContext ctx = build_context(L, D, E);

    Json j = header("alpha");
    j["input"] = input_echo(spec);
    j["D"] = vec(D);
    j["E"] = vec(E);
    j["context"] = {{"d", str(ctx.d)}, {"t", str(ctx.t)}, {"b", str(ctx.b)}, {"e", str(ctx.e)}, {"N", str(ctx.n)}};

    const AlphaResult base = ctx.e == 0 ? alpha_case_a(ctx) : alpha_case_b(ctx);
    j["construction"] = alpha_result_json(ctx, base);

    if (spec.type && ctx.e < 0 && !is_perfect_square(ctx.n))
        j["effective"] = alpha_result_json(ctx, alpha_effective(ctx, *spec.type));
    else
        j["effective"] = nullptr;

    if (ctx.e < 0) {
        const RatVector beta = beta_projection(L, D, E);
        j["beta"] = rational_vec(beta);
    } else {
        j["beta"] = nullptr;
    }

    if (spec.alpha_prime) {
        const BigInt& k = require(spec.k, "k", "alpha (with alpha_prime)");
        LatticeVector iso;
        if (spec.alpha) {
            iso = *spec.alpha;
        } else if (norm(L, base.alpha) == 0) {
            iso = base.alpha;
        } else {
            throw ParseError("field alpha: required with alpha_prime when the constructed class is not isotropic");
        }
        const LatticeVector ak = alpha_k(L, iso, *spec.alpha_prime, E, k);
        j["alpha_k"] = {{"alpha", vec(iso)},
                        {"alpha_prime", vec(*spec.alpha_prime)},
                        {"k", str(k)},
                        {"vector", vec(ak)},
                        {"square", str(norm(L, ak))}};
    } else {
        j["alpha_k"] = nullptr;
    }
    return j;
}

Json run_pell(const InputSpec& spec) {
    const BigInt& n = require(spec.pell_n, "N", "pell");
    const PellSolution fund = fundamental_solution(n);
    const PellSolution second = second_solution(n);
    Json j = header("pell");
    j["N"] = str(n);
    j["fundamental"] = {{"x", str(fund.x)}, {"y", str(fund.y)}};
    j["second"] = {{"x", str(second.x)}, {"y", str(second.y)}};
    Json sols = Json::array();
    PellSolution s = fund;
    const std::size_t count = spec.count.value_or(1);
    for (std::size_t i = 0; i < count; ++i) {
        sols.push_back({{"index", i + 1}, {"x", str(s.x)}, {"y", str(s.y)}});
        s = next_solution(s, fund);
    }
    j["solutions"] = sols;
    if (spec.modulus) {
        const BigInt residue = spec.residue.value_or(1);
        const IndexedPellSolution hit = solution_with_residue(n, *spec.modulus, residue, spec.bound.pell_index_cap);
        j["residue_search"] = {{"modulus", str(*spec.modulus)},
                               {"residue", str(residue)},
                               {"index_cap", spec.bound.pell_index_cap},
                               {"index", hit.index},
                               {"x", str(hit.solution.x)},
                               {"y", str(hit.solution.y)}};
    } else {
        j["residue_search"] = nullptr;
    }
    return j;
}

Json run_rank2(const InputSpec& spec) {
    const Lattice L = lattice_for(spec, "rank2");
    const DeformationType& type = require(spec.type, "type", "rank2");
    const LatticeVector& ample = require(spec.ample, "ample", "rank2");
    const Rank2Report r = classify_rank2(L, type, ample, spec.bound);
    Json j = header("rank2");
    j["input"] = input_echo(spec);
    j["rank2"] = rank2_to_json(r);
    return j;
}

std::string run_plot_section(const InputSpec& spec) {
    const Lattice L = lattice_for(spec, "plot-section");
    if (L.rank() != 3)
        throw PreconditionError("plot-section needs a rank-3 lattice (got rank " + std::to_string(L.rank()) +
                                "); use analyze instead");
    return plot_section_svg(analysis_for(spec, "plot-section"));
}

Json error_to_json(ExitCode code, const std::string& message) {
    Json j = header("error");
    const char* family = "internal";
    switch (code) {
        case ExitCode::ok: family = "ok"; break;
        case ExitCode::internal: family = "internal"; break;
        case ExitCode::parse: family = "parse"; break;
        case ExitCode::precondition: family = "precondition"; break;
        case ExitCode::bound_exceeded: family = "bound_exceeded"; break;
        case ExitCode::contract_violation: family = "contract_violation"; break;
    }
    j["family"] = family;
    j["exit_code"] = static_cast<int>(code);
    j["message"] = message;
    return j;
}

namespace {

void outline(const Json& node, int depth, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat_array = [](const Json& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v)
            if ((x.is_string() && x.get<std::string>().size() > 24) || x.is_object() || (x.is_array() && !x.empty() && (x[0].is_array() || x[0].is_object()))) return false;
        return true;
    };
    auto inline_array = [&](const Json& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            if (v[i].is_array()) {
                s += "(";
                for (std::size_t k = 0; k < v[i].size(); ++k) s += (k ? ", " : "") + scalar(v[i][k]);
                s += ")";
            } else {
                s += scalar(v[i]);
            }
        }
        return s + "]";
    };
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || (value.is_array() && !flat_array(value))) {
                out << pad << key << ":\n";
                outline(value, depth + 1, out);
            } else if (value.is_array()) {
                out << pad << key << ": " << inline_array(value) << "\n";
            } else {
                out << pad << key << ": " << scalar(value) << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& value : node) {
            if (value.is_object()) {
                out << pad << "-\n";
                outline(value, depth + 1, out);
            } else if (value.is_array()) {
                out << pad << "- " << inline_array(value) << "\n";
            } else {
                out << pad << "- " << scalar(value) << "\n";
            }
        }
    } else {
        out << pad << scalar(node) << "\n";
    }
}

}  // namespace

std::string render(const Json& report, OutputFormat format) {
    if (format == OutputFormat::json) return report.dump(2) + "\n";
    std::ostringstream out;
    outline(report, 0, out);
    return out.str();
}

}  // namespace picard
