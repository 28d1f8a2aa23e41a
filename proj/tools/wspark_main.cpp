// Command-line front end: exact spark computation, weighted l0 solving,
// uniqueness certificates, and the converse probe, all over instance files
// that carry rationals as strings so exactness survives I/O.

#include "wspark/frame.hpp"
#include "wspark/instance.hpp"
#include "wspark/sparsity.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using namespace wspark;

constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitInconsistency = 5;

struct GlobalFlags {
    std::uint64_t seed = 0;
    std::string out_path;
    bool prune_coherence = false;
    bool max_n_override = false;
};

SearchOptions search_options(const GlobalFlags& g) {
    return SearchOptions{g.max_n_override, g.prune_coherence};
}

void emit(const GlobalFlags& g, const ReportWriter& report) {
    if (g.out_path.empty()) {
        std::cout << report.str();
        return;
    }
    std::ofstream out(g.out_path, std::ios::binary);
    if (!out) throw InputError("cannot write report to " + g.out_path);
    out << report.str();
}

char hex_digit(std::uint64_t v) { return "0123456789abcdef"[v & 0xf]; }

std::string digest_string(const LinearMapOnMeasureSpace& m) {
    std::uint64_t d = instance_digest(m);
    std::string s = "fnv1a:";
    for (int shift = 60; shift >= 0; shift -= 4) s += hex_digit(d >> shift);
    return s;
}

// A frame view of the instance matrix, when it is one.
std::optional<Frame> try_frame(const LinearMapOnMeasureSpace& m) {
    std::vector<DenseVector> cols;
    for (std::size_t j = 0; j < m.matrix.cols; ++j) cols.push_back(m.matrix.column(j));
    try {
        return make_frame(m.matrix.rows, cols);
    } catch (const FrameError&) {
        return std::nullopt;
    }
}

void run_spark(const GlobalFlags& g, const std::string& path) {
    LinearMapOnMeasureSpace m = load_instance(path);
    ReportWriter report("spark");
    report.field("instance-digest", digest_string(m));

    SparkResult result = weighted_spark(m, search_options(g));
    if (m.domain.is_counting()) {
        if (std::optional<Frame> fr = try_frame(m)) {
            SparkResult comb = spark_combinatorial(*fr, search_options(g));
            SparkResult kern = spark_kernel(*fr, search_options(g));
            if (comb.value != kern.value || comb.value != result.value) {
                throw InternalInconsistency("spark engines disagree");
            }
            report.field("engines", "weighted+combinatorial+kernel (agree)");
        }
    }
    report.field_spark("spark", result.value);
    if (result.witness) {
        report.vector_field("witness", result.witness->vector);
        report.support_field("witness-support", result.witness->support);
    }
    emit(g, report);
}

void run_solve(const GlobalFlags& g, const std::string& path, const std::string& target) {
    LinearMapOnMeasureSpace m = load_instance(path);
    DenseVector v = parse_vector(target);
    if (v.dim() != m.matrix.rows) throw InputError("target dimension does not match matrix rows");

    ReportWriter report("solve");
    report.field("instance-digest", digest_string(m));
    std::optional<SparseSolution> sol = l0_solve(m, v, search_options(g));
    if (!sol) {
        report.field("status", "infeasible");
        emit(g, report);
        return;
    }
    report.field("status", "solved");
    report.vector_field("coefficients", sol->coefficients);
    report.support_field("support", sol->support);
    report.field("objective", sol->objective);
    report.field("unique-support", sol->unique_support ? "true" : "false");
    report.field("injective-on-support", sol->injective_on_support ? "true" : "false");
    report.certificate(certify_half_spark(m, sol->coefficients, search_options(g)));
    emit(g, report);
}

void run_certify(const GlobalFlags& g, const std::string& path, const std::string& candidate) {
    LinearMapOnMeasureSpace m = load_instance(path);
    DenseVector c = parse_vector(candidate);
    if (c.dim() != m.matrix.cols) throw InputError("candidate dimension does not match columns");

    ReportWriter report("certify");
    report.field("instance-digest", digest_string(m));
    report.certificate(certify_half_spark(m, c, search_options(g)));
    report.certificate(uniqueness_level(m, search_options(g)));
    emit(g, report);
}

void run_probe(const GlobalFlags& g, const std::string& path, const std::string& level) {
    LinearMapOnMeasureSpace m = load_instance(path);
    std::optional<Rational> r = parse_rational(level);
    if (!r || *r < 0) throw InputError("level must be a nonnegative rational");

    ReportWriter report("probe");
    report.field("instance-digest", digest_string(m));
    report.certificate(probe_converse(m, *r, search_options(g)));
    emit(g, report);
}

void run_search(const GlobalFlags& g, std::size_t trials, const std::string& profile,
                std::size_t max_dim, std::size_t max_cols) {
    GeneratorSpec spec;
    spec.seed = g.seed;
    spec.trials = trials;
    spec.max_dim = max_dim;
    spec.max_cols = max_cols;
    if (profile == "counting") {
        spec.profile = WeightProfile::Counting;
    } else if (profile == "weighted") {
        spec.profile = WeightProfile::RandomPositive;
    } else if (profile == "mixed") {
        spec.profile = WeightProfile::PlantedMix;
    } else {
        throw InputError("profile must be counting, weighted, or mixed");
    }

    ConverseSearchReport result = search_converse_violations(spec);
    ReportWriter report("search");
    report.field("seed", std::to_string(spec.seed));
    report.field("trials", std::to_string(spec.trials));
    report.field("profile", profile);
    report.field("violations", std::to_string(result.violations));
    report.field("vacuous", std::to_string(result.vacuous));
    for (const ProbeRecord& rec : result.records) {
        std::string line = std::to_string(rec.dim) + "x" + std::to_string(rec.cols) + " spark=" +
                           (rec.spark_value ? to_string(*rec.spark_value) : "Infinite") +
                           " level=" + to_string(rec.level) +
                           (rec.vacuous ? " vacuous" : rec.violation ? " VIOLATION" : " consistent");
        report.field("trial." + std::to_string(rec.trial), line);
    }
    emit(g, report);
}

void run_frame_info(const GlobalFlags& g, const std::string& path) {
    LinearMapOnMeasureSpace m = load_instance(path);
    ReportWriter report("frame-info");
    report.field("instance-digest", digest_string(m));

    std::vector<DenseVector> cols;
    for (std::size_t j = 0; j < m.matrix.cols; ++j) cols.push_back(m.matrix.column(j));
    try {
        Frame fr = make_frame(m.matrix.rows, cols);
        report.field("frame", "valid");
        FrameBounds b = frame_bounds(fr);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9g", b.lower);
        report.field("lower-bound", std::string(buf));
        std::snprintf(buf, sizeof buf, "%.9g", b.upper);
        report.field("upper-bound", std::string(buf));
        double floor_val = coherence_floor(fr);
        if (std::isfinite(floor_val)) {
            std::snprintf(buf, sizeof buf, "%.9g", 1.0 / (floor_val - 1.0));
            report.field("coherence", std::string(buf));
            std::snprintf(buf, sizeof buf, "%.9g", floor_val);
            report.field("coherence-floor", std::string(buf));
        } else {
            report.field("coherence", "0");
            report.field("coherence-floor", "Infinite");
        }
    } catch (const FrameError& e) {
        report.field("frame", std::string("invalid: ") + e.what());
    }
    emit(g, report);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spark, weighted l0 minimization, and uniqueness certificates"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--seed", g.seed, "seed for randomized commands");
    app.add_option("--out", g.out_path, "write the report to a file instead of stdout");
    app.add_flag("--prune-coherence", g.prune_coherence,
                 "skip subset cardinalities below the coherence floor (counting measure)");
    app.add_flag("--max-n-override", g.max_n_override, "lift the 24-column search guard");

    std::string instance_path, target, candidate, level, profile = "mixed";
    std::size_t trials = 100, max_dim = 4, max_cols = 8;

    CLI::App* cmd_spark = app.add_subcommand("spark", "spark of the instance, with witness");
    cmd_spark->add_option("instance", instance_path)->required();

    CLI::App* cmd_solve = app.add_subcommand("solve", "minimum-support-measure preimage");
    cmd_solve->add_option("instance", instance_path)->required();
    cmd_solve->add_option("--target", target, "target vector, comma-separated rationals")->required();

    CLI::App* cmd_certify = app.add_subcommand("certify", "half-spark and level certificates");
    cmd_certify->add_option("instance", instance_path)->required();
    cmd_certify->add_option("--candidate", candidate, "candidate coefficient vector")->required();

    CLI::App* cmd_probe = app.add_subcommand("probe", "converse probe at a level r");
    cmd_probe->add_option("instance", instance_path)->required();
    cmd_probe->add_option("--level", level, "nonnegative rational level r")->required();

    CLI::App* cmd_search = app.add_subcommand("search", "randomized converse violation search");
    cmd_search->add_option("--trials", trials);
    cmd_search->add_option("--profile", profile, "counting | weighted | mixed");
    cmd_search->add_option("--max-dim", max_dim);
    cmd_search->add_option("--max-cols", max_cols);

    CLI::App* cmd_info = app.add_subcommand("frame-info", "frame validity, bounds, coherence");
    cmd_info->add_option("instance", instance_path)->required();

    // Global flags may appear after the subcommand name.
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_spark->parsed()) run_spark(g, instance_path);
        else if (cmd_solve->parsed()) run_solve(g, instance_path, target);
        else if (cmd_certify->parsed()) run_certify(g, instance_path, candidate);
        else if (cmd_probe->parsed()) run_probe(g, instance_path, level);
        else if (cmd_search->parsed()) run_search(g, trials, profile, max_dim, max_cols);
        else if (cmd_info->parsed()) run_frame_info(g, instance_path);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ContractViolation& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const PreconditionFailed& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const FrameError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistency;
    }
    return 0;
}
