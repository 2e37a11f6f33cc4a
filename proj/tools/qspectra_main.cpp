#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qspectra/bits.hpp"
#include "qspectra/json_io.hpp"

namespace {

using namespace qspectra;

uint64_t default_seed() {
    if (const char* env = std::getenv("QSPECTRA_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<TruthTable> load_tables(const std::string& spec) {
    std::vector<TruthTable> out;
    for (const std::string& path : split_commas(spec)) out.push_back(load_truth_table(path));
    return out;
}

// Point sets are comma-separated bitstrings ("00,01") or "wt<=m".
std::vector<uint32_t> parse_point_set(const std::string& spec, int n) {
    if (spec.rfind("wt<=", 0) == 0) {
        const int m = std::stoi(spec.substr(4));
        return points_with_weight_at_most(n, m);
    }
    std::vector<uint32_t> points;
    for (const std::string& s : split_commas(spec)) {
        if (static_cast<int>(s.size()) != n)
            fail(Errc::length_mismatch, "point '" + s + "' is not " + std::to_string(n) + " bits");
        points.push_back(static_cast<uint32_t>(bits_from_string(s)));
    }
    return points;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct SimulateArgs {
    std::string circuit;
    std::string fns;
    std::string variant = "uniform";
    bool exact = false;
    uint64_t shots = 0;
    uint64_t seed = default_seed();
    bool dump = false;
};

int run_simulate(const SimulateArgs& args) {
    std::vector<TruthTable> fns = load_tables(args.fns);
    auto need = [&](size_t k) {
        if (fns.size() != k)
            fail(Errc::size_mismatch, args.circuit + " needs " + std::to_string(k) + " functions");
    };
    Circuit circuit;
    if (args.circuit == "dj") {
        need(1);
        circuit = deutsch_jozsa(fns[0]);
    } else if (args.circuit == "forr2") {
        need(2);
        circuit = forrelation2_circuit(fns[0], fns[1]);
    } else if (args.circuit == "a33") {
        need(3);
        circuit = a33(fns[0], fns[1], fns[2]);
    } else if (args.circuit == "a32") {
        need(3);
        circuit = a32(fns[0], fns[1], fns[2]);
    } else if (args.circuit == "alg1") {
        need(2);
        CnSpec cn = CnSpec::uniform();
        if (args.variant == "uniform") {
            cn = CnSpec::uniform();
        } else if (args.variant.rfind("point:", 0) == 0) {
            cn = CnSpec::point(static_cast<uint32_t>(bits_from_string(args.variant.substr(6))));
        } else if (args.variant.rfind("dicke:", 0) == 0) {
            cn = CnSpec::dicke(std::stoi(args.variant.substr(6)));
        } else {
            throw CLI::ValidationError("--variant", "expected uniform, point:<bits> or dicke:<i>");
        }
        circuit = algorithm1(cn, fns[0], fns[1]);
    } else {
        throw CLI::ValidationError("--circuit", "expected dj, forr2, a33, a32 or alg1");
    }

    Json out;
    out["circuit"] = args.circuit;
    out["qubits"] = circuit.qubits;
    out["oracle_queries"] = circuit.oracle_queries;
    MeasurementDistribution dist = measure_distribution(run(circuit), circuit.measured);
    if (args.exact || args.shots == 0) {
        out["distribution"] = distribution_json(dist);
    } else {
        out["shots"] = args.shots;
        out["seed"] = args.seed;
        out["counts"] = counts_json(sample(dist, args.shots, args.seed), dist.width());
    }
    if (args.dump) out["dump"] = circuit_json(circuit);
    print_json(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean-function spectra via statevector circuit simulation"};
    app.require_subcommand(1);

    std::string analyze_file;
    CLI::App* analyze = app.add_subcommand("analyze", "Spectral report for a truth-table file");
    analyze->add_option("file", analyze_file, "truth-table file")->required();

    std::string forr_fns;
    CLI::App* forrelation = app.add_subcommand("forrelation", "k-fold Forrelation of 2..4 functions");
    forrelation->add_option("--fns", forr_fns, "comma-separated truth-table files")->required();

    SimulateArgs sim;
    CLI::App* simulate = app.add_subcommand("simulate", "Run a named circuit");
    simulate->add_option("--circuit", sim.circuit, "dj|forr2|a33|a32|alg1")->required();
    simulate->add_option("--fns", sim.fns, "comma-separated truth-table files")->required();
    simulate->add_option("--variant", sim.variant, "alg1 preparation: uniform|point:<bits>|dicke:<i>");
    simulate->add_flag("--exact", sim.exact, "exact distribution instead of sampling");
    simulate->add_option("--shots", sim.shots, "number of sampled shots");
    simulate->add_option("--seed", sim.seed, "sampling seed");
    simulate->add_flag("--dump", sim.dump, "include the gate-level circuit dump");

    std::string check_fn, check_fns, method = "flat";
    int resilient_m = -1, uncorrelated_m = -1;
    CheckOptions check_opt;
    check_opt.seed = default_seed();
    bool fail_on_refute = false;
    CLI::App* check = app.add_subcommand("check", "Resiliency / uncorrelatedness verdicts");
    check->add_option("--fn", check_fn, "function under test (resiliency)");
    check->add_option("--fns", check_fns, "two functions f,g (uncorrelatedness)");
    check->add_option("--resilient", resilient_m, "check m-resiliency");
    check->add_option("--uncorrelated", uncorrelated_m, "check uncorrelatedness of degree m");
    check->add_option("--method", method, "flat|dicke");
    check->add_option("--budget", check_opt.budget, "oracle-call budget");
    check->add_option("--seed", check_opt.seed, "schedule seed");
    check->add_option("--prefilter", check_opt.dj_prefilter_shots, "DJ pre-filter shots");
    check->add_flag("--exact", check_opt.exact, "verdict from the exact distribution");
    check->add_flag("--fail-on-refute", fail_on_refute, "exit 1 on a REFUTED verdict");

    std::string curves_fn, curves_set, pgrid = "0:1:0.01";
    CLI::App* curves = app.add_subcommand("curves", "Sampling-strategy comparison as CSV");
    curves->add_option("--fn", curves_fn, "truth-table file for the verified row");
    curves->add_option("--set", curves_set, "point set: bitstrings or wt<=m");
    curves->add_option("--pgrid", pgrid, "grid start:end:step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*analyze) {
            print_json(analyze_json(load_truth_table(analyze_file)));
            return 0;
        }
        if (*forrelation) {
            std::vector<TruthTable> fns = load_tables(forr_fns);
            ForrelationValue v = forrelation_k(fns);
            print_json(Json{{"k", v.k}, {"n", v.n}, {"value", v.value}});
            return 0;
        }
        if (*simulate) return run_simulate(sim);
        if (*check) {
            CheckVerdict verdict;
            if (resilient_m >= 0) {
                if (check_fn.empty()) throw CLI::ValidationError("--fn", "required for --resilient");
                verdict = check_resilient(load_truth_table(check_fn), resilient_m, check_opt);
            } else if (uncorrelated_m >= 0) {
                std::vector<TruthTable> fns = load_tables(check_fns);
                if (fns.size() != 2)
                    throw CLI::ValidationError("--fns", "expected exactly two functions");
                UncorrMethod um = method == "dicke" ? UncorrMethod::dicke : UncorrMethod::flat;
                if (method != "flat" && method != "dicke")
                    throw CLI::ValidationError("--method", "expected flat or dicke");
                verdict = check_uncorrelated(fns[0], fns[1], uncorrelated_m, um, check_opt);
            } else {
                throw CLI::ValidationError("check", "need --resilient or --uncorrelated");
            }
            print_json(verdict_json(verdict));
            return fail_on_refute && verdict.verdict == Verdict::refuted ? 1 : 0;
        }
        if (*curves) {
            double start = 0.0, end = 1.0, step = 0.01;
            if (std::sscanf(pgrid.c_str(), "%lf:%lf:%lf", &start, &end, &step) != 3 || step <= 0)
                throw CLI::ValidationError("--pgrid", "expected start:end:step");
            std::cout << "p,dj_once,dj_twice,dj_amplified,a33\n";
            char row[160];
            auto emit = [&](const StrategyCurve& c) {
                std::snprintf(row, sizeof(row), "%.10g,%.10g,%.10g,%.10g,%.10g\n", c.p, c.dj_once,
                              c.dj_twice, c.dj_amplified, c.a33_any_one);
                std::cout << row;
            };
            for (double p = start; p <= end + step * 0.5; p += step)
                emit(strategy_curve_at(std::min(p, 1.0)));
            if (!curves_fn.empty()) {
                TruthTable f = load_truth_table(curves_fn);
                if (curves_set.empty())
                    throw CLI::ValidationError("--set", "required together with --fn");
                emit(strategy_curve(f, parse_point_set(curves_set, f.n)));
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
