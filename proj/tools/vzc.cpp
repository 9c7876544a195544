// vzc: compile gate-model circuits to varying-Z pulse schedules, simulate
// and verify them, generate IQP sampling instances, and map the coupling
// equation's solvability grid.
//
// Exit codes: 0 success / verification pass, 2 parse failure, 3 synthesis
// failure, 4 dimension mismatch, 5 infeasible solve-sinc row, 1 otherwise.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "vz/io.hpp"

using namespace vz;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitSynthesis = 3;
constexpr int kExitDimension = 4;
constexpr int kExitInfeasible = 5;

double default_tolerance() {
    if (const char* env = std::getenv("VZ_TOL")) {
        try {
            return std::stod(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparsable VZ_TOL\n";
        }
    }
    return 1e-8;
}

int cmd_compile(const std::string& circuit_path, const std::string& schedule_path,
                const std::string& report_path, double a, bool optimize) {
    auto [circuit, graph] = circuit_from_json(load_json_file(circuit_path));
    auto validation = validate_circuit(circuit, graph);
    if (!validation.ok) {
        for (const auto& v : validation.errors)
            std::cerr << "layer " << v.layer << ": " << v.message << "\n";
        return kExitParse;
    }
    for (int layer : validation.non_pairwise_layers)
        std::cerr << "note: layer " << layer << " couples a vertex twice; splitting\n";

    auto result = compile(circuit, graph, a, {Variant::Homogeneous, optimize});
    save_json_file(schedule_path, schedule_to_json(result.schedule));
    if (!report_path.empty()) save_json_file(report_path, depth_report_to_json(result.report));
    std::cout << json{{"applied_layers", result.report.applied_layers},
                      {"effective_layers", result.report.effective_layers},
                      {"schedule", schedule_path}}
                     .dump()
              << "\n";
    return 0;
}

int cmd_simulate(const std::string& schedule_path, const std::string& out_path) {
    Schedule schedule = schedule_from_json(load_json_file(schedule_path));
    int n = schedule.n();
    if (n == 0 || n > 20) {
        std::cerr << "schedule width " << n << " outside the simulable range\n";
        return kExitDimension;
    }
    StateVector state = run_schedule(schedule, n);
    json out;
    out["n"] = n;
    out["distribution"] = output_distribution(state);
    save_json_file(out_path, out);
    std::cout << json{{"n", n}, {"out", out_path}}.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& circuit_path, const std::string& schedule_path,
               const std::string& report_path, double tol_op, double tol_tvd) {
    auto [circuit, graph] = circuit_from_json(load_json_file(circuit_path));
    Schedule schedule = schedule_from_json(load_json_file(schedule_path));
    if (circuit.n > kDenseCeiling) {
        std::cerr << "circuit width " << circuit.n << " above the dense ceiling\n";
        return kExitDimension;
    }
    if (schedule.n() != 0 && schedule.n() != circuit.n) {
        std::cerr << "schedule width " << schedule.n() << " does not match circuit width "
                  << circuit.n << "\n";
        return kExitDimension;
    }
    VerificationReport rep = verify_schedule(circuit, graph, schedule, tol_op, tol_tvd);
    if (!report_path.empty()) save_json_file(report_path, verification_report_to_json(rep));
    std::cout << verification_report_to_json(rep).dump() << "\n";
    return rep.pass ? 0 : 1;
}

int cmd_solve_sinc(double step, const std::string& out_path) {
    auto rows = sinc_feasibility_map(step, 1.0);
    std::ostringstream csv;
    csv << "C,k0,k1,k2,k3,t_chosen\n";
    int infeasible = 0;
    for (const auto& row : rows) {
        csv.precision(17);
        csv << row.coupling;
        for (bool f : row.feasible) csv << "," << (f ? 1 : 0);
        if (row.chosen_k >= 0)
            csv << "," << row.t;
        else {
            csv << ",";
            ++infeasible;
        }
        csv << "\n";
    }
    save_text_file(out_path, csv.str());
    std::cout << json{{"rows", rows.size()}, {"infeasible", infeasible}, {"out", out_path}}.dump()
              << "\n";
    if (infeasible > 0) {
        std::cerr << infeasible << " grid couplings admit no root for k in {0,1,2,3}\n";
        return kExitInfeasible;
    }
    return 0;
}

int cmd_supremacy(int n, uint64_t seed, const std::string& variant, double a,
                  const std::string& prefix, int samples) {
    IqpInstance instance = gen_iqp(n, seed);
    SupremacyResult result = variant == "alternating" ? compile_alternating(instance, a)
                                                      : compile_homogeneous(instance, a);
    save_json_file(prefix + ".instance.json", instance_to_json(instance));
    save_json_file(prefix + ".schedule.json", schedule_to_json(result.schedule));

    json report = depth_report_to_json(result.report);
    report["variant"] = variant;
    report["seed"] = seed;

    bool verified = false;
    if (n <= 5) {
        // Exact check against the reference circuit of the (possibly
        // CZ-shift-adjusted) instance.
        Circuit reference = lower_iqp_to_1d(result.shifted);
        StateVector target = StateVector::plus(n);
        MatX u = circuit_unitary(reference, n);
        VecX out = u * Eigen::Map<const VecX>(target.amps.data(),
                                              static_cast<Eigen::Index>(target.dim()));
        std::vector<double> want(target.dim());
        for (size_t i = 0; i < want.size(); ++i)
            want[i] = std::norm(out(static_cast<Eigen::Index>(i)));
        StateVector got = run_schedule(result.schedule, n);
        double dist = tvd(output_distribution(got), want);
        report["tvd"] = dist;
        report["verified"] = dist < default_tolerance();
        verified = true;
        if (dist >= default_tolerance()) {
            std::cerr << "verification failed: tvd " << dist << "\n";
            save_json_file(prefix + ".report.json", report);
            return 1;
        }
    } else {
        report["verified"] = "unverified at this size";
    }

    if (samples > 0) {
        StateVector st = run_schedule(result.schedule, n);
        auto dist = output_distribution(st);
        std::vector<double> cdf(dist.size());
        double acc = 0.0;
        for (size_t i = 0; i < dist.size(); ++i) cdf[i] = (acc += dist[i]);
        std::mt19937_64 rng(seed ^ 0x53414d504c45ull);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<std::string> out;
        for (int s = 0; s < samples; ++s) {
            double u = unit(rng);
            size_t idx = static_cast<size_t>(
                std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
            idx = std::min(idx, dist.size() - 1);
            std::string bits(static_cast<size_t>(n), '0');
            for (int q = 0; q < n; ++q)
                if ((idx >> q) & 1) bits[static_cast<size_t>(q)] = '1';
            out.push_back(bits);
        }
        save_json_file(prefix + ".samples.json", json{{"n", n}, {"samples", out}});
    }

    save_json_file(prefix + ".report.json", report);
    std::cout << json{{"applied_layers", result.report.applied_layers},
                      {"variant", variant},
                      {"verified", verified}}
                     .dump()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"varying-Z pulse schedule compiler"};
    app.require_subcommand(1);

    double tol = default_tolerance();

    auto* compile_cmd = app.add_subcommand("compile", "lower a circuit file to a schedule");
    std::string circuit_path, schedule_path = "schedule.json", report_path;
    double field = 1.0;
    bool no_optimize = false;
    compile_cmd->add_option("--circuit", circuit_path, "circuit JSON file")->required();
    compile_cmd->add_option("--schedule", schedule_path, "output schedule path");
    compile_cmd->add_option("--report", report_path, "output depth report path");
    compile_cmd->add_option("--a", field, "X-field strength");
    compile_cmd->add_flag("--no-optimize", no_optimize, "skip optimization passes");

    auto* simulate_cmd = app.add_subcommand("simulate", "run a schedule from |+...+>");
    std::string sim_schedule, sim_out = "distribution.json";
    simulate_cmd->add_option("--schedule", sim_schedule, "schedule JSON file")->required();
    simulate_cmd->add_option("--out", sim_out, "output distribution path");

    auto* verify_cmd = app.add_subcommand("verify", "check a schedule against its circuit");
    std::string v_circuit, v_schedule, v_report;
    double tol_op = tol, tol_tvd = tol;
    verify_cmd->add_option("--circuit", v_circuit, "circuit JSON file")->required();
    verify_cmd->add_option("--schedule", v_schedule, "schedule JSON file")->required();
    verify_cmd->add_option("--report", v_report, "output report path");
    verify_cmd->add_option("--tol", tol_op, "operator-distance tolerance");
    verify_cmd->add_option("--tol-tvd", tol_tvd, "distribution tolerance");

    auto* sinc_cmd = app.add_subcommand("solve-sinc", "emit the coupling solvability grid");
    double step = 0.01;
    std::string sinc_out = "sinc_map.csv";
    sinc_cmd->add_option("--step", step, "grid step in (0, pi/4]");
    sinc_cmd->add_option("--out", sinc_out, "output CSV path");

    auto* sup_cmd = app.add_subcommand("supremacy", "generate and compile an IQP instance");
    int n = 4;
    uint64_t seed = 0;
    std::string variant = "homogeneous", prefix = "supremacy";
    double sup_field = 1.0;
    int samples = 0;
    sup_cmd->add_option("--n", n, "qubit count (>= 2)")->required();
    sup_cmd->add_option("--seed", seed, "instance seed");
    sup_cmd->add_option("--variant", variant, "homogeneous | alternating")
        ->check(CLI::IsMember({"homogeneous", "alternating"}));
    sup_cmd->add_option("--a", sup_field, "X-field strength");
    sup_cmd->add_option("--out-prefix", prefix, "output file prefix");
    sup_cmd->add_option("--samples", samples, "draw this many bitstrings");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compile_cmd->parsed())
            return cmd_compile(circuit_path, schedule_path, report_path, field, !no_optimize);
        if (simulate_cmd->parsed()) return cmd_simulate(sim_schedule, sim_out);
        if (verify_cmd->parsed())
            return cmd_verify(v_circuit, v_schedule, v_report, tol_op, tol_tvd);
        if (sinc_cmd->parsed()) return cmd_solve_sinc(step, sinc_out);
        if (sup_cmd->parsed())
            return cmd_supremacy(n, seed, variant, sup_field, prefix, samples);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const SynthesisError& e) {
        std::cerr << "synthesis error: " << e.what() << "\n";
        return kExitSynthesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
