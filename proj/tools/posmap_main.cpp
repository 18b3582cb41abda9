// posmap: decide, synthesize, and verify positive unital / trace-preserving
// maps between Hermitian matrices, from JSON matrix files.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posmap/harness.hpp"
#include "posmap/io.hpp"
#include "posmap/measures.hpp"
#include "posmap/superop.hpp"
#include "posmap/synthesis.hpp"

using namespace posmap;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;   // infeasible pair or failed verification
constexpr int kExitInput = 2;     // malformed files, bad dims, bad arguments

struct Options {
    bool json_out = false;
    int trials = 1000;
    std::uint64_t seed = 0;
    double tol = 1e-8;
    double pair_tol = 1e-7;
};

void print_header(const Options& opt, const std::string& what) {
    if (!opt.json_out)
        std::cout << "# posmap " << what << "  tol=" << opt.tol << " trials=" << opt.trials
                  << " seed=" << opt.seed << "\n";
}

json eigenvalue_list(const HermitianMatrix& a) {
    json out = json::array();
    for (double l : hermitian_eigenvalues(a)) out.push_back(l);
    return out;
}

int cmd_decompose(const std::string& file, double tol, bool json_out) {
    const HermitianMatrix a = read_matrix(file);
    const JordanDecomposition jd = jordan_decompose(a);
    const double ztol = (tol > 0) ? tol : jordan_zero_tolerance(a);
    const DefinitenessClass cls = definiteness_class(a, ztol);
    json out{{"n", a.dim()},
             {"eigenvalues", eigenvalue_list(a)},
             {"trace", trace(a)},
             {"class", to_string(cls)},
             {"plus_norm_1", schatten_norm(jd.plus, PNorm::one)},
             {"minus_norm_1", schatten_norm(jd.minus, PNorm::one)},
             {"plus_norm_inf", schatten_norm(jd.plus, PNorm::inf)},
             {"minus_norm_inf", schatten_norm(jd.minus, PNorm::inf)}};
    if (json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n            : " << a.dim() << "\n";
        std::cout << "eigenvalues  :";
        for (double l : hermitian_eigenvalues(a)) std::cout << " " << l;
        std::cout << "\n";
        std::cout << "trace        : " << trace(a) << "\n";
        std::cout << "class        : " << to_string(cls) << "\n";
        std::cout << "||A+||_1     : " << out["plus_norm_1"].get<double>() << "\n";
        std::cout << "||A-||_1     : " << out["minus_norm_1"].get<double>() << "\n";
        std::cout << "||A+||_inf   : " << out["plus_norm_inf"].get<double>() << "\n";
        std::cout << "||A-||_inf   : " << out["minus_norm_inf"].get<double>() << "\n";
    }
    return kExitOk;
}

int cmd_measure(const std::string& file, bool json_out) {
    const HermitianMatrix a = read_matrix(file);
    json out{{"mu_inf_minus", mu_inf_minus(a)},
             {"mu_inf_plus", mu_inf_plus(a)},
             {"mu_1_minus", mu_1_minus(a)},
             {"mu_1_plus", mu_1_plus(a)},
             {"distance_psd_1", distance_to_psd_cone(a, PNorm::one)},
             {"distance_psd_inf", distance_to_psd_cone(a, PNorm::inf)}};
    if (json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "mu_inf_minus     : " << out["mu_inf_minus"].get<double>() << "\n";
        std::cout << "mu_inf_plus      : " << out["mu_inf_plus"].get<double>() << "\n";
        std::cout << "mu_1_minus       : " << out["mu_1_minus"].get<double>() << "\n";
        std::cout << "mu_1_plus        : " << out["mu_1_plus"].get<double>() << "\n";
        std::cout << "distance_psd_1   : " << out["distance_psd_1"].get<double>() << "\n";
        std::cout << "distance_psd_inf : " << out["distance_psd_inf"].get<double>() << "\n";
    }
    return kExitOk;
}

json verdict_json(const FeasibilityVerdict& v) {
    json margins = json::object();
    for (const auto& [name, value] : v.margins) margins[name] = value;
    json out{{"feasible", v.feasible}, {"margins", margins}};
    if (v.failing_condition) out["failing_condition"] = *v.failing_condition;
    return out;
}

int cmd_feasible(const std::string& kind, const std::string& fa, const std::string& fb,
                 bool json_out) {
    const HermitianMatrix a = read_matrix(fa);
    const HermitianMatrix b = read_matrix(fb);
    const FeasibilityVerdict v = (kind == "pu") ? feasible_pu(a, b) : feasible_ptp(a, b);
    if (json_out) {
        std::cout << verdict_json(v).dump(2) << "\n";
    } else {
        std::cout << (v.feasible ? "feasible" : "infeasible") << "\n";
        for (const auto& [name, value] : v.margins)
            std::cout << "margin " << name << " : " << value << "\n";
        if (v.failing_condition) std::cout << "failing: " << *v.failing_condition << "\n";
    }
    return v.feasible ? kExitOk : kExitVerdict;
}

int cmd_synth(const std::string& kind, const std::string& fa, const std::string& fb,
              const std::string& out_file, const std::string& cert_file, bool json_out) {
    const HermitianMatrix a = read_matrix(fa);
    const HermitianMatrix b = read_matrix(fb);
    SynthResult r;
    try {
        r = (kind == "pu") ? synth_pu(a, b) : synth_ptp(a, b);
    } catch (const infeasible_error& e) {
        if (json_out)
            std::cout << json{{"synthesized", false}, {"error", e.what()}}.dump(2) << "\n";
        else
            std::cout << e.what() << "\n";
        return kExitVerdict;
    }
    if (!out_file.empty()) write_superop(out_file, r.op);
    if (!cert_file.empty()) {
        std::ofstream cf(cert_file);
        cf << cert_to_json(r.cert) << "\n";
    }
    const double residual = schatten_norm(apply(r.op, a) - b, PNorm::inf);
    json out{{"synthesized", true},
             {"construction", to_string(r.cert.kind)},
             {"src_dim", r.op.src_dim},
             {"dst_dim", r.op.dst_dim},
             {"apply_residual", residual},
             {"steps", r.cert.steps.size()}};
    if (json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "construction  : " << to_string(r.cert.kind) << "\n";
        std::cout << "map           : H_" << r.op.src_dim << " -> H_" << r.op.dst_dim << "\n";
        std::cout << "apply residual: " << residual << "\n";
        if (!r.cert.steps.empty())
            std::cout << "shrink steps  : " << r.cert.steps.size() << "\n";
        if (!out_file.empty()) std::cout << "wrote " << out_file << "\n";
    }
    return kExitOk;
}

int cmd_apply(const std::string& fs, const std::string& fa, const std::string& out_file,
              bool json_out) {
    const SuperOperator s = read_superop(fs);
    const HermitianMatrix a = read_matrix(fa);
    const HermitianMatrix b = apply(s, a);
    if (!out_file.empty()) write_matrix(out_file, b);
    if (json_out)
        std::cout << matrix_to_json(b) << "\n";
    else if (out_file.empty())
        std::cout << matrix_to_json(b) << "\n";
    else
        std::cout << "wrote " << out_file << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& fs, const std::string& as_kind,
               const std::vector<std::string>& pair, const Options& opt) {
    const SuperOperator s = read_superop(fs);
    const VerificationReport rep = positivity_falsification(s, opt.trials, opt.seed, opt.tol);

    bool pass = rep.positivity_min >= -opt.tol;
    json out{{"src_dim", s.src_dim},
             {"dst_dim", s.dst_dim},
             {"trials", rep.trials},
             {"seed", opt.seed},
             {"tol", opt.tol},
             {"positivity_min", rep.positivity_min},
             {"residual_unital", rep.residual_unital},
             {"residual_trace", rep.residual_trace}};
    if (rep.counterexample) {
        out["counterexample_trial"] = rep.counterexample_trial;
        json vec = json::array();
        for (const cplx& z : *rep.counterexample) vec.push_back(json::array({z.real(), z.imag()}));
        out["counterexample"] = vec;
    }
    if (as_kind == "pu") {
        pass = pass && rep.residual_unital <= opt.tol;
        out["unital"] = rep.residual_unital <= opt.tol;
    } else if (as_kind == "ptp") {
        pass = pass && rep.residual_trace <= opt.tol;
        out["trace_preserving"] = rep.residual_trace <= opt.tol;
    }
    if (!pair.empty()) {
        const HermitianMatrix a = read_matrix(pair[0]);
        const HermitianMatrix b = read_matrix(pair[1]);
        const double residual = schatten_norm(apply(s, a) - b, PNorm::inf);
        pass = pass && residual <= opt.pair_tol;
        out["pair_residual"] = residual;
        out["pair_tol"] = opt.pair_tol;
    }
    out["pass"] = pass;
    if (opt.json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        print_header(opt, "verify");
        std::cout << "positivity_min : " << rep.positivity_min << " over " << rep.trials
                  << " projector samples\n";
        std::cout << "unital residual: " << rep.residual_unital << "\n";
        std::cout << "trace residual : " << rep.residual_trace << "\n";
        if (out.contains("pair_residual"))
            std::cout << "pair residual  : " << out["pair_residual"].get<double>() << "\n";
        if (rep.counterexample)
            std::cout << "counterexample at trial " << rep.counterexample_trial << "\n";
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitVerdict;
}

int cmd_random(int n, const std::string& law, const std::string& eig_list, std::uint64_t seed,
               const std::string& out_file, bool json_out) {
    SpectrumLaw l;
    std::vector<double> prescribed;
    if (law == "uniform") {
        l = SpectrumLaw::uniform;
    } else if (law == "indefinite") {
        l = SpectrumLaw::forced_indefinite;
    } else if (law == "eigs") {
        l = SpectrumLaw::prescribed;
        std::stringstream ss(eig_list);
        std::string item;
        while (std::getline(ss, item, ',')) prescribed.push_back(std::stod(item));
        if (n == 0) n = static_cast<int>(prescribed.size());
    } else {
        throw std::invalid_argument("random: unknown law '" + law + "'");
    }
    if (n == 0) n = 4;
    const HermitianMatrix a = random_hermitian(n, l, seed, prescribed);
    if (!out_file.empty()) {
        write_matrix(out_file, a);
        if (!json_out) std::cout << "wrote " << out_file << "\n";
    }
    if (out_file.empty() || json_out) std::cout << matrix_to_json(a) << "\n";
    return kExitOk;
}

int cmd_selftest(const std::string& suite, const Options& opt) {
    std::vector<std::string> names = suite.empty() ? suite_names()
                                                   : std::vector<std::string>{suite};
    bool all_pass = true;
    json out = json::array();
    for (const std::string& name : names) {
        const SuiteReport rep = run_suite(name, opt.trials, opt.seed, opt.tol);
        all_pass = all_pass && rep.passed();
        if (opt.json_out) {
            json props = json::array();
            for (const PropertyResult& p : rep.properties)
                props.push_back({{"name", p.name},
                                 {"checks", p.checks},
                                 {"failures", p.failures},
                                 {"worst", p.worst}});
            out.push_back({{"suite", name},
                           {"passed", rep.passed()},
                           {"trials", rep.trials},
                           {"properties", props}});
        } else {
            print_header(opt, "selftest " + name);
            for (const PropertyResult& p : rep.properties)
                std::cout << (p.failures == 0 ? "  pass " : "  FAIL ") << name << "/" << p.name
                          << "  (" << p.checks << " checks, " << p.failures << " failures)\n";
            for (const std::string& ce : rep.counterexamples)
                std::cout << "counterexample " << ce << "\n";
        }
    }
    if (opt.json_out) std::cout << out.dump(2) << "\n";
    if (!opt.json_out) std::cout << (all_pass ? "ALL SUITES PASS" : "SUITE FAILURES") << "\n";
    return all_pass ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"positive-map preorder toolkit for Hermitian matrices"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_out, "machine-readable output");

    std::string file_a, file_b, file_s, out_file, cert_file;
    double decompose_tol = 0.0;

    CLI::App* decompose = app.add_subcommand("decompose", "eigenvalues, Jordan parts, class");
    decompose->fallthrough();
    decompose->add_option("matrix", file_a, "matrix JSON file")->required();
    decompose->add_option("--tol", decompose_tol, "zero tolerance for the class");

    CLI::App* measure = app.add_subcommand("measure", "monotone measures and cone distances");
    measure->fallthrough();
    measure->add_option("matrix", file_a)->required();

    CLI::App* feasible = app.add_subcommand("feasible", "decide existence of a PU/PTP map");
    feasible->fallthrough();
    std::string kind;
    feasible->add_option("kind", kind, "pu or ptp")
        ->required()
        ->check(CLI::IsMember({"pu", "ptp"}));
    feasible->add_option("A", file_a)->required();
    feasible->add_option("B", file_b)->required();

    CLI::App* synth = app.add_subcommand("synth", "synthesize a map sending A to B");
    synth->fallthrough();
    std::string synth_kind;
    synth->add_option("kind", synth_kind, "pu or ptp")
        ->required()
        ->check(CLI::IsMember({"pu", "ptp"}));
    synth->add_option("A", file_a)->required();
    synth->add_option("B", file_b)->required();
    synth->add_option("-o,--output", out_file, "superoperator JSON output");
    synth->add_option("--cert", cert_file, "construction certificate JSON output");

    CLI::App* apply_cmd = app.add_subcommand("apply", "apply a superoperator to a matrix");
    apply_cmd->fallthrough();
    apply_cmd->add_option("S", file_s)->required();
    apply_cmd->add_option("A", file_a)->required();
    apply_cmd->add_option("-o,--output", out_file, "matrix JSON output");

    CLI::App* verify = app.add_subcommand("verify", "verify positivity and map class");
    verify->fallthrough();
    std::string as_kind;
    std::vector<std::string> pair;
    verify->add_option("S", file_s)->required();
    verify->add_option("--as", as_kind, "also require pu or ptp")
        ->check(CLI::IsMember({"pu", "ptp"}));
    verify->add_option("--pair", pair, "matrices A B with S(A)=B expected")->expected(2);
    verify->add_option("--trials", opt.trials, "projector samples");
    verify->add_option("--seed", opt.seed, "RNG seed");
    verify->add_option("--tol", opt.tol, "residual/positivity tolerance");
    verify->add_option("--pair-tol", opt.pair_tol, "tolerance for ||S(A)-B||_inf");

    CLI::App* random_cmd = app.add_subcommand("random", "generate a random Hermitian matrix");
    random_cmd->fallthrough();
    int rand_n = 0;
    std::string law = "uniform";
    std::string eig_list;
    random_cmd->add_option("-n,--dim", rand_n, "dimension");
    random_cmd->add_option("--law", law, "uniform | indefinite | eigs");
    random_cmd->add_option("--eigs", eig_list, "comma-separated eigenvalues for --law eigs");
    random_cmd->add_option("--seed", opt.seed, "RNG seed");
    random_cmd->add_option("-o,--output", out_file, "matrix JSON output");

    CLI::App* selftest = app.add_subcommand("selftest", "run the property suites");
    selftest->fallthrough();
    std::string suite;
    selftest->add_option("suite", suite, "suite name (default: all)");
    selftest->add_option("--trials", opt.trials, "trials per suite");
    selftest->add_option("--seed", opt.seed, "RNG seed");
    selftest->add_option("--tol", opt.tol, "verification tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*decompose) return cmd_decompose(file_a, decompose_tol, opt.json_out);
        if (*measure) return cmd_measure(file_a, opt.json_out);
        if (*feasible) return cmd_feasible(kind, file_a, file_b, opt.json_out);
        if (*synth)
            return cmd_synth(synth_kind, file_a, file_b, out_file, cert_file, opt.json_out);
        if (*apply_cmd) return cmd_apply(file_s, file_a, out_file, opt.json_out);
        if (*verify) return cmd_verify(file_s, as_kind, pair, opt);
        if (*random_cmd)
            return cmd_random(rand_n, law, eig_list, opt.seed, out_file, opt.json_out);
        if (*selftest) {
            if (selftest->count("--trials") == 0) opt.trials = 500;
            return cmd_selftest(suite, opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
