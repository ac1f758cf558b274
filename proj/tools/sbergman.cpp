// sbergman: evaluate slice Bergman kernels and the second Bargmann transform,
// run the verification suites, and sweep the R -> infinity asymptotics.
//
// Subcommands write their declared JSON/CSV payload to standard output and
// diagnostics to standard error. Exit codes: 0 success, 1 failed verification
// check, 2 parse error, 3 domain/numerical error, 4 file I/O error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slicebergman/asymptotics.hpp"
#include "slicebergman/bergman.hpp"
#include "slicebergman/io.hpp"
#include "slicebergman/transform.hpp"
#include "slicebergman/verification.hpp"

namespace sb = slicebergman;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitFile = 4;

ordered_json quat_json(const sb::Quaternion& q) {
    return ordered_json::array({q.w, q.x, q.y, q.z});
}

struct KernelArgs {
    std::string q_text, p_text;
    double alpha = 1.0;
    double radius = 1.0;
    std::string form = "series";
    double rel_tol = 1e-14;
    std::size_t max_terms = 512;
};

int run_kernel(const KernelArgs& args) {
    const sb::Quaternion q = sb::parse_quaternion(args.q_text);
    const sb::Quaternion p = sb::parse_quaternion(args.p_text);
    const sb::KernelParams params{args.alpha, args.radius};
    const sb::SeriesTruncation trunc{args.rel_tol, args.max_terms};

    std::size_t terms = 0;
    sb::Quaternion value;
    if (args.form == "series") {
        value = sb::kernel_series(q, p, params, trunc, &terms);
    } else if (args.form == "closed") {
        value = sb::kernel_closed(q, p, params, trunc, &terms);
    } else if (args.form == "alpha1") {
        if (args.alpha != 1.0)
            throw std::invalid_argument("--form alpha1 requires --alpha 1");
        value = sb::kernel_alpha1(q, p, args.radius);
    } else {
        value = sb::kernel_via_representation(q, p, params);
    }

    // runtime cross-check of the two principal forms
    const sb::Quaternion ks = sb::kernel_series(q, p, params, trunc);
    const sb::Quaternion kc = sb::kernel_closed(q, p, params, trunc);
    const double cross = sb::abs(ks - kc) / sb::abs(ks);

    ordered_json out;
    out["form"] = args.form;
    out["value"] = quat_json(value);
    out["terms_used"] = terms;
    out["cross_residual"] = cross;
    std::cout << out.dump() << '\n';
    return 0;
}

struct ForwardArgs {
    std::string phi_path, q_text;
    double radius = 1.0;
    std::size_t nodes = 128;
};

int run_forward(const ForwardArgs& args) {
    const sb::LaguerreCoefficients phi =
        sb::laguerre_coefficients_from_json(sb::read_file(args.phi_path));
    const sb::Quaternion q = sb::parse_quaternion(args.q_text);
    const sb::KernelParams params{phi.alpha, args.radius};
    const sb::HalfLineRule rule = sb::build_halfline(phi.alpha, args.nodes);
    const sb::Quaternion value = sb::forward(phi, q, params, rule);

    ordered_json out;
    out["op"] = "forward";
    out["value"] = quat_json(value);
    out["halfline_nodes"] = args.nodes;
    std::cout << out.dump() << '\n';
    return 0;
}

struct InverseArgs {
    std::string f_path;
    double t = 0.0;
    double alpha = 1.0;
    std::size_t radial = 64;
    std::size_t angular = 128;
};

int run_inverse(const InverseArgs& args) {
    const sb::SeriesFunction f = sb::series_function_from_json(sb::read_file(args.f_path));
    const sb::KernelParams params{args.alpha, f.radius};
    const sb::DiskRule rule = sb::build_disk(args.alpha, f.radius,
                                             sb::ImaginaryUnit::canonical_i(), args.radial,
                                             args.angular);
    const sb::Quaternion value = sb::inverse(f, args.t, params, rule);

    ordered_json out;
    out["op"] = "inverse";
    out["value"] = quat_json(value);
    out["radial_nodes"] = args.radial;
    out["angular_nodes"] = args.angular;
    std::cout << out.dump() << '\n';
    return 0;
}

struct VerifyArgs {
    std::string suite = "all";
    sb::VerifyConfig config{};
};

int run_verify(const VerifyArgs& args) {
    const std::vector<sb::CheckResult> results = sb::run_suite(args.suite, args.config);

    bool all_pass = true;
    ordered_json checks = ordered_json::array();
    for (const sb::CheckResult& r : results) {
        std::fprintf(stderr, "[%s] %2d. %s: max residual %.3e (tolerance %.1e)\n",
                     r.pass ? "PASS" : "FAIL", r.criterion, r.name.c_str(), r.max_residual,
                     r.tolerance);
        ordered_json c;
        c["criterion"] = r.criterion;
        c["name"] = r.name;
        c["max_residual"] = r.max_residual;
        c["tolerance"] = r.tolerance;
        c["pass"] = r.pass;
        checks.push_back(c);
        all_pass = all_pass && r.pass;
    }
    ordered_json out;
    out["suite"] = args.suite;
    out["seed"] = args.config.seed;
    out["checks"] = checks;
    out["pass"] = all_pass;
    std::cout << out.dump() << '\n';
    return all_pass ? 0 : kExitCheckFailed;
}

struct SweepArgs {
    double nu = 1.0;
    std::string radii_text = "5,10,20,40,80";
    std::string q_text = "0.3,0.2,0.1,0.0";
    std::string p_text = "0.1,0.0,0.4,0.0";
};

int run_sweep_cmd(const SweepArgs& args) {
    sb::LimitSweep sweep;
    sweep.nu = args.nu;
    sweep.probe_q = sb::parse_quaternion(args.q_text);
    sweep.probe_p = sb::parse_quaternion(args.p_text);
    std::istringstream in(args.radii_text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            sweep.radii.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw sb::ParseError("bad radius: '" + item + "'");
        }
    }

    sb::write_sweep_csv(std::cout, sb::run_sweep(sweep));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted slice Bergman kernels, the quaternionic second Bargmann "
                 "transform, and their verification suites"};
    app.require_subcommand(1);

    KernelArgs kernel_args;
    CLI::App* kernel = app.add_subcommand("kernel", "evaluate the reproducing kernel K(q, p)");
    kernel->add_option("--q", kernel_args.q_text, "first argument, w,x,y,z")->required();
    kernel->add_option("--p", kernel_args.p_text, "second argument, w,x,y,z")->required();
    kernel->add_option("--alpha", kernel_args.alpha, "weight exponent alpha > 0");
    kernel->add_option("--radius", kernel_args.radius, "ball radius R > 0");
    kernel->add_option("--form", kernel_args.form, "kernel form")
        ->check(CLI::IsMember({"series", "closed", "alpha1", "repr"}));
    kernel->add_option("--rel-tol", kernel_args.rel_tol, "series stopping tolerance");
    kernel->add_option("--max-terms", kernel_args.max_terms, "series term cap");

    CLI::App* transform =
        app.add_subcommand("transform", "second Bargmann transform and its inverse");
    transform->require_subcommand(1);
    ForwardArgs fwd_args;
    CLI::App* fwd = transform->add_subcommand("forward", "map a half-line element into the "
                                                         "Bergman space");
    fwd->add_option("--phi", fwd_args.phi_path, "Laguerre coefficient JSON file")->required();
    fwd->add_option("--q", fwd_args.q_text, "evaluation point, w,x,y,z")->required();
    fwd->add_option("--radius", fwd_args.radius, "ball radius R > 0");
    fwd->add_option("--nodes", fwd_args.nodes, "half-line quadrature nodes");

    InverseArgs inv_args;
    CLI::App* inv = transform->add_subcommand("inverse", "map a Bergman-space element back "
                                                         "to the half-line");
    inv->add_option("--f", inv_args.f_path, "series function JSON file")->required();
    inv->add_option("--t", inv_args.t, "evaluation point t >= 0")->required();
    inv->add_option("--alpha", inv_args.alpha, "weight exponent alpha > 0");
    inv->add_option("--radial", inv_args.radial, "radial quadrature nodes");
    inv->add_option("--angular", inv_args.angular, "angular quadrature nodes");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", verify_args.suite, "suite name")
        ->check(CLI::IsMember({"identity", "ortho", "isometry", "reproduce", "kkintegral",
                               "asymptotic", "all"}));
    verify->add_option("--alpha", verify_args.config.alpha, "weight exponent");
    verify->add_option("--radius", verify_args.config.R, "ball radius");
    verify->add_option("--nu", verify_args.config.nu, "Fock weight");
    verify->add_option("--halfline-nodes", verify_args.config.halfline_nodes,
                       "half-line quadrature nodes");
    verify->add_option("--radial-nodes", verify_args.config.radial_nodes,
                       "disk radial quadrature nodes");
    verify->add_option("--angular-nodes", verify_args.config.angular_nodes,
                       "disk angular quadrature nodes");
    verify->add_option("--rel-tol", verify_args.config.rel_tol, "series stopping tolerance");
    verify->add_option("--max-terms", verify_args.config.max_terms, "series term cap");
    verify->add_option("--seed", verify_args.config.seed, "sample-set seed");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "asymptotic error sweep as CSV");
    sweep->add_option("--nu", sweep_args.nu, "Fock weight nu > 0");
    sweep->add_option("--radii", sweep_args.radii_text, "comma-separated radii");
    sweep->add_option("--q", sweep_args.q_text, "probe point q, w,x,y,z");
    sweep->add_option("--p", sweep_args.p_text, "probe point p, w,x,y,z");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (kernel->parsed()) return run_kernel(kernel_args);
        if (transform->parsed()) {
            if (fwd->parsed()) return run_forward(fwd_args);
            return run_inverse(inv_args);
        }
        if (verify->parsed()) return run_verify(verify_args);
        if (sweep->parsed()) return run_sweep_cmd(sweep_args);
    } catch (const sb::FileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFile;
    } catch (const sb::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::runtime_error& e) {
        // truncation failures, eigen-solver non-convergence
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
