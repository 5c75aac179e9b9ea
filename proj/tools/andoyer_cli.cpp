// Command-line front end: canonicity verification suite, free-rotation
// simulation, and chart conversion. File-based, deterministic output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "andoyer/canonicity.hpp"
#include "andoyer/dynamics.hpp"

namespace {

using namespace andoyer;

// 17 significant digits: byte-deterministic and lossless for doubles.
std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

PointMassBody load_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidState("cannot open body file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidState("malformed body file " + path + ": " + e.what());
    }
    if (!j.contains("masses") || !j.contains("positions")) {
        throw InvalidState("body file needs \"masses\" and \"positions\" arrays");
    }
    const auto& masses = j.at("masses");
    const auto& positions = j.at("positions");
    if (!masses.is_array() || !positions.is_array() || masses.size() != positions.size()) {
        throw InvalidState("body file: masses and positions must be arrays of equal length");
    }
    PointMassBody body;
    for (std::size_t i = 0; i < masses.size(); ++i) {
        const auto& pos = positions.at(i);
        if (!pos.is_array() || pos.size() != 3) {
            throw InvalidState("body file: each position must be [x, y, z]");
        }
        body.entries.push_back({masses.at(i).get<double>(),
                                {pos.at(0).get<double>(), pos.at(1).get<double>(),
                                 pos.at(2).get<double>()}});
    }
    body.validate();
    return body;
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        out << "  {\"check_name\":\"" << r.check_name << "\","
            << "\"max_residual\":" << fmt(r.max_residual) << ","
            << "\"tolerance\":" << fmt(r.tolerance) << ","
            << "\"trials\":" << r.trials << ","
            << "\"seed\":" << r.seed << ","
            << "\"passed\":" << (r.passed ? "true" : "false") << "}"
            << (i + 1 < reports.size() ? "," : "") << "\n";
    }
    out << "]\n";
    return out.str();
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    out << "check_name,max_residual,tolerance,trials,seed,passed\n";
    for (const auto& r : reports) {
        out << r.check_name << "," << fmt(r.max_residual) << "," << fmt(r.tolerance) << ","
            << r.trials << "," << r.seed << "," << (r.passed ? "true" : "false") << "\n";
    }
    return out.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InvalidState("cannot open output file: " + path);
        out << text;
    }
}

struct VerifyArgs {
    std::uint64_t seed = 0;
    int trials = 100;
    int jobs = 1;
    std::string body_file;
    int body_n = 5;
    double body_scale = 1.0;
    std::string output;
    std::string format = "json";
    SuiteTolerances tol;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.trials < 1) return usage_error("verify: --trials must be >= 1");
    SuiteOptions opt;
    opt.trials = args.trials;
    opt.jobs = args.jobs;
    opt.body_n = args.body_n;
    opt.body_scale = args.body_scale;
    opt.tolerances = args.tol;
    PointMassBody fixed;
    if (!args.body_file.empty()) {
        try {
            fixed = load_body_file(args.body_file);
        } catch (const std::exception& e) {
            return usage_error(e.what());
        }
        opt.fixed_body = &fixed;
    }
    std::vector<CheckReport> reports;
    try {
        reports = run_suite(args.seed, opt);
    } catch (const std::exception& e) {
        std::cerr << "verify failed: " << e.what() << "\n";
        return 1;
    }
    write_output(args.output,
                 args.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports));
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

struct SimulateArgs {
    std::vector<double> inertia;  // ixx iyy izz ixy ixz iyz
    std::vector<double> state;    // l g theta L G Theta
    double t_end = 10.0;
    double dt = 1e-3;
    std::string method = "rk4";
    std::string output;
    bool oracle = false;
};

std::string trajectory_csv(const AndoyerTrajectory& traj,
                           const std::vector<std::pair<double, Vec3>>* oracle) {
    std::ostringstream out;
    out << "t,l,g,theta,L,G,Theta,Mx,My,Mz,H";
    if (oracle) out << ",oracle_dev";
    out << "\n";
    for (std::size_t i = 0; i < traj.samples.size(); ++i) {
        const auto& s = traj.samples[i];
        out << fmt(s.t) << "," << fmt(s.state.l) << "," << fmt(s.state.g) << ","
            << fmt(s.state.theta) << "," << fmt(s.state.L) << "," << fmt(s.state.G) << ","
            << fmt(s.state.Theta) << "," << fmt(s.m_body.x) << "," << fmt(s.m_body.y) << ","
            << fmt(s.m_body.z) << "," << fmt(s.energy);
        if (oracle) {
            const double dev = i < oracle->size() ? (s.m_body - (*oracle)[i].second).norm()
                                                  : std::nan("");
            out << "," << fmt(dev);
        }
        out << "\n";
    }
    return out.str();
}

int cmd_simulate(const SimulateArgs& args) {
    if (args.inertia.size() != 6) return usage_error("simulate: --inertia needs 6 values");
    if (args.state.size() != 6) return usage_error("simulate: --state needs 6 values");
    if (!(args.dt > 0.0)) return usage_error("simulate: --dt must be > 0");
    if (!(args.t_end >= 0.0)) return usage_error("simulate: --t-end must be >= 0");

    HamiltonianSpec spec;
    Mat3& m = spec.inertia.m;
    m(0, 0) = args.inertia[0];
    m(1, 1) = args.inertia[1];
    m(2, 2) = args.inertia[2];
    m(0, 1) = m(1, 0) = args.inertia[3];
    m(0, 2) = m(2, 0) = args.inertia[4];
    m(1, 2) = m(2, 1) = args.inertia[5];

    AndoyerState a0{args.state[0], args.state[1], args.state[2],
                    args.state[3], args.state[4], args.state[5]};
    try {
        spec.validate();
        a0.validate();
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
    const IntegrationMethod method =
        args.method == "midpoint" ? IntegrationMethod::midpoint : IntegrationMethod::rk4;

    AndoyerTrajectory traj;
    bool aborted = false;
    try {
        traj = integrate(spec, a0, args.t_end, args.dt, method);
    } catch (const SingularBand& sb) {
        traj = sb.partial;
        aborted = true;
    }

    std::vector<std::pair<double, Vec3>> oracle;
    if (args.oracle && !traj.samples.empty()) {
        const double t_last = traj.samples.back().t;
        oracle = euler_oracle(spec, momentum_vector_body(a0), t_last, args.dt);
    }
    std::string text = trajectory_csv(traj, args.oracle ? &oracle : nullptr);
    if (aborted) text += "# aborted: singular band\n";
    write_output(args.output, text);
    return aborted ? 3 : 0;
}

struct ConvertArgs {
    std::string direction;
    std::vector<double> q;      // phi theta psi
    std::vector<double> p;      // p_phi p_theta p_psi
    std::vector<double> state;  // l g theta L G Theta
    std::string body_file;
    std::string output;
};

int cmd_convert(const ConvertArgs& args) {
    if (args.direction == "euler-to-andoyer") {
        if (args.q.size() != 3 || args.p.size() != 3) {
            return usage_error("euler-to-andoyer needs --q and --p with 3 values each");
        }
        if (args.body_file.empty()) {
            return usage_error("euler-to-andoyer needs --body-file (momenta depend on inertia)");
        }
        PointMassBody body;
        try {
            body = load_body_file(args.body_file);
        } catch (const std::exception& e) {
            return usage_error(e.what());
        }
        try {
            const PhasePoint point = make_phase_point(
                body, {args.q[0], args.q[1], args.q[2]}, {args.p[0], args.p[1], args.p[2]});
            const AndoyerState& a = point.andoyer;
            std::ostringstream out;
            out << "{\"l\":" << fmt(a.l) << ",\"g\":" << fmt(a.g) << ",\"theta\":"
                << fmt(a.theta) << ",\"L\":" << fmt(a.L) << ",\"G\":" << fmt(a.G)
                << ",\"Theta\":" << fmt(a.Theta) << "}\n";
            write_output(args.output, out.str());
            return 0;
        } catch (const ChartSingular& e) {
            std::cerr << "chart singular: " << e.what() << "\n";
            return 4;
        } catch (const ZeroMomentum& e) {
            std::cerr << "chart singular: " << e.what() << "\n";
            return 4;
        } catch (const std::exception& e) {
            return usage_error(e.what());
        }
    }
    if (args.direction == "andoyer-to-euler") {
        if (args.state.size() != 6) return usage_error("andoyer-to-euler needs --state with 6 values");
        AndoyerState a{args.state[0], args.state[1], args.state[2],
                       args.state[3], args.state[4], args.state[5]};
        try {
            a.validate();
        } catch (const std::exception& e) {
            return usage_error(e.what());
        }
        const Rot3 att = body_attitude(a);
        const double ct = att(2, 2);
        if (1.0 - std::abs(ct) <= 1e-9) {
            std::cerr << "chart singular: sin(theta) = 0, Euler angles phi and psi "
                         "not separately defined\n";
            return 4;
        }
        const double phi = wrap_angle(std::atan2(att(2, 0), -att(2, 1)));
        const double theta = std::acos(std::clamp(ct, -1.0, 1.0));
        const double psi = wrap_angle(std::atan2(att(0, 2), att(1, 2)));
        // Conjugate momenta are projections of the angular momentum onto the
        // three Euler rotation axes; no inertia needed in this direction.
        const Vec3 g_vec = momentum_vector_abs(a);
        const Vec3 node{std::cos(phi), std::sin(phi), 0.0};
        const double p_phi = g_vec.z;
        const double p_theta = dot(g_vec, node);
        const double p_psi = dot(g_vec, att.row(2));
        std::ostringstream out;
        out << "{\"q\":[" << fmt(phi) << "," << fmt(theta) << "," << fmt(psi) << "],\"p\":["
            << fmt(p_phi) << "," << fmt(p_theta) << "," << fmt(p_psi) << "]}\n";
        write_output(args.output, out.str());
        return 0;
    }
    return usage_error("convert direction must be euler-to-andoyer or andoyer-to-euler");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Andoyer-variables rigid body toolkit"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the canonicity verification suite");
    verify->add_option("--seed", verify_args.seed, "RNG seed");
    verify->add_option("--trials", verify_args.trials, "number of random fixtures");
    verify->add_option("--jobs", verify_args.jobs, "worker threads (output is identical)");
    verify->add_option("--body-file", verify_args.body_file, "fixed body fixture (JSON)");
    verify->add_option("--body-n", verify_args.body_n, "point masses per random body");
    verify->add_option("--body-scale", verify_args.body_scale, "random body radius");
    verify->add_option("--output", verify_args.output, "output path (default stdout)");
    verify->add_option("--format", verify_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--tol-coefficients", verify_args.tol.coefficients);
    verify->add_option("--tol-oneform", verify_args.tol.oneform);
    verify->add_option("--tol-symplectic", verify_args.tol.symplectic);
    verify->add_option("--tol-lagrange", verify_args.tol.lagrange);

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "integrate free rotation in Andoyer variables");
    simulate->add_option("--inertia", sim_args.inertia,
                         "ixx iyy izz ixy ixz iyz (body frame)")->expected(6);
    simulate->add_option("--state", sim_args.state, "initial l g theta L G Theta")->expected(6);
    simulate->add_option("--t-end", sim_args.t_end, "final time");
    simulate->add_option("--dt", sim_args.dt, "fixed step");
    simulate->add_option("--method", sim_args.method, "rk4 or midpoint")
        ->check(CLI::IsMember({"rk4", "midpoint"}));
    simulate->add_option("--output", sim_args.output, "CSV output path (default stdout)");
    simulate->add_flag("--oracle", sim_args.oracle,
                       "append deviation from the Euler-equation oracle");

    ConvertArgs conv_args;
    auto* convert = app.add_subcommand("convert", "convert between Euler and Andoyer charts");
    convert->add_option("direction", conv_args.direction,
                        "euler-to-andoyer or andoyer-to-euler")->required();
    convert->add_option("--q", conv_args.q, "Euler angles phi theta psi")->expected(3);
    convert->add_option("--p", conv_args.p, "Euler momenta")->expected(3);
    convert->add_option("--state", conv_args.state, "Andoyer state l g theta L G Theta")
        ->expected(6);
    convert->add_option("--body-file", conv_args.body_file, "body fixture (JSON)");
    convert->add_option("--output", conv_args.output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_args);
        if (simulate->parsed()) return cmd_simulate(sim_args);
        if (convert->parsed()) return cmd_convert(conv_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
