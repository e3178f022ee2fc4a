#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "salbounds/jacobi.hpp"
#include "salbounds/report.hpp"

namespace sb = salbounds;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_usage = 2;
constexpr int exit_numerical = 3;

void parallel_for(int count, int jobs, const std::function<void(int)>& body)
{
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min(jobs, count);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                body(i);
        });
    }
    for (auto& t : pool) t.join();
}

void write_output(const std::string& out_path, const std::string& content)
{
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << content;
}

std::string csv_field(const std::optional<double>& v)
{
    return v ? sb::format_float(*v) : std::string{};
}

struct BoundsArgs {
    double mu = NAN, nu = NAN, lambda = 1.0;
    std::int64_t N = 0;
    double m = NAN, a = NAN, v = NAN;
    std::string shape = "exp";
    bool json = false;
    std::string out;
};

void print_bounds_text(std::ostream& os, const sb::BoundsReport& r)
{
    os << "mu = " << sb::format_float(r.mu) << "  nu = " << sb::format_float(r.nu)
       << "  lambda = " << sb::format_float(r.lambda) << "  shape = " << r.shape
       << "\n";
    if (r.physical) {
        os << "N = " << r.physical->n_particles << "  m = "
           << sb::format_float(r.physical->mass) << "  a = "
           << sb::format_float(r.physical->range) << "  v = "
           << sb::format_float(r.physical->coupling) << "\n";
    }
    if (r.e_k)
        os << "e_k  = " << sb::format_float(*r.e_k) << "  (F' = "
           << sb::format_float(r.ek_f_prime) << (r.ek_valid ? " < " : " !< ")
           << sb::format_float(2.0 * *r.e_k) << ")\n";
    else
        os << "e_k  = (absent: " << sb::to_string(r.ek_reason) << ")\n";
    if (r.e_g)
        os << "e_g  = " << sb::format_float(*r.e_g) << "  (s* = "
           << sb::format_float(r.eg_s_star) << ")\n";
    else
        os << "e_g  = (absent: " << sb::to_string(r.eg_reason) << ")\n";
    if (r.e_2g)
        os << "e_2g = " << sb::format_float(*r.e_2g) << "  (s* = "
           << sb::format_float(r.e2g_s_star) << ")\n";
    else
        os << "e_2g = (absent: " << sb::to_string(r.e2g_reason) << ")\n";
}

int run_bounds(const BoundsArgs& args)
{
    double mu = args.mu, nu = args.nu, lambda = args.lambda;
    std::optional<sb::PhysicalParams> phys;
    const bool scaled_given = !std::isnan(args.mu) && !std::isnan(args.nu);
    const bool physical_given = args.N != 0;
    if (scaled_given == physical_given) {
        std::cerr << "bounds: give either --mu/--nu or --N/--m/--a/--v\n";
        return exit_usage;
    }
    if (physical_given) {
        if (std::isnan(args.m) || std::isnan(args.a) || std::isnan(args.v)) {
            std::cerr << "bounds: physical entry needs --N --m --a --v\n";
            return exit_usage;
        }
        phys = sb::PhysicalParams{args.N, args.m, args.a, args.v};
        const sb::ScaledParams s = sb::to_scaled(*phys);
        mu = s.mu;
        nu = s.nu;
        lambda = s.lambda;
    }

    sb::BoundsReport r =
        sb::compute_bounds(sb::shape_by_name(args.shape), mu, nu, lambda);
    r.physical = phys;

    std::ostringstream os;
    if (args.json)
        os << sb::to_json_string(r) << "\n";
    else
        print_bounds_text(os, r);
    write_output(args.out, os.str());
    return exit_ok;
}

struct SweepArgs {
    double mu = 1.0, nu_min = NAN, nu_max = NAN, lambda = 1.0;
    int steps = 0;
    int jobs = 1;
    std::string shape = "exp";
    std::string out;
};

int run_sweep(const SweepArgs& args)
{
    if (!(args.nu_min < args.nu_max) || args.steps < 2) {
        std::cerr << "sweep: need --nu-min < --nu-max and --steps >= 2\n";
        return exit_usage;
    }
    const sb::PotentialShape shape = sb::shape_by_name(args.shape);
    std::vector<sb::BoundsReport> rows(args.steps);
    parallel_for(args.steps, args.jobs, [&](int i) {
        const double nu = args.nu_min +
                          (args.nu_max - args.nu_min) * i / (args.steps - 1.0);
        rows[i] = sb::compute_bounds(shape, args.mu, nu, args.lambda);
    });

    std::ostringstream os;
    os << "nu,e_k,e_g,e_2g\n";
    for (const auto& r : rows)
        os << sb::format_float(r.nu) << ',' << csv_field(r.e_k) << ','
           << csv_field(r.e_g) << ',' << csv_field(r.e_2g) << '\n';
    write_output(args.out, os.str());
    return exit_ok;
}

struct CurvesArgs {
    std::vector<double> nu_list;
    std::vector<double> mu_list;
    double e_min = NAN, e_max = NAN;
    int steps = 0;
    int jobs = 1;
    std::string shape = "exp";
    std::string out;
};

int run_curves(const CurvesArgs& args)
{
    if (args.nu_list.empty() || !(args.e_min < args.e_max) || args.steps < 2) {
        std::cerr << "curves: need --nu-list, --e-min < --e-max, --steps >= 2\n";
        return exit_usage;
    }
    const sb::PotentialShape shape = sb::shape_by_name(args.shape);
    std::vector<double> e_grid(args.steps);
    for (int i = 0; i < args.steps; ++i)
        e_grid[i] = args.e_min + (args.e_max - args.e_min) * i / (args.steps - 1.0);

    std::vector<sb::SpectralCurve> curves(args.nu_list.size());
    parallel_for(static_cast<int>(args.nu_list.size()), args.jobs, [&](int i) {
        curves[i] = sb::curve_sample(shape, {args.nu_list[i]}, e_grid).front();
    });

    std::ostringstream os;
    os << "kind,param,e,value,exists\n";
    for (const auto& c : curves)
        for (const auto& p : c.points)
            os << "F," << sb::format_float(c.nu) << ',' << sb::format_float(p.e)
               << ',' << sb::format_float(p.F) << ',' << (p.exists ? "1" : "0")
               << '\n';
    for (double mu : args.mu_list)
        for (double e : e_grid)
            os << "parabola," << sb::format_float(mu) << ','
               << sb::format_float(e) << ',' << sb::format_float(e * e - mu * mu)
               << ",\n";
    write_output(args.out, os.str());
    return exit_ok;
}

struct CriticalArgs {
    double mu = NAN;
    std::string which;
    double tol = 1e-6;
    std::string shape = "exp";
    std::string out;
};

int run_critical(const CriticalArgs& args)
{
    const sb::PotentialShape shape = sb::shape_by_name(args.shape);
    std::ostringstream os;
    char buf[64];
    if (args.which == "nc") {
        const double nc = sb::critical_nu(shape, args.mu, args.tol);
        std::snprintf(buf, sizeof(buf), "nu_c = %.6f\n", nc);
        os << buf;
    } else {
        const double ns = sb::supercritical_nu(shape, args.mu, args.tol);
        std::snprintf(buf, sizeof(buf), "nu_s = %.6f\n", ns);
        os << buf;
        // For m = 1, a = sqrt(2) and large N: nu = N v / 2, so N < 2 nu_s / v.
        std::snprintf(buf, sizeof(buf),
                      "implied size bound (m=1, a=sqrt(2)): N < %.6f / v\n",
                      2.0 * ns);
        os << buf;
    }
    write_output(args.out, os.str());
    return exit_ok;
}

struct JacobiArgs {
    std::int64_t n_max = 0;
    std::string out;
};

int run_jacobi_check(const JacobiArgs& args)
{
    std::ostringstream os;
    bool pass = true;
    os << "N,orthogonality,row_sum,coeff_diag,coeff_cross,constants\n";
    for (std::int64_t n = 2; n <= args.n_max; ++n) {
        const sb::JacobiIdentityReport rep = sb::check_identities(n);
        const sb::JacobiConstants c = sb::jacobi_constants(n);
        const double lambda = (n - 1.0) / n;
        double cdev = 0.0;
        cdev = std::max(cdev, std::fabs(c.alpha * c.alpha + c.beta * c.beta - 2.0) / 2.0);
        cdev = std::max(cdev, std::fabs(c.b * c.b + c.beta * c.beta - lambda) /
                                  std::max(lambda, 1e-300));
        cdev = std::max(cdev, std::fabs((n - 1.0) * c.b * c.alpha - 1.0));
        cdev = std::max(cdev, std::fabs(n * c.b - c.alpha) / c.alpha);
        cdev = std::max(cdev, c.alpha == 0.0 ? 0.0
                                             : std::fabs(c.delta - c.beta / c.alpha));
        cdev = std::max(cdev,
                        std::fabs(1.0 + c.delta * c.delta - 2.0 * lambda) / (2.0 * lambda));
        os << n << ',' << sb::format_float(rep.orthogonality) << ','
           << sb::format_float(rep.row_sum) << ','
           << sb::format_float(rep.coeff_diag) << ','
           << sb::format_float(rep.coeff_cross) << ',' << sb::format_float(cdev)
           << '\n';
        if (rep.orthogonality > 1e-12 || rep.row_sum > 1e-12 ||
            rep.coeff_diag > 1e-12 || rep.coeff_cross > 1e-12 || cdev > 1e-13)
            pass = false;
    }
    os << (pass ? "PASS" : "FAIL") << "\n";
    write_output(args.out, os.str());
    return pass ? exit_ok : exit_check_failure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy bounds for semirelativistic N-boson systems"};
    app.require_subcommand(1);
    app.set_config("--config")->configurable(false);

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "Bound triple (e_k, e_g, e_2g) at one parameter point");
    bounds->add_option("--mu", ba.mu);
    bounds->add_option("--nu", ba.nu);
    bounds->add_option("--lambda", ba.lambda);
    bounds->add_option("--N", ba.N);
    bounds->add_option("--m", ba.m);
    bounds->add_option("--a", ba.a);
    bounds->add_option("--v", ba.v);
    bounds->add_option("--shape", ba.shape)->check(CLI::IsMember({"exp", "gauss"}));
    bounds->add_flag("--json", ba.json);
    bounds->add_option("--out", ba.out);

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "CSV sweep of the bounds over nu");
    sweep->add_option("--mu", sa.mu);
    sweep->add_option("--nu-min", sa.nu_min)->required();
    sweep->add_option("--nu-max", sa.nu_max)->required();
    sweep->add_option("--steps", sa.steps)->required();
    sweep->add_option("--lambda", sa.lambda);
    sweep->add_option("--jobs", sa.jobs);
    sweep->add_option("--shape", sa.shape)->check(CLI::IsMember({"exp", "gauss"}));
    sweep->add_option("--out", sa.out);

    CurvesArgs ca;
    auto* curves = app.add_subcommand("curves", "Spectral function curves F(e) plus e^2-mu^2 parabolas");
    curves->add_option("--nu-list", ca.nu_list)->required()->delimiter(',');
    curves->add_option("--mu-list", ca.mu_list)->delimiter(',');
    curves->add_option("--e-min", ca.e_min)->required();
    curves->add_option("--e-max", ca.e_max)->required();
    curves->add_option("--steps", ca.steps)->required();
    curves->add_option("--jobs", ca.jobs);
    curves->add_option("--shape", ca.shape)->check(CLI::IsMember({"exp", "gauss"}));
    curves->add_option("--out", ca.out);

    CriticalArgs cra;
    auto* critical = app.add_subcommand("critical", "Critical or supercritical coupling");
    critical->add_option("--mu", cra.mu)->required();
    critical->add_option("--which", cra.which)->required()->check(CLI::IsMember({"nc", "ns"}));
    critical->add_option("--tol", cra.tol);
    critical->add_option("--shape", cra.shape)->check(CLI::IsMember({"exp", "gauss"}));
    critical->add_option("--out", cra.out);

    JacobiArgs ja;
    auto* jacobi = app.add_subcommand("jacobi-check", "Jacobi matrix identity deviations");
    jacobi->add_option("--n-max", ja.n_max)->required()->check(CLI::Range(2, 1000000));
    jacobi->add_option("--out", ja.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (bounds->parsed()) return run_bounds(ba);
        if (sweep->parsed()) return run_sweep(sa);
        if (curves->parsed()) return run_curves(ca);
        if (critical->parsed()) return run_critical(cra);
        if (jacobi->parsed()) return run_jacobi_check(ja);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_usage;
}
