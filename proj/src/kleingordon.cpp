#include "salbounds/kleingordon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace salbounds {

namespace {

double scan_energy(double lo, double hi, int i, int m)
{
    return lo + (hi - lo) * i / static_cast<double>(m);
}

}  // namespace

std::pair<double, bool> spectral_F(const PotentialShape& shape, double nu,
                                   double e, const RadialOptions& opts)
{
    if (!(nu > 0.0)) throw std::invalid_argument("spectral_F: requires nu > 0");
    const EffectivePotential W = kg_effective_potential(shape, e, nu);
    const auto sol = ground_state(W, opts);
    if (!sol) return {0.0, false};
    return {std::min(0.0, sol->epsilon), sol->epsilon < -opts.existence_threshold};
}

double spectral_F_prime(const PotentialShape& shape, double nu, double e,
                        const RadialOptions& opts)
{
    const EffectivePotential W = kg_effective_potential(shape, e, nu);
    const auto sol = ground_state(W, opts);
    if (!sol || !(sol->epsilon < -opts.existence_threshold))
        throw NoBoundState("spectral_F_prime: no discrete state at this (nu, e)");
    return 2.0 * nu * expectation_f(*sol, shape);
}

std::optional<KgSolution> solve_kg(const PotentialShape& shape, double mu,
                                   double nu, const KgOptions& opts)
{
    if (mu < 0.0) throw std::invalid_argument("solve_kg: requires mu >= 0");
    if (!(nu > 0.0)) throw std::invalid_argument("solve_kg: requires nu > 0");

    const double e_lo = -mu + 1e-6;
    const double e_hi = mu;
    if (!(e_lo < e_hi)) return std::nullopt;

    auto g_scan = [&](double e, bool& exists) {
        const auto [F, ex] = spectral_F(shape, nu, e, opts.scan_radial);
        exists = ex;
        return F - e * e + mu * mu;
    };
    auto g_fine = [&](double e) {
        return spectral_F(shape, nu, e, opts.refine_radial).first - e * e + mu * mu;
    };

    // Scan for sign changes.  A cell is only a candidate when a discrete state
    // exists at one of its ends (with F = 0 everywhere g = mu^2 - e^2 cannot
    // cross).  One x4 rescan if nothing is found but the curve came close to
    // the parabola, which catches a near-tangent root pair just below the
    // supercritical merge.
    std::vector<std::pair<double, double>> brackets;
    for (int pass = 0; pass < 2 && brackets.empty(); ++pass) {
        const int m = opts.scan_points * (pass == 0 ? 1 : 4);
        double near_miss = std::numeric_limits<double>::infinity();
        bool any_exists = false;
        double prev_e = scan_energy(e_lo, e_hi, 0, m);
        bool prev_ex = false;
        double prev_g = g_scan(prev_e, prev_ex);
        for (int i = 1; i <= m; ++i) {
            bool ex = false;
            const double e = scan_energy(e_lo, e_hi, i, m);
            const double g = g_scan(e, ex);
            if ((prev_g <= 0.0) != (g <= 0.0) && (prev_ex || ex))
                brackets.emplace_back(prev_e, e);
            if (ex) {
                any_exists = true;
                near_miss = std::min(near_miss, std::fabs(g));
            }
            prev_e = e;
            prev_g = g;
            prev_ex = ex;
        }
        if (pass == 0 && brackets.empty() &&
            !(any_exists && near_miss < 0.05 * std::max(1.0, mu * mu)))
            break;
    }
    if (brackets.empty()) return std::nullopt;

    KgSolution best{};
    bool have_best = false;
    std::vector<double> roots;
    for (auto [a, b] : brackets) {
        double ga = g_fine(a), gb = g_fine(b);
        if ((ga <= 0.0) == (gb <= 0.0)) continue;  // scan-level artifact
        while (b - a > opts.root_tol) {
            const double mid = 0.5 * (a + b);
            const double gm = g_fine(mid);
            if ((ga <= 0.0) == (gm <= 0.0)) {
                a = mid;
                ga = gm;
            } else {
                b = mid;
                gb = gm;
            }
        }
        const double root = 0.5 * (a + b);
        roots.push_back(root);

        double fp;
        try {
            fp = spectral_F_prime(shape, nu, root, opts.refine_radial);
        } catch (const NoBoundState&) {
            continue;  // threshold root with F = 0: no discrete state
        }
        const bool valid = fp < 2.0 * root;
        if (valid && (!have_best || root > best.e_k)) {
            best.e_k = root;
            best.f_prime = fp;
            best.valid = true;
            best.bracket = {a, b};
            have_best = true;
        }
    }
    if (!have_best) return std::nullopt;
    std::sort(roots.begin(), roots.end());
    best.all_roots = std::move(roots);
    return best;
}

std::vector<SpectralCurve> curve_sample(const PotentialShape& shape,
                                        const std::vector<double>& nu_list,
                                        const std::vector<double>& e_grid,
                                        const RadialOptions& opts)
{
    if (nu_list.empty() || e_grid.empty())
        throw std::invalid_argument("curve_sample: grids must be non-empty");
    std::vector<SpectralCurve> curves;
    curves.reserve(nu_list.size());
    for (double nu : nu_list) {
        SpectralCurve c;
        c.nu = nu;
        c.shape = shape.name;
        c.points.reserve(e_grid.size());
        for (double e : e_grid) {
            const auto [F, exists] = spectral_F(shape, nu, e, opts);
            c.points.push_back({e, F, exists});
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

namespace {

bool kg_has_solution(const PotentialShape& shape, double mu, double nu,
                     const KgOptions& opts)
{
    return solve_kg(shape, mu, nu, opts).has_value();
}

}  // namespace

double critical_nu(const PotentialShape& shape, double mu, double tol,
                   const KgOptions& opts)
{
    if (!(mu > 0.0)) throw std::invalid_argument("critical_nu: requires mu > 0");
    double lo = 0.05, hi = 0.0;
    if (kg_has_solution(shape, mu, lo, opts)) {
        hi = lo;
        for (int i = 0; i < 30; ++i) {
            lo *= 0.5;
            if (!kg_has_solution(shape, mu, lo, opts)) break;
            hi = lo;
        }
        if (hi == lo) throw std::runtime_error("critical_nu: no lower bracket found");
    } else {
        double nu = lo;
        for (int i = 0; i < 40 && hi == 0.0; ++i) {
            nu *= 1.6;
            if (kg_has_solution(shape, mu, nu, opts))
                hi = nu;
            else
                lo = nu;
        }
        if (hi == 0.0) throw std::runtime_error("critical_nu: no upper bracket found");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (kg_has_solution(shape, mu, mid, opts))
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double supercritical_nu(const PotentialShape& shape, double mu, double tol,
                        const KgOptions& opts)
{
    if (!(mu > 0.0))
        throw std::invalid_argument("supercritical_nu: requires mu > 0");
    // start from a coupling that certainly binds
    double lo = critical_nu(shape, mu, std::max(tol, 1e-3), opts) * 1.5;
    if (!kg_has_solution(shape, mu, lo, opts))
        throw std::runtime_error("supercritical_nu: lost the bound interval");
    double hi = lo;
    for (int i = 0; i < 40; ++i) {
        hi *= 1.5;
        if (!kg_has_solution(shape, mu, hi, opts)) break;
        lo = hi;
    }
    if (hi == lo) throw std::runtime_error("supercritical_nu: no upper bracket found");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (kg_has_solution(shape, mu, mid, opts))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace salbounds
