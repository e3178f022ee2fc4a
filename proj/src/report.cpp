#include "salbounds/report.hpp"

#include <chrono>
#include <cstdio>

#include <json.hpp>

namespace salbounds {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

std::string to_string(AbsenceReason r)
{
    switch (r) {
        case AbsenceReason::none: return "none";
        case AbsenceReason::no_root: return "no-root";
        case AbsenceReason::supercritical: return "supercritical";
        case AbsenceReason::no_stationary_minimum: return "no-stationary-minimum";
        case AbsenceReason::solver_failure: return "solver-failure";
    }
    return "unknown";
}

std::string format_float(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    for (char* p = buf; *p; ++p)
        if (*p == ',') *p = '.';
    return buf;
}

BoundsReport compute_bounds(const PotentialShape& shape, double mu, double nu,
                            double lambda, const KgOptions& kg_opts)
{
    BoundsReport r;
    r.mu = mu;
    r.nu = nu;
    r.lambda = lambda;
    r.shape = shape.name;

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (auto kg = solve_kg(shape, mu, nu, kg_opts)) {
            r.e_k = kg->e_k;
            r.ek_f_prime = kg->f_prime;
            r.ek_valid = kg->valid;
        } else {
            r.ek_reason = AbsenceReason::no_root;
        }
    } catch (const RadialError&) {
        r.ek_reason = AbsenceReason::solver_failure;
    }
    r.ek_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    if (auto eg = upper_bound_eg(shape, mu, nu)) {
        r.e_g = eg->value;
        r.eg_s_star = eg->s_star;
    } else {
        r.eg_reason = AbsenceReason::no_stationary_minimum;
    }
    r.eg_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    if (auto e2g = upper_bound_e2g(shape, mu, nu, lambda)) {
        r.e_2g = e2g->value;
        r.e2g_s_star = e2g->s_star;
    } else {
        r.e2g_reason = AbsenceReason::no_stationary_minimum;
    }
    r.e2g_ms = ms_since(t0);
    return r;
}

std::string to_json_string(const BoundsReport& r, int indent)
{
    nlohmann::json j;
    j["inputs"] = {{"mu", r.mu}, {"nu", r.nu}, {"lambda", r.lambda}, {"shape", r.shape}};
    if (r.physical) {
        j["inputs"]["N"] = r.physical->n_particles;
        j["inputs"]["m"] = r.physical->mass;
        j["inputs"]["a"] = r.physical->range;
        j["inputs"]["v"] = r.physical->coupling;
    }
    if (r.e_k) {
        j["e_k"] = {{"value", *r.e_k}, {"f_prime", r.ek_f_prime}, {"valid", r.ek_valid}};
    } else {
        j["e_k"] = nullptr;
        j["e_k_reason"] = to_string(r.ek_reason);
    }
    if (r.e_g) {
        j["e_g"] = {{"value", *r.e_g}, {"s_star", r.eg_s_star}};
    } else {
        j["e_g"] = nullptr;
        j["e_g_reason"] = to_string(r.eg_reason);
    }
    if (r.e_2g) {
        j["e_2g"] = {{"value", *r.e_2g}, {"s_star", r.e2g_s_star}};
    } else {
        j["e_2g"] = nullptr;
        j["e_2g_reason"] = to_string(r.e2g_reason);
    }
    j["wall_ms"] = {{"e_k", r.ek_ms}, {"e_g", r.eg_ms}, {"e_2g", r.e2g_ms}};
    return j.dump(indent);
}

}  // namespace salbounds
