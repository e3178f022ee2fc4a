#pragma once

#include <optional>
#include <string>

#include "salbounds/kleingordon.hpp"
#include "salbounds/scaling.hpp"
#include "salbounds/variational.hpp"

namespace salbounds {

enum class AbsenceReason { none, no_root, supercritical, no_stationary_minimum, solver_failure };

std::string to_string(AbsenceReason r);

// One Table-1-style row: the bound triple with existence flags and timings.
struct BoundsReport {
    double mu = 0.0;
    double nu = 0.0;
    double lambda = 1.0;
    std::string shape = "exp";
    std::optional<PhysicalParams> physical;

    std::optional<double> e_k;
    double ek_f_prime = 0.0;
    bool ek_valid = false;
    AbsenceReason ek_reason = AbsenceReason::none;

    std::optional<double> e_g;
    double eg_s_star = 0.0;
    AbsenceReason eg_reason = AbsenceReason::none;

    std::optional<double> e_2g;
    double e2g_s_star = 0.0;
    AbsenceReason e2g_reason = AbsenceReason::none;

    double ek_ms = 0.0;
    double eg_ms = 0.0;
    double e2g_ms = 0.0;
};

BoundsReport compute_bounds(const PotentialShape& shape, double mu, double nu,
                            double lambda = 1.0, const KgOptions& kg_opts = {});

// "%.9g" with '.' decimal separator regardless of locale.
std::string format_float(double v);

std::string to_json_string(const BoundsReport& r, int indent = 2);

}  // namespace salbounds
