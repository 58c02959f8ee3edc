#pragma once

#include "quasireal/measurement.hpp"

namespace quasireal {

/// Flat report of all uncertainty functionals for one (model, psi, A, B).
/// ozawa_lhs = eps*eta + eps*sigma_B + sigma_A*eta; the bound is
/// half the modulus of the commutator expectation value.
struct UncertaintyReport {
    double eps_out = 0.0;
    double eps = 0.0;
    double eta = 0.0;
    double sigma_A = 0.0;
    double sigma_B = 0.0;
    double commutator_bound = 0.0;
    double ozawa_lhs = 0.0;
    double naive_product = 0.0;
};

/// sum_m ||(A_m - A) M_m psi||^2 (error evaluated on output states).
double output_error_sq(const MeasurementModel& model, const State& psi, const Operator& a);

/// sum_m ||M_m (A_m - A) psi||^2 (operator ordered to the left).
double ozawa_error_sq(const MeasurementModel& model, const State& psi, const Operator& a);

/// sum_m ||(B M_m - M_m B) psi||^2.
double ozawa_disturbance_sq(const MeasurementModel& model, const State& psi, const Operator& b);

/// sqrt(<X^2> - <X>^2), clamped at 0 for round-off down to -1e-12.
double std_dev(const State& psi, const Operator& x);

UncertaintyReport ozawa_inequality(const MeasurementModel& model, const State& psi,
                                   const Operator& a, const Operator& b);

/// Hall-optimal readout per outcome: the real part of the outcome-conditioned
/// weak value of A. Unreachable outcomes get readout 0 and a flag.
struct OptimalReadouts {
    std::vector<double> values;
    std::vector<bool> unconstrained;  // true where p(m) < floor
};

OptimalReadouts hall_optimal_readouts(const MeasurementModel& model, const State& psi,
                                      const Operator& a);

}  // namespace quasireal
