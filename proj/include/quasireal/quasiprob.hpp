#pragma once

#include "quasireal/measurement.hpp"

namespace quasireal {

/// Cell budget above which full quasi-probability tables are not materialized
/// (totals are streamed instead).
inline constexpr size_t kQuasiTableCellBudget = 4096;

/// Complex joint quasi-probability p(a, m, f) over (spectral cluster of an
/// observable, measurement outcome, final probe or spectral outcome).
struct QuasiDistribution {
    std::vector<double> a_values;        // cluster eigenvalues on the a-axis
    std::vector<std::string> m_labels;
    int n_f = 0;
    std::vector<double> f_values;        // non-empty when the f-axis is spectral
    std::vector<Complex> table;          // a-major, then m, then f

    Complex at(int a, int m, int f) const {
        return table[(static_cast<size_t>(a) * m_labels.size() + m) * n_f + f];
    }
};

/// p(a,m,f) = <f|M_m Pi_a|psi><psi|M_m^dagger|f>. Throws DomainError when the
/// table would exceed the cell budget; use the streaming totals instead.
QuasiDistribution joint_quasiprob(const MeasurementModel& model, const State& psi,
                                  const Observable& a, const ProbeBasis& probe);

/// sum_{a,m,f} Re[p(a,m,f)] (A_m - A_a)^2; streamed, no table is stored.
double error_sq_quasiprob(const MeasurementModel& model, const State& psi, const Observable& a,
                          const ProbeBasis& probe);

/// Disturbance with the final axis fixed to the eigenbasis of B:
/// sum Re[p(b_i, m, b_f)] (B_f - B_i)^2.
double disturbance_sq_quasiprob(const MeasurementModel& model, const State& psi,
                                const Observable& b);

/// Quasi-distribution for the disturbance decomposition (f-axis spectral in B).
QuasiDistribution disturbance_quasiprob_table(const MeasurementModel& model, const State& psi,
                                              const Observable& b);

struct NegativityReport {
    double min_real = 0.0;
    double negative_mass = 0.0;  // sum of max(0, -Re p)
    double max_abs_imag = 0.0;
    struct Cell {
        int a = 0, m = 0, f = 0;
        Complex p;
    };
    std::vector<Cell> most_negative;  // up to 5, ascending Re p
};

NegativityReport negativity_report(const QuasiDistribution& dist);

}  // namespace quasireal
