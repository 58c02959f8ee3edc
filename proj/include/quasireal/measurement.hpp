#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quasireal/hilbert.hpp"

namespace quasireal {

/// Absolute floor below which an outcome probability counts as unreachable.
inline constexpr double kZeroProbabilityFloor = 1e-12;

struct KrausOutcome {
    std::string label;
    Operator kraus;
    std::optional<double> readout;
};

/// Generalized measurement: Kraus set {M_m} with optional readout values A_m.
/// Completeness (sum M†M = I) is the caller-checked invariant, see
/// check_completeness.
struct MeasurementModel {
    int dim = 0;
    std::vector<KrausOutcome> outcomes;

    int n_outcomes() const { return static_cast<int>(outcomes.size()); }

    /// Throws DomainError if any readout is absent.
    void require_readouts(const char* who) const;
    std::vector<double> readouts() const;
    MeasurementModel with_readouts(const std::vector<double>& values) const;
};

/// Complete orthonormal final basis {|f>} for post-selection.
struct ProbeBasis {
    int dim = 0;
    std::vector<State> vectors;
};

/// Joint outcome probabilities p(m, f), m-major.
struct JointDistribution {
    std::vector<std::string> labels;
    int n_probe = 0;
    std::vector<double> table;

    double at(int m, int f) const { return table[static_cast<size_t>(m) * n_probe + f]; }
};

/// Max-abs residual of sum M†M - I.
double check_completeness(const MeasurementModel& model);

/// p(m) = ||M_m psi||^2.
double outcome_probability(const MeasurementModel& model, const State& psi, int m);

/// Normalized M_m psi. Throws on unreachable outcomes (p < 1e-12).
State post_state(const MeasurementModel& model, const State& psi, int m);

/// p(m, f) = |<f|M_m|psi>|^2. Entries below -1e-12 would indicate a bug;
/// small negative round-off is clamped to 0.
JointDistribution joint_probabilities(const MeasurementModel& model, const State& psi,
                                      const ProbeBasis& probe);

/// Validates pairwise orthonormality and completeness of the rows.
ProbeBasis make_probe(const std::vector<State>& vectors);

/// Probe given by the eigenbasis of a Hermitian operator.
ProbeBasis eigenbasis_probe(const Operator& hermitian);

/// Complete model by construction: Haar unitary on dim*n_outcomes sliced into
/// dim x dim blocks of its first block-column. Readouts left unset.
MeasurementModel random_measurement(int dim, int n_outcomes, std::uint64_t seed);

/// Projective measurement of an observable, one outcome per spectral cluster,
/// readouts = cluster eigenvalues.
MeasurementModel projective_measurement(const Observable& obs);

}  // namespace quasireal
