#include "quasireal/measurement.hpp"

#include <cmath>
#include <sstream>

namespace quasireal {

void MeasurementModel::require_readouts(const char* who) const {
    for (const auto& o : outcomes) {
        if (!o.readout.has_value()) {
            std::ostringstream msg;
            msg << who << ": outcome '" << o.label << "' has no readout value";
            throw DomainError(msg.str());
        }
    }
}

std::vector<double> MeasurementModel::readouts() const {
    require_readouts("readouts");
    std::vector<double> out;
    out.reserve(outcomes.size());
    for (const auto& o : outcomes) out.push_back(*o.readout);
    return out;
}

MeasurementModel MeasurementModel::with_readouts(const std::vector<double>& values) const {
    if (values.size() != outcomes.size())
        throw DomainError("with_readouts: readout count does not match outcome count");
    MeasurementModel copy = *this;
    for (size_t i = 0; i < values.size(); ++i) copy.outcomes[i].readout = values[i];
    return copy;
}

double check_completeness(const MeasurementModel& model) {
    Operator sum(model.dim);
    for (const auto& o : model.outcomes) {
        if (o.kraus.dim != model.dim) throw DomainError("check_completeness: Kraus dim mismatch");
        sum = add(sum, multiply(adjoint(o.kraus), o.kraus));
    }
    return max_abs_diff(sum, identity(model.dim));
}

double outcome_probability(const MeasurementModel& model, const State& psi, int m) {
    const auto v = apply(model.outcomes[static_cast<size_t>(m)].kraus, psi);
    double n = norm(v);
    return n * n;
}

State post_state(const MeasurementModel& model, const State& psi, int m) {
    auto v = apply(model.outcomes[static_cast<size_t>(m)].kraus, psi);
    double n = norm(v);
    if (n * n < kZeroProbabilityFloor) {
        std::ostringstream msg;
        msg << "post_state: unreachable outcome '" << model.outcomes[static_cast<size_t>(m)].label
            << "' (p = " << n * n << ")";
        throw DomainError(msg.str());
    }
    return make_state(v);
}

JointDistribution joint_probabilities(const MeasurementModel& model, const State& psi,
                                      const ProbeBasis& probe) {
    if (model.dim != psi.dim || model.dim != probe.dim)
        throw DomainError("joint_probabilities: dimension mismatch");
    JointDistribution dist;
    dist.n_probe = static_cast<int>(probe.vectors.size());
    dist.table.reserve(model.outcomes.size() * probe.vectors.size());
    for (const auto& o : model.outcomes) {
        dist.labels.push_back(o.label);
        const auto mv = apply(o.kraus, psi);
        for (const auto& f : probe.vectors) {
            double p = std::norm(inner(f.amplitudes, mv));
            if (p < 0.0) p = 0.0;
            dist.table.push_back(p);
        }
    }
    return dist;
}

ProbeBasis make_probe(const std::vector<State>& vectors) {
    if (vectors.empty()) throw DomainError("make_probe: empty basis");
    int dim = vectors.front().dim;
    if (static_cast<int>(vectors.size()) != dim)
        throw DomainError("make_probe: probe must be complete (one vector per dimension)");
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].dim != dim) throw DomainError("make_probe: mixed dimensions");
        for (size_t j = 0; j <= i; ++j) {
            Complex ov = inner(vectors[i], vectors[j]);
            double expect = (i == j) ? 1.0 : 0.0;
            if (std::abs(ov - expect) > 1e-10) {
                std::ostringstream msg;
                msg << "make_probe: vectors " << i << "," << j
                    << " not orthonormal (deviation " << std::abs(ov - expect) << ")";
                throw DomainError(msg.str());
            }
        }
    }
    ProbeBasis probe;
    probe.dim = dim;
    probe.vectors = vectors;
    return probe;
}

ProbeBasis eigenbasis_probe(const Operator& hermitian) {
    Eigensystem sys = eigh(hermitian);
    return make_probe(sys.eigenvectors);
}

MeasurementModel random_measurement(int dim, int n_outcomes, std::uint64_t seed) {
    if (n_outcomes < 1) throw DomainError("random_measurement: n_outcomes must be >= 1");
    Operator u = random_unitary(dim * n_outcomes, seed);
    MeasurementModel model;
    model.dim = dim;
    for (int m = 0; m < n_outcomes; ++m) {
        KrausOutcome o;
        o.label = "m" + std::to_string(m);
        o.kraus = Operator(dim);
        // Block m of the first block-column of u.
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) o.kraus.at(i, j) = u.at(m * dim + i, j);
        model.outcomes.push_back(std::move(o));
    }
    return model;
}

MeasurementModel projective_measurement(const Observable& obs) {
    MeasurementModel model;
    model.dim = obs.dim();
    for (size_t c = 0; c < obs.projectors.size(); ++c) {
        KrausOutcome o;
        o.label = "a" + std::to_string(c);
        o.kraus = obs.projectors[c];
        o.readout = obs.cluster_values[c];
        model.outcomes.push_back(std::move(o));
    }
    return model;
}

}  // namespace quasireal
