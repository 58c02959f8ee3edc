#include "quasireal/uncertainty.hpp"

#include <cmath>

namespace quasireal {

namespace {

// (A_m * I - A) psi
std::vector<Complex> shifted_apply(double am, const Operator& a, const State& psi) {
    auto v = apply(a, psi);
    for (int i = 0; i < psi.dim; ++i)
        v[static_cast<size_t>(i)] = am * psi[i] - v[static_cast<size_t>(i)];
    return v;
}

}  // namespace

double output_error_sq(const MeasurementModel& model, const State& psi, const Operator& a) {
    model.require_readouts("output_error_sq");
    if (model.dim != psi.dim || model.dim != a.dim)
        throw DomainError("output_error_sq: dimension mismatch");
    double total = 0.0;
    for (const auto& o : model.outcomes) {
        auto mpsi = apply(o.kraus, psi);
        auto av = apply(a, mpsi);
        double term = 0.0;
        for (int i = 0; i < model.dim; ++i)
            term += std::norm(*o.readout * mpsi[static_cast<size_t>(i)] - av[static_cast<size_t>(i)]);
        total += term;
    }
    return total;
}

double ozawa_error_sq(const MeasurementModel& model, const State& psi, const Operator& a) {
    model.require_readouts("ozawa_error_sq");
    if (model.dim != psi.dim || model.dim != a.dim)
        throw DomainError("ozawa_error_sq: dimension mismatch");
    double total = 0.0;
    for (const auto& o : model.outcomes) {
        auto v = apply(o.kraus, shifted_apply(*o.readout, a, psi));
        double n = norm(v);
        total += n * n;
    }
    return total;
}

double ozawa_disturbance_sq(const MeasurementModel& model, const State& psi, const Operator& b) {
    if (model.dim != psi.dim || model.dim != b.dim)
        throw DomainError("ozawa_disturbance_sq: dimension mismatch");
    auto bpsi = apply(b, psi);
    double total = 0.0;
    for (const auto& o : model.outcomes) {
        auto bm = apply(b, apply(o.kraus, psi));
        auto mb = apply(o.kraus, bpsi);
        double term = 0.0;
        for (int i = 0; i < model.dim; ++i)
            term += std::norm(bm[static_cast<size_t>(i)] - mb[static_cast<size_t>(i)]);
        total += term;
    }
    return total;
}

double std_dev(const State& psi, const Operator& x) {
    if (psi.dim != x.dim) throw DomainError("std_dev: dimension mismatch");
    auto xpsi = apply(x, psi);
    double mean = inner(psi.amplitudes, xpsi).real();
    double second = 0.0;
    for (const auto& c : xpsi) second += std::norm(c);  // <X^2> = ||X psi||^2 for Hermitian X
    double var = second - mean * mean;
    if (var < -1e-12) throw DomainError("std_dev: variance below numerical slack");
    return var > 0.0 ? std::sqrt(var) : 0.0;
}

UncertaintyReport ozawa_inequality(const MeasurementModel& model, const State& psi,
                                   const Operator& a, const Operator& b) {
    UncertaintyReport r;
    r.eps_out = std::sqrt(std::max(0.0, output_error_sq(model, psi, a)));
    r.eps = std::sqrt(std::max(0.0, ozawa_error_sq(model, psi, a)));
    r.eta = std::sqrt(std::max(0.0, ozawa_disturbance_sq(model, psi, b)));
    r.sigma_A = std_dev(psi, a);
    r.sigma_B = std_dev(psi, b);
    Operator comm = subtract(multiply(a, b), multiply(b, a));
    r.commutator_bound = 0.5 * std::abs(expectation(comm, psi));
    r.ozawa_lhs = r.eps * r.eta + r.eps * r.sigma_B + r.sigma_A * r.eta;
    r.naive_product = r.eps * r.eta;
    return r;
}

OptimalReadouts hall_optimal_readouts(const MeasurementModel& model, const State& psi,
                                      const Operator& a) {
    if (model.dim != psi.dim || model.dim != a.dim)
        throw DomainError("hall_optimal_readouts: dimension mismatch");
    OptimalReadouts out;
    auto apsi = apply(a, psi);
    for (const auto& o : model.outcomes) {
        auto mpsi = apply(o.kraus, psi);
        auto mapsi = apply(o.kraus, apsi);
        double p = 0.0;
        for (const auto& c : mpsi) p += std::norm(c);
        if (p < kZeroProbabilityFloor) {
            out.values.push_back(0.0);
            out.unconstrained.push_back(true);
            continue;
        }
        // Re <psi| M†M A |psi> / <psi| M†M |psi>, the real part of the
        // outcome-conditioned weak value of A.
        double num = inner(mpsi, mapsi).real();
        out.values.push_back(num / p);
        out.unconstrained.push_back(false);
    }
    return out;
}

}  // namespace quasireal
