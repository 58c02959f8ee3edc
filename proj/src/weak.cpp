#include "quasireal/weak.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quasireal {

namespace {

std::vector<Complex> shifted(double am, const Operator& a, const std::vector<Complex>& v) {
    auto av = apply(a, v);
    for (size_t i = 0; i < v.size(); ++i) av[i] = am * v[i] - av[i];
    return av;
}

// Absolute probability floor for a (model, psi, probe) table: relative to the
// largest cell.
double table_floor(const MeasurementModel& model, const State& psi, const ProbeBasis& probe) {
    double pmax = 0.0;
    for (const auto& o : model.outcomes) {
        auto mv = apply(o.kraus, psi);
        for (const auto& f : probe.vectors) pmax = std::max(pmax, std::norm(inner(f.amplitudes, mv)));
    }
    return kCellFloorRelative * pmax;
}

Complex cell_amplitude(const MeasurementModel& model, const State& psi, const ProbeBasis& probe,
                       int m, int f) {
    auto mv = apply(model.outcomes[static_cast<size_t>(m)].kraus, psi);
    return inner(probe.vectors[static_cast<size_t>(f)].amplitudes, mv);
}

void require_defined(Complex amp, double floor, int m, int f, const char* who) {
    if (std::norm(amp) < floor) {
        std::ostringstream msg;
        msg << who << ": cell (m=" << m << ", f=" << f << ") is undefined (p = " << std::norm(amp)
            << " below floor " << floor << ")";
        throw DomainError(msg.str());
    }
}

}  // namespace

WeakValueRecord weak_value(const State& psi, const Operator& pre_op, const Operator& x,
                           const State& f, WeakSide side, double abs_floor) {
    WeakValueRecord rec;
    rec.f = 0;
    auto mv = apply(pre_op, psi);
    rec.amplitude = inner(f.amplitudes, mv);
    rec.prob = std::norm(rec.amplitude);
    rec.defined = rec.prob >= abs_floor;
    if (rec.defined) {
        std::vector<Complex> num_vec;
        if (side == WeakSide::XBefore) {
            num_vec = apply(pre_op, apply(x, psi));
        } else {
            num_vec = apply(x, mv);
        }
        rec.value = inner(f.amplitudes, num_vec) / rec.amplitude;
    }
    return rec;
}

WeakDecomposition error_sq_weak(const MeasurementModel& model, const State& psi,
                                const Operator& a, const ProbeBasis& probe) {
    model.require_readouts("error_sq_weak");
    if (model.dim != psi.dim || model.dim != a.dim || model.dim != probe.dim)
        throw DomainError("error_sq_weak: dimension mismatch");
    double floor = table_floor(model, psi, probe);
    WeakDecomposition out;
    for (int m = 0; m < model.n_outcomes(); ++m) {
        const auto& o = model.outcomes[static_cast<size_t>(m)];
        auto mv = apply(o.kraus, psi);
        auto err_vec = apply(o.kraus, shifted(*o.readout, a, psi.amplitudes));
        for (int f = 0; f < static_cast<int>(probe.vectors.size()); ++f) {
            const auto& fv = probe.vectors[static_cast<size_t>(f)].amplitudes;
            WeakCell cell;
            cell.m = m;
            cell.f = f;
            Complex amp = inner(fv, mv);
            cell.prob = std::norm(amp);
            cell.term = std::norm(inner(fv, err_vec));
            cell.defined = cell.prob >= floor;
            if (cell.defined) {
                // A_m - A_w, the quotient form of the same cell.
                cell.weak = inner(fv, apply(o.kraus, apply(a, psi))) / amp;
            }
            out.total += cell.term;
            out.cells.push_back(cell);
        }
    }
    return out;
}

WeakDecomposition disturbance_sq_weak(const MeasurementModel& model, const State& psi,
                                      const Operator& b, const ProbeBasis& probe) {
    if (model.dim != psi.dim || model.dim != b.dim || model.dim != probe.dim)
        throw DomainError("disturbance_sq_weak: dimension mismatch");
    double floor = table_floor(model, psi, probe);
    auto bpsi = apply(b, psi);
    WeakDecomposition out;
    for (int m = 0; m < model.n_outcomes(); ++m) {
        const auto& o = model.outcomes[static_cast<size_t>(m)];
        auto mv = apply(o.kraus, psi);
        auto bm = apply(b, mv);
        auto mb = apply(o.kraus, bpsi);
        std::vector<Complex> diff(bm.size());
        for (size_t i = 0; i < diff.size(); ++i) diff[i] = bm[i] - mb[i];
        for (int f = 0; f < static_cast<int>(probe.vectors.size()); ++f) {
            const auto& fv = probe.vectors[static_cast<size_t>(f)].amplitudes;
            WeakCell cell;
            cell.m = m;
            cell.f = f;
            Complex amp = inner(fv, mv);
            cell.prob = std::norm(amp);
            cell.term = std::norm(inner(fv, diff));
            cell.defined = cell.prob >= floor;
            if (cell.defined) {
                // B_w(after) - B_w(before) for the cell.
                cell.weak = inner(fv, diff) / amp;
            }
            out.total += cell.term;
            out.cells.push_back(cell);
        }
    }
    return out;
}

ConditionalQuasiProb conditional_quasiprob(const MeasurementModel& model, const State& psi,
                                           const Observable& a, const ProbeBasis& probe) {
    if (model.dim != psi.dim || model.dim != a.dim() || model.dim != probe.dim)
        throw DomainError("conditional_quasiprob: dimension mismatch");
    double floor = table_floor(model, psi, probe);
    ConditionalQuasiProb out;
    out.a_values = a.cluster_values;
    for (int m = 0; m < model.n_outcomes(); ++m) {
        const auto& o = model.outcomes[static_cast<size_t>(m)];
        auto mv = apply(o.kraus, psi);
        std::vector<std::vector<Complex>> mproj;
        for (const auto& proj : a.projectors) mproj.push_back(apply(o.kraus, apply(proj, psi)));
        for (int f = 0; f < static_cast<int>(probe.vectors.size()); ++f) {
            const auto& fv = probe.vectors[static_cast<size_t>(f)].amplitudes;
            Complex amp = inner(fv, mv);
            if (std::norm(amp) < floor) {
                ++out.n_undefined;
                continue;
            }
            ConditionalQuasiProb::Cell cell;
            cell.m = m;
            cell.f = f;
            cell.prob = std::norm(amp);
            for (const auto& v : mproj) cell.p_a.push_back(inner(fv, v) / amp);
            out.cells.push_back(std::move(cell));
        }
    }
    return out;
}

double conditional_error_sq(const MeasurementModel& model, const State& psi, const Observable& a,
                            const ProbeBasis& probe, int m, int f) {
    model.require_readouts("conditional_error_sq");
    double floor = table_floor(model, psi, probe);
    Complex amp = cell_amplitude(model, psi, probe, m, f);
    require_defined(amp, floor, m, f, "conditional_error_sq");
    const auto& o = model.outcomes[static_cast<size_t>(m)];
    auto v = shifted(*o.readout, a.op, shifted(*o.readout, a.op, psi.amplitudes));
    Complex num = inner(probe.vectors[static_cast<size_t>(f)].amplitudes, apply(o.kraus, v));
    return (num / amp).real();
}

double weak_value_uncertainty(const MeasurementModel& model, const State& psi, const Observable& a,
                              const ProbeBasis& probe, int m, int f) {
    double floor = table_floor(model, psi, probe);
    Complex amp = cell_amplitude(model, psi, probe, m, f);
    require_defined(amp, floor, m, f, "weak_value_uncertainty");
    const auto& o = model.outcomes[static_cast<size_t>(m)];
    const auto& fv = probe.vectors[static_cast<size_t>(f)].amplitudes;
    auto apsi = apply(a.op, psi);
    Complex aw = inner(fv, apply(o.kraus, apsi)) / amp;
    Complex a2w = inner(fv, apply(o.kraus, apply(a.op, apsi))) / amp;
    return (a2w - aw * aw).real();
}

}  // namespace quasireal
