#include "quasireal/quasiprob.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quasireal {

namespace {

// Shared builder: fills a table or streams a weighted total over
// p(a,m,f) = <f|M_m Pi_a|psi> <psi|M_m^dagger|f> with f from an arbitrary
// orthonormal family.
struct Axes {
    const MeasurementModel& model;
    const State& psi;
    const Observable& a;
    const std::vector<State>& final_vectors;
};

template <typename CellFn>
void for_each_cell(const Axes& ax, CellFn&& fn) {
    for (int m = 0; m < ax.model.n_outcomes(); ++m) {
        const auto& kraus = ax.model.outcomes[static_cast<size_t>(m)].kraus;
        auto mv = apply(kraus, ax.psi);
        std::vector<std::vector<Complex>> mproj;
        mproj.reserve(ax.a.projectors.size());
        for (const auto& proj : ax.a.projectors)
            mproj.push_back(apply(kraus, apply(proj, ax.psi)));
        for (int f = 0; f < static_cast<int>(ax.final_vectors.size()); ++f) {
            const auto& fv = ax.final_vectors[static_cast<size_t>(f)].amplitudes;
            Complex bra = std::conj(inner(fv, mv));  // <psi|M^dagger|f>
            for (int a = 0; a < static_cast<int>(mproj.size()); ++a) {
                Complex p = inner(fv, mproj[static_cast<size_t>(a)]) * bra;
                fn(a, m, f, p);
            }
        }
    }
}

QuasiDistribution build_table(const Axes& ax) {
    size_t n_a = ax.a.projectors.size();
    size_t n_m = static_cast<size_t>(ax.model.n_outcomes());
    size_t n_f = ax.final_vectors.size();
    size_t cells = n_a * n_m * n_f;
    if (cells > kQuasiTableCellBudget) {
        std::ostringstream msg;
        msg << "joint_quasiprob: table of " << cells << " cells exceeds budget of "
            << kQuasiTableCellBudget << "; use the streaming totals";
        throw DomainError(msg.str());
    }
    QuasiDistribution dist;
    dist.a_values = ax.a.cluster_values;
    for (const auto& o : ax.model.outcomes) dist.m_labels.push_back(o.label);
    dist.n_f = static_cast<int>(n_f);
    dist.table.assign(cells, Complex{});
    for_each_cell(ax, [&](int a, int m, int f, Complex p) {
        dist.table[(static_cast<size_t>(a) * n_m + m) * n_f + f] = p;
    });
    return dist;
}

}  // namespace

QuasiDistribution joint_quasiprob(const MeasurementModel& model, const State& psi,
                                  const Observable& a, const ProbeBasis& probe) {
    if (model.dim != psi.dim || model.dim != a.dim() || model.dim != probe.dim)
        throw DomainError("joint_quasiprob: dimension mismatch");
    return build_table(Axes{model, psi, a, probe.vectors});
}

double error_sq_quasiprob(const MeasurementModel& model, const State& psi, const Observable& a,
                          const ProbeBasis& probe) {
    model.require_readouts("error_sq_quasiprob");
    if (model.dim != psi.dim || model.dim != a.dim() || model.dim != probe.dim)
        throw DomainError("error_sq_quasiprob: dimension mismatch");
    double total = 0.0;
    for_each_cell(Axes{model, psi, a, probe.vectors}, [&](int ai, int m, int, Complex p) {
        double am = *model.outcomes[static_cast<size_t>(m)].readout;
        double aa = a.cluster_values[static_cast<size_t>(ai)];
        total += p.real() * (am - aa) * (am - aa);
    });
    return total;
}

double disturbance_sq_quasiprob(const MeasurementModel& model, const State& psi,
                                const Observable& b) {
    if (model.dim != psi.dim || model.dim != b.dim())
        throw DomainError("disturbance_sq_quasiprob: dimension mismatch");
    // Final axis fixed to the eigenbasis of B; use cluster-resolved final
    // projectors via their eigenvectors.
    Eigensystem sys = eigh(b.op);
    double total = 0.0;
    // b_f values follow the eigenvector list; map each to its cluster value.
    std::vector<double> f_values(sys.eigenvalues.size());
    {
        size_t c = 0;
        for (const auto& cluster : sys.clusters) {
            for (int idx : cluster) f_values[static_cast<size_t>(idx)] = b.cluster_values[c];
            ++c;
        }
    }
    for_each_cell(Axes{model, psi, b, sys.eigenvectors}, [&](int bi, int, int bf, Complex p) {
        double d = f_values[static_cast<size_t>(bf)] - b.cluster_values[static_cast<size_t>(bi)];
        total += p.real() * d * d;
    });
    return total;
}

QuasiDistribution disturbance_quasiprob_table(const MeasurementModel& model, const State& psi,
                                              const Observable& b) {
    Eigensystem sys = eigh(b.op);
    QuasiDistribution dist = build_table(Axes{model, psi, b, sys.eigenvectors});
    dist.f_values.resize(sys.eigenvalues.size());
    size_t c = 0;
    for (const auto& cluster : sys.clusters) {
        for (int idx : cluster) dist.f_values[static_cast<size_t>(idx)] = b.cluster_values[c];
        ++c;
    }
    return dist;
}

NegativityReport negativity_report(const QuasiDistribution& dist) {
    NegativityReport rep;
    rep.min_real = 0.0;
    std::vector<NegativityReport::Cell> cells;
    size_t n_m = dist.m_labels.size();
    for (size_t a = 0; a < dist.a_values.size(); ++a) {
        for (size_t m = 0; m < n_m; ++m) {
            for (int f = 0; f < dist.n_f; ++f) {
                Complex p = dist.at(static_cast<int>(a), static_cast<int>(m), f);
                rep.min_real = std::min(rep.min_real, p.real());
                if (p.real() < 0.0) rep.negative_mass += -p.real();
                rep.max_abs_imag = std::max(rep.max_abs_imag, std::abs(p.imag()));
                cells.push_back({static_cast<int>(a), static_cast<int>(m), f, p});
            }
        }
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& x, const auto& y) { return x.p.real() < y.p.real(); });
    for (size_t i = 0; i < cells.size() && i < 5; ++i) {
        if (cells[i].p.real() >= 0.0) break;
        rep.most_negative.push_back(cells[i]);
    }
    return rep;
}

}  // namespace quasireal
