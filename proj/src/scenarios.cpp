#include "quasireal/scenarios.hpp"

#include <cmath>

#include "quasireal/quasiprob.hpp"
#include "quasireal/weak.hpp"

namespace quasireal {

Operator pauli_x() {
    Operator op(2);
    op.at(0, 1) = 1.0;
    op.at(1, 0) = 1.0;
    return op;
}

Operator pauli_y() {
    Operator op(2);
    op.at(0, 1) = Complex(0.0, -1.0);
    op.at(1, 0) = Complex(0.0, 1.0);
    return op;
}

Operator pauli_z() {
    Operator op(2);
    op.at(0, 0) = 1.0;
    op.at(1, 1) = -1.0;
    return op;
}

Scenario erhart_qubit(double phi) {
    Scenario sc;
    sc.name = "erhart";
    sc.parameters["phi"] = phi;
    sc.psi = make_state({Complex(1.0), Complex(0.0)});
    sc.a = pauli_x();
    sc.b = pauli_y();

    Operator detuned = add(scale(std::cos(phi), pauli_x()), scale(std::sin(phi), pauli_y()));
    Observable obs(detuned);
    sc.model = projective_measurement(obs);  // readouts are the +-1 eigenvalues
    sc.probe = eigenbasis_probe(pauli_y());
    return sc;
}

Scenario anomalous_weak_value(double s) {
    if (s == 1.0)
        throw DomainError("anomalous_weak_value: s = 1 gives zero post-selection probability");
    Scenario sc;
    sc.name = "anomalous";
    sc.parameters["s"] = s;
    sc.psi = make_state({Complex(1.0), Complex(1.0)});
    sc.a = pauli_z();
    sc.b = pauli_x();

    MeasurementModel model;
    model.dim = 2;
    model.outcomes.push_back({"id", identity(2), 1.0});
    sc.model = model;

    // Probe row 0 is the post-selection state |0> - s|1> (normalized); row 1
    // completes the basis.
    State f0 = make_state({Complex(1.0), Complex(-s)});
    State f1 = make_state({Complex(std::conj(f0[1])), Complex(-std::conj(f0[0]))});
    sc.probe = make_probe({f0, f1});
    return sc;
}

Scenario discriminating_fixture() {
    Scenario sc;
    sc.name = "discriminating";
    std::uint64_t seed = kDiscriminatingSeed;
    sc.psi = random_state(3, seed);
    sc.a = random_hermitian(3, seed + 1);
    sc.b = random_hermitian(3, seed + 2);
    sc.model = random_measurement(3, 2, seed + 3);
    OptimalReadouts opt = hall_optimal_readouts(sc.model, sc.psi, sc.a);
    sc.model = sc.model.with_readouts(opt.values);
    sc.probe = eigenbasis_probe(sc.b);
    return sc;
}

SweepRow evaluate_scenario(const Scenario& sc, double param_value) {
    SweepRow row;
    row.phi = param_value;
    row.report = ozawa_inequality(sc.model, sc.psi, sc.a, sc.b);

    Observable obs_a(sc.a);
    Observable obs_b(sc.b);
    double eps2 = ozawa_error_sq(sc.model, sc.psi, sc.a);
    double eta2 = ozawa_disturbance_sq(sc.model, sc.psi, sc.b);
    double eps2_weak = error_sq_weak(sc.model, sc.psi, sc.a, sc.probe).total;
    double eta2_weak = disturbance_sq_weak(sc.model, sc.psi, sc.b, sc.probe).total;
    double eps2_qp = error_sq_quasiprob(sc.model, sc.psi, obs_a, sc.probe);
    double eta2_qp = disturbance_sq_quasiprob(sc.model, sc.psi, obs_b);

    row.max_xdev = std::max({std::abs(eps2 - eps2_weak), std::abs(eps2 - eps2_qp),
                             std::abs(eta2 - eta2_weak), std::abs(eta2 - eta2_qp)});
    return row;
}

std::vector<SweepRow> sweep(const std::string& family, const std::vector<double>& grid) {
    if (grid.empty()) return {};
    if (family != "erhart") throw DomainError("sweep: unknown scenario family '" + family + "'");
    std::vector<SweepRow> rows;
    rows.reserve(grid.size());
    for (double phi : grid) rows.push_back(evaluate_scenario(erhart_qubit(phi), phi));
    return rows;
}

}  // namespace quasireal
