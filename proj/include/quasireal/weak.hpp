#pragma once

#include "quasireal/measurement.hpp"

namespace quasireal {

/// Relative floor below which a post-selected cell counts as undefined:
/// p(m,f) must be at least this fraction of the largest cell probability.
inline constexpr double kCellFloorRelative = 1e-12;

enum class WeakSide {
    XBefore,  // <f| M X |psi> / <f| M |psi>
    XAfter,   // <f| X M |psi> / <f| M |psi>
};

struct WeakValueRecord {
    std::string m;
    int f = 0;
    Complex amplitude;  // <f| M |psi>
    double prob = 0.0;  // |amplitude|^2
    Complex value;      // meaningful only when defined
    bool defined = false;
};

/// Post-selected weak value of X for one Kraus operator and one final state.
/// abs_floor is the absolute probability below which the cell is undefined.
WeakValueRecord weak_value(const State& psi, const Operator& pre_op, const Operator& x,
                           const State& f, WeakSide side = WeakSide::XBefore,
                           double abs_floor = kZeroProbabilityFloor);

/// One (m, f) cell of a weak-value decomposition.
struct WeakCell {
    int m = 0;
    int f = 0;
    double prob = 0.0;
    Complex weak;  // weak value (X-before for errors; after-minus-before not stored)
    double term = 0.0;  // multiplied-through contribution |<f| M (...)|psi>|^2
    bool defined = false;
};

struct WeakDecomposition {
    double total = 0.0;
    std::vector<WeakCell> cells;
};

/// Error decomposition over (m, f) cells; total equals ozawa_error_sq for a
/// complete probe. Cells are evaluated in multiplied-through form
/// |<f|M_m(A_m - A)|psi>|^2, so unreachable cells contribute exactly 0.
WeakDecomposition error_sq_weak(const MeasurementModel& model, const State& psi,
                                const Operator& a, const ProbeBasis& probe);

/// Disturbance decomposition; cells are |<f|(B M_m - M_m B)|psi>|^2.
WeakDecomposition disturbance_sq_weak(const MeasurementModel& model, const State& psi,
                                      const Operator& b, const ProbeBasis& probe);

/// Complex conditional probabilities p(a|m,f) over spectral clusters of A.
/// Undefined cells are omitted; n_undefined counts them.
struct ConditionalQuasiProb {
    struct Cell {
        int m = 0;
        int f = 0;
        double prob = 0.0;
        std::vector<Complex> p_a;  // one entry per spectral cluster
    };
    std::vector<Cell> cells;
    int n_undefined = 0;
    std::vector<double> a_values;
};

ConditionalQuasiProb conditional_quasiprob(const MeasurementModel& model, const State& psi,
                                           const Observable& a, const ProbeBasis& probe);

/// Re[<f|M_m (A_m - A)^2|psi> / <f|M_m|psi>]; may be negative.
/// Throws on undefined cells.
double conditional_error_sq(const MeasurementModel& model, const State& psi, const Observable& a,
                            const ProbeBasis& probe, int m, int f);

/// Re[(A^2)_w - (A_w)^2] for the (m,f)-post-selected weak values.
double weak_value_uncertainty(const MeasurementModel& model, const State& psi, const Observable& a,
                              const ProbeBasis& probe, int m, int f);

}  // namespace quasireal
