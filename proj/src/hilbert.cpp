#include "quasireal/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace quasireal {

State make_state(const std::vector<Complex>& amplitudes, double* norm_out) {
    double n2 = 0.0;
    for (const auto& a : amplitudes) n2 += std::norm(a);
    double n = std::sqrt(n2);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("make_state: zero vector cannot be normalized");
    }
    State s;
    s.dim = static_cast<int>(amplitudes.size());
    s.amplitudes.reserve(amplitudes.size());
    for (const auto& a : amplitudes) s.amplitudes.push_back(a / n);
    if (norm_out) *norm_out = n;
    return s;
}

Operator identity(int dim) {
    Operator op(dim);
    for (int i = 0; i < dim; ++i) op.at(i, i) = 1.0;
    return op;
}

Operator zero_operator(int dim) { return Operator(dim); }

Operator adjoint(const Operator& op) {
    Operator out(op.dim);
    for (int i = 0; i < op.dim; ++i)
        for (int j = 0; j < op.dim; ++j) out.at(i, j) = std::conj(op.at(j, i));
    return out;
}

Operator multiply(const Operator& a, const Operator& b) {
    if (a.dim != b.dim) throw DomainError("multiply: dimension mismatch");
    Operator out(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        for (int k = 0; k < a.dim; ++k) {
            Complex aik = a.at(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < a.dim; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

Operator add(const Operator& a, const Operator& b) {
    if (a.dim != b.dim) throw DomainError("add: dimension mismatch");
    Operator out(a.dim);
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = a.entries[i] + b.entries[i];
    return out;
}

Operator subtract(const Operator& a, const Operator& b) {
    if (a.dim != b.dim) throw DomainError("subtract: dimension mismatch");
    Operator out(a.dim);
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = a.entries[i] - b.entries[i];
    return out;
}

Operator scale(Complex c, const Operator& a) {
    Operator out(a.dim);
    for (size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = c * a.entries[i];
    return out;
}

std::vector<Complex> apply(const Operator& op, const std::vector<Complex>& v) {
    if (op.dim != static_cast<int>(v.size())) throw DomainError("apply: dimension mismatch");
    std::vector<Complex> out(v.size());
    for (int i = 0; i < op.dim; ++i) {
        Complex acc{};
        for (int j = 0; j < op.dim; ++j) acc += op.at(i, j) * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

std::vector<Complex> apply(const Operator& op, const State& psi) {
    return apply(op, psi.amplitudes);
}

Complex inner(const std::vector<Complex>& phi, const std::vector<Complex>& psi) {
    if (phi.size() != psi.size()) throw DomainError("inner: dimension mismatch");
    Complex acc{};
    for (size_t i = 0; i < phi.size(); ++i) acc += std::conj(phi[i]) * psi[i];
    return acc;
}

Complex inner(const State& phi, const State& psi) {
    return inner(phi.amplitudes, psi.amplitudes);
}

double norm(const std::vector<Complex>& v) {
    double n2 = 0.0;
    for (const auto& a : v) n2 += std::norm(a);
    return std::sqrt(n2);
}

Complex expectation(const Operator& x, const State& psi) {
    return inner(psi.amplitudes, apply(x, psi));
}

double hermiticity_residual(const Operator& op) {
    double r = 0.0;
    for (int i = 0; i < op.dim; ++i)
        for (int j = 0; j < op.dim; ++j)
            r = std::max(r, std::abs(op.at(i, j) - std::conj(op.at(j, i))));
    return r;
}

double max_abs_diff(const Operator& a, const Operator& b) {
    double r = 0.0;
    for (size_t i = 0; i < a.entries.size(); ++i) r = std::max(r, std::abs(a.entries[i] - b.entries[i]));
    return r;
}

namespace {

double off_diagonal_frobenius(const Operator& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

double frobenius(const Operator& a) {
    double s = 0.0;
    for (const auto& e : a.entries) s += std::norm(e);
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The pivot phase is factored
// out so the remaining 2x2 problem is real symmetric.
void jacobi_rotate(Operator& a, Operator& v, int p, int q) {
    Complex z = a.at(p, q);
    double r = std::abs(z);
    if (r == 0.0) return;
    Complex phase = z / r;  // a(p,q) = r * phase
    double app = a.at(p, p).real();
    double aqq = a.at(q, q).real();
    double tau = (app - aqq) / (2.0 * r);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    double c = 1.0 / std::sqrt(1.0 + t * t);
    double s = t * c;

    // U = diag(1, conj(phase)) * G(c, s) in the (p,q) plane.
    Complex up_p = c, up_q = std::conj(phase) * s;
    Complex uq_p = -s, uq_q = std::conj(phase) * c;

    int n = a.dim;
    // A <- U† A U: update columns then rows.
    for (int k = 0; k < n; ++k) {
        Complex akp = a.at(k, p), akq = a.at(k, q);
        a.at(k, p) = akp * up_p + akq * up_q;
        a.at(k, q) = akp * uq_p + akq * uq_q;
    }
    for (int k = 0; k < n; ++k) {
        Complex apk = a.at(p, k), aqk = a.at(q, k);
        a.at(p, k) = std::conj(up_p) * apk + std::conj(up_q) * aqk;
        a.at(q, k) = std::conj(uq_p) * apk + std::conj(uq_q) * aqk;
    }
    for (int k = 0; k < n; ++k) {
        Complex vkp = v.at(k, p), vkq = v.at(k, q);
        v.at(k, p) = vkp * up_p + vkq * up_q;
        v.at(k, q) = vkp * uq_p + vkq * uq_q;
    }
    a.at(p, q) = 0.0;
    a.at(q, p) = 0.0;
}

}  // namespace

Eigensystem eigh(const Operator& op, double degeneracy_tol) {
    double herm = hermiticity_residual(op);
    if (herm > 1e-10) {
        std::ostringstream msg;
        msg << "eigh: operator is not Hermitian, max |X - X^dagger| = " << herm;
        throw DomainError(msg.str());
    }
    int n = op.dim;
    // Symmetrize to kill sub-tolerance asymmetry before iterating.
    Operator a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, j) = 0.5 * (op.at(i, j) + std::conj(op.at(j, i)));
    Operator v = identity(n);

    double fro = frobenius(a);
    double target = 1e-14 * fro;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_frobenius(a) <= target) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

    Eigensystem sys;
    sys.eigenvalues.reserve(static_cast<size_t>(n));
    sys.eigenvectors.reserve(static_cast<size_t>(n));
    for (int idx : order) {
        sys.eigenvalues.push_back(a.at(idx, idx).real());
        State col;
        col.dim = n;
        col.amplitudes.resize(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) col.amplitudes[static_cast<size_t>(k)] = v.at(k, idx);
        sys.eigenvectors.push_back(std::move(col));
    }

    // Cluster by transitive closure of pairwise closeness on the sorted list.
    double range = sys.eigenvalues.back() - sys.eigenvalues.front();
    double tol = degeneracy_tol * std::max(range, 1.0e-300);
    std::vector<int> current{0};
    for (int i = 1; i < n; ++i) {
        if (sys.eigenvalues[static_cast<size_t>(i)] - sys.eigenvalues[static_cast<size_t>(i - 1)] <= tol) {
            current.push_back(i);
        } else {
            sys.clusters.push_back(current);
            current = {i};
        }
    }
    sys.clusters.push_back(current);
    return sys;
}

Observable::Observable(const Operator& hermitian, double degeneracy_tol) : op(hermitian) {
    Eigensystem sys = eigh(hermitian, degeneracy_tol);
    for (const auto& cluster : sys.clusters) {
        double mean = 0.0;
        Operator proj(op.dim);
        for (int idx : cluster) {
            mean += sys.eigenvalues[static_cast<size_t>(idx)];
            const auto& vec = sys.eigenvectors[static_cast<size_t>(idx)].amplitudes;
            for (int i = 0; i < op.dim; ++i)
                for (int j = 0; j < op.dim; ++j)
                    proj.at(i, j) += vec[static_cast<size_t>(i)] * std::conj(vec[static_cast<size_t>(j)]);
        }
        cluster_values.push_back(mean / static_cast<double>(cluster.size()));
        projectors.push_back(std::move(proj));
    }
}

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

}  // namespace

State random_state(int dim, std::uint64_t seed) {
    if (dim < 1) throw DomainError("random_state: dim must be >= 1");
    auto rng = seeded_engine(seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(static_cast<size_t>(dim));
    for (auto& a : amps) {
        double re = gauss(rng);
        double im = gauss(rng);
        a = Complex(re, im);
    }
    return make_state(amps);
}

Operator random_unitary(int dim, std::uint64_t seed) {
    if (dim < 1) throw DomainError("random_unitary: dim must be >= 1");
    auto rng = seeded_engine(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    // Columns of a complex Ginibre matrix.
    std::vector<std::vector<Complex>> cols(static_cast<size_t>(dim),
                                           std::vector<Complex>(static_cast<size_t>(dim)));
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i)
            cols[static_cast<size_t>(j)][static_cast<size_t>(i)] = Complex(gauss(rng), gauss(rng));

    // Modified Gram-Schmidt; the implied triangular factor has positive real
    // diagonal, which yields the Haar measure.
    for (int j = 0; j < dim; ++j) {
        auto& vj = cols[static_cast<size_t>(j)];
        for (int k = 0; k < j; ++k) {
            const auto& qk = cols[static_cast<size_t>(k)];
            Complex proj = inner(qk, vj);
            for (int i = 0; i < dim; ++i) vj[static_cast<size_t>(i)] -= proj * qk[static_cast<size_t>(i)];
        }
        double n = norm(vj);
        if (!(n > 0.0)) throw DomainError("random_unitary: degenerate Gaussian draw");
        for (auto& x : vj) x /= n;
    }

    Operator u(dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) u.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return u;
}

Operator random_hermitian(int dim, std::uint64_t seed) {
    auto rng = seeded_engine(seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Operator h(dim);
    for (int i = 0; i < dim; ++i) {
        h.at(i, i) = gauss(rng);
        for (int j = i + 1; j < dim; ++j) {
            Complex z(gauss(rng), gauss(rng));
            z *= std::sqrt(0.5);
            h.at(i, j) = z;
            h.at(j, i) = std::conj(z);
        }
    }
    return h;
}

}  // namespace quasireal
