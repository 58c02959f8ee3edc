#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quasireal {

using Complex = std::complex<double>;

/// Raised when an input violates a physical or structural precondition.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Unit-norm complex amplitude vector.
struct State {
    int dim = 0;
    std::vector<Complex> amplitudes;

    Complex operator[](int i) const { return amplitudes[static_cast<size_t>(i)]; }
};

/// Dense square complex matrix, row-major.
struct Operator {
    int dim = 0;
    std::vector<Complex> entries;

    Operator() = default;
    explicit Operator(int d) : dim(d), entries(static_cast<size_t>(d) * d) {}

    Complex& at(int i, int j) { return entries[static_cast<size_t>(i) * dim + j]; }
    const Complex& at(int i, int j) const { return entries[static_cast<size_t>(i) * dim + j]; }
};

/// Spectral decomposition of a Hermitian operator. Eigenvalues ascending,
/// eigenvectors orthonormal, clusters group indices of coinciding eigenvalues.
struct Eigensystem {
    std::vector<double> eigenvalues;
    std::vector<State> eigenvectors;
    std::vector<std::vector<int>> clusters;
};

// --- construction ---

/// Normalizes the given amplitudes into a State. Throws DomainError on the
/// zero vector. The applied normalization factor is returned through *norm
/// when non-null.
State make_state(const std::vector<Complex>& amplitudes, double* norm = nullptr);

Operator identity(int dim);
Operator zero_operator(int dim);

// --- algebra ---

Operator adjoint(const Operator& op);
Operator multiply(const Operator& a, const Operator& b);
Operator add(const Operator& a, const Operator& b);
Operator subtract(const Operator& a, const Operator& b);
Operator scale(Complex c, const Operator& a);
std::vector<Complex> apply(const Operator& op, const State& psi);
std::vector<Complex> apply(const Operator& op, const std::vector<Complex>& v);

/// ⟨phi|psi⟩ with the left argument conjugated.
Complex inner(const std::vector<Complex>& phi, const std::vector<Complex>& psi);
Complex inner(const State& phi, const State& psi);
double norm(const std::vector<Complex>& v);

/// ⟨psi|X|psi⟩ (real part is the expectation value for Hermitian X).
Complex expectation(const Operator& x, const State& psi);

/// Max-abs deviation of op from Hermiticity, max |X - X†|.
double hermiticity_residual(const Operator& op);

double max_abs_diff(const Operator& a, const Operator& b);

// --- spectral decomposition ---

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Throws DomainError when the input deviates from Hermiticity by more
/// than 1e-10 (max-abs). degeneracy_tol is relative to the spectral range.
Eigensystem eigh(const Operator& op, double degeneracy_tol = 1e-9);

/// Hermitian operator with cached spectral structure: one projector and one
/// eigenvalue per degenerate cluster.
struct Observable {
    Operator op;
    std::vector<double> cluster_values;
    std::vector<Operator> projectors;

    Observable() = default;
    explicit Observable(const Operator& hermitian, double degeneracy_tol = 1e-9);

    int dim() const { return op.dim; }
    Operator squared() const { return multiply(op, op); }
};

// --- seeded random instances ---

/// Uniform state on the complex unit sphere; fully determined by seed.
State random_state(int dim, std::uint64_t seed);

/// Haar-distributed unitary: orthonormalization of a seeded complex Gaussian
/// matrix, triangular factor normalized to positive real diagonal.
Operator random_unitary(int dim, std::uint64_t seed);

/// Random Hermitian operator with entries of order 1; determined by seed.
Operator random_hermitian(int dim, std::uint64_t seed);

}  // namespace quasireal
