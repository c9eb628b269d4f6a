#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "anyonsim/operator.hpp"
#include "anyonsim/state.hpp"

namespace anyonsim::pulse {

using complexd = std::complex<double>;

/// Physical drive/coupling parameters, angular frequencies in rad/time.
/// Dimensionless mode (g = 1) is the default for tests; only the ratios
/// delta/g and Delta/Omega matter for the physics being validated.
struct PulseParams {
    double omega_r = 0;   // cavity frequency
    double nu = 0;        // qubit splitting
    double g = 1;         // qubit-cavity coupling
    double omega_d = 0;   // drive frequency
    complexd epsilon = 0; // drive amplitude
    int n_max = 4;        // Fock cutoff

    void validate() const;  // g > 0, n_max >= 1

    double delta() const { return omega_r - omega_d; }
    double big_delta() const { return nu - omega_d; }  // nu - omega_d (the paper's "omega_dr" read as omega_d)
    complexd rabi() const;                             // Omega = 2 g epsilon / delta
    double chi() const;                                // Delta + g^2/delta + |Omega|^2/(2 Delta)

    hilbert::SubsystemLayout layout() const;  // cavity(n_max+1) x qubit
};

/// Params tuned for a dispersive x rotation: omega_d = 0, delta = ratio*g,
/// Delta = -g^2/delta (zeroes the dressed sigma_z), |Omega| = rabi.
PulseParams make_dispersive_x_params(double g, double delta_over_g, double rabi, int n_max = 4);
/// Params for a dispersive z rotation at given Delta and Omega.
PulseParams make_dispersive_z_params(double g, double delta_over_g, double big_delta,
                                     double rabi, int n_max = 4);
/// Resonant undriven params (nu = omega_r) for the iswap oscillation.
PulseParams make_resonant_params(double g, double omega_r, int n_max = 4);

// Hamiltonian builders. Qubit basis is {|g>, |e>} with sigma_z = diag(-1, +1),
// cavity is the slow factor.
hilbert::LinearOperator build_jc(const PulseParams& p);
hilbert::LinearOperator build_drive(const PulseParams& p, double t);
hilbert::LinearOperator build_displaced(const PulseParams& p, complexd alpha);
hilbert::LinearOperator build_rotating(const PulseParams& p);
hilbert::LinearOperator build_dispersive_x(const PulseParams& p);
hilbert::LinearOperator build_dispersive_z(const PulseParams& p);

/// Regime warnings the caller declared away (delta/g < 5 for the x gate,
/// |Delta/Omega| < 5 for the z gate). Empty when the regime holds.
std::vector<std::string> dispersive_warnings(const PulseParams& p);

/// Closed-form displacement alpha(t) for constant epsilon, alpha(0) = 0:
/// -(eps/delta)(e^{-i w_d t} - e^{-i w_r t}); secular form -i eps t e^{-i w_r t}
/// on resonance (delta = 0).
complexd classical_alpha(const PulseParams& p, double t);
/// Independent RK4 integration of i d(alpha)/dt = w_r alpha + eps e^{-i w_d t}.
complexd classical_alpha_ode(const PulseParams& p, double t, double step);

enum class Method { matrix_exponential, fixed_step_rk4 };

struct EvolutionSpec {
    hilbert::LinearOperator hamiltonian;  // Hermitian
    double duration = 0;
    Method method = Method::matrix_exponential;
    double step = 0;  // for fixed_step_rk4; requires step <= duration/10

    void validate() const;
};

/// psi(t) = exp(-i H t) psi(0).
hilbert::StateVector evolve(const EvolutionSpec& spec, const hilbert::StateVector& state);

/// RK4 for time-dependent Hamiltonians (lab-frame drive, displaced frame).
hilbert::StateVector evolve_td(const std::function<Eigen::MatrixXcd(double)>& hamiltonian,
                               double duration, double step, const hilbert::StateVector& state);

struct GateKind {
    enum class Type { x_rotation, z_rotation, iswap };
    Type type = Type::iswap;
    double angle = 0;
    static GateKind x_rotation(double angle) { return {Type::x_rotation, angle}; }
    static GateKind z_rotation(double angle) { return {Type::z_rotation, angle}; }
    static GateKind iswap() { return {Type::iswap, 0}; }
};

/// angle/|Omega| for x, angle/|chi| for z, pi/(2g) for iswap.
double gate_time(const GateKind& kind, const PulseParams& p);

enum class Subspace { single_excitation, full };

/// Reference unitary for pulse_gate_fidelity. For iswap this uses the
/// coupling sign of the Eq.-(1)-style Hamiltonian (+i sin theta block).
hilbert::LinearOperator ideal_gate(const GateKind& kind, const PulseParams& p,
                                   Subspace subspace = Subspace::single_excitation);

/// Average gate overlap |tr(U_ideal^dag U_pulse)| / d on the chosen subspace,
/// frame phases aligned before comparison. For x/z rotations the subspace is
/// the cavity-vacuum qubit block; for iswap it is the zero/one-excitation
/// block (3-dim) or the full {g0,g1,e0,e1} block as a leakage diagnostic.
double pulse_gate_fidelity(const hilbert::LinearOperator& ideal, const PulseParams& p,
                           const GateKind& kind, Subspace subspace = Subspace::single_excitation);

/// <sigma_z>(t) under the full rotating-frame Hamiltonian from |e,0>; returns
/// the time of the first local minimum (pi-pulse extraction).
double first_sigma_z_minimum(const PulseParams& p, double t_max, double dt);

/// Qubit Bloch vector <sigma_x,y,z> by partial trace.
std::array<double, 3> qubit_bloch(const hilbert::StateVector& state);

}  // namespace anyonsim::pulse
