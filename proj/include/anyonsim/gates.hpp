#pragma once

#include <Eigen/Dense>
#include <string>

#include "anyonsim/operator.hpp"

namespace anyonsim::gates {

/// Ideal gate: a named unitary with arity 1 or 2. Targets are supplied at
/// application time, control first for controlled gates.
struct GateOp {
    std::string name;
    hilbert::LinearOperator matrix;
    int arity = 1;

    static GateOp make(std::string name, Eigen::MatrixXcd m);
};

/// Two-body oscillation gate, basis {|g0>,|g1>,|e0>,|e1>} (qubit letter slow,
/// cavity occupation fast): identity on |g0>,|e1>, cos/-i sin block on
/// {|g1>,|e0>}.
GateOp u_theta(double theta);

/// diag(e^{-i pi/4}, e^{+i pi/4}).
GateOp z_half();

/// Controlled-phase-plus-swap gate: |00>->|00>, |01>->|10>, |10>->|01>,
/// |11>->-|11>. Construction verifies the (I x Z_half) U(pi/2) (I x Z_half)
/// composition up to global phase and aborts loudly on failure.
GateOp u_c();

/// U_z = |0><0| (x) sigma_z + |1><1| (x) I, control = cavity.
GateOp controlled_z_on_spin();

/// U_x = |0><0| (x) sigma_x + |1><1| (x) I; verified equal to the spin-side
/// Hadamard conjugation of U_z.
GateOp controlled_x_on_spin();

GateOp pauli_x_gate();
GateOp pauli_z_gate();
GateOp hadamard_gate();

/// 1 - |tr(U^dag V)| / d; zero iff U = e^{i phi} V.
double unitary_distance_up_to_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

}  // namespace anyonsim::gates
