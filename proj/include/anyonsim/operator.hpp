#pragma once

#include <Eigen/Dense>
#include <complex>
#include <tuple>
#include <vector>

#include "anyonsim/layout.hpp"

namespace anyonsim::hilbert {

/// Dense complex square operator with an optional Hermiticity tag.
/// Tagging as Hermitian is checked (max |M - M^dag| entry < 1e-12).
struct LinearOperator {
    Eigen::MatrixXcd matrix;
    bool hermitian = false;

    LinearOperator() = default;
    static LinearOperator dense(Eigen::MatrixXcd m, bool hermitian = false);
    static LinearOperator identity(int dim);

    int dim() const { return static_cast<int>(matrix.rows()); }
};

bool is_unitary(const Eigen::MatrixXcd& m, double tol = 1e-10);
bool is_hermitian(const Eigen::MatrixXcd& m, double tol = 1e-12);

// Pauli and Hadamard 2x2 blocks, basis {|0>, |1>}.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd hadamard();

/// Operator acting as `op` on `targets` (first target slowest) and identity
/// elsewhere, in layout order.
LinearOperator embed(const LinearOperator& op, const std::vector<int>& targets,
                     const SubsystemLayout& layout);

/// Coordinate-sparse view of an operator's nonzero entries.
std::vector<std::tuple<int, int, std::complex<double>>> coo_entries(
    const LinearOperator& op, double tol = 0.0);

}  // namespace anyonsim::hilbert
