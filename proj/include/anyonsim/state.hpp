#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "anyonsim/layout.hpp"
#include "anyonsim/operator.hpp"

namespace anyonsim::hilbert {

struct StateVector {
    SubsystemLayout layout;
    Eigen::VectorXcd amplitudes;

    StateVector(SubsystemLayout l, Eigen::VectorXcd a);

    /// Tensor product of per-subsystem factors, layout order.
    static StateVector product(const SubsystemLayout& layout,
                               const std::vector<Eigen::VectorXcd>& factors);
    /// Computational basis state |digits>.
    static StateVector basis(const SubsystemLayout& layout, const std::vector<int>& digits);

    double norm() const { return amplitudes.norm(); }
    StateVector normalized() const;
};

// common single-qubit kets
Eigen::Vector2cd ket0();
Eigen::Vector2cd ket1();
Eigen::Vector2cd ket_plus();
Eigen::Vector2cd ket_minus();

/// |<a|b>|^2; layouts must match.
double fidelity(const StateVector& a, const StateVector& b);

/// Apply `op` on `targets` (first target slowest). Unitarity is enforced
/// unless `allow_nonunitary`; the input is not modified.
StateVector apply(const LinearOperator& op, const std::vector<int>& targets,
                  const StateVector& state, bool allow_nonunitary = false);

enum class MeasureKind { postselect_plus, sample, both_branches };

struct MeasurePolicy {
    MeasureKind kind = MeasureKind::both_branches;
    std::uint64_t seed = 0;
    static MeasurePolicy postselect_plus() { return {MeasureKind::postselect_plus, 0}; }
    static MeasurePolicy sample(std::uint64_t seed) { return {MeasureKind::sample, seed}; }
    static MeasurePolicy both_branches() { return {MeasureKind::both_branches, 0}; }
};

struct MeasuredBranch {
    int outcome = 0;         // +1 or -1
    double probability = 0;  // Born probability of this outcome
    StateVector state;       // normalized projection, subsystem kept in place
};

struct XMeasurement {
    std::vector<MeasuredBranch> branches;  // one entry, or two for both_branches
    const MeasuredBranch& branch(int outcome) const;
};

/// X measurement on a dimension-2 subsystem. Branches with Born probability
/// below 1e-14 are an error when requested and are dropped from both_branches.
XMeasurement measure_x(int subsystem, const StateVector& state, MeasurePolicy policy);

/// Partial trace over everything but subsystem 0 (gate-level cavity).
Eigen::Matrix2cd reduced_cavity_state(const StateVector& state);

/// Contract subsystem k against a fixed single-subsystem ket (used to peel a
/// measured cavity off a product state); renormalizes.
StateVector drop_subsystem(const StateVector& state, int k, const Eigen::VectorXcd& onto);

}  // namespace anyonsim::hilbert
