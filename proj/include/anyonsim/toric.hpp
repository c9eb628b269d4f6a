#pragma once

#include <array>
#include <vector>

#include <json.hpp>

#include "anyonsim/circuit.hpp"
#include "anyonsim/state.hpp"
#include "anyonsim/tableau.hpp"

namespace anyonsim::toric {

/// Six-spin minimal lattice bookkeeping. Interferometry roles (the labels of
/// Fig-3-style protocols) are mapped to physical spins by a permutation, and
/// a local Hadamard frame layer completes the preparation circuit's graph
/// state to the toric frame. Both are calibrated once and shipped as
/// constants; see calibrated_default().
struct MinimalLattice {
    std::array<int, 6> role_to_phys{};        // [role-1] -> physical spin 1..6
    std::vector<int> frame_hadamards;         // physical spins, applied after the fusion measurement
    std::vector<std::vector<int>> vertex_ops;    // X-type declared supports, role coordinates
    std::vector<std::vector<int>> plaquette_ops; // Z-type declared supports, role coordinates

    static MinimalLattice calibrated_default();
    void validate() const;

    int phys(int role) const;
    /// X-type declared operator as a 6-spin Pauli string (physical labels).
    oracle::PauliString vertex_op_string(int k) const;
    oracle::PauliString plaquette_op_string(int k) const;
    /// The braiding-loop residue X on roles {3,5,6}, physical labels.
    oracle::PauliString loop_op_string() const;
};

struct PreparedState {
    hilbert::StateVector state;                    // six spins, post-measurement
    gates::Circuit transcript;                     // full preparation sequence
    int outcome = 0;                               // fusion X-measurement outcome
    double probability = 0;                        // Born probability of that outcome
    std::vector<oracle::PauliString> generators;   // canonical six, physical labels
    oracle::StabilizerTableau tableau;             // six-spin oracle state
    std::vector<double> step_fidelities;           // statevector/tableau agreement per step

    nlohmann::json to_json() const;
};

/// Runs the fixed preparation circuit (U^c on cavity and spins 2,1,3,6,5,4,6,
/// then the cavity X measurement, then the frame layer) on the statevector and
/// the stabilizer oracle in lockstep. Returns one branch per the policy
/// (postselect_plus / sample) or both (+ first).
std::vector<PreparedState> prepare_ground_state(const MinimalLattice& lattice,
                                                hilbert::MeasurePolicy policy);
/// The postselected + branch.
PreparedState prepare_default(const MinimalLattice& lattice);

/// <psi|P|psi> for each Pauli string (physical labels).
std::vector<double> stabilizer_expectations(const hilbert::StateVector& state,
                                            const std::vector<oracle::PauliString>& ops);

/// sigma_z on a spin (role label): creates an electric defect pair.
hilbert::StateVector create_e_pair(const hilbert::StateVector& state, int spin_role,
                                   const MinimalLattice& lattice);
/// sigma_x on a spin (role label): creates a magnetic defect pair.
hilbert::StateVector create_m_pair(const hilbert::StateVector& state, int spin_role,
                                   const MinimalLattice& lattice);

enum class DefectKind { electric, magnetic };

/// Cavity-controlled partial excitation: prepares the cavity in
/// cos(chi)|1> + sin(chi)|0> with eta = tan(chi), then applies the controlled
/// U_x/U_z; eta = 1 is the full controlled operation on |+>, eta = 0 leaves
/// the state unchanged up to phase. Returns the 7-qubit state.
hilbert::StateVector conditional_excitation(const hilbert::StateVector& spins, int spin_role,
                                            DefectKind kind, double eta,
                                            const MinimalLattice& lattice);

}  // namespace anyonsim::toric
