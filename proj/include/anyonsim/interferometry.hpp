#pragma once

#include <json.hpp>

#include "anyonsim/toric.hpp"

namespace anyonsim::interf {

enum class Variant { braiding, control_no_e_pair, halt_after_creation };
enum class Phase { plus, minus, indeterminate };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& s);
const char* phase_name(Phase p);

struct InterferometryResult {
    hilbert::StateVector final_state;   // cavity + six spins
    Eigen::Matrix2cd cavity_reduced;
    double fidelity_minus = 0;
    double fidelity_plus = 0;
    Phase extracted_phase = Phase::indeterminate;
    gates::Circuit transcript;
    bool control_run = false;
    int oracle_cavity_x = 0;  // tableau-certified <X_cav>: -1 braiding, +1 control, 0 halt

    nlohmann::json to_json() const;
};

/// Fig-3 sequence on a prepared ground state: sigma_z on role 3 (skipped for
/// the control variant), cavity to |+>, U_x on role 4, then the loop
/// U_x(6), U_x(5), U_x(3), U_x(4) (skipped when halting after creation),
/// cavity readout by partial trace. Runs the stabilizer oracle alongside.
InterferometryResult run_interferometry(const toric::MinimalLattice& lattice, Variant variant,
                                        const toric::PreparedState& ground);
/// Convenience overload preparing the + branch internally.
InterferometryResult run_interferometry(const toric::MinimalLattice& lattice, Variant variant);

/// Phase from the fidelity thresholds: -1 iff fidelity_minus > 0.999,
/// +1 iff fidelity_plus > 0.999, else indeterminate.
Phase braiding_phase(const InterferometryResult& result);

}  // namespace anyonsim::interf
