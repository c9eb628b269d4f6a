#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "anyonsim/gates.hpp"
#include "anyonsim/pauli.hpp"
#include "anyonsim/state.hpp"

namespace anyonsim::oracle {

/// Conjugation images of the single-qubit X_j / Z_j generators through a
/// Clifford gate, generated from the dense matrix at construction time.
struct CliffordTable {
    std::string name;
    int arity = 1;
    std::vector<PauliString> x_images;  // image of X_j, j local
    std::vector<PauliString> z_images;  // image of Z_j

    static CliffordTable from_gate(const gates::GateOp& gate);
    /// Image of an arbitrary arity-local Pauli (exact phase).
    PauliString image(const PauliString& local) const;
};

struct MeasureOutcome {
    int outcome = 0;             // +1 / -1
    bool deterministic = false;  // true iff the Pauli commuted with all stabilizers
};

/// Aaronson–Gottesman stabilizer/destabilizer tableau; phases tracked exactly
/// in {+1,-1,+i,-i}, no floating point anywhere in this module.
class StabilizerTableau {
  public:
    /// One character per qubit: '0' -> |0>, '1' -> |1>, '+' -> |+>, '-' -> |->.
    static StabilizerTableau from_basis(const std::string& kets);
    /// Completes destabilizers for n independent commuting generators.
    static StabilizerTableau from_generators(const std::vector<PauliString>& gens);

    int n() const { return n_; }
    const std::vector<PauliString>& stabilizers() const { return stab_; }
    const std::vector<PauliString>& destabilizers() const { return destab_; }

    void apply_clifford(const CliffordTable& gate, const std::vector<int>& targets);

    /// Standard tableau measurement of a Pauli. A random outcome requires
    /// either a postselect value or an RNG.
    MeasureOutcome measure_pauli(const PauliString& p, std::optional<int> postselect,
                                 std::mt19937_64* rng = nullptr);

    /// +1/-1 if +-p is in the stabilizer group, 0 otherwise.
    int expectation(const PauliString& p) const;

    /// The unique stabilizer state (global phase fixed canonically); n <= 12.
    hilbert::StateVector to_statevector() const;

    std::string serialize() const;  // one stabilizer row per line
    void check_invariants() const;

    /// Unique canonical generating set (symplectic RREF, X block then Z block).
    static std::vector<PauliString> canonical_generators(std::vector<PauliString> gens);

  private:
    StabilizerTableau() = default;
    int n_ = 0;
    std::vector<PauliString> stab_, destab_;
};

/// <state|P|state> for an all-qubit register; exact bit-mask application.
double pauli_expectation(const hilbert::StateVector& state, const PauliString& p);

/// P|state>.
hilbert::StateVector pauli_apply(const PauliString& p, const hilbert::StateVector& state);

}  // namespace anyonsim::oracle
