#pragma once

#include <string>
#include <vector>

#include "anyonsim/report.hpp"
#include "anyonsim/toric.hpp"

namespace anyonsim {

/// Full invariant suite: gate unitarity, the Eq.-style u_c composition,
/// Clifford conjugation tables, preparation/oracle agreement, the three
/// interferometry variants, and the Fock-cutoff convergence probe.
std::vector<report::InvariantCheck> run_selfcheck(const toric::MinimalLattice& lattice,
                                                  int n_max = 4);

}  // namespace anyonsim
