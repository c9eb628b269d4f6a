#pragma once

#include <string>
#include <vector>

namespace anyonsim::hilbert {

struct Subsystem {
    std::string label;
    int dim = 0;
};

/// Ordered list of subsystem descriptors for a hybrid register.
/// Amplitude ordering is row-major with subsystem 0 slowest, so for the
/// gate-level register index 0 is the cavity and 1..6 are the spins.
class SubsystemLayout {
  public:
    explicit SubsystemLayout(std::vector<Subsystem> subsystems);

    /// Cavity as a two-level system plus six spins, all dimension 2.
    static SubsystemLayout gate_level();
    /// One truncated bosonic mode (dimension n_max+1) plus one qubit.
    static SubsystemLayout cavity_qubit(int n_max);
    /// Six spins only (post-measurement toric register).
    static SubsystemLayout six_spins();

    int size() const { return static_cast<int>(subs_.size()); }
    int dim(int k) const;
    const std::string& label(int k) const;
    long total_dim() const { return total_; }
    long stride(int k) const;

    std::vector<int> unpack(long index) const;
    long pack(const std::vector<int>& digits) const;

    bool all_qubits() const;
    bool operator==(const SubsystemLayout& other) const;

  private:
    std::vector<Subsystem> subs_;
    std::vector<long> strides_;
    long total_ = 1;
};

}  // namespace anyonsim::hilbert
