#include "anyonsim/layout.hpp"

#include <set>
#include <stdexcept>

namespace anyonsim::hilbert {

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> subsystems) : subs_(std::move(subsystems)) {
    if (subs_.empty()) throw std::invalid_argument("layout: empty subsystem list");
    std::set<std::string> labels;
    for (const auto& s : subs_) {
        if (s.dim <= 0) throw std::invalid_argument("layout: nonpositive dimension for " + s.label);
        if (!labels.insert(s.label).second)
            throw std::invalid_argument("layout: duplicate label " + s.label);
    }
    strides_.assign(subs_.size(), 1);
    total_ = 1;
    for (int k = size() - 1; k >= 0; --k) {
        strides_[k] = total_;
        total_ *= subs_[k].dim;
    }
}

SubsystemLayout SubsystemLayout::gate_level() {
    std::vector<Subsystem> subs{{"cavity", 2}};
    for (int s = 1; s <= 6; ++s) subs.push_back({"spin" + std::to_string(s), 2});
    return SubsystemLayout(subs);
}

SubsystemLayout SubsystemLayout::cavity_qubit(int n_max) {
    if (n_max < 1) throw std::invalid_argument("layout: n_max must be >= 1");
    return SubsystemLayout({{"cavity", n_max + 1}, {"qubit", 2}});
}

SubsystemLayout SubsystemLayout::six_spins() {
    std::vector<Subsystem> subs;
    for (int s = 1; s <= 6; ++s) subs.push_back({"spin" + std::to_string(s), 2});
    return SubsystemLayout(subs);
}

int SubsystemLayout::dim(int k) const {
    if (k < 0 || k >= size()) throw std::out_of_range("layout: subsystem index");
    return subs_[k].dim;
}

const std::string& SubsystemLayout::label(int k) const {
    if (k < 0 || k >= size()) throw std::out_of_range("layout: subsystem index");
    return subs_[k].label;
}

long SubsystemLayout::stride(int k) const {
    if (k < 0 || k >= size()) throw std::out_of_range("layout: subsystem index");
    return strides_[k];
}

std::vector<int> SubsystemLayout::unpack(long index) const {
    std::vector<int> digits(size());
    for (int k = 0; k < size(); ++k) {
        digits[k] = static_cast<int>((index / strides_[k]) % subs_[k].dim);
    }
    return digits;
}

long SubsystemLayout::pack(const std::vector<int>& digits) const {
    if (static_cast<int>(digits.size()) != size())
        throw std::invalid_argument("layout: digit count mismatch");
    long index = 0;
    for (int k = 0; k < size(); ++k) {
        if (digits[k] < 0 || digits[k] >= subs_[k].dim)
            throw std::out_of_range("layout: digit out of range");
        index += digits[k] * strides_[k];
    }
    return index;
}

bool SubsystemLayout::all_qubits() const {
    for (const auto& s : subs_)
        if (s.dim != 2) return false;
    return true;
}

bool SubsystemLayout::operator==(const SubsystemLayout& other) const {
    if (size() != other.size()) return false;
    for (int k = 0; k < size(); ++k)
        if (subs_[k].dim != other.subs_[k].dim || subs_[k].label != other.subs_[k].label)
            return false;
    return true;
}

}  // namespace anyonsim::hilbert
