#pragma once

#include <string>
#include <vector>

#include "anyonsim/gates.hpp"
#include "anyonsim/layout.hpp"
#include "anyonsim/state.hpp"

namespace anyonsim::gates {

struct Step {
    enum class Kind { gate, measurement, reset };
    Kind kind = Kind::gate;
    std::string name;          // gate name, or "measure_x" / "reset"
    std::vector<int> targets;  // control first
    double param = 0.0;        // u_theta angle
    bool has_param = false;
    std::string annotation;    // measurement policy or reset ket name

    static Step gate(std::string name, std::vector<int> targets);
    static Step gate(std::string name, std::vector<int> targets, double param);
    static Step measurement(int target, std::string policy);
    static Step reset(int target, std::string ket);
};

/// Ordered gate/measurement/reset sequence over a fixed layout, serializable
/// to a line-based text format (one step per line) for golden-file tests.
struct Circuit {
    hilbert::SubsystemLayout layout;
    std::vector<Step> steps;

    explicit Circuit(hilbert::SubsystemLayout l) : layout(std::move(l)) {}

    std::string serialize() const;
    static Circuit parse(const std::string& text, const hilbert::SubsystemLayout& layout);
};

/// Dense matrix for a named gate step ("uc", "ux", "uz", "h", "x", "z",
/// "zhalf", "utheta").
GateOp gate_for_step(const Step& step);

}  // namespace anyonsim::gates
