#include "bratu/qsim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bratu::qsim {

namespace {

void check_qubit(const StateVector& state, int qubit, const char* what) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(qubit) +
                                " out of range for " + std::to_string(state.n_qubits) +
                                " qubits");
    }
}

} // namespace

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

Gate Gate::inverse() const {
    Gate g = *this;
    if (kind != GateKind::CNOT) g.angle = -angle;
    return g;
}

StateVector new_zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
    StateVector state;
    state.n_qubits = n_qubits;
    state.amplitudes.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    state.amplitudes[0] = {1.0, 0.0};
    return state;
}

RotationMatrix rotation_matrix(GateKind kind, double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
    case GateKind::RX:
        return {{c, 0.0}, {0.0, -s}, {0.0, -s}, {c, 0.0}};
    case GateKind::RY:
        return {{c, 0.0}, {-s, 0.0}, {s, 0.0}, {c, 0.0}};
    case GateKind::RZ:
        return {{c, -s}, {0.0, 0.0}, {0.0, 0.0}, {c, s}};
    case GateKind::CNOT:
        break;
    }
    throw std::invalid_argument("CNOT has no rotation matrix");
}

void apply_rotation_in_place(StateVector& state, const RotationMatrix& m, int target) {
    check_qubit(state, target, "target");
    const std::size_t dim = state.dim();
    const std::size_t mask = std::size_t{1} << (state.n_qubits - 1 - target);
    auto* amp = state.amplitudes.data();
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const std::size_t j = i | mask;
        const std::complex<double> a0 = amp[i];
        const std::complex<double> a1 = amp[j];
        amp[i] = m.m00 * a0 + m.m01 * a1;
        amp[j] = m.m10 * a0 + m.m11 * a1;
    }
}

void apply_cnot_in_place(StateVector& state, int control, int target) {
    check_qubit(state, control, "control");
    check_qubit(state, target, "target");
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    const std::size_t dim = state.dim();
    const std::size_t cmask = std::size_t{1} << (state.n_qubits - 1 - control);
    const std::size_t tmask = std::size_t{1} << (state.n_qubits - 1 - target);
    auto* amp = state.amplitudes.data();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amp[i], amp[i | tmask]);
        }
    }
}

void apply_gate_in_place(StateVector& state, const Gate& gate) {
    if (gate.kind == GateKind::CNOT) {
        apply_cnot_in_place(state, gate.control, gate.target);
    } else {
        apply_rotation_in_place(state, rotation_matrix(gate.kind, gate.angle), gate.target);
    }
}

StateVector apply_gate(StateVector state, const Gate& gate) {
    apply_gate_in_place(state, gate);
    return state;
}

StateVector apply_circuit(StateVector state, std::span<const Gate> gates) {
    for (const Gate& g : gates) apply_gate_in_place(state, g);
    return state;
}

double expectation_z(const StateVector& state, int qubit) {
    check_qubit(state, qubit, "qubit");
    const std::size_t mask = std::size_t{1} << (state.n_qubits - 1 - qubit);
    double plus = 0.0, minus = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const double p = std::norm(state.amplitudes[i]);
        if (i & mask) minus += p; else plus += p;
    }
    return plus - minus;
}

} // namespace bratu::qsim
