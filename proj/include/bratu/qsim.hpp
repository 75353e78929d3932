#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bratu::qsim {

/// Exact statevector of an n-qubit register. Qubit 0 is the most
/// significant bit of the basis-state index, so |q0 q1 ... q_{n-1}> has
/// index (q0 << (n-1)) | ... | q_{n-1}.
struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amplitudes;

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
};

enum class GateKind { RX, RY, RZ, CNOT };

struct Gate {
    GateKind kind = GateKind::RY;
    double angle = 0.0;   // radians; unused for CNOT
    int target = 0;
    int control = -1;     // CNOT only

    static Gate rx(int target, double angle) { return {GateKind::RX, angle, target, -1}; }
    static Gate ry(int target, double angle) { return {GateKind::RY, angle, target, -1}; }
    static Gate rz(int target, double angle) { return {GateKind::RZ, angle, target, -1}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, 0.0, target, control}; }

    /// The gate that undoes this one (rotations negate the angle, CNOT is
    /// its own inverse).
    Gate inverse() const;
};

inline constexpr int kMaxQubits = 24;

/// |0>^(x)n. Rejects n outside [1, kMaxQubits].
StateVector new_zero_state(int n_qubits);

/// 2x2 unitary of a single-qubit rotation, half-angle convention:
/// R(theta) = exp(-i * theta * P / 2) for P in {X, Y, Z}.
struct RotationMatrix {
    std::complex<double> m00, m01, m10, m11;
};
RotationMatrix rotation_matrix(GateKind kind, double angle);

/// In-place cores used by hot loops. Callers that need pure-function
/// behaviour use apply_gate below.
void apply_rotation_in_place(StateVector& state, const RotationMatrix& m, int target);
void apply_cnot_in_place(StateVector& state, int control, int target);
void apply_gate_in_place(StateVector& state, const Gate& gate);

/// Value-in/value-out gate application; norm is preserved.
StateVector apply_gate(StateVector state, const Gate& gate);
StateVector apply_circuit(StateVector state, std::span<const Gate> gates);

/// <Z_qubit> = sum_b (-1)^bit(b, qubit) |amp_b|^2, always in [-1, 1].
double expectation_z(const StateVector& state, int qubit);

} // namespace bratu::qsim
