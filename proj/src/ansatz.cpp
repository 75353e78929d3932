#include "bratu/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bratu::ansatz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;

constexpr qsim::GateKind kRotationKinds[3] = {qsim::GateKind::RX, qsim::GateKind::RY,
                                              qsim::GateKind::RZ};

} // namespace

CircuitWeights CircuitWeights::zeros(int layers, int qubits) {
    if (layers < 0 || qubits < 1 || qubits > qsim::kMaxQubits) {
        throw std::invalid_argument("bad weight shape " + std::to_string(layers) + "x" +
                                    std::to_string(qubits) + "x3");
    }
    CircuitWeights w;
    w.layers = layers;
    w.qubits = qubits;
    w.angles.assign(static_cast<std::size_t>(layers) * qubits * 3, 0.0);
    return w;
}

std::size_t CircuitWeights::flat_index(int layer, int qubit, int rotation) const {
    return (static_cast<std::size_t>(layer) * qubits + qubit) * 3 + rotation;
}

double& CircuitWeights::at(int layer, int qubit, int rotation) {
    return angles[flat_index(layer, qubit, rotation)];
}

double CircuitWeights::at(int layer, int qubit, int rotation) const {
    return angles[flat_index(layer, qubit, rotation)];
}

void CircuitWeights::validate() const {
    if (layers < 0 || qubits < 1 || qubits > qsim::kMaxQubits ||
        angles.size() != static_cast<std::size_t>(layers) * qubits * 3) {
        throw std::invalid_argument("weight tensor shape/storage mismatch");
    }
    for (double a : angles) {
        if (!std::isfinite(a)) throw std::invalid_argument("non-finite weight entry");
    }
}

std::array<double, 3> encode_features(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("encoding input x=" + std::to_string(x) +
                                " outside [0, 1]");
    }
    return {std::sin(kPi * x), std::exp(-10.0 * (x - 0.5) * (x - 0.5)),
            std::sin(3.0 * kPi * x)};
}

std::vector<qsim::Gate> build_circuit(double x, const CircuitWeights& weights) {
    weights.validate();
    const auto phi = encode_features(x);
    const int n = weights.qubits;
    std::vector<qsim::Gate> gates;
    gates.reserve(n + static_cast<std::size_t>(weights.layers) * (3 * n + (n > 1 ? n : 0)));
    for (int q = 0; q < n; ++q) {
        gates.push_back(qsim::Gate::ry(q, phi[q % 3]));
    }
    for (int l = 0; l < weights.layers; ++l) {
        for (int q = 0; q < n; ++q) {
            gates.push_back(qsim::Gate::rx(q, weights.at(l, q, 0)));
            gates.push_back(qsim::Gate::ry(q, weights.at(l, q, 1)));
            gates.push_back(qsim::Gate::rz(q, weights.at(l, q, 2)));
        }
        if (n > 1) {
            for (int q = 0; q < n; ++q) {
                gates.push_back(qsim::Gate::cnot(q, (q + 1) % n));
            }
        }
    }
    return gates;
}

double evaluate_uq(double x, const CircuitWeights& weights) {
    return CircuitEvaluator(weights).value(x);
}

std::vector<double> gradient_uq(double x, const CircuitWeights& weights) {
    CircuitEvaluator eval(weights);
    std::vector<double> grad(eval.parameter_count());
    eval.value_and_gradient(x, grad);
    return grad;
}

CircuitEvaluator::CircuitEvaluator(const CircuitWeights& weights)
    : layers_(weights.layers), qubits_(weights.qubits), angles_(weights.angles) {
    weights.validate();
    rot_.reserve(angles_.size());
    for (int l = 0; l < layers_; ++l) {
        for (int q = 0; q < qubits_; ++q) {
            for (int r = 0; r < 3; ++r) {
                rot_.push_back(qsim::rotation_matrix(kRotationKinds[r],
                                                     weights.at(l, q, r)));
            }
        }
    }
}

qsim::StateVector CircuitEvaluator::embed_state(double x) const {
    const auto phi = encode_features(x);
    qsim::StateVector state = qsim::new_zero_state(qubits_);
    for (int q = 0; q < qubits_; ++q) {
        apply_rotation_in_place(state,
                                qsim::rotation_matrix(qsim::GateKind::RY, phi[q % 3]), q);
    }
    return state;
}

void CircuitEvaluator::apply_layer(qsim::StateVector& state, int layer) const {
    const std::size_t base = static_cast<std::size_t>(layer) * qubits_ * 3;
    for (int q = 0; q < qubits_; ++q) {
        for (int r = 0; r < 3; ++r) {
            apply_rotation_in_place(state, rot_[base + q * 3 + r], q);
        }
    }
    apply_ring(state);
}

void CircuitEvaluator::apply_layer_shifted(qsim::StateVector& state, int layer, int qubit,
                                           int rotation,
                                           const qsim::RotationMatrix& sub) const {
    const std::size_t base = static_cast<std::size_t>(layer) * qubits_ * 3;
    for (int q = 0; q < qubits_; ++q) {
        for (int r = 0; r < 3; ++r) {
            const std::size_t p = base + q * 3 + r;
            apply_rotation_in_place(state, (q == qubit && r == rotation) ? sub : rot_[p],
                                    q);
        }
    }
    apply_ring(state);
}

void CircuitEvaluator::apply_ring(qsim::StateVector& state) const {
    if (qubits_ <= 1) return;
    for (int q = 0; q < qubits_; ++q) {
        qsim::apply_cnot_in_place(state, q, (q + 1) % qubits_);
    }
}

double CircuitEvaluator::value(double x) const {
    qsim::StateVector state = embed_state(x);
    for (int l = 0; l < layers_; ++l) apply_layer(state, l);
    return qsim::expectation_z(state, qubits_ - 1);
}

double CircuitEvaluator::value_and_gradient(double x, std::span<double> grad) const {
    if (grad.size() != rot_.size()) {
        throw std::invalid_argument("gradient span has wrong size");
    }
    // Prefix states: checkpoints[l] is the state after the embedding and l
    // full layers; a shifted parameter in layer l only needs layers l..L-1.
    std::vector<qsim::StateVector> checkpoints(layers_ + 1);
    checkpoints[0] = embed_state(x);
    for (int l = 0; l < layers_; ++l) {
        checkpoints[l + 1] = checkpoints[l];
        apply_layer(checkpoints[l + 1], l);
    }

    qsim::StateVector scratch;
    for (int l = 0; l < layers_; ++l) {
        for (int q = 0; q < qubits_; ++q) {
            for (int r = 0; r < 3; ++r) {
                const std::size_t p = (static_cast<std::size_t>(l) * qubits_ + q) * 3 + r;
                double shifted[2];
                for (int sgn = 0; sgn < 2; ++sgn) {
                    const double a = angles_[p] + (sgn == 0 ? kHalfPi : -kHalfPi);
                    const auto sub = qsim::rotation_matrix(kRotationKinds[r], a);
                    scratch = checkpoints[l];
                    apply_layer_shifted(scratch, l, q, r, sub);
                    for (int l2 = l + 1; l2 < layers_; ++l2) apply_layer(scratch, l2);
                    shifted[sgn] = qsim::expectation_z(scratch, qubits_ - 1);
                }
                grad[p] = (shifted[0] - shifted[1]) / 2.0;
            }
        }
    }
    return qsim::expectation_z(checkpoints[layers_], qubits_ - 1);
}

} // namespace bratu::ansatz
