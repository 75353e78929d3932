#pragma once

#include "bratu/qsim.hpp"

#include <array>
#include <span>
#include <vector>

namespace bratu::ansatz {

/// Trainable rotation angles, shape layers x qubits x 3 (RX, RY, RZ).
/// Flattened enumeration: index = layer*(qubits*3) + qubit*3 + rotation,
/// the same order used by the weight-dump CSV.
struct CircuitWeights {
    int layers = 0;
    int qubits = 0;
    std::vector<double> angles;

    static CircuitWeights zeros(int layers, int qubits);

    std::size_t size() const { return angles.size(); }
    std::size_t flat_index(int layer, int qubit, int rotation) const;
    double& at(int layer, int qubit, int rotation);
    double at(int layer, int qubit, int rotation) const;
    void validate() const;
};

/// phi(x) = [sin(pi x), exp(-10 (x-1/2)^2), sin(3 pi x)]; x must lie in [0,1].
std::array<double, 3> encode_features(double x);

/// Embedding RY(phi[i mod 3]) on each qubit, then per layer RX/RY/RZ on
/// each qubit followed by a CNOT ring q -> (q+1) mod n (skipped for n=1).
std::vector<qsim::Gate> build_circuit(double x, const CircuitWeights& weights);

/// u_q(x; theta) = <Z_{n-1}> of the built circuit applied to |0...0>.
double evaluate_uq(double x, const CircuitWeights& weights);

/// Parameter-shift gradient d u_q / d theta_p, flattened like the weights.
/// Embedding angles are inputs, not parameters, and are not differentiated.
std::vector<double> gradient_uq(double x, const CircuitWeights& weights);

/// Caches the compiled rotation matrices of a fixed weight tensor so that
/// u_q and its parameter-shift gradient can be evaluated repeatedly over
/// many x without rebuilding the circuit. Read-only after construction.
class CircuitEvaluator {
public:
    explicit CircuitEvaluator(const CircuitWeights& weights);

    double value(double x) const;

    /// Fills grad (size layers*qubits*3) with the parameter-shift gradient
    /// and returns u_q(x). Shares the layer-prefix states between shifts.
    double value_and_gradient(double x, std::span<double> grad) const;

    int layers() const { return layers_; }
    int qubits() const { return qubits_; }
    std::size_t parameter_count() const { return rot_.size(); }

private:
    qsim::StateVector embed_state(double x) const;
    void apply_layer(qsim::StateVector& state, int layer) const;
    void apply_layer_shifted(qsim::StateVector& state, int layer, int qubit,
                             int rotation, const qsim::RotationMatrix& sub) const;
    void apply_ring(qsim::StateVector& state) const;

    int layers_ = 0;
    int qubits_ = 0;
    std::vector<double> angles_;
    std::vector<qsim::RotationMatrix> rot_;  // one per trainable angle
};

} // namespace bratu::ansatz
