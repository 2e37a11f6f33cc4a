#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qspectra/boolfn.hpp"

namespace qspectra {

using cxd = std::complex<double>;

inline constexpr int kMaxQubits = 22;

// Dense statevector over `qubits` qubits. Qubit 0 is the most significant
// position of the basis label, so qubit q occupies bit (qubits - 1 - q) of
// the amplitude index.
struct StateVector {
    int qubits = 0;
    std::vector<cxd> amps;

    uint64_t bit_of(int qubit) const { return uint64_t{1} << (qubits - 1 - qubit); }
    double norm_sq() const;
};

// |0...0> on the given number of qubits.
StateVector new_state(int qubits);

struct Gate {
    enum class Kind { H, X, CNOT, MCX, Ry, BitOracle, ControlledBlock };

    Kind kind = Kind::H;
    int target = -1;
    std::vector<int> controls;  // CNOT/MCX/Ry
    double angle = 0.0;         // Ry
    TruthTable fn;              // BitOracle
    std::vector<int> inputs;    // BitOracle: inputs[0] carries x1
    int block_control = -1;     // ControlledBlock
    int block_polarity = 0;
    std::vector<Gate> body;

    static Gate h(int q);
    static Gate x(int q);
    static Gate cnot(int control, int target);
    static Gate mcx(std::vector<int> controls, int target);
    static Gate ry(int target, double angle, std::vector<int> controls = {});
    // Bit-flip oracle: |x>|a> -> |x>|a xor (1 - f(x))/2>.
    static Gate bit_oracle(TruthTable f, std::vector<int> inputs, int target);
    // Applies the body only where the control qubit equals polarity.
    static Gate controlled_block(int control, int polarity, std::vector<Gate> body);
};

using GateList = std::vector<Gate>;

struct QubitRole {
    std::string name;
    std::vector<int> qubits;
};

struct Circuit {
    int qubits = 0;
    GateList gates;
    std::vector<QubitRole> roles;
    std::vector<int> measured;  // default measurement subset
    int oracle_queries = 0;     // black-box query count declared by the builder

    const std::vector<int>& role(const std::string& name) const;
};

// Gate application is exact linear action; `ctrl_mask`/`ctrl_val` restrict
// it to amplitudes whose masked bits equal the value (used for controlled
// blocks and controlled circuit powers).
void apply(StateVector& s, const Gate& g, uint64_t ctrl_mask = 0, uint64_t ctrl_val = 0);
void apply_inverse(StateVector& s, const Gate& g, uint64_t ctrl_mask = 0, uint64_t ctrl_val = 0);

void apply_circuit(StateVector& s, const Circuit& c, uint64_t ctrl_mask = 0, uint64_t ctrl_val = 0);
void apply_circuit_inverse(StateVector& s, const Circuit& c, uint64_t ctrl_mask = 0,
                           uint64_t ctrl_val = 0);
StateVector run(const Circuit& c);

// CCX cascade CNOT^{r_i,q_i}_{kickback}: with the kickback qubit in |->,
// multiplies |u>_R |x>_Q by (-1)^{u.x}.
GateList dc_operator(const std::vector<int>& r_qubits, const std::vector<int>& q_qubits,
                     int kickback);

// Applied to |0^n> on `qubits`, produces the equal superposition of all
// weight-k basis states, with O(n^2) gates.
GateList dicke_prep(int n, int k, const std::vector<int>& qubits);

struct MeasurementDistribution {
    std::vector<int> subset;            // measured qubits; subset[0] prints first
    std::map<uint64_t, double> probs;   // outcome -> probability, zeros omitted

    int width() const { return static_cast<int>(subset.size()); }
    double prob(uint64_t outcome) const;
    double prob(const std::string& bits) const;
};

// Exact marginal over the subset, no sampling.
MeasurementDistribution measure_distribution(const StateVector& s, const std::vector<int>& subset);

// Seeded, reproducible multinomial draw; counts sum to shots.
std::map<uint64_t, uint64_t> sample(const MeasurementDistribution& d, uint64_t shots,
                                    uint64_t seed);

// Outcome key for the subset bits of a basis index, subset[0] first.
uint64_t extract_bits(uint64_t index, const std::vector<int>& subset, int total_qubits);

}  // namespace qspectra
