#pragma once

#include <cstdint>

#include "qspectra/qsim.hpp"

namespace qspectra {

// Measuring the query register gives P(x) = W_f(x)^2 / 2^{2n}.
Circuit deutsch_jozsa(const TruthTable& f);

// H U_{f1} H U_{f2} H on the query register; P(0^n) = Phi_{f1,f2}^2.
Circuit forrelation2_circuit(const TruthTable& f1, const TruthTable& f2);

// Three-query three-fold circuit; P(0^n) = Phi_{f1,f2,f3}^2.
Circuit a33(const TruthTable& f1, const TruthTable& f2, const TruthTable& f3);

// Two-query three-fold circuit with a driving qubit measured in the
// Hadamard basis; P(driving = 0) = (1 + Phi_{f1,f2,f3}) / 2.
Circuit a32(const TruthTable& f1, const TruthTable& f2, const TruthTable& f3);

// Preparation applied to the R register of algorithm1.
struct CnSpec {
    enum class Kind { Point, UniformH, Dicke };

    Kind kind = Kind::UniformH;
    uint32_t u = 0;
    int dicke_weight = 0;

    static CnSpec point(uint32_t u);
    static CnSpec uniform();
    static CnSpec dicke(int weight);
};

// The tweaked three-fold circuit with a superposed linear function: the
// pre-measurement amplitude of |u>_R |0^n>_Q is alpha_u C_{f,g}(u) / 2^n,
// where alpha_u is the amplitude C_n leaves on |u>.
Circuit algorithm1(const CnSpec& cn, const TruthTable& f, const TruthTable& g);

// Oracle gates in the circuit, counting through controlled blocks.
int count_oracle_gates(const Circuit& c);
int count_oracle_gates(const GateList& gates);

}  // namespace qspectra
