#include "qspectra/circuits.hpp"

#include <numeric>
#include <utility>

namespace qspectra {

namespace {

std::vector<int> iota_range(int first, int count) {
    std::vector<int> v(count);
    std::iota(v.begin(), v.end(), first);
    return v;
}

void check_same_n(const TruthTable& a, const TruthTable& b) {
    if (a.n != b.n) fail(Errc::size_mismatch, "oracle functions have different variable counts");
}

void push_hadamards(GateList& gates, const std::vector<int>& qubits) {
    for (int q : qubits) gates.push_back(Gate::h(q));
}

// X then H: turns |0> into |->.
void push_minus_prep(GateList& gates, int q) {
    gates.push_back(Gate::x(q));
    gates.push_back(Gate::h(q));
}

}  // namespace

Circuit deutsch_jozsa(const TruthTable& f) {
    const int n = f.n;
    Circuit c;
    c.qubits = n + 1;
    std::vector<int> query = iota_range(0, n);
    c.roles = {{"query", query}, {"kickback", {n}}};
    c.measured = query;
    c.oracle_queries = 1;
    push_minus_prep(c.gates, n);
    push_hadamards(c.gates, query);
    c.gates.push_back(Gate::bit_oracle(f, query, n));
    push_hadamards(c.gates, query);
    return c;
}

Circuit forrelation2_circuit(const TruthTable& f1, const TruthTable& f2) {
    check_same_n(f1, f2);
    const int n = f1.n;
    Circuit c;
    c.qubits = n + 1;
    std::vector<int> query = iota_range(0, n);
    c.roles = {{"query", query}, {"kickback", {n}}};
    c.measured = query;
    c.oracle_queries = 2;
    push_minus_prep(c.gates, n);
    push_hadamards(c.gates, query);
    c.gates.push_back(Gate::bit_oracle(f1, query, n));
    push_hadamards(c.gates, query);
    c.gates.push_back(Gate::bit_oracle(f2, query, n));
    push_hadamards(c.gates, query);
    return c;
}

Circuit a33(const TruthTable& f1, const TruthTable& f2, const TruthTable& f3) {
    check_same_n(f1, f2);
    check_same_n(f1, f3);
    const int n = f1.n;
    Circuit c;
    c.qubits = n + 1;
    std::vector<int> query = iota_range(0, n);
    c.roles = {{"query", query}, {"kickback", {n}}};
    c.measured = query;
    c.oracle_queries = 3;
    push_minus_prep(c.gates, n);
    push_hadamards(c.gates, query);
    c.gates.push_back(Gate::bit_oracle(f1, query, n));
    push_hadamards(c.gates, query);
    c.gates.push_back(Gate::bit_oracle(f2, query, n));
    push_hadamards(c.gates, query);
    c.gates.push_back(Gate::bit_oracle(f3, query, n));
    push_hadamards(c.gates, query);
    return c;
}

Circuit a32(const TruthTable& f1, const TruthTable& f2, const TruthTable& f3) {
    check_same_n(f1, f2);
    check_same_n(f1, f3);
    const int n = f1.n;
    Circuit c;
    c.qubits = n + 2;
    const int driving = 0;
    std::vector<int> query = iota_range(1, n);
    const int kickback = n + 1;
    c.roles = {{"driving", {driving}}, {"query", query}, {"kickback", {kickback}}};
    c.measured = {driving};
    c.oracle_queries = 2;

    c.gates.push_back(Gate::h(driving));
    push_minus_prep(c.gates, kickback);

    GateList branch0;
    push_hadamards(branch0, query);
    branch0.push_back(Gate::bit_oracle(f1, query, kickback));
    push_hadamards(branch0, query);
    branch0.push_back(Gate::bit_oracle(f2, query, kickback));
    push_hadamards(branch0, query);
    c.gates.push_back(Gate::controlled_block(driving, 0, std::move(branch0)));

    GateList branch1;
    push_hadamards(branch1, query);
    branch1.push_back(Gate::bit_oracle(f3, query, kickback));
    c.gates.push_back(Gate::controlled_block(driving, 1, std::move(branch1)));

    // Hadamard-basis measurement of the driving qubit.
    c.gates.push_back(Gate::h(driving));
    return c;
}

CnSpec CnSpec::point(uint32_t u) {
    CnSpec s;
    s.kind = Kind::Point;
    s.u = u;
    return s;
}

CnSpec CnSpec::uniform() {
    CnSpec s;
    s.kind = Kind::UniformH;
    return s;
}

CnSpec CnSpec::dicke(int weight) {
    CnSpec s;
    s.kind = Kind::Dicke;
    s.dicke_weight = weight;
    return s;
}

Circuit algorithm1(const CnSpec& cn, const TruthTable& f, const TruthTable& g) {
    check_same_n(f, g);
    const int n = f.n;
    Circuit c;
    c.qubits = 2 * n + 1;
    std::vector<int> r_register = iota_range(0, n);
    std::vector<int> query = iota_range(n, n);
    const int kickback = 2 * n;
    c.roles = {{"r_register", r_register}, {"query", query}, {"kickback", {kickback}}};
    c.measured = r_register;
    c.measured.insert(c.measured.end(), query.begin(), query.end());
    c.oracle_queries = 2;

    switch (cn.kind) {
        case CnSpec::Kind::Point:
            if (cn.u >= (1u << n)) fail(Errc::index_out_of_range, "point outside {0,1}^n");
            for (int i = 0; i < n; ++i)
                if ((cn.u >> (n - 1 - i)) & 1u) c.gates.push_back(Gate::x(r_register[i]));
            break;
        case CnSpec::Kind::UniformH:
            push_hadamards(c.gates, r_register);
            break;
        case CnSpec::Kind::Dicke: {
            GateList prep = dicke_prep(n, cn.dicke_weight, r_register);
            c.gates.insert(c.gates.end(), prep.begin(), prep.end());
            break;
        }
    }

    push_minus_prep(c.gates, kickback);
    push_hadamards(c.gates, query);
    c.gates.push_back(Gate::bit_oracle(f, query, kickback));
    push_hadamards(c.gates, query);
    GateList dc = dc_operator(r_register, query, kickback);
    c.gates.insert(c.gates.end(), dc.begin(), dc.end());
    push_hadamards(c.gates, query);
    c.gates.push_back(Gate::bit_oracle(g, query, kickback));
    push_hadamards(c.gates, query);
    return c;
}

int count_oracle_gates(const GateList& gates) {
    int count = 0;
    for (const Gate& g : gates) {
        if (g.kind == Gate::Kind::BitOracle) ++count;
        if (g.kind == Gate::Kind::ControlledBlock) count += count_oracle_gates(g.body);
    }
    return count;
}

int count_oracle_gates(const Circuit& c) { return count_oracle_gates(c.gates); }

}  // namespace qspectra
