#include "qspectra/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "qspectra/bits.hpp"

namespace qspectra {

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const cxd& a : amps) s += std::norm(a);
    return s;
}

StateVector new_state(int qubits) {
    if (qubits > kMaxQubits)
        fail(Errc::too_many_qubits, "at most " + std::to_string(kMaxQubits) + " qubits supported");
    if (qubits < 1) throw std::invalid_argument("qubit count must be positive");
    StateVector s;
    s.qubits = qubits;
    s.amps.assign(uint64_t{1} << qubits, cxd{0.0, 0.0});
    s.amps[0] = cxd{1.0, 0.0};
    return s;
}

Gate Gate::h(int q) {
    Gate g;
    g.kind = Kind::H;
    g.target = q;
    return g;
}

Gate Gate::x(int q) {
    Gate g;
    g.kind = Kind::X;
    g.target = q;
    return g;
}

Gate Gate::cnot(int control, int target) {
    Gate g;
    g.kind = Kind::CNOT;
    g.target = target;
    g.controls = {control};
    return g;
}

Gate Gate::mcx(std::vector<int> controls, int target) {
    Gate g;
    g.kind = Kind::MCX;
    g.target = target;
    g.controls = std::move(controls);
    return g;
}

Gate Gate::ry(int target, double angle, std::vector<int> controls) {
    Gate g;
    g.kind = Kind::Ry;
    g.target = target;
    g.angle = angle;
    g.controls = std::move(controls);
    return g;
}

Gate Gate::bit_oracle(TruthTable f, std::vector<int> inputs, int target) {
    Gate g;
    g.kind = Kind::BitOracle;
    g.fn = std::move(f);
    g.inputs = std::move(inputs);
    g.target = target;
    return g;
}

Gate Gate::controlled_block(int control, int polarity, std::vector<Gate> body) {
    Gate g;
    g.kind = Kind::ControlledBlock;
    g.block_control = control;
    g.block_polarity = polarity;
    g.body = std::move(body);
    return g;
}

const std::vector<int>& Circuit::role(const std::string& name) const {
    for (const QubitRole& r : roles)
        if (r.name == name) return r.qubits;
    throw std::invalid_argument("no role named '" + name + "'");
}

namespace {

void check_qubit(int q, int total) {
    if (q < 0 || q >= total) fail(Errc::index_out_of_range, "qubit " + std::to_string(q));
}

void check_distinct(std::vector<int> qs) {
    std::sort(qs.begin(), qs.end());
    if (std::adjacent_find(qs.begin(), qs.end()) != qs.end())
        fail(Errc::index_out_of_range, "gate qubits must be distinct");
}

uint64_t controls_mask(const StateVector& s, const std::vector<int>& controls) {
    uint64_t m = 0;
    for (int c : controls) {
        check_qubit(c, s.qubits);
        m |= s.bit_of(c);
    }
    return m;
}

void apply_single_qubit_pairs(StateVector& s, int target, uint64_t mask, uint64_t val,
                              auto&& pair_op) {
    check_qubit(target, s.qubits);
    const uint64_t tbit = s.bit_of(target);
    if (mask & tbit) fail(Errc::index_out_of_range, "gate target inside control set");
    const uint64_t size = s.amps.size();
    for (uint64_t i = 0; i < size; ++i) {
        if (i & tbit) continue;
        if ((i & mask) != val) continue;
        pair_op(s.amps[i], s.amps[i | tbit]);
    }
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

void apply_hadamard(StateVector& s, int target, uint64_t mask, uint64_t val) {
    apply_single_qubit_pairs(s, target, mask, val, [](cxd& a, cxd& b) {
        cxd a0 = a, b0 = b;
        a = (a0 + b0) * kInvSqrt2;
        b = (a0 - b0) * kInvSqrt2;
    });
}

void apply_x_like(StateVector& s, int target, uint64_t mask, uint64_t val) {
    apply_single_qubit_pairs(s, target, mask, val, [](cxd& a, cxd& b) { std::swap(a, b); });
}

void apply_ry(StateVector& s, int target, double angle, uint64_t mask, uint64_t val) {
    const double c = std::cos(angle / 2.0);
    const double sn = std::sin(angle / 2.0);
    apply_single_qubit_pairs(s, target, mask, val, [&](cxd& a, cxd& b) {
        cxd a0 = a, b0 = b;
        a = c * a0 - sn * b0;
        b = sn * a0 + c * b0;
    });
}

void apply_bit_oracle(StateVector& s, const Gate& g, uint64_t mask, uint64_t val) {
    check_qubit(g.target, s.qubits);
    if (static_cast<int>(g.inputs.size()) != g.fn.n)
        fail(Errc::size_mismatch, "oracle input count does not match the table");
    std::vector<int> all = g.inputs;
    all.push_back(g.target);
    check_distinct(all);
    const uint64_t tbit = s.bit_of(g.target);
    if (mask & tbit) fail(Errc::index_out_of_range, "oracle target inside control set");
    const uint64_t size = s.amps.size();
    for (uint64_t i = 0; i < size; ++i) {
        if (i & tbit) continue;
        if ((i & mask) != val) continue;
        uint32_t x = static_cast<uint32_t>(extract_bits(i, g.inputs, s.qubits));
        if (g.fn(x) < 0) std::swap(s.amps[i], s.amps[i | tbit]);
    }
}

void apply_impl(StateVector& s, const Gate& g, uint64_t mask, uint64_t val, bool inverse) {
    switch (g.kind) {
        case Gate::Kind::H:
            apply_hadamard(s, g.target, mask, val);
            return;
        case Gate::Kind::X:
            apply_x_like(s, g.target, mask, val);
            return;
        case Gate::Kind::CNOT:
        case Gate::Kind::MCX: {
            std::vector<int> all = g.controls;
            all.push_back(g.target);
            check_distinct(all);
            uint64_t cm = controls_mask(s, g.controls);
            apply_x_like(s, g.target, mask | cm, val | cm);
            return;
        }
        case Gate::Kind::Ry: {
            std::vector<int> all = g.controls;
            all.push_back(g.target);
            check_distinct(all);
            uint64_t cm = controls_mask(s, g.controls);
            apply_ry(s, g.target, inverse ? -g.angle : g.angle, mask | cm, val | cm);
            return;
        }
        case Gate::Kind::BitOracle:
            apply_bit_oracle(s, g, mask, val);
            return;
        case Gate::Kind::ControlledBlock: {
            check_qubit(g.block_control, s.qubits);
            const uint64_t cbit = s.bit_of(g.block_control);
            if (mask & cbit) fail(Errc::index_out_of_range, "nested control reuses a qubit");
            uint64_t m2 = mask | cbit;
            uint64_t v2 = val | (g.block_polarity ? cbit : 0);
            if (inverse) {
                for (auto it = g.body.rbegin(); it != g.body.rend(); ++it)
                    apply_impl(s, *it, m2, v2, true);
            } else {
                for (const Gate& b : g.body) apply_impl(s, b, m2, v2, false);
            }
            return;
        }
    }
}

}  // namespace

void apply(StateVector& s, const Gate& g, uint64_t ctrl_mask, uint64_t ctrl_val) {
    apply_impl(s, g, ctrl_mask, ctrl_val, false);
}

void apply_inverse(StateVector& s, const Gate& g, uint64_t ctrl_mask, uint64_t ctrl_val) {
    apply_impl(s, g, ctrl_mask, ctrl_val, true);
}

void apply_circuit(StateVector& s, const Circuit& c, uint64_t ctrl_mask, uint64_t ctrl_val) {
    for (const Gate& g : c.gates) apply(s, g, ctrl_mask, ctrl_val);
}

void apply_circuit_inverse(StateVector& s, const Circuit& c, uint64_t ctrl_mask,
                           uint64_t ctrl_val) {
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
        apply_inverse(s, *it, ctrl_mask, ctrl_val);
}

StateVector run(const Circuit& c) {
    StateVector s = new_state(c.qubits);
    apply_circuit(s, c);
    return s;
}

GateList dc_operator(const std::vector<int>& r_qubits, const std::vector<int>& q_qubits,
                     int kickback) {
    if (r_qubits.size() != q_qubits.size())
        fail(Errc::size_mismatch, "R and Q registers must have equal length");
    GateList gates;
    for (size_t i = 0; i < r_qubits.size(); ++i)
        gates.push_back(Gate::mcx({r_qubits[i], q_qubits[i]}, kickback));
    return gates;
}

GateList dicke_prep(int n, int k, const std::vector<int>& qubits) {
    if (static_cast<int>(qubits.size()) != n)
        fail(Errc::size_mismatch, "qubit list does not match n");
    if (k < 0 || k > n) fail(Errc::bad_weight, "Dicke weight must satisfy 0 <= k <= n");
    GateList gates;
    for (int i = n - k; i < n; ++i) gates.push_back(Gate::x(qubits[i]));
    // Split-and-shift cascade: each stage m transfers amplitude
    // cos = sqrt(j/m) between |0^{m-j} 1^j> and |0^{m-j-1} 1^j 0> on the
    // leading m qubits, for every occupation 1 <= j <= min(k, m-1).
    for (int m = n; m >= 2; --m) {
        const int l = std::min(k, m - 1);
        for (int j = 1; j <= l; ++j) {
            const double theta = std::acos(std::sqrt(static_cast<double>(j) / m));
            const int c = qubits[m - 1];
            const int a = qubits[m - 1 - j];
            gates.push_back(Gate::cnot(c, a));
            if (j == 1) {
                gates.push_back(Gate::ry(c, -2.0 * theta, {a}));
            } else {
                const int b = qubits[m - j];
                gates.push_back(Gate::ry(c, -2.0 * theta, {a, b}));
            }
            gates.push_back(Gate::cnot(c, a));
        }
    }
    return gates;
}

double MeasurementDistribution::prob(uint64_t outcome) const {
    auto it = probs.find(outcome);
    return it == probs.end() ? 0.0 : it->second;
}

double MeasurementDistribution::prob(const std::string& bits) const {
    return prob(bits_from_string(bits));
}

uint64_t extract_bits(uint64_t index, const std::vector<int>& subset, int total_qubits) {
    uint64_t key = 0;
    for (int q : subset) key = (key << 1) | ((index >> (total_qubits - 1 - q)) & 1ull);
    return key;
}

MeasurementDistribution measure_distribution(const StateVector& s, const std::vector<int>& subset) {
    for (int q : subset) check_qubit(q, s.qubits);
    check_distinct(subset);
    std::vector<double> dense(uint64_t{1} << subset.size(), 0.0);
    const uint64_t size = s.amps.size();
    for (uint64_t i = 0; i < size; ++i) {
        double p = std::norm(s.amps[i]);
        if (p == 0.0) continue;
        dense[extract_bits(i, subset, s.qubits)] += p;
    }
    MeasurementDistribution d;
    d.subset = subset;
    for (uint64_t k = 0; k < dense.size(); ++k)
        if (dense[k] > 1e-15) d.probs.emplace(k, dense[k]);
    return d;
}

std::map<uint64_t, uint64_t> sample(const MeasurementDistribution& d, uint64_t shots,
                                    uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be >= 1");
    std::vector<uint64_t> outcomes;
    std::vector<double> cumulative;
    double total = 0.0;
    for (const auto& [outcome, p] : d.probs) {
        total += p;
        outcomes.push_back(outcome);
        cumulative.push_back(total);
    }
    if (outcomes.empty()) throw std::invalid_argument("cannot sample an empty distribution");
    std::mt19937_64 rng(seed);
    std::map<uint64_t, uint64_t> counts;
    for (uint64_t shot = 0; shot < shots; ++shot) {
        // 53-bit uniform in [0, 1), independent of library distributions so
        // results are identical across platforms.
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        size_t idx = std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
        if (idx >= outcomes.size()) idx = outcomes.size() - 1;
        ++counts[outcomes[idx]];
    }
    return counts;
}

}  // namespace qspectra
