#include "qspectra/json_io.hpp"

#include "qspectra/bits.hpp"

namespace qspectra {

Json walsh_json(const WalshSpectrum& w) {
    return Json{{"n", w.n}, {"kind", "walsh"}, {"values", w.values}};
}

Json correlation_json(const CorrelationSpectrum& c) {
    return Json{{"n", c.n},
                {"kind", c.is_auto ? "autocorrelation" : "cross_correlation"},
                {"values", c.values}};
}

Json distribution_json(const MeasurementDistribution& d) {
    Json out = Json::object();
    for (const auto& [outcome, p] : d.probs) out[bits_to_string(outcome, d.width())] = p;
    return out;
}

Json counts_json(const std::map<uint64_t, uint64_t>& counts, int width) {
    Json out = Json::object();
    for (const auto& [outcome, c] : counts) out[bits_to_string(outcome, width)] = c;
    return out;
}

namespace {

Json gate_json(const Gate& g) {
    Json out = Json::object();
    switch (g.kind) {
        case Gate::Kind::H:
            out["kind"] = "h";
            out["target"] = g.target;
            break;
        case Gate::Kind::X:
            out["kind"] = "x";
            out["target"] = g.target;
            break;
        case Gate::Kind::CNOT:
            out["kind"] = "cnot";
            out["controls"] = g.controls;
            out["target"] = g.target;
            break;
        case Gate::Kind::MCX:
            out["kind"] = "mcx";
            out["controls"] = g.controls;
            out["target"] = g.target;
            break;
        case Gate::Kind::Ry:
            out["kind"] = "ry";
            out["controls"] = g.controls;
            out["target"] = g.target;
            out["angle"] = g.angle;
            break;
        case Gate::Kind::BitOracle: {
            out["kind"] = "oracle";
            out["inputs"] = g.inputs;
            out["target"] = g.target;
            std::string bits;
            for (int8_t v : g.fn.values) bits += v > 0 ? '0' : '1';
            out["function"] = bits;
            break;
        }
        case Gate::Kind::ControlledBlock: {
            out["kind"] = "controlled_block";
            out["control"] = g.block_control;
            out["polarity"] = g.block_polarity;
            Json body = Json::array();
            for (const Gate& b : g.body) body.push_back(gate_json(b));
            out["body"] = std::move(body);
            break;
        }
    }
    return out;
}

}  // namespace

Json circuit_json(const Circuit& c) {
    Json roles = Json::array();
    for (const QubitRole& r : c.roles) roles.push_back(Json{{"name", r.name}, {"qubits", r.qubits}});
    Json gates = Json::array();
    for (const Gate& g : c.gates) gates.push_back(gate_json(g));
    return Json{{"qubits", c.qubits},
                {"roles", std::move(roles)},
                {"measured", c.measured},
                {"oracle_queries", c.oracle_queries},
                {"gates", std::move(gates)}};
}

Json verdict_json(const CheckVerdict& v) {
    Json out = Json::object();
    out["verdict"] = v.verdict == Verdict::refuted ? "REFUTED" : "NOT_REFUTED";
    out["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
    out["good_mass"] = v.good_mass;
    out["oracle_calls"] = v.oracle_calls;
    out["shots_used"] = v.shots_used;
    out["seed"] = v.seed;
    out["per_weight"] = v.per_weight;
    return out;
}

Json analyze_json(const TruthTable& f) {
    WalshSpectrum w = walsh_transform(f);
    int64_t parseval = 0;
    for (int64_t v : w.values) parseval += v * v;
    const bool bent = is_bent(f);
    Json out = Json::object();
    out["n"] = f.n;
    out["balanced"] = is_balanced(f);
    out["bent"] = bent;
    if (bent) {
        std::string bits;
        for (int8_t v : dual(f).values) bits += v > 0 ? '0' : '1';
        out["dual"] = bits;
    } else {
        out["dual"] = nullptr;
    }
    out["resiliency_order"] = resiliency_order(f);
    out["parseval_ok"] = parseval == (int64_t{1} << (2 * f.n));
    out["walsh"] = walsh_json(w);
    out["autocorrelation"] = correlation_json(auto_correlation(f));
    return out;
}

}  // namespace qspectra
