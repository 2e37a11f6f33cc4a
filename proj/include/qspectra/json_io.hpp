#pragma once

#include <json.hpp>

#include "qspectra/protocols.hpp"

namespace qspectra {

using Json = nlohmann::ordered_json;

Json walsh_json(const WalshSpectrum& w);
Json correlation_json(const CorrelationSpectrum& c);
Json distribution_json(const MeasurementDistribution& d);
Json counts_json(const std::map<uint64_t, uint64_t>& counts, int width);
Json circuit_json(const Circuit& c);
Json verdict_json(const CheckVerdict& v);
Json analyze_json(const TruthTable& f);

}  // namespace qspectra
