#pragma once

#include <string>

#include "beurling/models.hpp"
#include "beurling/number_system.hpp"

namespace beurling {

/// System file (JSON):
///   {"name": ..., "source": "explicit" | "sieve" | "density",
///    "x_max_supported": number | null, "values": [...]}
/// null marks a complete list. A file may give {"sieve_x_max": X} instead of
/// values, in which case the rational primes up to X are sieved on load.
/// Values are written with round-trip precision.
std::string system_to_json(const GeneralizedPrimeSystem& system);
GeneralizedPrimeSystem system_from_json(const std::string& text);
void save_system(const GeneralizedPrimeSystem& system, const std::string& path);
GeneralizedPrimeSystem load_system(const std::string& path);

/// Model file (JSON):
///   {"a": 1, "r": 0, "main_osc": [{"amplitude": .., "theta": ..}],
///    "blocks": [{"r": .., "modes": [{"poly": [c0, c1, ..], "theta": ..}]}]}
/// Missing fields take the defaults of DecompositionModel. The model is
/// validated on load.
std::string model_to_json(const DecompositionModel& model);
DecompositionModel model_from_json(const std::string& text);
DecompositionModel load_model(const std::string& path);

}  // namespace beurling
