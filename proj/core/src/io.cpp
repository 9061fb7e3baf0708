#include "beurling/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "beurling/errors.hpp"

namespace beurling {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

}  // namespace

std::string system_to_json(const GeneralizedPrimeSystem& system) {
  json j;
  j["name"] = system.name();
  j["source"] = to_string(system.source());
  if (system.is_complete()) {
    j["x_max_supported"] = nullptr;
  } else {
    j["x_max_supported"] = system.x_max_supported();
  }
  j["values"] = std::vector<double>(system.primes().begin(), system.primes().end());
  return j.dump(1) + "\n";
}

GeneralizedPrimeSystem system_from_json(const std::string& text) {
  const json j = parse(text, "system file");
  try {
    const std::string name = j.value("name", std::string("system"));
    if (j.contains("sieve_x_max")) {
      GeneralizedPrimeSystem sieved = sieve_classical(j.at("sieve_x_max").get<double>());
      return GeneralizedPrimeSystem(std::vector<double>(sieved.primes().begin(), sieved.primes().end()), name,
                                    SystemSource::sieve, sieved.x_max_supported());
    }
    const SystemSource source = parse_system_source(j.value("source", std::string("explicit")));
    double x_max = std::numeric_limits<double>::infinity();
    if (j.contains("x_max_supported") && !j.at("x_max_supported").is_null()) {
      x_max = j.at("x_max_supported").get<double>();
    }
    if (!j.contains("values")) throw DomainError("system file: needs 'values' or 'sieve_x_max'");
    return GeneralizedPrimeSystem(j.at("values").get<std::vector<double>>(), name, source, x_max);
  } catch (const json::exception& e) {
    throw DomainError(std::string("system file: ") + e.what());
  }
}

void save_system(const GeneralizedPrimeSystem& system, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << system_to_json(system);
}

GeneralizedPrimeSystem load_system(const std::string& path) { return system_from_json(read_file(path)); }

std::string model_to_json(const DecompositionModel& model) {
  json j;
  j["a"] = model.a;
  j["r"] = model.r;
  j["main_osc"] = json::array();
  for (const auto& term : model.main_osc) j["main_osc"].push_back({{"amplitude", term.amplitude}, {"theta", term.theta}});
  j["blocks"] = json::array();
  for (const auto& block : model.blocks) {
    json b;
    b["r"] = block.r;
    b["modes"] = json::array();
    for (const auto& mode : block.modes) b["modes"].push_back({{"poly", mode.poly}, {"theta", mode.theta}});
    j["blocks"].push_back(b);
  }
  return j.dump(1) + "\n";
}

DecompositionModel model_from_json(const std::string& text) {
  const json j = parse(text, "model file");
  DecompositionModel model;
  try {
    model.a = j.value("a", 1.0);
    model.r = j.value("r", 0.0);
    for (const auto& term : j.value("main_osc", json::array())) {
      model.main_osc.push_back({term.at("amplitude").get<double>(), term.at("theta").get<double>()});
    }
    for (const auto& b : j.value("blocks", json::array())) {
      LowerBlock block;
      block.r = b.at("r").get<double>();
      for (const auto& mode : b.value("modes", json::array())) {
        block.modes.push_back({mode.at("poly").get<std::vector<double>>(), mode.value("theta", 0.0)});
      }
      model.blocks.push_back(block);
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("model file: ") + e.what());
  }
  model.validate();
  return model;
}

DecompositionModel load_model(const std::string& path) { return model_from_json(read_file(path)); }

}  // namespace beurling
