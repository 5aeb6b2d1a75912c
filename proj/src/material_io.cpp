#include "casimir/material_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace casimir {

using nlohmann::json;

namespace {

PermittivityModel model_from(const json& node, const std::string& key) {
  if (!node.is_object() || node.size() != 1)
    throw std::invalid_argument(key + ": expected an object with exactly one of \"constant\" or \"oscillator\"");
  if (auto it = node.find("constant"); it != node.end()) {
    if (!it->is_number()) throw std::invalid_argument(key + ".constant: expected a number");
    return PermittivityModel::constant(it->get<double>());
  }
  if (auto it = node.find("oscillator"); it != node.end()) {
    if (!it->is_array()) throw std::invalid_argument(key + ".oscillator: expected an array of [C, omega] pairs");
    std::vector<OscillatorTerm> terms;
    for (const auto& pair : *it) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        throw std::invalid_argument(key + ".oscillator: each term must be [C, omega]");
      terms.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return PermittivityModel::oscillator(std::move(terms));
  }
  throw std::invalid_argument(key + ": unknown model kind");
}

json model_to(const PermittivityModel& model) {
  if (const auto* c = model.as_constant()) return {{"constant", c->value}};
  json terms = json::array();
  for (const auto& t : model.as_oscillator()->terms) terms.push_back({t.strength, t.resonance});
  return {{"oscillator", terms}};
}

}  // namespace

MaterialSystem material_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("material JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("material JSON: top level must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const auto& k = it.key();
    if (k != "eps1" && k != "eps2" && k != "eps3x" && k != "eps3z")
      throw std::invalid_argument("material JSON: unexpected key \"" + k + "\"");
  }
  MaterialSystem system;
  const std::pair<const char*, PermittivityModel*> slots[] = {
      {"eps1", &system.eps1}, {"eps2", &system.eps2}, {"eps3x", &system.eps3x}, {"eps3z", &system.eps3z}};
  for (const auto& [key, slot] : slots) {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("material JSON: missing \"") + key + "\"");
    *slot = model_from(doc[key], key);
  }
  return system;
}

MaterialSystem load_material(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read material file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return material_from_json(buf.str());
}

std::string material_to_json(const MaterialSystem& system) {
  json doc = {{"eps1", model_to(system.eps1)},
              {"eps2", model_to(system.eps2)},
              {"eps3x", model_to(system.eps3x)},
              {"eps3z", model_to(system.eps3z)}};
  return doc.dump();
}

}  // namespace casimir
