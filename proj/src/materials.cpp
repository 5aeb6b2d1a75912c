#include "casimir/materials.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

namespace {

struct Evaluator {
  double xi;
  double operator()(const ConstantPermittivity& c) const { return c.value; }
  double operator()(const OscillatorPermittivity& o) const {
    double eps = 1.0;
    for (const auto& term : o.terms) {
      const double ratio = xi / term.resonance;
      eps += term.strength / (1.0 + ratio * ratio);
    }
    return eps;
  }
};

}  // namespace

double PermittivityModel::static_value() const { return std::visit(Evaluator{0.0}, model_); }

std::vector<std::string> PermittivityModel::problems() const {
  std::vector<std::string> out;
  if (const auto* c = as_constant()) {
    if (!(c->value > 0.0) || !std::isfinite(c->value)) out.emplace_back("nonpositive permittivity");
    return out;
  }
  const auto& o = *as_oscillator();
  for (const auto& term : o.terms) {
    if (!(term.strength >= 0.0) || !std::isfinite(term.strength))
      out.emplace_back("negative oscillator strength");
    if (!(term.resonance > 0.0) || !std::isfinite(term.resonance))
      out.emplace_back("nonpositive resonance");
  }
  return out;
}

bool operator==(const PermittivityModel& a, const PermittivityModel& b) {
  if (a.model_.index() != b.model_.index()) return false;
  if (const auto* ca = a.as_constant()) return ca->value == b.as_constant()->value;
  const auto& ta = a.as_oscillator()->terms;
  const auto& tb = b.as_oscillator()->terms;
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].strength != tb[i].strength || ta[i].resonance != tb[i].resonance) return false;
  }
  return true;
}

double permittivity_at(const PermittivityModel& model, double xi) {
  if (!(xi >= 0.0)) throw std::domain_error("imaginary frequency xi must be >= 0");
  if (const auto* c = model.as_constant()) return c->value;
  return Evaluator{xi}(*model.as_oscillator());
}

MaterialSystem MaterialSystem::constant(double e1, double e2, double e3x, double e3z) {
  return {PermittivityModel::constant(e1), PermittivityModel::constant(e2),
          PermittivityModel::constant(e3x), PermittivityModel::constant(e3z)};
}

bool MaterialSystem::all_constant() const {
  return eps1.is_constant() && eps2.is_constant() && eps3x.is_constant() && eps3z.is_constant();
}

RatioSet ratios(const MaterialSystem& system, double xi) {
  const double e1 = permittivity_at(system.eps1, xi);
  const double e2 = permittivity_at(system.eps2, xi);
  const double e3x = permittivity_at(system.eps3x, xi);
  // Same model for both interlayer components means M3 is exactly 1.
  const double e3z = system.eps3z == system.eps3x ? e3x : permittivity_at(system.eps3z, xi);
  return {e1 / e3x, e2 / e3x, e3z / e3x, e3x};
}

std::string ValidationReport::to_string() const {
  std::string s;
  for (const auto& issue : issues) {
    if (!s.empty()) s += "; ";
    s += issue;
  }
  return s;
}

ValidationReport validate(const MaterialSystem& system) {
  ValidationReport report;
  const std::pair<const char*, const PermittivityModel*> slots[] = {
      {"eps1", &system.eps1}, {"eps2", &system.eps2}, {"eps3x", &system.eps3x}, {"eps3z", &system.eps3z}};
  for (const auto& [name, model] : slots) {
    for (auto& p : model->problems()) report.issues.push_back(std::string(name) + ": " + p);
  }
  return report;
}

void require_valid(const MaterialSystem& system) {
  const auto report = validate(system);
  if (!report.ok()) throw std::invalid_argument("invalid material system: " + report.to_string());
}

}  // namespace casimir
