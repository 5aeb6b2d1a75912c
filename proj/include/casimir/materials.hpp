#pragma once

#include <string>
#include <variant>
#include <vector>

namespace casimir {

/// A single Lorentz-type term of the imaginary-frequency response.
struct OscillatorTerm {
  double strength;   // C_j, dimensionless
  double resonance;  // omega_j, rad/s
};

struct ConstantPermittivity {
  double value;
};

/// eps(i xi) = 1 + sum_j C_j / (1 + xi^2 / omega_j^2)
struct OscillatorPermittivity {
  std::vector<OscillatorTerm> terms;
};

/// Relative permittivity evaluated on the imaginary frequency axis.
class PermittivityModel {
 public:
  PermittivityModel() : model_(ConstantPermittivity{1.0}) {}
  PermittivityModel(ConstantPermittivity c) : model_(c) {}
  PermittivityModel(OscillatorPermittivity o) : model_(std::move(o)) {}

  static PermittivityModel constant(double value) { return ConstantPermittivity{value}; }
  static PermittivityModel oscillator(std::vector<OscillatorTerm> terms) {
    return OscillatorPermittivity{std::move(terms)};
  }

  bool is_constant() const { return std::holds_alternative<ConstantPermittivity>(model_); }
  const ConstantPermittivity* as_constant() const { return std::get_if<ConstantPermittivity>(&model_); }
  const OscillatorPermittivity* as_oscillator() const {
    return std::get_if<OscillatorPermittivity>(&model_);
  }

  /// Static (xi = 0) value.
  double static_value() const;

  /// Empty when the model is usable; otherwise one message per violation.
  std::vector<std::string> problems() const;

  friend bool operator==(const PermittivityModel& a, const PermittivityModel& b);

 private:
  std::variant<ConstantPermittivity, OscillatorPermittivity> model_;
};

/// eps(i xi). Throws std::domain_error for xi < 0.
double permittivity_at(const PermittivityModel& model, double xi);

/// Plate 1 | uniaxial interlayer (optical axis along the plate normal) | plate 2.
struct MaterialSystem {
  PermittivityModel eps1;   // plate 1, isotropic
  PermittivityModel eps2;   // plate 2, isotropic
  PermittivityModel eps3x;  // interlayer, perpendicular to the optical axis
  PermittivityModel eps3z;  // interlayer, along the optical axis

  static MaterialSystem constant(double e1, double e2, double e3x, double e3z);

  bool all_constant() const;
};

/// Permittivities of plates and the axial component relative to eps3x.
struct RatioSet {
  double m1;
  double m2;
  double m3;
  double eps3x;
};

RatioSet ratios(const MaterialSystem& system, double xi);

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

ValidationReport validate(const MaterialSystem& system);

/// Throws std::invalid_argument carrying the report text if the system is unusable.
void require_valid(const MaterialSystem& system);

}  // namespace casimir
