#pragma once

#include <string_view>

namespace cspi {

/// Value assigned to the step function of the equal-time Green function,
/// i.e. which time slice the bar field is read from in the one-step
/// lattice kernel.
///
///   Minus     theta(0) = 0    (normal / Wick ordering)
///   Plus      theta(0) = 1    (anti-normal / anti-Wick ordering)
///   Symmetric theta(0) = 1/2  (Weyl ordering)
enum class Prescription { Minus, Plus, Symmetric };

double theta_zero(Prescription p);

std::string_view name(Prescription p);

/// Accepts "minus"/"covariant", "plus"/"contravariant",
/// "symmetric"/"weyl" (case-insensitive).
Prescription parse_prescription(std::string_view text);

}  // namespace cspi
