#include "helbar/kinematics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace helbar {

std::string_view zone_name(EnergyZone z) {
  switch (z) {
    case EnergyZone::Diffusion: return "Diffusion";
    case EnergyZone::Klein: return "Klein";
    case EnergyZone::Tunneling: return "Tunneling";
    case EnergyZone::Boundary: return "Boundary";
  }
  return "Unknown";
}

EnergyZone parse_zone(std::string_view name) {
  if (name == "Diffusion" || name == "diffusion") return EnergyZone::Diffusion;
  if (name == "Klein" || name == "klein") return EnergyZone::Klein;
  if (name == "Tunneling" || name == "tunneling") return EnergyZone::Tunneling;
  if (name == "Boundary" || name == "boundary") return EnergyZone::Boundary;
  throw DomainError("unknown energy zone: " + std::string(name));
}

double Kinematics::angle() const { return std::atan2(p2, p1); }
double Kinematics::momentum() const { return std::hypot(p1, p2); }
double Kinematics::transverse_energy() const { return std::hypot(p2, m); }

void validate(const Kinematics& k) {
  if (!(k.m > 0.0)) throw DomainError("mass must be positive");
  if (!(k.E > k.m)) throw DomainError("energy must exceed the rest mass");
  if (!(k.p1 > 0.0)) throw DomainError("longitudinal momentum must be positive");
  if (!(k.L >= 0.0)) throw DomainError("barrier width must be non-negative");
  const double rhs = k.p1 * k.p1 + k.p2 * k.p2 + k.m * k.m;
  if (std::abs(k.E * k.E - rhs) > kOnShellTol * k.E * k.E)
    throw DomainError("kinematics are off shell: E^2 != p1^2 + p2^2 + m^2");
}

Kinematics make_kinematics(double E, double angle, double m, double V0, double L) {
  if (!(m > 0.0)) throw DomainError("mass must be positive");
  if (!(E > m)) throw DomainError("energy must exceed the rest mass (no propagating incident wave)");
  if (!(L > 0.0)) throw DomainError("barrier width must be positive");
  if (!(std::abs(angle) < std::numbers::pi / 2.0) || std::cos(angle) < kGrazingCos)
    throw DomainError("grazing incidence: |angle| must stay below pi/2");
  const double p = std::sqrt(E * E - m * m);
  Kinematics k{E, m, p * std::cos(angle), p * std::sin(angle), V0, L};
  validate(k);
  return k;
}

Kinematics kinematics_from_momenta(double p1, double p2, double m, double V0, double L) {
  if (!(m > 0.0)) throw DomainError("mass must be positive");
  if (!(p1 > 0.0)) throw DomainError("longitudinal momentum must be positive");
  Kinematics k{std::sqrt(p1 * p1 + p2 * p2 + m * m), m, p1, p2, V0, L};
  validate(k);
  return k;
}

BarrierChannel barrier_channel(const Kinematics& k, double eps_zone) {
  validate(k);
  const double shifted = k.E - k.V0;
  const double q1sq = shifted * shifted - k.p2 * k.p2 - k.m * k.m;
  const complexd q1 = q1sq >= 0.0 ? complexd(std::sqrt(q1sq), 0.0)
                                  : complexd(0.0, std::sqrt(-q1sq));
  EnergyZone zone;
  if (std::abs(q1sq) < eps_zone * k.m * k.m)
    zone = EnergyZone::Boundary;
  else if (q1sq < 0.0)
    zone = EnergyZone::Tunneling;
  else
    zone = shifted > 0.0 ? EnergyZone::Diffusion : EnergyZone::Klein;
  return {q1, q1sq, zone};
}

}  // namespace helbar
