#pragma once

#include <string_view>

#include "helbar/errors.hpp"
#include "helbar/types.hpp"

namespace helbar {

/// Character of the wave inside the barrier, from the sign of q1^2 and of
/// E - V0: oscillatory above the barrier (Diffusion), oscillatory below it
/// (Klein), evanescent in between (Tunneling). Boundary absorbs the band
/// |q1^2| < eps_zone * m^2 around the removable q1 = 0 point.
enum class EnergyZone { Diffusion, Klein, Tunneling, Boundary };

std::string_view zone_name(EnergyZone z);
EnergyZone parse_zone(std::string_view name);

inline constexpr double kOnShellTol = 1e-12;
inline constexpr double kDefaultZoneEps = 1e-10;

/// cos(angle) below this counts as grazing incidence.
inline constexpr double kGrazingCos = 1e-6;

/// Incident kinematics and barrier geometry, natural units (hbar = c = 1).
/// Energies, momenta and masses share one unit; L carries the inverse unit.
struct Kinematics {
  double E = 0.0;   ///< total energy
  double m = 1.0;   ///< rest mass
  double p1 = 0.0;  ///< longitudinal momentum, > 0 for the incident wave
  double p2 = 0.0;  ///< transverse momentum, either sign
  double V0 = 0.0;  ///< barrier height (negative = well)
  double L = 0.0;   ///< barrier width

  double angle() const;              ///< atan2(p2, p1)
  double momentum() const;           ///< |p|
  double transverse_energy() const;  ///< sqrt(p2^2 + m^2)
};

/// Throws DomainError unless m > 0, E > m, p1 > 0, L >= 0 and the on-shell
/// identity E^2 = p1^2 + p2^2 + m^2 holds to 1e-12 relative.
void validate(const Kinematics& k);

/// Angle-parametrized constructor: p1 = |p| cos(angle), p2 = |p| sin(angle)
/// with |p| = sqrt(E^2 - m^2). Requires E > m, L > 0, and non-grazing angle.
Kinematics make_kinematics(double E, double angle, double m, double V0, double L);

/// Momentum-parametrized constructor; derives E from the on-shell identity.
Kinematics kinematics_from_momenta(double p1, double p2, double m, double V0, double L);

/// Longitudinal momentum inside the barrier, q1^2 = (E - V0)^2 - p2^2 - m^2,
/// on the principal branch: q1 > 0 when real, Im q1 > 0 when evanescent.
struct BarrierChannel {
  complexd q1;
  double q1_squared = 0.0;
  EnergyZone zone = EnergyZone::Boundary;
};

BarrierChannel barrier_channel(const Kinematics& k, double eps_zone = kDefaultZoneEps);

}  // namespace helbar
