#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3cert/involution.hpp"

namespace k3cert {

enum class StepStatus { Pass, Contradiction, NotApplicable };
enum class Verdict { NotRealizableAsSmoothInvolution, Inconclusive };
enum class Parity { EvenConsistent, Odd };

/// An embedded surface class: genus and self-intersection.
struct SurfaceData {
  long genus = 0;
  long self_intersection = 0;
};

struct CertificateStep {
  std::string name;
  std::string inputs;
  std::string value;
  StepStatus status = StepStatus::Pass;
};

/// Ordered record of the obstruction pipeline. The verdict is
/// NotRealizableAsSmoothInvolution exactly when some step contradicts.
struct ObstructionCertificate {
  std::vector<CertificateStep> steps;
  Verdict verdict = Verdict::Inconclusive;

  // structured values for the steps that ran
  std::optional<TCRProfile> tcr;
  std::optional<EquivariantInvariants> equivariant;
  std::optional<Parity> parity;
  std::optional<FixedPointProfile> fixed_points;
  std::optional<long> total_square;
};

/// Equivariant signature an even involution would force: sigma / 2.
long even_prediction(long sigma);

/// Odd iff sigma_g differs from the even-case prediction sigma / 2.
Parity classify_parity(long sigma, long sigma_g);

/// Total fixed-surface self-intersection forced by the G-signature
/// identity sigma_g = sigma/2 + [S]^2/2, i.e. 2 sigma_g - sigma.
long fixed_surface_square(long sigma, long sigma_g);

/// 2g - 2 >= [S]^2 fails, under the nonnegative-square hypothesis.
/// Negative squares are outside the inequality's regime and never violate.
bool adjunction_violated(const SurfaceData& s);

/// Runs the full pipeline on an involution of the K3 lattice and records
/// every step with its computed value.
ObstructionCertificate nielsen_certificate(const Isometry& a);

std::string to_string(StepStatus s);
std::string to_string(Verdict v);
std::string to_string(Parity p);

}  // namespace k3cert
