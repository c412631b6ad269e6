#include "k3cert/obstruction.hpp"

namespace k3cert {

long even_prediction(long sigma) {
  if (sigma % 2 != 0)
    throw std::invalid_argument("even_prediction: signature must be even");
  return sigma / 2;
}

Parity classify_parity(long sigma, long sigma_g) {
  if (sigma % 2 != 0)
    throw std::invalid_argument("classify_parity: signature must be even");
  return sigma_g == sigma / 2 ? Parity::EvenConsistent : Parity::Odd;
}

long fixed_surface_square(long sigma, long sigma_g) {
  return 2 * sigma_g - sigma;
}

bool adjunction_violated(const SurfaceData& s) {
  if (s.self_intersection < 0) return false;
  return 2 * s.genus - 2 < s.self_intersection;
}

std::string to_string(StepStatus s) {
  switch (s) {
    case StepStatus::Pass: return "pass";
    case StepStatus::Contradiction: return "contradiction";
    case StepStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(Verdict v) {
  return v == Verdict::NotRealizableAsSmoothInvolution
             ? "NotRealizableAsSmoothInvolution"
             : "Inconclusive";
}

std::string to_string(Parity p) {
  return p == Parity::Odd ? "Odd" : "Even-consistent";
}

ObstructionCertificate nielsen_certificate(const Isometry& a) {
  if (!is_involution(a))
    throw std::invalid_argument("nielsen_certificate: input is not an involution");
  const Lattice& l = a.lattice;
  ObstructionCertificate cert;
  auto step = [&cert](std::string name, std::string inputs, std::string value,
                      StepStatus status) {
    cert.steps.push_back(
        {std::move(name), std::move(inputs), std::move(value), status});
  };
  auto mark_rest_na = [&](std::initializer_list<const char*> names,
                          const char* reason) {
    for (const char* n : names) step(n, "", reason, StepStatus::NotApplicable);
  };

  step("involution_check", "isometry matrix", "a^2 = id, a != id",
       StepStatus::Pass);

  TCRProfile p = tcr_decompose(l, a);
  cert.tcr = p;
  step("tcr", "induced action on the lattice",
       "(t,c,r) = (" + std::to_string(p.t) + "," + std::to_string(p.c) + "," +
           std::to_string(p.r) + ")",
       StepStatus::Pass);

  bool free_type = is_free_type(p);
  step("free_type", "(t,c)", free_type ? "free type (0,2,r)" : "not free type",
       StepStatus::Pass);
  if (free_type) {
    mark_rest_na({"parity", "fixed_points", "g_signature_square", "adjunction"},
                 "fixed-point-free profile");
    cert.verdict = Verdict::Inconclusive;
    return cert;
  }

  SignatureTriple sig = signature(l);
  long sigma = static_cast<long>(sig.b_plus) - static_cast<long>(sig.b_minus);
  EquivariantInvariants eq = equivariant_signature(l, a);
  cert.equivariant = eq;
  Parity parity = classify_parity(sigma, eq.sigma_g);
  cert.parity = parity;
  step("parity",
       "sigma = " + std::to_string(sigma) +
           ", sigma_g = " + std::to_string(eq.sigma_g) +
           ", even prediction = " + std::to_string(even_prediction(sigma)),
       to_string(parity), StepStatus::Pass);
  if (parity == Parity::EvenConsistent) {
    mark_rest_na({"fixed_points", "g_signature_square", "adjunction"},
                 "even-consistent involution");
    cert.verdict = Verdict::Inconclusive;
    return cert;
  }

  FixedPointProfile fp;
  try {
    fp = fixed_point_profile(static_cast<long>(p.t), static_cast<long>(p.c));
  } catch (const std::invalid_argument&) {
    mark_rest_na({"fixed_points", "g_signature_square", "adjunction"},
                 "profile outside the odd fixed-point relations");
    cert.verdict = Verdict::Inconclusive;
    return cert;
  }
  cert.fixed_points = fp;
  step("fixed_points",
       "t = " + std::to_string(p.t) + ", c = " + std::to_string(p.c),
       "k = " + std::to_string(fp.k) +
           ", total genus = " + std::to_string(fp.total_genus),
       StepStatus::Pass);

  long square = fixed_surface_square(sigma, eq.sigma_g);
  cert.total_square = square;
  step("g_signature_square",
       "sigma = " + std::to_string(sigma) +
           ", sigma_g = " + std::to_string(eq.sigma_g),
       "[S]^2 = " + std::to_string(square), StepStatus::Pass);

  if (fp.k != 1) {
    // the contradiction is only claimed for a single fixed surface
    step("adjunction", "k > 1", "total square not attributed to one surface",
         StepStatus::NotApplicable);
    cert.verdict = Verdict::Inconclusive;
    return cert;
  }
  SurfaceData surf{static_cast<long>(fp.total_genus), square};
  bool violated = adjunction_violated(surf);
  step("adjunction",
       "genus = " + std::to_string(surf.genus) +
           ", [S]^2 = " + std::to_string(surf.self_intersection),
       violated ? "2g - 2 < [S]^2" : "2g - 2 >= [S]^2 or [S]^2 < 0",
       violated ? StepStatus::Contradiction : StepStatus::Pass);
  cert.verdict = violated ? Verdict::NotRealizableAsSmoothInvolution
                          : Verdict::Inconclusive;
  return cert;
}

}  // namespace k3cert
