#pragma once

#include <nlohmann/json_fwd.hpp>

#include "k3cert/obstruction.hpp"
#include "k3cert/roots.hpp"

namespace k3cert {

using json = nlohmann::json;

/// `{"rank": n, "gram": [[...],...], "basis_labels": [...]}`. Integer
/// entries only; non-symmetric Grams are rejected.
Lattice lattice_from_json(const json& j);
json lattice_to_json(const Lattice& l);

/// `{"lattice": <lattice-json | "k3" | "u" | "e8_minus">, "matrix": [[...]]}`.
Isometry isometry_from_json(const json& j);
json isometry_to_json(const Isometry& a);

/// `{"ambient": "k3", "basis": [["1","0",...],...]}` with rational entries
/// as strings "p/q" (plain integers also accepted).
RationalPlane plane_from_json(const json& j);
json plane_to_json(const RationalPlane& p);

json root_list_to_json(const std::vector<IntVec>& roots);

json certificate_to_json(const ObstructionCertificate& c);

/// Built-in lattices: "k3", "u", "e8_minus".
Lattice named_lattice(const std::string& name);

/// Built-in isometries on the K3 lattice: "id", "neg_id", "swap_k3",
/// "perm_u(i,j)".
Isometry named_isometry(const std::string& name);

}  // namespace k3cert
