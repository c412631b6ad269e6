#include "k3cert/json_io.hpp"

#include <nlohmann/json.hpp>

namespace k3cert {

namespace {

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer entry");
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.get<long>()));
  if (j.is_string()) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), j.get<std::string>().c_str(), 10) != 0)
      throw std::invalid_argument("bad rational entry: " + j.get<std::string>());
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    return q;
  }
  throw std::invalid_argument("expected a rational entry (integer or \"p/q\")");
}

IntMat matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  IntMat m(j.size(), j.empty() ? 0 : j[0].size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols)
      throw std::invalid_argument("matrix rows must have equal length");
    for (std::size_t k = 0; k < m.cols; ++k) m(i, k) = int_from_json(j[i][k]);
  }
  return m;
}

json matrix_to_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols; ++k) {
      const Int& e = m(i, k);
      if (e.fits_slong_p())
        row.push_back(e.get_si());
      else
        row.push_back(e.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Lattice lattice_from_json(const json& j) {
  IntMat gram = matrix_from_json(j.at("gram"));
  if (j.contains("rank") && j.at("rank").get<std::size_t>() != gram.rows)
    throw std::invalid_argument("lattice json: rank field disagrees with gram size");
  std::vector<std::string> labels;
  if (j.contains("basis_labels"))
    labels = j.at("basis_labels").get<std::vector<std::string>>();
  return make_lattice(std::move(gram), std::move(labels));
}

json lattice_to_json(const Lattice& l) {
  json j;
  j["rank"] = l.rank();
  j["gram"] = matrix_to_json(l.gram);
  if (!l.basis_labels.empty()) j["basis_labels"] = l.basis_labels;
  return j;
}

Lattice named_lattice(const std::string& name) {
  if (name == "k3") return k3_lattice();
  if (name == "u") return hyperbolic_plane();
  if (name == "e8_minus") return e8_minus();
  throw std::invalid_argument("unknown lattice name: " + name);
}

Isometry named_isometry(const std::string& name) {
  if (name == "id") return identity_isometry(k3_lattice());
  if (name == "neg_id") return neg_identity(k3_lattice());
  if (name == "swap_k3") return swap_involution_k3();
  if (name.rfind("perm_u(", 0) == 0 && name.back() == ')') {
    std::string body = name.substr(7, name.size() - 8);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("perm_u expects two indices: " + name);
    int i = std::stoi(body.substr(0, comma));
    int j = std::stoi(body.substr(comma + 1));
    return u_block_permutation(i, j);
  }
  throw std::invalid_argument("unknown isometry name: " + name);
}

Isometry isometry_from_json(const json& j) {
  Lattice l = j.at("lattice").is_string()
                  ? named_lattice(j.at("lattice").get<std::string>())
                  : lattice_from_json(j.at("lattice"));
  return verify_isometry(l, matrix_from_json(j.at("matrix")));
}

json isometry_to_json(const Isometry& a) {
  json j;
  if (a.lattice == k3_lattice())
    j["lattice"] = "k3";
  else
    j["lattice"] = lattice_to_json(a.lattice);
  j["matrix"] = matrix_to_json(a.matrix);
  return j;
}

RationalPlane plane_from_json(const json& j) {
  Lattice ambient = j.at("ambient").is_string()
                        ? named_lattice(j.at("ambient").get<std::string>())
                        : lattice_from_json(j.at("ambient"));
  std::vector<RatVec> basis;
  for (const json& row : j.at("basis")) {
    RatVec v;
    for (const json& e : row) v.push_back(rat_from_json(e));
    basis.push_back(std::move(v));
  }
  return make_rational_plane(std::move(ambient), std::move(basis));
}

json plane_to_json(const RationalPlane& p) {
  json j;
  if (p.ambient == k3_lattice())
    j["ambient"] = "k3";
  else
    j["ambient"] = lattice_to_json(p.ambient);
  json basis = json::array();
  for (const RatVec& v : p.basis) {
    json row = json::array();
    for (const Rat& e : v) row.push_back(e.get_str());
    basis.push_back(std::move(row));
  }
  j["basis"] = std::move(basis);
  return j;
}

json root_list_to_json(const std::vector<IntVec>& roots) {
  json out = json::array();
  for (const IntVec& v : roots) {
    json row = json::array();
    for (const Int& e : v) row.push_back(e.get_si());
    out.push_back(std::move(row));
  }
  return out;
}

json certificate_to_json(const ObstructionCertificate& c) {
  json j;
  json steps = json::array();
  for (const CertificateStep& s : c.steps) {
    steps.push_back({{"name", s.name},
                     {"inputs", s.inputs},
                     {"value", s.value},
                     {"status", to_string(s.status)}});
  }
  j["steps"] = std::move(steps);
  j["verdict"] = to_string(c.verdict);
  if (c.tcr)
    j["tcr"] = {c.tcr->t, c.tcr->c, c.tcr->r};
  if (c.equivariant)
    j["equivariant"] = {{"b_plus_g", c.equivariant->b_plus_g},
                        {"b_minus_g", c.equivariant->b_minus_g},
                        {"sigma_g", c.equivariant->sigma_g}};
  if (c.parity) j["parity"] = to_string(*c.parity);
  if (c.fixed_points)
    j["fixed_points"] = {{"k", c.fixed_points->k},
                         {"total_genus", c.fixed_points->total_genus}};
  if (c.total_square) j["total_square"] = *c.total_square;
  return j;
}

}  // namespace k3cert
