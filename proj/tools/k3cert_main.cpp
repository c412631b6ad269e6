// k3cert: exact-arithmetic computations with the K3 intersection lattice,
// its isometries, and the smooth-involution obstruction certificate.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "k3cert/json_io.hpp"

using namespace k3cert;

namespace {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

Lattice resolve_lattice(const std::string& arg) {
  try {
    return named_lattice(arg);
  } catch (const std::invalid_argument&) {
    return lattice_from_json(load_json_file(arg));
  }
}

Isometry resolve_isometry(const std::string& arg) {
  try {
    return named_isometry(arg);
  } catch (const std::invalid_argument&) {
    return isometry_from_json(load_json_file(arg));
  }
}

std::string sig_str(const SignatureTriple& s) {
  std::ostringstream os;
  os << "(" << s.b_plus << "," << s.b_minus << "," << s.b_zero << ")";
  return os.str();
}

int run_paper_verify(bool as_json, bool corrupt_gram) {
  Lattice l = k3_lattice();
  if (corrupt_gram) l.gram(0, 0) = 2;  // negative control for the test suite

  json checks = json::array();
  int failures = 0;
  auto check = [&](const std::string& name, const std::string& got,
                   const std::string& expected) {
    bool ok = got == expected;
    if (!ok) ++failures;
    checks.push_back({{"name", name}, {"expected", expected}, {"got", got},
                      {"ok", ok}});
    if (!as_json) {
      if (ok)
        std::cout << "ok   " << name << ": " << got << "\n";
      else
        std::cout << "FAIL " << name << ": expected " << expected << ", got "
                  << got << "\n";
    }
  };

  check("k3 rank", std::to_string(l.rank()), "22");
  check("k3 signature", sig_str(signature(l)), "(3,19,0)");
  check("k3 even", is_even(l) ? "true" : "false", "true");
  check("k3 unimodular", is_unimodular(l) ? "true" : "false", "true");

  json cert_json;
  try {
    Isometry swap = verify_isometry(l, swap_involution_k3().matrix);
    Isometry negid = neg_identity(l);
    Isometry id = identity_isometry(l);

    check("in_gamma(swap_k3)", in_gamma(swap) ? "true" : "false", "true");
    check("in_gamma(neg_id)", in_gamma(negid) ? "true" : "false", "false");
    check("in_gamma(id)", in_gamma(id) ? "true" : "false", "true");

    TCRProfile p = tcr_decompose(l, swap);
    std::ostringstream tcr;
    tcr << "(" << p.t << "," << p.c << "," << p.r << ")";
    check("tcr(swap_k3)", tcr.str(), "(0,0,11)");
    check("t + c + 2r", std::to_string(p.t + p.c + 2 * p.r), "22");

    EquivariantInvariants eq = equivariant_signature(l, swap);
    std::ostringstream eqs;
    eqs << "(" << eq.b_plus_g << "," << eq.b_minus_g << "," << eq.sigma_g << ")";
    check("equivariant (b+,b-,sigma)", eqs.str(), "(3,8,-5)");

    check("even prediction", std::to_string(even_prediction(-16)), "-8");
    check("parity", to_string(classify_parity(-16, eq.sigma_g)), "Odd");

    ObstructionCertificate cert = nielsen_certificate(swap);
    cert_json = certificate_to_json(cert);
    check("fixed surfaces k",
          cert.fixed_points ? std::to_string(cert.fixed_points->k) : "none", "1");
    check("total genus",
          cert.fixed_points ? std::to_string(cert.fixed_points->total_genus)
                            : "none",
          "0");
    check("fixed surface square",
          cert.total_square ? std::to_string(*cert.total_square) : "none", "6");
    check("adjunction",
          cert.steps.back().status == StepStatus::Contradiction ? "violated"
                                                                : "satisfied",
          "violated");
    check("verdict", to_string(cert.verdict), "NotRealizableAsSmoothInvolution");
  } catch (const std::exception& e) {
    ++failures;
    checks.push_back({{"name", "pipeline"}, {"error", e.what()}, {"ok", false}});
    if (!as_json) std::cout << "FAIL pipeline: " << e.what() << "\n";
  }

  if (as_json) {
    json report;
    report["command"] = "paper-verify";
    report["checks"] = checks;
    if (!cert_json.is_null()) report["certificate"] = cert_json;
    report["exit_code"] = failures == 0 ? 0 : 2;
    std::cout << report.dump(2) << "\n";
  } else if (failures == 0) {
    std::cout << "all checks passed\n";
  } else {
    std::cout << failures << " check(s) failed\n";
  }
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with the K3 lattice and its isometries"};
  app.require_subcommand(1);

  bool json_out = false;
  bool corrupt = false;
  auto* verify = app.add_subcommand(
      "paper-verify", "replay the involution obstruction against built-in expected values");
  verify->add_flag("--json", json_out, "machine-readable report");
  verify->add_flag("--corrupt-gram", corrupt,
                   "corrupt the built-in Gram matrix (negative control)")
      ->group("");

  std::string lattice_arg, mode_arg;
  auto* lat = app.add_subcommand("lattice", "lattice invariants");
  lat->add_option("mode", mode_arg, "info or json")->required();
  lat->add_option("name_or_file", lattice_arg, "built-in name or JSON file")
      ->required();

  std::string inv_arg;
  auto* inv = app.add_subcommand("involution", "involution structure");
  std::string inv_mode;
  inv->add_option("mode", inv_mode, "analyze")->required();
  inv->add_option("name_or_file", inv_arg)->required();

  std::string cert_arg;
  bool cert_json_out = false;
  auto* cert = app.add_subcommand("certificate", "obstruction certificate");
  cert->add_option("name_or_file", cert_arg)->required();
  cert->add_flag("--json", cert_json_out);

  std::string roots_lattice;
  long roots_target = 0;
  bool roots_json_out = false;
  auto* roots = app.add_subcommand("roots", "enumerate vectors of a given self-pairing");
  roots->add_option("name_or_file", roots_lattice)->required();
  roots->add_option("target", roots_target)->required();
  roots->add_flag("--json", roots_json_out);

  std::string plane_file, period_mode;
  bool period_json_out = false;
  auto* period = app.add_subcommand("period", "period-domain wall checks");
  period->add_option("mode", period_mode, "check-w")->required();
  period->add_option("plane_file", plane_file)->required();
  period->add_flag("--json", period_json_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_paper_verify(json_out, corrupt);

    if (*lat) {
      Lattice l = resolve_lattice(lattice_arg);
      if (mode_arg == "json") {
        std::cout << lattice_to_json(l).dump(2) << "\n";
      } else if (mode_arg == "info") {
        std::cout << "rank: " << l.rank() << "\n"
                  << "signature: " << sig_str(signature(l)) << "\n"
                  << "even: " << (is_even(l) ? "true" : "false") << "\n"
                  << "unimodular: " << (is_unimodular(l) ? "true" : "false")
                  << "\n";
        if (l.rank() > 0) std::cout << "det: " << det(l.gram) << "\n";
      } else {
        throw std::invalid_argument("lattice mode must be info or json");
      }
      return 0;
    }

    if (*inv) {
      if (inv_mode != "analyze")
        throw std::invalid_argument("involution mode must be analyze");
      Isometry a = resolve_isometry(inv_arg);
      TCRProfile p = tcr_decompose(a.lattice, a);
      std::cout << "tcr: (" << p.t << "," << p.c << "," << p.r << ")\n";
      std::cout << "free type: " << (is_free_type(p) ? "true" : "false") << "\n";
      EquivariantInvariants eq = equivariant_signature(a.lattice, a);
      std::cout << "equivariant: b+ = " << eq.b_plus_g << ", b- = " << eq.b_minus_g
                << ", sigma = " << eq.sigma_g << "\n";
      return 0;
    }

    if (*cert) {
      Isometry a = resolve_isometry(cert_arg);
      ObstructionCertificate c = nielsen_certificate(a);
      if (cert_json_out) {
        std::cout << certificate_to_json(c).dump(2) << "\n";
      } else {
        for (const CertificateStep& s : c.steps) {
          std::cout << s.name << ": " << s.value << " [" << to_string(s.status)
                    << "]\n";
        }
        std::cout << "verdict: " << to_string(c.verdict) << "\n";
      }
      return 0;
    }

    if (*roots) {
      Lattice l = resolve_lattice(roots_lattice);
      std::vector<IntVec> vs = short_vectors(l, Int(roots_target));
      if (roots_json_out) {
        json j;
        j["count"] = vs.size();
        j["vectors"] = root_list_to_json(vs);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "count: " << vs.size() << "\n";
        for (const IntVec& v : vs) {
          for (std::size_t i = 0; i < v.size(); ++i)
            std::cout << (i ? " " : "") << v[i];
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*period) {
      if (period_mode != "check-w")
        throw std::invalid_argument("period mode must be check-w");
      RationalPlane p = plane_from_json(load_json_file(plane_file));
      bool in_w = is_in_W(p);
      if (period_json_out) {
        json j;
        j["in_w"] = in_w;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (in_w ? "in W" : "not in W") << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
