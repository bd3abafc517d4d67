#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covchan/capacity.hpp"
#include "covchan/io.hpp"
#include "covchan/quditbasis.hpp"
#include "covchan/registry.hpp"
#include "covchan/solver.hpp"
#include "covchan/zoo.hpp"

namespace {

using covchan::Channel;
using covchan::Complex;
using covchan::Json;
using covchan::Matrix;
using covchan::ParamMap;

// Raised when a solve yields only the zero solution; mapped to exit 3.
struct EmptySolution : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty numeric value");
  auto bad = [&]() -> void {
    throw std::invalid_argument("cannot parse '" + raw + "' as a number (forms: 1.5, 2i, 1+2i)");
  };
  auto parse_real = [&](const std::string& t) -> double {
    if (t == "+" || t == "") return 1.0;  // bare 'i' coefficient
    if (t == "-") return -1.0;
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &pos);
    } catch (...) {
      bad();
    }
    if (pos != t.size()) bad();
    return v;
  };
  bool has_i = s.back() == 'i' || s.back() == 'I';
  std::string body = has_i ? s.substr(0, s.size() - 1) : s;
  // Split at the sign that separates real and imaginary parts: the last
  // '+'/'-' not at position 0 and not an exponent sign.
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (!has_i) {
    return {parse_real(body), 0.0};
  }
  if (split == std::string::npos) {
    return {0.0, parse_real(body)};
  }
  return {parse_real(body.substr(0, split)), parse_real(body.substr(split))};
}

ParamMap parse_params(const std::vector<std::string>& raw) {
  ParamMap out;
  for (const std::string& group : raw) {
    size_t start = 0;
    while (start <= group.size()) {
      size_t end = group.find(',', start);
      std::string item = group.substr(start, end == std::string::npos ? end : end - start);
      start = end == std::string::npos ? group.size() + 1 : end + 1;
      if (item.empty()) continue;
      size_t eq = item.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("parameter '" + item + "' is not of the form key=value");
      }
      std::string key = item.substr(0, eq);
      std::string val = item.substr(eq + 1);
      if (key == "gen") {
        // Shift-generator shorthand for symmetric-pauli: gen=01 -> m=0, n=1.
        if (val.size() != 2 || val[0] < '0' || val[0] > '9' || val[1] < '0' || val[1] > '9') {
          throw std::invalid_argument("parameter gen expects two digits, e.g. gen=01");
        }
        out["m"] = Complex(val[0] - '0', 0.0);
        out["n"] = Complex(val[1] - '0', 0.0);
      } else {
        out[key] = parse_complex(val);
      }
    }
  }
  return out;
}

Json json_complex(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json json_matrix(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_complex(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json json_real_matrix(const covchan::RealMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

Json json_params(const ParamMap& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = json_complex(v);
  return out;
}

void emit_report(const Json& report, const std::string& out_path) {
  std::string text = report.dump(2);
  std::cout << text << "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    f << text << "\n";
  }
}

// ---------------------------------------------------------------- family --

int cmd_family(const std::string& name, const std::vector<std::string>& raw_params,
               const std::string& out_path) {
  ParamMap params = parse_params(raw_params);
  covchan::FamilyChannel fam = covchan::make_family(name, params);
  Json meta;
  meta["family"] = fam.family;
  meta["params"] = json_params(fam.params);
  meta["tp"] = fam.tp;
  meta["cp"] = fam.cp;
  meta["minChoiEig"] = fam.min_choi_eig;
  if (!fam.notes.empty()) meta["notes"] = fam.notes;
  if (!fam.warnings.empty()) meta["warnings"] = fam.warnings;
  Json file = covchan::channel_to_json(fam.channel, meta);
  if (!out_path.empty()) {
    covchan::write_channel_file(out_path, fam.channel, meta);
  }
  std::cout << file.dump(2) << "\n";
  return 0;
}

// -------------------------------------------------------------- classify --

Json classification_json(const covchan::Classification& cls) {
  Json j;
  j["cp"] = cls.cp;
  j["tp"] = cls.tp;
  j["unital"] = cls.unital;
  j["minChoiEig"] = cls.min_choi_eig;
  j["tpResidual"] = cls.tp_residual;
  j["unitalResidual"] = cls.unital_residual;
  return j;
}

// Affine rows/columns computed directly from a Choi matrix so that non-CP
// inputs can still be classified.
covchan::RealMatrix affine_from_choi(const covchan::ChoiMatrix& j) {
  covchan::HermitianBasis basis = covchan::gell_mann_basis(j.d);
  int n = j.d * j.d;
  covchan::RealMatrix lambda(n, n);
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      Complex v = (basis.gammas[mu] * covchan::apply_choi(j, basis.gammas[nu])).trace();
      if (std::abs(v.imag()) > 1e-9) {
        throw std::runtime_error("affine coefficients came out non-real; Choi input malformed?");
      }
      lambda(mu, nu) = v.real();
    }
  }
  return lambda;
}

void add_affine_report(Json& report, const covchan::RealMatrix& lambda) {
  int n = static_cast<int>(lambda.rows());
  report["lambda00"] = lambda(0, 0);
  double row0 = 0.0, col0 = 0.0;
  for (int k = 1; k < n; ++k) {
    row0 += lambda(0, k) * lambda(0, k);
    col0 += lambda(k, 0) * lambda(k, 0);
  }
  report["row0TailNorm"] = std::sqrt(row0);  // 0 iff trace preserving
  report["col0TailNorm"] = std::sqrt(col0);  // 0 iff unital
  report["lambda"] = json_real_matrix(lambda);
}

int cmd_classify(const std::string& file, const std::string& choi_file,
                 const std::string& out_path) {
  Json report;
  if (!choi_file.empty()) {
    int d = 0;
    Matrix jm = covchan::read_choi_file(choi_file, &d);
    covchan::ChoiMatrix j{d, jm};
    covchan::Classification cls = covchan::classify_choi(j);
    report = classification_json(cls);
    add_affine_report(report, affine_from_choi(j));
    report["source"] = "choi";
  } else {
    Channel ch = covchan::read_channel_file(file);
    covchan::Classification cls = covchan::classify(ch);
    report = classification_json(cls);
    covchan::AffineRep aff = covchan::affine_rep(ch);
    add_affine_report(report, aff.lambda_full);
    report["label"] = ch.label;
    report["source"] = "kraus";
  }
  emit_report(report, out_path);
  return 0;
}

// ----------------------------------------------------------------- solve --

int cmd_solve(const std::string& group, const std::string& d1, const std::string& d2,
              const std::string& omega, bool symmetric, bool tp_normalize,
              const std::string& channel_out, const std::string& out_path) {
  covchan::SolveProblem problem = covchan::resolve_problem(group, d1, d2, omega);
  covchan::IntertwinerSolution sol;
  if (symmetric) {
    if (problem.lie) {
      throw std::invalid_argument("--symmetric solving is catalogued for finite groups only");
    }
    sol = covchan::solve_symmetric(problem.fin_d1, problem.fin_omega);
    sol.omega_label = problem.omega_name;
  } else {
    sol = covchan::solve_problem(problem);
  }

  Json report;
  report["group"] = group;
  report["d1"] = problem.d1_name;
  report["d2"] = problem.d2_name;
  report["omega"] = problem.omega_name;
  report["equation"] = symmetric ? "symmetry" : "covariance";
  report["omegaDim"] = sol.omega_dim;
  report["multiplicity"] = sol.multiplicity;
  report["residual"] = sol.residual;

  if (sol.multiplicity == 0) {
    emit_report(report, out_path);
    throw EmptySolution("no nonzero solution: omega '" + problem.omega_name +
                        "' does not occur in the representation the " +
                        (symmetric ? std::string("symmetry") : std::string("covariance")) +
                        " equation acts on, so only A = 0 satisfies it");
  }

  Json multiplets = Json::array();
  for (const auto& mult : sol.multiplets) {
    Json ops = Json::array();
    for (const Matrix& op : mult) ops.push_back(json_matrix(op));
    multiplets.push_back(ops);
  }
  report["multiplets"] = multiplets;

  if (tp_normalize) {
    Json normalized = Json::array();
    for (size_t k = 0; k < sol.multiplets.size(); ++k) {
      const auto& mult = sol.multiplets[k];
      int dch = static_cast<int>(mult[0].rows());
      Matrix s = Matrix::Zero(dch, dch);
      for (const Matrix& op : mult) s += op.adjoint() * op;
      double c = s.trace().real() / dch;
      Channel ch;
      try {
        ch = covchan::normalize_tp(mult, 1e-8, group + ":" + problem.omega_name);
      } catch (const std::exception& e) {
        throw std::invalid_argument("multiplet " + std::to_string(k) +
                                    " cannot be normalized to a channel: " + e.what());
      }
      Json meta;
      meta["group"] = group;
      meta["d1"] = problem.d1_name;
      meta["d2"] = problem.d2_name;
      meta["omega"] = problem.omega_name;
      meta["multiplet"] = k;
      meta["tpNormalizationC"] = c;
      Json jch = covchan::channel_to_json(ch, meta);
      if (!channel_out.empty()) {
        std::string path = channel_out + "_" + std::to_string(k) + ".json";
        covchan::write_channel_file(path, ch, meta);
        jch["writtenTo"] = path;
      }
      normalized.push_back(jch);
    }
    report["tpNormalized"] = normalized;
  }

  emit_report(report, out_path);
  return 0;
}

// -------------------------------------------------------------- capacity --

std::optional<double> try_closed_form(const std::string& family, const ParamMap& params,
                                      bool force) {
  if (family != "symmetric-pauli" && family != "su3-8" && family != "su3-6") {
    return std::nullopt;
  }
  return covchan::closed_form_capacity(family, params, force);
}

struct SweepSpec {
  std::string key;
  double start = 0.0, stop = 0.0, step = 0.0;
};

SweepSpec parse_sweep(const std::string& text) {
  SweepSpec s;
  size_t eq = text.find('=');
  if (eq == std::string::npos) throw std::invalid_argument("--sweep expects key=start:stop:step");
  s.key = text.substr(0, eq);
  std::string rest = text.substr(eq + 1);
  size_t c1 = rest.find(':');
  size_t c2 = c1 == std::string::npos ? std::string::npos : rest.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw std::invalid_argument("--sweep expects key=start:stop:step");
  }
  try {
    s.start = std::stod(rest.substr(0, c1));
    s.stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
    s.step = std::stod(rest.substr(c2 + 1));
  } catch (...) {
    throw std::invalid_argument("--sweep bounds must be numbers");
  }
  if (s.step <= 0.0 || s.stop < s.start) {
    throw std::invalid_argument("--sweep needs step > 0 and stop >= start");
  }
  return s;
}

struct CapacityPoint {
  double param = 0.0;
  bool has_param = false;
  std::optional<double> s_min, capacity;
  std::optional<double> closed_form;
  std::string method;
  int restarts_converged = 0;
  covchan::Vector minimizer;
};

CapacityPoint capacity_point(const Channel& ch, const std::string& family, const ParamMap& params,
                             bool force, std::uint64_t seed, int restarts) {
  CapacityPoint pt;
  covchan::Classification cls = covchan::classify(ch);
  std::optional<double> closed = try_closed_form(family, params, force || !cls.cp);
  pt.closed_form = closed;
  if (cls.cp && cls.tp) {
    covchan::CapacityReport rep = covchan::covariant_capacity(ch, seed, restarts);
    pt.s_min = rep.s_min;
    pt.capacity = rep.capacity;
    pt.method = rep.method;
    pt.restarts_converged = rep.restarts_converged;
    pt.minimizer = rep.minimizer;
  } else if (force && closed.has_value()) {
    pt.method = "closed-form";
    pt.capacity = closed;
  } else {
    throw std::invalid_argument(
        "channel is not a CP trace-preserving map (min Choi eigenvalue " +
        covchan::format_sig(cls.min_choi_eig) +
        "); pass --force to report the closed form where one exists");
  }
  return pt;
}

int cmd_capacity(const std::string& file, const std::string& family,
                 const std::vector<std::string>& raw_params, const std::string& sweep_text,
                 const std::string& csv_path, bool force, std::uint64_t seed, int restarts,
                 const std::string& out_path) {
  if (file.empty() == family.empty()) {
    throw std::invalid_argument("capacity needs exactly one input: a channel file or --family");
  }
  ParamMap params = parse_params(raw_params);

  if (!sweep_text.empty()) {
    if (family.empty()) {
      throw std::invalid_argument("--sweep requires --family (the swept parameter is rebuilt)");
    }
    SweepSpec sweep = parse_sweep(sweep_text);
    std::vector<CapacityPoint> points;
    for (double v = sweep.start; v <= sweep.stop + 1e-12; v += sweep.step) {
      ParamMap p = params;
      p[sweep.key] = Complex(v, 0.0);
      covchan::FamilyChannel fam = covchan::make_family(family, p);
      CapacityPoint pt = capacity_point(fam.channel, family, p, force, seed, restarts);
      pt.param = v;
      pt.has_param = true;
      points.push_back(pt);
    }
    Json rows = Json::array();
    std::string csv = sweep.key + ",sMin,capacity,closedForm,absDiff\n";
    for (const CapacityPoint& pt : points) {
      Json row;
      row[sweep.key] = pt.param;
      if (pt.s_min) row["sMin"] = *pt.s_min;
      if (pt.capacity) row["capacity"] = *pt.capacity;
      if (pt.closed_form) row["closedForm"] = *pt.closed_form;
      if (pt.capacity && pt.closed_form) row["absDiff"] = std::abs(*pt.capacity - *pt.closed_form);
      row["method"] = pt.method;
      rows.push_back(row);
      csv += covchan::format_sig(pt.param);
      csv += ",";
      csv += pt.s_min ? covchan::format_sig(*pt.s_min) : "";
      csv += ",";
      csv += pt.capacity ? covchan::format_sig(*pt.capacity) : "";
      csv += ",";
      csv += pt.closed_form ? covchan::format_sig(*pt.closed_form) : "";
      csv += ",";
      csv += (pt.capacity && pt.closed_form)
                 ? covchan::format_sig(std::abs(*pt.capacity - *pt.closed_form))
                 : "";
      csv += "\n";
    }
    if (!csv_path.empty()) {
      std::ofstream f(csv_path);
      if (!f) throw std::runtime_error("cannot open '" + csv_path + "' for writing");
      f << csv;
    }
    Json report;
    report["family"] = family;
    report["sweep"] = sweep_text;
    report["points"] = rows;
    emit_report(report, out_path);
    return 0;
  }

  Channel ch;
  if (!family.empty()) {
    covchan::FamilyChannel fam = covchan::make_family(family, params);
    ch = fam.channel;
  } else {
    ch = covchan::read_channel_file(file);
  }
  CapacityPoint pt = capacity_point(ch, family, params, force, seed, restarts);
  Json report;
  if (!family.empty()) report["family"] = family;
  if (pt.s_min) report["sMin"] = *pt.s_min;
  if (pt.capacity) report["capacity"] = *pt.capacity;
  if (pt.closed_form) {
    report["closedForm"] = *pt.closed_form;
    if (pt.capacity) report["absDiff"] = std::abs(*pt.capacity - *pt.closed_form);
  }
  report["method"] = pt.method;
  if (pt.method == "optimizer") {
    report["restartsConverged"] = pt.restarts_converged;
    Json mv = Json::array();
    for (int i = 0; i < pt.minimizer.size(); ++i) mv.push_back(json_complex(pt.minimizer(i)));
    report["minimizer"] = mv;
  }
  emit_report(report, out_path);
  return 0;
}

// ----------------------------------------------------------------- check --

std::vector<std::string> split_colons(const std::string& s) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t c = s.find(':', start);
    if (c == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, c - start));
    start = c + 1;
  }
  return parts;
}

int cmd_check(const std::string& file, const std::string& covariant_under,
              const std::string& symmetric_under, std::uint64_t seed,
              const std::string& out_path) {
  if (covariant_under.empty() == symmetric_under.empty()) {
    throw std::invalid_argument(
        "check needs exactly one of --covariant-under group:d1:d2 or --symmetric-under group:d");
  }
  Channel ch = covchan::read_channel_file(file);
  Json report;
  report["label"] = ch.label;
  covchan::CovarianceCheck res;
  if (!covariant_under.empty()) {
    auto parts = split_colons(covariant_under);
    if (parts.size() > 3) {
      throw std::invalid_argument("--covariant-under expects group[:d1[:d2]]");
    }
    std::string group = parts[0];
    std::string d1 = parts.size() > 1 ? parts[1] : "";
    std::string d2 = parts.size() > 2 ? parts[2] : d1;
    covchan::CheckRep r1 = covchan::resolve_check_rep(group, d1);
    covchan::CheckRep r2 = covchan::resolve_check_rep(group, d2);
    if (r1.lie != r2.lie) throw std::invalid_argument("mixed finite/Lie representations");
    res = r1.lie ? covchan::check_covariance(ch, r1.lie_rep, r2.lie_rep, 1e-9, seed)
                 : covchan::check_covariance(ch, r1.generators, r2.generators, 1e-9, seed);
    report["covariant"] = res.ok;
    report["group"] = group;
  } else {
    auto parts = split_colons(symmetric_under);
    if (parts.size() > 2) throw std::invalid_argument("--symmetric-under expects group[:d]");
    std::string group = parts[0];
    std::string d = parts.size() > 1 ? parts[1] : "";
    covchan::CheckRep r = covchan::resolve_check_rep(group, d);
    if (r.lie) {
      // Invariance under every one-parameter subgroup of the rep.
      covchan::CovarianceCheck worst{true, 0.0};
      for (const Matrix& t : r.lie_rep.generators) {
        std::vector<Matrix> elems;
        for (double theta : {0.3, 0.7, 1.1}) elems.push_back(covchan::exp_i(t, theta));
        covchan::CovarianceCheck c = covchan::check_symmetry(ch, elems, 1e-9, seed);
        worst.ok = worst.ok && c.ok;
        worst.max_residual = std::max(worst.max_residual, c.max_residual);
      }
      res = worst;
    } else {
      res = covchan::check_symmetry(ch, r.generators, 1e-9, seed);
    }
    report["symmetric"] = res.ok;
    report["group"] = group;
  }
  report["maxResidual"] = res.max_residual;
  emit_report(report, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit channel covariance toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = covchan::kDefaultSeed;
  app.add_option("--seed", seed, "Seed for all stochastic components")
      ->envname("COVCHAN_SEED");

  // family
  auto* fam = app.add_subcommand("family", "Build a catalogued channel family");
  std::string fam_name, fam_out;
  std::vector<std::string> fam_params;
  fam->add_option("name", fam_name, "Family name")->required();
  fam->add_option("--param", fam_params, "Parameters key=value[,key=value...]");
  fam->add_option("--out", fam_out, "Write the channel file here");

  // classify
  auto* cls = app.add_subcommand("classify", "Classify a channel file");
  std::string cls_file, cls_choi, cls_out;
  cls->add_option("file", cls_file, "Channel file (JSON)");
  cls->add_option("--from-choi", cls_choi, "Classify a Choi matrix file instead");
  cls->add_option("--out", cls_out, "Write the report here");

  // solve
  auto* slv = app.add_subcommand("solve", "Solve the covariance or symmetry equation");
  std::string slv_group, slv_d1, slv_d2, slv_omega, slv_channel_out, slv_out;
  bool slv_symmetric = false, slv_tp = false;
  slv->add_option("--group", slv_group, "Group name")->required();
  slv->add_option("--d1", slv_d1, "Input representation (default per group)");
  slv->add_option("--d2", slv_d2, "Output representation (default per group)");
  slv->add_option("--omega", slv_omega, "Omega label")->required();
  slv->add_flag("--symmetric", slv_symmetric, "Solve the symmetry equation instead");
  slv->add_flag("--tp-normalize", slv_tp, "Normalize each multiplet to a channel");
  slv->add_option("--channel-out", slv_channel_out, "Prefix for per-multiplet channel files");
  slv->add_option("--out", slv_out, "Write the report here");

  // capacity
  auto* cap = app.add_subcommand("capacity", "One-shot capacity of a covariant channel");
  std::string cap_file, cap_family, cap_sweep, cap_csv, cap_out;
  std::vector<std::string> cap_params;
  bool cap_force = false;
  int cap_restarts = 32;
  cap->add_option("file", cap_file, "Channel file (JSON)");
  cap->add_option("--family", cap_family, "Build this family instead of reading a file");
  cap->add_option("--param", cap_params, "Family parameters");
  cap->add_option("--sweep", cap_sweep, "Parameter sweep key=start:stop:step");
  cap->add_option("--csv", cap_csv, "Write sweep results as CSV");
  cap->add_option("--restarts", cap_restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
  cap->add_flag("--force", cap_force, "Evaluate closed forms outside the CP range");
  cap->add_option("--out", cap_out, "Write the report here");

  // check
  auto* chk = app.add_subcommand("check", "Check covariance or symmetry numerically");
  std::string chk_file, chk_cov, chk_sym, chk_out;
  chk->add_option("file", chk_file, "Channel file (JSON)")->required();
  chk->add_option("--covariant-under", chk_cov, "group[:d1[:d2]]");
  chk->add_option("--symmetric-under", chk_sym, "group[:d]");
  chk->add_option("--out", chk_out, "Write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fam->parsed()) return cmd_family(fam_name, fam_params, fam_out);
    if (cls->parsed()) return cmd_classify(cls_file, cls_choi, cls_out);
    if (slv->parsed()) {
      return cmd_solve(slv_group, slv_d1, slv_d2, slv_omega, slv_symmetric, slv_tp,
                       slv_channel_out, slv_out);
    }
    if (cap->parsed()) {
      return cmd_capacity(cap_file, cap_family, cap_params, cap_sweep, cap_csv, cap_force, seed,
                          cap_restarts, cap_out);
    }
    if (chk->parsed()) return cmd_check(chk_file, chk_cov, chk_sym, seed, chk_out);
  } catch (const EmptySolution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
