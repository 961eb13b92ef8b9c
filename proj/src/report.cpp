#include "isct/report.hpp"

#include <sstream>

namespace isct {

namespace {

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(to_fraction_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json stalk_row_json(const std::map<int, long long>& row) {
  Json j = Json::object();
  for (const auto& [degree, dim] : row) j[std::to_string(degree)] = dim;
  return j;
}

std::string vector_text(const std::vector<long long>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

std::string matrix_text(const RationalMatrix& m) {
  std::ostringstream os;
  if (m.rows() == 0 || m.cols() == 0) {
    os << "  (" << m.rows() << "x" << m.cols() << " empty)\n";
    return os.str();
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) os << " " << m.at(i, j).get_str();
    os << " ]\n";
  }
  return os.str();
}

}  // namespace

Json family_json(const HypersurfaceFamily& family) {
  Json j = Json::object();
  j["n"] = family.n;
  j["degree"] = family.degree;
  if (family.germ.kind == SingularityGerm::Kind::brieskorn_pham) {
    j["singularity"] = "brieskorn_pham";
    j["exponents"] = family.germ.exponents;
  } else {
    j["singularity"] = "weighted_homogeneous";
    j["weights"] = family.germ.weights;
    j["wdegree"] = family.germ.wdegree;
  }
  return j;
}

Json monodromy_json(const MonodromyData& md) {
  Json j = Json::object();
  j["mu"] = md.mu;
  j["mult_one"] = md.mult_one;
  j["rank_T_minus_1"] = md.rank_T_minus_1;
  Json cyc = Json::object();
  for (const auto& [m, e_m] : md.cyclotomic) cyc[std::to_string(m)] = e_m;
  j["cyclotomic"] = std::move(cyc);
  return j;
}

Json zigzag_json(const ZigZag& z) {
  Json j = Json::object();
  j["loc_rank"] = z.loc_rank;
  j["dims"] = {z.dim_v_minus, z.dim_a, z.dim_b, z.dim_v_plus};
  j["alpha"] = matrix_json(z.alpha);
  j["beta"] = matrix_json(z.beta);
  j["gamma"] = matrix_json(z.gamma);
  return j;
}

Json report_json(const InvariantReport& report) {
  Json j = Json::object();
  j["family"] = family_json(report.family);
  j["monodromy"] = monodromy_json(report.monodromy);
  Json betti = Json::object();
  betti["smooth"] = report.smooth;
  betti["hi"] = report.hi;
  betti["is_hyper"] = report.is_hyper;
  betti["link"] = {report.link.first, report.link.second};
  betti["fiber"] = report.fiber;
  j["betti"] = std::move(betti);
  Json stalks = Json::object();
  stalks["singular_point"] = stalk_row_json(report.stalks.singular_point);
  stalks["smooth_point"] = stalk_row_json(report.stalks.smooth_point);
  j["stalks"] = std::move(stalks);
  Json checks = Json::array();
  for (const CheckResult& c : report.checks) {
    Json entry = Json::object();
    entry["name"] = c.name;
    entry["verdict"] = c.pass ? "pass" : "fail";
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json report_with_zigzags_json(const HypersurfaceFamily& family,
                              const MonodromyData& md,
                              const std::map<std::string, ZigZag>& zigzags) {
  Json j = Json::object();
  j["family"] = family_json(family);
  j["monodromy"] = monodromy_json(md);
  Json zz = Json::object();
  for (const auto& [name, z] : zigzags) zz[name] = zigzag_json(z);
  j["zigzags"] = std::move(zz);
  return j;
}

std::string render_report_text(const InvariantReport& report) {
  std::ostringstream os;
  const HypersurfaceFamily& f = report.family;
  os << "family: n=" << f.n << " degree=" << f.degree;
  if (f.germ.kind == SingularityGerm::Kind::brieskorn_pham) {
    os << " brieskorn_pham exponents=";
    for (std::size_t i = 0; i < f.germ.exponents.size(); ++i)
      os << (i ? "," : "") << f.germ.exponents[i];
  } else {
    os << " weighted_homogeneous weights=";
    for (std::size_t i = 0; i < f.germ.weights.size(); ++i)
      os << (i ? "," : "") << f.germ.weights[i];
    os << " wdegree=" << f.germ.wdegree;
  }
  os << "\n";
  os << "milnor number mu       = " << report.monodromy.mu << "\n";
  os << "eigenvalue-1 mult      = " << report.monodromy.mult_one << "\n";
  os << "rank(T_x - 1)          = " << report.monodromy.rank_T_minus_1 << "\n";
  os << "cyclotomic char poly   =";
  for (const auto& [m, e_m] : report.monodromy.cyclotomic)
    os << " Phi_" << m << "^" << e_m;
  os << "\n";
  os << "smooth betti           = " << vector_text(report.smooth) << "\n";
  os << "hi betti               = " << vector_text(report.hi) << "\n";
  os << "is hypercohomology     = " << vector_text(report.is_hyper) << "\n";
  os << "link betti (b_" << (f.n - 1) << ", b_" << f.n << ")  = ("
     << report.link.first << ", " << report.link.second << ")\n";
  os << "fiber betti            = " << vector_text(report.fiber) << "\n";
  os << "stalks at x            : H^" << -f.n << " = 1, H^0 = "
     << report.stalks.singular_point.at(0) << "\n";
  os << "stalk at smooth point  : H^" << -f.n << " = 1\n";
  for (const CheckResult& c : report.checks)
    os << "check " << c.name << ": " << (c.pass ? "pass" : "fail")
       << (c.pass ? "" : " (" + c.detail + ")") << "\n";
  return os.str();
}

std::string render_zigzag_text(const std::string& name, const ZigZag& z) {
  std::ostringstream os;
  os << "zigzag " << name << " (loc_rank " << z.loc_rank << "): dims ("
     << z.dim_v_minus << ", " << z.dim_a << ", " << z.dim_b << ", "
     << z.dim_v_plus << ")\n";
  os << "alpha =\n" << matrix_text(z.alpha);
  os << "beta =\n" << matrix_text(z.beta);
  os << "gamma =\n" << matrix_text(z.gamma);
  return os.str();
}

}  // namespace isct
