#include "isct/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "isct/errors.hpp"
#include "isct/invariants.hpp"
#include "isct/problem.hpp"
#include "isct/report.hpp"

namespace isct {

namespace {

struct OutputOptions {
  bool json = false;
  std::string out_path;
};

void emit(const OutputOptions& opts, const std::string& text, std::ostream& out) {
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opts.out_path, std::ios::binary);
  if (!f) throw input_error("cannot write output file '" + opts.out_path + "'");
  f << text;
}

std::string join_json(std::vector<Json> docs) {
  if (docs.size() == 1) return docs.front().dump(2) + "\n";
  Json arr = Json::array();
  for (Json& d : docs) arr.push_back(std::move(d));
  return arr.dump(2) + "\n";
}

std::string join_text(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "\n";
    out += parts[i];
  }
  return out;
}

bool is_brieskorn_pham(const HypersurfaceFamily& f) {
  return f.germ.kind == SingularityGerm::Kind::brieskorn_pham;
}

std::string family_text_line(const HypersurfaceFamily& f) {
  std::ostringstream os;
  os << "family: n=" << f.n << " degree=" << f.degree;
  if (is_brieskorn_pham(f)) {
    os << " brieskorn_pham exponents=";
    for (std::size_t i = 0; i < f.germ.exponents.size(); ++i)
      os << (i ? "," : "") << f.germ.exponents[i];
  } else {
    os << " weighted_homogeneous weights=";
    for (std::size_t i = 0; i < f.germ.weights.size(); ++i)
      os << (i ? "," : "") << f.germ.weights[i];
    os << " wdegree=" << f.germ.wdegree;
  }
  return os.str();
}

int run_invariants(const std::vector<std::string>& files, const OutputOptions& opts,
                   std::ostream& out) {
  std::vector<Json> jsons;
  std::vector<std::string> texts;
  bool all_ok = true;
  for (const std::string& file : files) {
    const HypersurfaceFamily family = parse_input(file);
    if (!is_brieskorn_pham(family)) {
      // Weighted-homogeneous germs carry the Milnor number only.
      const long long mu = milnor_number_wh(family.germ);
      Json j = Json::object();
      j["family"] = family_json(family);
      Json mono = Json::object();
      mono["mu"] = mu;
      j["monodromy"] = std::move(mono);
      jsons.push_back(std::move(j));
      texts.push_back(family_text_line(family) + "\nmilnor number mu       = " +
                      std::to_string(mu) +
                      "\n(eigenvalue data requires a brieskorn_pham exponent form)\n");
      continue;
    }
    const InvariantReport report = assemble_report(family);
    all_ok = all_ok && report.all_pass();
    jsons.push_back(report_json(report));
    texts.push_back(render_report_text(report));
  }
  emit(opts, opts.json ? join_json(std::move(jsons)) : join_text(texts), out);
  return all_ok ? 0 : 1;
}

int run_zigzag(const std::vector<std::string>& files, const std::string& object,
               const OutputOptions& opts, std::ostream& out) {
  std::vector<Json> jsons;
  std::vector<std::string> texts;
  for (const std::string& file : files) {
    const HypersurfaceFamily family = parse_input(file);
    const MonodromyData md = monodromy_data(family.germ);
    const ZigZagBundle bundle = build_zigzags(md);
    ZigZag z;
    if (object == "nearby") {
      z = bundle.nearby;
    } else if (object == "vanishing") {
      z = bundle.c;
    } else if (object == "is") {
      z = bundle.is;
    } else {
      z = dual_zigzag(bundle.is);
    }
    jsons.push_back(report_with_zigzags_json(family, md, {{object, z}}));
    texts.push_back(family_text_line(family) + "\n" + render_zigzag_text(object, z));
  }
  emit(opts, opts.json ? join_json(std::move(jsons)) : join_text(texts), out);
  return 0;
}

int run_check(const std::vector<std::string>& files, const CheckSelection& selection,
              const OutputOptions& opts, std::ostream& out) {
  std::vector<Json> jsons;
  std::vector<std::string> texts;
  bool all_ok = true;
  for (const std::string& file : files) {
    const HypersurfaceFamily family = parse_input(file);
    const InvariantReport report = assemble_report(family, selection);
    all_ok = all_ok && report.all_pass();
    jsons.push_back(report_json(report));
    std::ostringstream os;
    for (const CheckResult& c : report.checks)
      os << "check " << c.name << ": " << (c.pass ? "pass" : "fail")
         << (c.pass ? "" : " (" + c.detail + ")") << "\n";
    texts.push_back(os.str());
  }
  emit(opts, opts.json ? join_json(std::move(jsons)) : join_text(texts), out);
  return all_ok ? 0 : 1;
}

int run_oracle(const std::vector<std::string>& files, const OutputOptions& opts,
               std::ostream& out) {
  std::vector<Json> jsons;
  std::vector<std::string> texts;
  bool all_ok = true;
  for (const std::string& file : files) {
    const HypersurfaceFamily family = parse_input(file);
    Json j = Json::object();
    j["family"] = family_json(family);
    Json oracles = Json::object();
    std::ostringstream os;
    os << family_text_line(family) << "\n";

    if (is_brieskorn_pham(family)) {
      const long long product = milnor_number_wh(family.germ);
      const long long enumerated = milnor_number_bp_oracle(family.germ.exponents);
      const bool ok = product == enumerated;
      all_ok = all_ok && ok;
      Json milnor = Json::object();
      milnor["product"] = product;
      milnor["enumeration"] = enumerated;
      milnor["verdict"] = ok ? "pass" : "fail";
      oracles["milnor"] = std::move(milnor);
      os << "milnor product formula = " << product << "\n";
      os << "milnor enumeration     = " << enumerated << "\n";
      os << "milnor oracle          : " << (ok ? "pass" : "fail") << "\n";
    }

    const std::vector<long long> betti = smooth_betti(family.n, family.degree);
    long long alternating = 0;
    long long sign = 1;
    for (long long b : betti) {
      alternating += sign * b;
      sign = -sign;
    }
    const long long chi = euler_characteristic_oracle(family.n, family.degree);
    const bool euler_ok = alternating == chi;
    all_ok = all_ok && euler_ok;
    Json euler = Json::object();
    euler["oracle"] = chi;
    euler["alternating_sum"] = alternating;
    euler["verdict"] = euler_ok ? "pass" : "fail";
    oracles["euler"] = std::move(euler);
    os << "euler oracle chi       = " << chi << "\n";
    os << "betti alternating sum  = " << alternating << "\n";
    os << "euler oracle           : " << (euler_ok ? "pass" : "fail") << "\n";

    j["oracles"] = std::move(oracles);
    jsons.push_back(std::move(j));
    texts.push_back(os.str());
  }
  emit(opts, opts.json ? join_json(std::move(jsons)) : join_text(texts), out);
  return all_ok ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact intersection-space invariants of projective hypersurfaces "
               "with one isolated weighted-homogeneous singularity"};
  app.name("isct");
  app.require_subcommand(1);

  struct SubArgs {
    std::vector<std::string> files;
    OutputOptions opts;
  };
  const auto add_common = [](CLI::App* cmd, SubArgs& s) {
    cmd->add_option("files", s.files, "problem file(s)")->required();
    cmd->add_flag("--json", s.opts.json, "emit a JSON report");
    cmd->add_option("--out", s.opts.out_path, "write the report to FILE");
  };

  SubArgs inv_args;
  CLI::App* inv = app.add_subcommand(
      "invariants", "compute Betti vectors, monodromy data, stalks and run all checks");
  add_common(inv, inv_args);

  SubArgs zz_args;
  std::string object;
  CLI::App* zz = app.add_subcommand("zigzag", "emit one zig-zag model");
  add_common(zz, zz_args);
  zz->add_option("--object", object, "which object: nearby|vanishing|is|dual-is")
      ->required()
      ->check(CLI::IsMember({"nearby", "vanishing", "is", "dual-is"}));

  SubArgs chk_args;
  bool all = false;
  CheckSelection picked;
  CLI::App* chk = app.add_subcommand("check", "run verification checks");
  add_common(chk, chk_args);
  chk->add_flag("--all", all, "run every check");
  chk->add_flag("--exactness", picked.exactness, "zig-zag exactness and shape checks");
  chk->add_flag("--splitting", picked.splitting, "constructive splitting check");
  chk->add_flag("--self-duality", picked.self_duality, "zig-zag self-duality check");
  chk->add_flag("--poincare", picked.poincare, "global Poincare duality check");
  chk->add_flag("--oracles", picked.oracles, "brute-force oracle agreements");

  SubArgs orc_args;
  CLI::App* orc = app.add_subcommand("oracle", "run only the brute-force oracles");
  add_common(orc, orc_args);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(inv))
      return run_invariants(inv_args.files, inv_args.opts, out);
    if (app.got_subcommand(zz))
      return run_zigzag(zz_args.files, object, zz_args.opts, out);
    if (app.got_subcommand(chk)) {
      const CheckSelection selection = all ? CheckSelection::all() : picked;
      if (!selection.any())
        throw input_error("check: select --all or at least one specific check");
      return run_check(chk_args.files, selection, chk_args.opts, out);
    }
    if (app.got_subcommand(orc))
      return run_oracle(orc_args.files, orc_args.opts, out);
    throw internal_error("no subcommand dispatched");
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    err << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const theorem_violation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace isct
