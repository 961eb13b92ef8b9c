#include "isct/problem.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "isct/errors.hpp"

namespace isct {

namespace {

struct KeyedValue {
  std::string value;
  int line = 0;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
  std::ostringstream os;
  os << name;
  if (line > 0) os << ":" << line;
  os << ": " << msg;
  throw input_error(os.str());
}

long long parse_int(const std::string& name, int line, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) fail(name, line, "expected an integer");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    fail(name, line, "malformed integer '" + t + "'");
  }
  if (pos != t.size()) fail(name, line, "malformed integer '" + t + "'");
  return v;
}

std::vector<long long> parse_int_list(const std::string& name, int line,
                                      const std::string& text) {
  std::vector<long long> out;
  std::string item;
  std::istringstream is(trim(text));
  while (std::getline(is, item, ',')) out.push_back(parse_int(name, line, item));
  if (out.empty()) fail(name, line, "expected a comma-separated integer list");
  return out;
}

}  // namespace

HypersurfaceFamily parse_input_text(const std::string& text,
                                    const std::string& display_name) {
  static const std::vector<std::string> known_keys = {
      "n", "degree", "singularity", "exponents", "weights", "wdegree"};

  std::map<std::string, KeyedValue> values;
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(display_name, line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(display_name, line_no, "missing key before '='");
    if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end())
      fail(display_name, line_no, "unknown key '" + key + "'");
    if (values.count(key))
      fail(display_name, line_no,
           "duplicate key '" + key + "' (first seen on line " +
               std::to_string(values[key].line) + ")");
    values[key] = {value, line_no};
  }

  const auto require = [&](const std::string& key) -> const KeyedValue& {
    const auto it = values.find(key);
    if (it == values.end())
      fail(display_name, 0, "missing required key '" + key + "'");
    return it->second;
  };
  const auto forbid = [&](const std::string& key, const std::string& why) {
    const auto it = values.find(key);
    if (it != values.end()) fail(display_name, it->second.line, why);
  };

  const KeyedValue& n_kv = require("n");
  const long long n = parse_int(display_name, n_kv.line, n_kv.value);
  if (n < 3) fail(display_name, n_kv.line, "n must be >= 3");

  const KeyedValue& d_kv = require("degree");
  const long long degree = parse_int(display_name, d_kv.line, d_kv.value);
  if (degree < 1) fail(display_name, d_kv.line, "degree must be >= 1");

  const KeyedValue& s_kv = require("singularity");
  SingularityGerm germ;
  if (s_kv.value == "brieskorn_pham") {
    forbid("weights", "weights are only valid with singularity = weighted_homogeneous");
    forbid("wdegree", "wdegree is only valid with singularity = weighted_homogeneous");
    const KeyedValue& e_kv = require("exponents");
    const std::vector<long long> exps =
        parse_int_list(display_name, e_kv.line, e_kv.value);
    if (static_cast<long long>(exps.size()) != n + 1)
      fail(display_name, e_kv.line,
           "expected " + std::to_string(n + 1) + " exponents");
    for (long long a : exps)
      if (a < 2) fail(display_name, e_kv.line, "exponents must be >= 2");
    germ = SingularityGerm::brieskorn_pham(exps);
  } else if (s_kv.value == "weighted_homogeneous") {
    forbid("exponents", "exponents are only valid with singularity = brieskorn_pham");
    const KeyedValue& w_kv = require("weights");
    const std::vector<long long> ws =
        parse_int_list(display_name, w_kv.line, w_kv.value);
    if (static_cast<long long>(ws.size()) != n + 1)
      fail(display_name, w_kv.line, "expected " + std::to_string(n + 1) + " weights");
    const KeyedValue& wd_kv = require("wdegree");
    const long long wdeg = parse_int(display_name, wd_kv.line, wd_kv.value);
    for (long long w : ws)
      if (w < 1 || w >= wdeg)
        fail(display_name, w_kv.line, "weights must satisfy 1 <= w_i < wdegree");
    germ = SingularityGerm::weighted_homogeneous(ws, wdeg);
  } else {
    fail(display_name, s_kv.line,
         "singularity must be brieskorn_pham or weighted_homogeneous");
  }

  return HypersurfaceFamily::make(static_cast<int>(n), degree, std::move(germ));
}

HypersurfaceFamily parse_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw input_error(path + ": cannot open problem file");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_input_text(buffer.str(), path);
}

}  // namespace isct
