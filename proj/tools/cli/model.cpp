#include "model.hpp"

#include <algorithm>
#include <regex>

#include "json.hpp"

#include "gencliff/errors.hpp"
#include "gencliff/examples.hpp"
#include "gencliff/parse.hpp"

namespace gencliff::cli {

namespace {

using nlohmann::json;

// The twistor suites append these to the chart.
constexpr std::array<std::string_view, 4> kSphereNames{"u1", "v1", "u2", "v2"};
// kMaxVars minus the four sphere coordinates.
constexpr std::size_t kMaxDim = kMaxVars - 4;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t k) { return ptr + "/" + std::to_string(k); }

const json& require(const json& obj, const char* key, const std::string& ptr) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(ptr.empty() ? "/" : ptr, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& v, const std::string& ptr) {
  if (!v.is_number_unsigned()) throw InputError(ptr, "expected a non-negative integer");
  return v.get<std::size_t>();
}

// Strings go through the scalar grammar; integers are accepted as a shorthand.
ScalarField as_scalar(const json& v, const Chart& chart, const std::string& ptr) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_number_integer()) {
    text = v.dump();
  } else if (v.is_number_float()) {
    throw InputError(ptr, "floating-point numbers are not exact; write the entry as a string such as \"1/2\"");
  } else {
    throw InputError(ptr, "expected an expression string");
  }
  try {
    return parse_expr(text, chart);
  } catch (const ParseError& e) {
    throw InputError(ptr + " (offset " + std::to_string(e.position()) + " in \"" + text + "\")", e.what());
  } catch (const std::domain_error& e) {
    throw InputError(ptr, e.what());
  }
}

ChartRef load_chart(const json& c, const std::string& ptr) {
  if (!c.is_object()) throw InputError(ptr, "expected an object");
  std::size_t dim = as_index(require(c, "dim", ptr), child(ptr, "dim"));
  if (dim == 0 || dim > kMaxDim)
    throw InputError(child(ptr, "dim"), "dimension must be between 1 and " + std::to_string(kMaxDim));
  std::vector<std::string> names;
  if (auto it = c.find("coords"); it != c.end()) {
    std::string cp = child(ptr, "coords");
    if (!it->is_array() || it->size() != dim) throw InputError(cp, "expected an array of " + std::to_string(dim) + " names");
    for (std::size_t k = 0; k < dim; ++k) {
      const json& n = (*it)[k];
      if (!n.is_string()) throw InputError(child(cp, k), "expected a name");
      std::string s = n.get<std::string>();
      if (std::find(kSphereNames.begin(), kSphereNames.end(), s) != kSphereNames.end())
        throw InputError(child(cp, k), "'" + s + "' is reserved for the sphere coordinates");
      names.push_back(std::move(s));
    }
  } else {
    for (std::size_t k = 1; k <= dim; ++k) names.push_back("x" + std::to_string(k));
  }
  try {
    return make_chart(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw InputError(child(ptr, "coords"), e.what());
  }
}

FluxForm load_flux(const json& f, const ChartRef& chart, const std::string& ptr) {
  if (!f.is_array()) throw InputError(ptr, "expected an array of terms");
  KForm h(chart, 3);
  for (std::size_t t = 0; t < f.size(); ++t) {
    std::string tp = child(ptr, t);
    const json& term = f[t];
    if (!term.is_object()) throw InputError(tp, "expected an object");
    const json& idx = require(term, "indices", tp);
    std::string ip = child(tp, "indices");
    if (!idx.is_array() || idx.size() != 3) throw InputError(ip, "expected three indices");
    FormIndex fi;
    for (std::size_t k = 0; k < 3; ++k) {
      std::size_t i = as_index(idx[k], child(ip, k));
      if (i >= chart->dim()) throw InputError(child(ip, k), "index out of range for dimension " + std::to_string(chart->dim()));
      fi.push_back(static_cast<std::uint8_t>(i));
    }
    int sign = permutation_sign(fi);
    if (sign == 0) throw InputError(ip, "repeated index");
    ScalarField coeff = as_scalar(require(term, "coeff", tp), *chart, child(tp, "coeff"));
    if (sign < 0) coeff = -coeff;
    h = h + coeff * KForm::basis(chart, fi);
  }
  return FluxForm(std::move(h));
}

Matrix load_matrix(const json& m, const ChartRef& chart, const std::string& ptr) {
  const std::size_t n = 2 * chart->dim();
  if (!m.is_array() || m.size() != n) throw InputError(ptr, "expected " + std::to_string(n) + " rows");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    std::string rp = child(ptr, r);
    if (!m[r].is_array() || m[r].size() != n) throw InputError(rp, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) out(r, c) = as_scalar(m[r][c], *chart, child(rp, c));
  }
  return out;
}

CliffordTriple load_triple(const json& t, const ChartRef& chart, const std::optional<FluxForm>& flux,
                           const std::string& ptr) {
  if (!t.is_object()) throw InputError(ptr, "expected an object with I1, I2, I3");
  std::array<Matrix, 3> m;
  for (std::size_t k = 0; k < 3; ++k) {
    std::string key = "I" + std::to_string(k + 1);
    m[k] = load_matrix(require(t, key.c_str(), ptr), chart, child(ptr, key));
  }
  return CliffordTriple(EndField(chart, m[0], flux), EndField(chart, m[1], flux), EndField(chart, m[2], flux));
}

CliffordTriple named_builtin(std::string_view name, const std::string& ptr) {
  try {
    return builtin(name);
  } catch (const std::invalid_argument&) {
    std::string known;
    for (const auto& b : builtin_names()) known += (known.empty() ? "" : ", ") + b;
    throw InputError(ptr, "unknown builtin '" + std::string(name) + "' (known: " + known + ")");
  }
}

// The builtin's own flux is kept unless the document supplies one.
CliffordTriple rejudged(const CliffordTriple& t, const std::optional<FluxForm>& flux) {
  if (!flux) return t;
  return CliffordTriple(t[0].with_flux(flux), t[1].with_flux(flux), t[2].with_flux(flux));
}

}  // namespace

Model builtin_model(std::string_view name) {
  CliffordTriple t = named_builtin(name, "--builtin");
  return Model{t.chart(), t.flux(), t, std::string(name), std::nullopt};
}

Model load_model(std::string_view json_text, std::string_view builtin_override) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    // nlohmann prefixes its own id and position; keep the description.
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(line_col(json_text, e.byte == 0 ? 0 : e.byte - 1), "JSON " + msg);
  }
  if (!doc.is_object()) throw InputError("/", "expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "chart" && key != "flux" && key != "triple" && key != "builtin" && key != "tduality")
      throw InputError("/" + key, "unknown key");

  std::string bname(builtin_override);
  std::string bptr = "--builtin";
  if (bname.empty()) {
    if (auto it = doc.find("builtin"); it != doc.end()) {
      if (!it->is_string()) throw InputError("/builtin", "expected a name");
      bname = it->get<std::string>();
      bptr = "/builtin";
    }
  }
  if (bname.empty() && !doc.contains("triple")) throw InputError("/", "need \"triple\" or \"builtin\"");
  if (builtin_override.empty() && doc.contains("triple") && doc.contains("builtin"))
    throw InputError("/", "\"triple\" and \"builtin\" are exclusive");

  ChartRef chart;
  std::optional<CliffordTriple> bt;
  if (!bname.empty()) {
    bt = named_builtin(bname, bptr);
    chart = bt->chart();
    if (auto it = doc.find("chart"); it != doc.end()) {
      ChartRef declared = load_chart(*it, "/chart");
      if (!same_chart(declared, chart)) throw InputError("/chart", "differs from the chart of builtin '" + bname + "'");
    }
  } else {
    chart = load_chart(require(doc, "chart", ""), "/chart");
  }

  std::optional<FluxForm> flux;
  if (auto it = doc.find("flux"); it != doc.end()) {
    FluxForm f = load_flux(*it, chart, "/flux");
    if (!f.is_zero()) flux = std::move(f);
  }
  CliffordTriple triple = bt ? rejudged(*bt, flux) : load_triple(doc["triple"], chart, flux, "/triple");
  Model model{chart, triple.flux(), triple, bname, std::nullopt};

  if (auto it = doc.find("tduality"); it != doc.end()) {
    if (!it->is_object()) throw InputError("/tduality", "expected an object");
    std::size_t k = as_index(require(*it, "dual_index", "/tduality"), "/tduality/dual_index");
    if (k >= model.chart->dim())
      throw InputError("/tduality/dual_index", "must be below the dimension " + std::to_string(model.chart->dim()));
    model.dual_index = k;
  }
  return model;
}

FluxForm parse_flux_spec(std::string_view spec, const ChartRef& chart) {
  static const std::regex term_re(R"(^\s*(-)?\s*(?:(.+?)\s*\*)?\s*e(\d+)\s*\^\s*e(\d+)\s*\^\s*e(\d+)\s*$)");
  KForm h(chart, 3);
  std::string s(spec);
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    std::string term = s.substr(start, end - start);
    std::string where = "--flux term at offset " + std::to_string(start);
    std::smatch m;
    if (!std::regex_match(term, m, term_re)) throw InputError(where, "expected [coeff*]e<i>^e<j>^e<k>");
    ScalarField coeff(1);
    if (m[2].matched) {
      try {
        coeff = parse_expr(m[2].str(), *chart);
      } catch (const ParseError& e) {
        throw InputError(where, e.what());
      }
    }
    if (m[1].matched) coeff = -coeff;
    FormIndex fi;
    for (int g = 3; g <= 5; ++g) {
      unsigned long k = std::stoul(m[g].str());
      if (k == 0 || k > chart->dim()) throw InputError(where, "e" + m[g].str() + " is not a coordinate covector");
      fi.push_back(static_cast<std::uint8_t>(k - 1));
    }
    int sign = permutation_sign(fi);
    if (sign == 0) throw InputError(where, "repeated index");
    if (sign < 0) coeff = -coeff;
    h = h + coeff * KForm::basis(chart, fi);
    start = end + 1;
  }
  return FluxForm(std::move(h));
}

ChartRef parse_chart_spec(std::string_view spec) {
  std::string s(spec);
  try {
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return standard_chart(std::stoul(s));
    std::vector<std::string> names;
    std::size_t start = 0;
    while (true) {
      std::size_t end = s.find(',', start);
      std::string n = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
      n.erase(0, n.find_first_not_of(' '));
      n.erase(n.find_last_not_of(' ') + 1);
      names.push_back(n);
      if (end == std::string::npos) break;
      start = end + 1;
    }
    return make_chart(std::move(names));
  } catch (const std::exception& e) {
    throw InputError("--chart", e.what());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gencliff::cli
