#include "zygmund/io.hpp"

#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <variant>

#include "zygmund/errors.hpp"

namespace zygmund::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// Parsers surface every malformed-input failure (missing keys, bad numbers,
// json type errors) as the library's own error type.
template <class Fn>
auto guarded_parse(const char* ctx, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidParameter(std::string(ctx) + ": malformed document (" + e.what() + ")");
  }
}

void put_extension_comments(std::ostream& os, const Extension& ext) {
  if (std::holds_alternative<ZeroExtension>(ext)) {
    os << "# extension=zero\n";
  } else if (std::holds_alternative<PeriodicExtension>(ext)) {
    os << "# extension=periodic\n";
  } else if (const auto* clr = std::get_if<ConstantLeftRight>(&ext)) {
    os << "# extension=clr\n";
    os << "# extension_left=" << fmt(clr->cl) << "\n";
    os << "# extension_right=" << fmt(clr->cr) << "\n";
  } else if (const auto* an = std::get_if<AnalyticExtension>(&ext)) {
    os << "# extension=analytic\n# extension_coeffs=";
    for (std::size_t i = 0; i < an->coeffs.size(); ++i)
      os << (i ? ";" : "") << fmt(an->coeffs[i]);
    os << "\n";
  }
}

struct CsvDoc {
  std::map<std::string, std::string> keys;
  std::vector<std::vector<double>> rows;
};

CsvDoc parse_csv(const std::string& text) {
  CsvDoc doc;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      doc.keys[key] = line.substr(eq + 1);
      continue;
    }
    if (line.find_first_of("0123456789+-.") != 0) continue;  // column header line
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

std::vector<double> parse_list(const std::string& text, char sep = ';') {
  std::vector<double> out;
  std::istringstream is(text);
  std::string cell;
  while (std::getline(is, cell, sep))
    if (!cell.empty()) out.push_back(std::stod(cell));
  return out;
}

Extension extension_from_keys(const std::map<std::string, std::string>& keys) {
  const auto it = keys.find("extension");
  const std::string kind = it == keys.end() ? "zero" : it->second;
  if (kind == "zero") return ZeroExtension{};
  if (kind == "periodic") return PeriodicExtension{};
  if (kind == "clr")
    return ConstantLeftRight{std::stod(keys.at("extension_left")),
                             std::stod(keys.at("extension_right"))};
  if (kind == "analytic") return AnalyticExtension{parse_list(keys.at("extension_coeffs"))};
  throw InvalidParameter("csv: unknown extension kind '" + kind + "'");
}

json extension_to_json(const Extension& ext) {
  json j;
  if (std::holds_alternative<ZeroExtension>(ext)) {
    j["kind"] = "zero";
  } else if (std::holds_alternative<PeriodicExtension>(ext)) {
    j["kind"] = "periodic";
  } else if (const auto* clr = std::get_if<ConstantLeftRight>(&ext)) {
    j["kind"] = "clr";
    j["left"] = clr->cl;
    j["right"] = clr->cr;
  } else if (const auto* an = std::get_if<AnalyticExtension>(&ext)) {
    j["kind"] = "analytic";
    j["coeffs"] = an->coeffs;
  }
  return j;
}

Extension extension_from_json(const json& j) {
  const std::string kind = j.value("kind", "zero");
  if (kind == "zero") return ZeroExtension{};
  if (kind == "periodic") return PeriodicExtension{};
  if (kind == "clr")
    return ConstantLeftRight{j.at("left").get<double>(), j.at("right").get<double>()};
  if (kind == "analytic")
    return AnalyticExtension{j.at("coeffs").get<std::vector<double>>()};
  throw InvalidParameter("json: unknown extension kind '" + kind + "'");
}

const char* method_name(FitMethod m) {
  switch (m) {
    case FitMethod::WaveletSup: return "wavelet_sup";
    case FitMethod::MultiplierSup: return "multiplier_sup";
    case FitMethod::EmbeddedDerivative: return "embedded_derivative";
  }
  return "unknown";
}

const char* growth_kind_name(GrowthClass::Kind k) {
  switch (k) {
    case GrowthClass::Kind::Bounded: return "bounded";
    case GrowthClass::Kind::LogType: return "log_type";
    case GrowthClass::Kind::GammaType: return "gamma_type";
    case GrowthClass::Kind::Unbounded: return "unbounded";
    case GrowthClass::Kind::Unclassifiable: return "unclassifiable";
  }
  return "unknown";
}

}  // namespace

std::string to_csv(const Signal& f, const GroundTruth* truth) {
  std::ostringstream os;
  os << "# n=" << f.size() << "\n";
  os << "# x0=" << fmt(f.x0) << "\n";
  os << "# dx=" << fmt(f.dx) << "\n";
  put_extension_comments(os, f.extension);
  if (truth) {
    if (truth->exponent) os << "# truth_exponent=" << fmt(*truth->exponent) << "\n";
    if (!truth->description.empty()) os << "# truth_description=" << truth->description << "\n";
  }
  os << "x,value\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    os << fmt(f.x_at(i)) << "," << fmt(f.samples[i]) << "\n";
  return os.str();
}

Signal signal_from_csv(const std::string& text, GroundTruth* truth) {
  return guarded_parse("signal csv", [&] {
  const CsvDoc doc = parse_csv(text);
  Signal f;
  f.x0 = std::stod(doc.keys.at("x0"));
  f.dx = std::stod(doc.keys.at("dx"));
  f.extension = extension_from_keys(doc.keys);
  f.samples.reserve(doc.rows.size());
  for (const auto& row : doc.rows) {
    if (row.size() < 2) throw InvalidParameter("signal csv: need x,value rows");
    f.samples.push_back(row[1]);
  }
  if (truth) {
    *truth = GroundTruth{};
    if (const auto it = doc.keys.find("truth_exponent"); it != doc.keys.end())
      truth->exponent = std::stod(it->second);
    if (const auto it = doc.keys.find("truth_description"); it != doc.keys.end())
      truth->description = it->second;
  }
  f.validate();
  return f;
  });
}

std::string to_csv(const Kernel& k) {
  std::ostringstream os;
  os << "# n=" << k.size() << "\n";
  os << "# x0=" << fmt(k.x0) << "\n";
  os << "# dx=" << fmt(k.dx) << "\n";
  os << "# kind=" << (k.kind == KernelKind::Mollifier ? "mollifier" : "wavelet") << "\n";
  os << "# moment_order=" << k.moment_order << "\n";
  if (k.support_radius) os << "# support_radius=" << fmt(*k.support_radius) << "\n";
  os << "# tail_bound=" << fmt(k.tail_bound) << "\n";
  os << "x,value\n";
  for (std::size_t i = 0; i < k.size(); ++i)
    os << fmt(k.x_at(i)) << "," << fmt(k.samples[i]) << "\n";
  return os.str();
}

Kernel kernel_from_csv(const std::string& text) {
  return guarded_parse("kernel csv", [&] {
  const CsvDoc doc = parse_csv(text);
  Kernel k;
  k.x0 = std::stod(doc.keys.at("x0"));
  k.dx = std::stod(doc.keys.at("dx"));
  const std::string kind = doc.keys.at("kind");
  if (kind != "mollifier" && kind != "wavelet")
    throw InvalidParameter("kernel csv: unknown kind '" + kind + "'");
  k.kind = kind == "mollifier" ? KernelKind::Mollifier : KernelKind::Wavelet;
  k.moment_order = static_cast<int>(std::stol(doc.keys.at("moment_order")));
  if (const auto it = doc.keys.find("support_radius"); it != doc.keys.end())
    k.support_radius = std::stod(it->second);
  if (const auto it = doc.keys.find("tail_bound"); it != doc.keys.end())
    k.tail_bound = std::stod(it->second);
  for (const auto& row : doc.rows) {
    if (row.size() < 2) throw InvalidParameter("kernel csv: need x,value rows");
    k.samples.push_back(row[1]);
  }
  return k;
  });
}

std::string to_csv(const ScaleField& field) {
  std::ostringstream os;
  os << "# n_scales=" << field.n_scales() << "\n";
  os << "# n_positions=" << field.n_positions() << "\n";
  os << "# interior_margin=" << fmt(field.interior_margin) << "\n";
  os << "# domain_lo=" << fmt(field.domain_lo) << "\n";
  os << "# domain_hi=" << fmt(field.domain_hi) << "\n";
  os << "# signal_sup=" << fmt(field.signal_sup) << "\n";
  os << "# positions=";
  for (std::size_t i = 0; i < field.positions.size(); ++i)
    os << (i ? ";" : "") << fmt(field.positions[i]);
  os << "\n";
  os << "scale,sup";
  for (std::size_t i = 0; i < field.positions.size(); ++i) os << ",v" << i;
  os << "\n";
  for (std::size_t j = 0; j < field.n_scales(); ++j) {
    os << fmt(field.scales[j]) << "," << fmt(field.sup_per_scale[j]);
    for (double v : field.rows[j]) os << "," << fmt(v);
    os << "\n";
  }
  return os.str();
}

std::string to_ndjson(const ScaleField& field) {
  std::ostringstream os;
  ordered_json meta;
  meta["record"] = "meta";
  meta["positions"] = field.positions;
  meta["interior_margin"] = field.interior_margin;
  meta["domain_lo"] = field.domain_lo;
  meta["domain_hi"] = field.domain_hi;
  meta["signal_sup"] = field.signal_sup;
  os << meta.dump() << "\n";
  for (std::size_t j = 0; j < field.n_scales(); ++j) {
    ordered_json rec;
    rec["record"] = "scale";
    rec["r"] = field.scales[j];
    rec["sup"] = field.sup_per_scale[j];
    rec["values"] = field.rows[j];
    os << rec.dump() << "\n";
  }
  return os.str();
}

ScaleField scale_field_from_ndjson(const std::string& text) {
  return guarded_parse("scale field ndjson", [&] {
  ScaleField field;
  std::istringstream is(text);
  std::string line;
  bool have_meta = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const json rec = json::parse(line);
    const std::string kind = rec.value("record", "");
    if (kind == "meta") {
      field.positions = rec.at("positions").get<std::vector<double>>();
      field.interior_margin = rec.value("interior_margin", 0.0);
      field.domain_lo = rec.value("domain_lo", 0.0);
      field.domain_hi = rec.value("domain_hi", 0.0);
      field.signal_sup = rec.value("signal_sup", 0.0);
      have_meta = true;
    } else if (kind == "scale") {
      field.scales.push_back(rec.at("r").get<double>());
      field.sup_per_scale.push_back(rec.at("sup").get<double>());
      field.rows.push_back(rec.at("values").get<std::vector<double>>());
    } else {
      throw InvalidParameter("ndjson: unknown record kind '" + kind + "'");
    }
  }
  if (!have_meta) throw InvalidParameter("ndjson: missing meta record");
  for (const auto& row : field.rows)
    if (row.size() != field.positions.size())
      throw InvalidParameter("ndjson: row length does not match the position count");
  return field;
  });
}

std::string to_json(const Signal& f, const GroundTruth* truth) {
  ordered_json j;
  j["x0"] = f.x0;
  j["dx"] = f.dx;
  j["extension"] = extension_to_json(f.extension);
  if (truth) {
    ordered_json t;
    t["exponent"] = truth->exponent ? json(*truth->exponent) : json(nullptr);
    t["description"] = truth->description;
    j["truth"] = t;
  }
  j["samples"] = f.samples;
  return j.dump(2);
}

Signal signal_from_json(const std::string& text, GroundTruth* truth) {
  return guarded_parse("signal json", [&] {
  const json j = json::parse(text);
  Signal f;
  f.x0 = j.at("x0").get<double>();
  f.dx = j.at("dx").get<double>();
  f.extension = extension_from_json(j.at("extension"));
  f.samples = j.at("samples").get<std::vector<double>>();
  if (truth) {
    *truth = GroundTruth{};
    if (j.contains("truth")) {
      const json& t = j.at("truth");
      if (t.contains("exponent") && !t.at("exponent").is_null())
        truth->exponent = t.at("exponent").get<double>();
      truth->description = t.value("description", "");
    }
  }
  f.validate();
  return f;
  });
}

std::string to_json(const Kernel& k) {
  ordered_json j;
  j["x0"] = k.x0;
  j["dx"] = k.dx;
  j["kind"] = k.kind == KernelKind::Mollifier ? "mollifier" : "wavelet";
  j["moment_order"] = k.moment_order;
  j["support_radius"] = k.support_radius ? json(*k.support_radius) : json(nullptr);
  j["tail_bound"] = k.tail_bound;
  j["samples"] = k.samples;
  return j.dump(2);
}

Kernel kernel_from_json(const std::string& text) {
  return guarded_parse("kernel json", [&] {
  const json j = json::parse(text);
  Kernel k;
  k.x0 = j.at("x0").get<double>();
  k.dx = j.at("dx").get<double>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "mollifier" && kind != "wavelet")
    throw InvalidParameter("kernel json: unknown kind '" + kind + "'");
  k.kind = kind == "mollifier" ? KernelKind::Mollifier : KernelKind::Wavelet;
  k.moment_order = j.at("moment_order").get<int>();
  if (j.contains("support_radius") && !j.at("support_radius").is_null())
    k.support_radius = j.at("support_radius").get<double>();
  k.tail_bound = j.value("tail_bound", 0.0);
  k.samples = j.at("samples").get<std::vector<double>>();
  return k;
  });
}

std::string to_json(const ScaleField& field) {
  ordered_json j;
  j["positions"] = field.positions;
  j["scales"] = field.scales;
  j["sup_per_scale"] = field.sup_per_scale;
  j["interior_margin"] = field.interior_margin;
  j["domain_lo"] = field.domain_lo;
  j["domain_hi"] = field.domain_hi;
  j["signal_sup"] = field.signal_sup;
  j["rows"] = field.rows;
  return j.dump(2);
}

std::string to_json(const RegularityReport& report) {
  ordered_json j;
  j["outcome"] = report.outcome == RegularityReport::Outcome::Fit ? "fit"
                                                                  : "infinitely_regular";
  j["fitted_s"] = report.fitted_s ? json(*report.fitted_s) : json(nullptr);
  j["fit_window"] = {report.fit_window.first, report.fit_window.second};
  j["slope_stderr"] = report.slope_stderr;
  j["residual_max"] = report.residual_max;
  j["low_pass_norm"] = report.low_pass_norm ? json(*report.low_pass_norm) : json(nullptr);
  j["method"] = method_name(report.method);
  j["notes"] = report.notes;
  ordered_json scales = ordered_json::array();
  for (const auto& [r, sup] : report.per_scale) scales.push_back({r, sup});
  j["per_scale"] = scales;
  return j.dump(2);
}

std::string to_json(const GrowthReport& report) {
  ordered_json j;
  j["alpha"] = report.alpha;
  j["fitted_exponent"] = report.fitted_exponent;
  j["classification"] = {{"kind", growth_kind_name(report.classification.kind)},
                         {"power", report.classification.power}};
  j["residual_max"] = report.residual_max;
  j["slope_stderr"] = report.slope_stderr;
  j["method"] = report.method;
  j["decision_rule"] = report.decision_rule;
  ordered_json pts = ordered_json::array();
  for (const auto& p : report.per_eps)
    pts.push_back({{"eps", p.eps}, {"gamma", p.gamma}, {"sup", p.sup}});
  j["per_eps"] = pts;
  return j.dump(2);
}

std::string to_json(const AdmissibilityCertificate& cert) {
  ordered_json j;
  j["admissible"] = cert.admissible;
  j["max_eps_gamma"] = cert.max_eps_gamma;
  j["growth_trend"] = cert.growth_trend;
  j["divergent"] = cert.divergent;
  j["max_doubling_ratio"] = cert.max_doubling_ratio;
  j["eps_grid"] = cert.eps_grid;
  j["gamma_values"] = cert.gamma_values;
  return j.dump(2);
}

// Writes through a sibling temp file and renames, so readers never observe a
// partially written document.
void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open for writing: " + tmp.string());
    os << content;
    os.flush();
    if (!os) throw Error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot replace " + path.string() + ": " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open for reading: " + path.string());
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace zygmund::io
