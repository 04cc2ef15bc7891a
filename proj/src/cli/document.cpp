#include "hypdet/cli/document.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hypdet/errors.hpp"
#include "hypdet/zetas/geodesics.hpp"

namespace hypdet::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("orbifold document: field '" + field + "': " + what);
}

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) fail(path.empty() ? key : path + "." + key, "unknown field");
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  std::string field = path.empty() ? key : path + "." + key;
  if (it == obj.end()) fail(field, "missing");
  return *it;
}

int as_int(const json& v, const std::string& field, long lo) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  long x = v.get<long>();
  if (x < lo) fail(field, "must be at least " + std::to_string(lo));
  if (x > 1000000) fail(field, "value too large");
  return static_cast<int>(x);
}

const json& as_array(const json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected an array");
  return v;
}

// exact rational from a decimal literal such as "0.125" or "2.5e-1"
mpq_class decimal_rational(const std::string& text, const std::string& field) {
  std::string mantissa = text;
  long exponent = 0;
  auto e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mantissa = text.substr(0, e);
    try {
      exponent = std::stol(text.substr(e + 1));
    } catch (const std::exception&) {
      fail(field, "malformed number '" + text + "'");
    }
  }
  bool negative = !mantissa.empty() && mantissa[0] == '-';
  if (negative || (!mantissa.empty() && mantissa[0] == '+')) mantissa.erase(0, 1);
  std::string digits;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (seen_point) --exponent;
    } else {
      fail(field, "malformed number '" + text + "'");
    }
  }
  if (digits.empty() || std::abs(exponent) > 400) fail(field, "malformed number '" + text + "'");
  mpz_class num(digits, 10), den(1);
  mpz_class ten(10), scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::abs(exponent)));
  if (exponent >= 0) {
    num *= scale;
  } else {
    den = scale;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

mpq_class as_angle(const json& v, const std::string& field) {
  mpq_class q;
  if (v.is_number()) {
    q = decimal_rational(v.dump(), field);
  } else if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find('/') != std::string::npos) {
      try {
        q = mpq_class(s);
      } catch (const std::exception&) {
        fail(field, "malformed fraction '" + s + "'");
      }
      if (q.get_den() == 0) fail(field, "zero denominator");
      q.canonicalize();
    } else {
      q = decimal_rational(s, field);
    }
  } else {
    fail(field, "expected a number or a string \"p/q\"");
  }
  if (q <= 0 || q >= 1) fail(field, "angle must lie in (0, 1)");
  return q;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_relative() && !base.empty() ? base / path : path;
}

std::string syntax_message(std::string_view text, const json::parse_error& e) {
  std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
  long line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::string what = e.what();
  auto colon = what.rfind(": ");
  return "orbifold document: JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
         (colon == std::string::npos ? "" : ": " + what.substr(colon + 2));
}

}  // namespace

OrbifoldDocument parse_orbifold_document(std::string_view text, const std::filesystem::path& base_dir,
                                         std::string origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(syntax_message(text, e));
  }
  if (!doc.is_object()) throw ValidationError("orbifold document: top level must be a JSON object");
  reject_unknown(doc, "", {"schema", "genus", "cusps", "elliptic", "rep_dim", "cusp_data", "scattering", "geodesics"});
  if (doc.contains("schema")) {
    const json& s = doc["schema"];
    if (!s.is_number_integer() || s.get<long>() != kSchemaVersion) {
      fail("schema", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
    }
  }

  Signature sig;
  RepresentationData rep;
  sig.genus = as_int(member(doc, "genus", ""), "genus", 0);
  sig.cusps = as_int(member(doc, "cusps", ""), "cusps", 0);
  rep.dim = as_int(member(doc, "rep_dim", ""), "rep_dim", 1);

  const json& ell = as_array(member(doc, "elliptic", ""), "elliptic");
  for (std::size_t r = 0; r < ell.size(); ++r) {
    std::string path = "elliptic[" + std::to_string(r) + "]";
    if (!ell[r].is_object()) fail(path, "expected an object");
    reject_unknown(ell[r], path, {"order", "exponents"});
    int d = as_int(member(ell[r], "order", path), path + ".order", 2);
    const json& ex = as_array(member(ell[r], "exponents", path), path + ".exponents");
    if (static_cast<int>(ex.size()) != rep.dim) {
      fail(path + ".exponents", "expected " + std::to_string(rep.dim) + " entries (rep_dim)");
    }
    std::vector<int> qs;
    for (std::size_t j = 0; j < ex.size(); ++j) {
      std::string f = path + ".exponents[" + std::to_string(j) + "]";
      int q = as_int(ex[j], f, 0);
      if (q >= d) fail(f, "exponent must be below the order " + std::to_string(d));
      qs.push_back(q);
    }
    sig.elliptic_orders.push_back(d);
    rep.elliptic_exponents.push_back(std::move(qs));
  }

  const json& cd = as_array(member(doc, "cusp_data", ""), "cusp_data");
  if (static_cast<int>(cd.size()) != sig.cusps) fail("cusp_data", "expected one entry per cusp");
  for (std::size_t j = 0; j < cd.size(); ++j) {
    std::string path = "cusp_data[" + std::to_string(j) + "]";
    if (!cd[j].is_object()) fail(path, "expected an object");
    reject_unknown(cd[j], path, {"fixed_dim", "angles"});
    CuspData c;
    c.fixed_dim = as_int(member(cd[j], "fixed_dim", path), path + ".fixed_dim", 0);
    if (c.fixed_dim > rep.dim) fail(path + ".fixed_dim", "exceeds rep_dim");
    const json& an = as_array(member(cd[j], "angles", path), path + ".angles");
    if (static_cast<int>(an.size()) != rep.dim - c.fixed_dim) {
      fail(path + ".angles", "expected rep_dim - fixed_dim = " + std::to_string(rep.dim - c.fixed_dim) + " entries");
    }
    for (std::size_t p = 0; p < an.size(); ++p) c.angles.push_back(as_angle(an[p], path + ".angles[" + std::to_string(p) + "]"));
    rep.cusps.push_back(std::move(c));
  }

  OrbifoldDocument out{OrbifoldData::modular(), std::nullopt, std::nullopt, "", std::move(origin)};
  try {
    out.orbifold = OrbifoldData(sig, rep);
  } catch (const Error& e) {
    throw ValidationError(std::string("orbifold document: ") + e.what());
  }

  if (doc.contains("scattering")) {
    const json& s = doc["scattering"];
    if (!s.is_object()) fail("scattering", "expected an object");
    reject_unknown(s, "scattering", {"model", "file"});
    const json& model = member(s, "model", "scattering");
    std::string name = model.is_string() ? model.get<std::string>() : "";
    if (name == "modular") {
      if (!out.orbifold.is_modular_trivial()) {
        fail("scattering.model", "\"modular\" requires genus 0, one cusp, orders 2 and 3 and the trivial representation");
      }
      if (s.contains("file")) fail("scattering.file", "not used by the modular model");
      out.scattering = ModularScattering{};
    } else if (name == "generic") {
      const json& file = member(s, "file", "scattering");
      if (!file.is_string()) fail("scattering.file", "expected a path string");
      auto path = resolve(base_dir, file.get<std::string>());
      std::ifstream in(path);
      if (!in) fail("scattering.file", "cannot open '" + path.string() + "'");
      GenericScattering g;
      try {
        g = read_generic_scattering(in);
        validate(g);
      } catch (const Error& e) {
        fail("scattering.file", path.string() + ": " + e.what());
      }
      int k = degree_of_singularity(out.orbifold.rep());
      if (g.k != k) {
        fail("scattering.file", "k = " + std::to_string(g.k) + " but the cusp data give k = " + std::to_string(k));
      }
      out.scattering = std::move(g);
    } else {
      fail("scattering.model", "expected \"modular\" or \"generic\"");
    }
  } else if (out.orbifold.is_modular_trivial()) {
    out.scattering = ModularScattering{};
  }

  if (doc.contains("geodesics")) {
    const json& g = doc["geodesics"];
    if (!g.is_object()) fail("geodesics", "expected an object");
    reject_unknown(g, "geodesics", {"file", "complete_to"});
    const json& file = member(g, "file", "geodesics");
    if (!file.is_string()) fail("geodesics.file", "expected a path string");
    const json& limit = member(g, "complete_to", "geodesics");
    if (limit.is_number()) {
      out.geodesic_limit = limit.dump();
    } else if (limit.is_string()) {
      out.geodesic_limit = limit.get<std::string>();
    } else {
      fail("geodesics.complete_to", "expected a number");
    }
    ExtReal lim;
    try {
      lim = ExtReal(out.geodesic_limit);
    } catch (const ValidationError&) {
      fail("geodesics.complete_to", "malformed number");
    }
    if (!(lim > ExtReal(1))) fail("geodesics.complete_to", "must exceed 1");
    out.geodesic_file = resolve(base_dir, file.get<std::string>());
  }
  return out;
}

OrbifoldDocument load_orbifold_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open orbifold document '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_orbifold_document(buf.str(), path.parent_path(), path.string());
}

OrbifoldDocument builtin_modular_document() {
  return {OrbifoldData::modular(), ModularScattering{}, std::nullopt, "", "builtin:modular"};
}

SurfaceContext make_context(const OrbifoldDocument& doc, const ExtReal& norm_cutoff, unsigned threads) {
  const OrbifoldData& orb = doc.orbifold;
  ScatteringModel scattering = GenericScattering{0, ExtReal(0), ExtReal(0), {}};
  if (doc.scattering) {
    scattering = *doc.scattering;
  } else if (degree_of_singularity(orb.rep()) != 0) {
    throw ValidationError("orbifold document: field 'scattering': required when the cusp data give k > 0");
  }

  std::shared_ptr<const GeodesicSource> source;
  if (doc.geodesic_file) {
    std::ifstream in(*doc.geodesic_file);
    if (!in) throw ValidationError("orbifold document: field 'geodesics.file': cannot open '" + doc.geodesic_file->string() + "'");
    std::vector<GeodesicClass> classes;
    try {
      classes = read_geodesic_table(in);
    } catch (const ValidationError& e) {
      throw ValidationError("orbifold document: field 'geodesics.file': " + doc.geodesic_file->string() + ": " + e.what());
    }
    source = std::make_shared<TableGeodesicSource>(std::move(classes), ExtReal(doc.geodesic_limit), orb.dim());
  } else if (orb.is_modular_trivial()) {
    source = std::make_shared<ModularGeodesicSource>(std::nullopt, threads);
  } else {
    throw ValidationError("orbifold document: field 'geodesics': a geodesic table is required for this signature");
  }
  return {orb, std::move(source), std::move(scattering), norm_cutoff};
}

}  // namespace hypdet::cli
