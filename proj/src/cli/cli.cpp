#include "hypdet/cli/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypdet/cli/document.hpp"
#include "hypdet/cli/table.hpp"
#include "hypdet/cli/verify.hpp"
#include "hypdet/elliptic/elliptic.hpp"
#include "hypdet/errors.hpp"
#include "hypdet/gfuncs/gfuncs.hpp"
#include "hypdet/numerics/bernoulli.hpp"

namespace hypdet::cli {

namespace {

struct Options {
  long prec = kDefaultPrecisionBits;
  std::string cutoff = "1e6";
  std::string format = "json";
  std::string orbifold;
  unsigned threads = 0;
  long n_max = 0;
  std::string z;
  std::string suite;
  long fault_index = -1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

ExtReal parse_real(const std::string& text, const char* what) {
  try {
    return ExtReal(text);
  } catch (const ValidationError&) {
    throw UsageError(std::string("malformed ") + what + " '" + text + "'");
  }
}

// "a", "a,b", "a+bi", "a-bi", "bi"
ExtComplex parse_complex(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  if (text.empty()) throw UsageError("empty value for z");
  auto comma = text.find(',');
  if (comma != std::string::npos) {
    return {parse_real(text.substr(0, comma), "real part of z"), parse_real(text.substr(comma + 1), "imaginary part of z")};
  }
  if (text.back() != 'i') return {parse_real(text, "z"), ExtReal(0)};
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re = split == std::string::npos ? "0" : text.substr(0, split);
  std::string im = split == std::string::npos ? text : text.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_real(re, "real part of z"), parse_real(im, "imaginary part of z")};
}

OrbifoldDocument document_for(const Options& o) {
  return o.orbifold.empty() ? builtin_modular_document() : load_orbifold_document(o.orbifold);
}

ExtReal relative_radius(const ExtComplex& v, const ExtReal& absolute) {
  ExtReal m = abs(v);
  return m.is_zero() ? absolute : absolute / m;
}

ResultRow value_row(std::string label, const ExtComplex& v, const ExtReal& relative_error, long bits) {
  ResultRow r;
  r.label = std::move(label);
  r.value = v;
  r.certified_digits = certified_digits(bits, relative_error);
  if (relative_error.sign() > 0) r.tail_bound = relative_error * abs(v);
  return r;
}

void attach_check(ResultRow& row, const ExtReal& residual, const ExtReal& tol) {
  row.residual = residual;
  row.tolerance = tol;
  row.status = residual.is_finite() && residual < tol ? "ok" : "fail";
}

ResultTable cmd_mn(const Options& o, long bits) {
  OrbifoldDocument doc = document_for(o);
  ResultTable t{"mn", bits, {{"orbifold", doc.origin}, {"n_max", std::to_string(o.n_max)}}, {}};
  ExtReal tol = ExtReal(10) * ldexp(ExtReal(1), -bits / 2);
  for (long n = 0; n <= o.n_max; ++n) {
    long m = m_n_floor(doc.orbifold, n);
    ResultRow r;
    r.label = "m_n";
    r.index = n;
    r.value = ExtComplex(m);
    r.exact = true;
    attach_check(r, abs(m_n_spectral(doc.orbifold, n) - ExtReal(m)), tol);
    t.rows.push_back(std::move(r));
  }
  return t;
}

ResultTable cmd_detsq(const Options& o, long bits) {
  OrbifoldDocument doc = document_for(o);
  ExtComplex z = parse_complex(o.z);
  ExtReal cutoff = parse_real(o.cutoff, "--cutoff-norm");
  SurfaceContext ctx = make_context(doc, cutoff, o.threads);

  SeriesValue lz = log_selberg(ctx, z);
  SeriesValue phi = scattering_phi(ctx.scattering(), z);
  ExtReal rz = exp(lz.tail_bound) - ExtReal(1);
  ExtReal rphi = relative_radius(phi.value, phi.tail_bound);
  ExtReal r_minus = (ExtReal(1) + rz) * (ExtReal(1) + rphi) - ExtReal(1);
  ExtReal r_det = (ExtReal(1) + rz) * (ExtReal(1) + rz) * (ExtReal(1) + rphi) - ExtReal(1);
  ExtReal tol = ldexp(ExtReal(1), -bits / 2);

  ExtComplex dp = d_plus(ctx, z);
  ExtComplex dm = d_minus(ctx, z);
  ExtComplex det = det_squared(ctx, z);
  ExtComplex phi_rec = phi_from_superzeta(ctx, z);

  std::ostringstream z_text;
  z_text << z.re().to_string(decimal_digits(bits)) << ',' << z.im().to_string(decimal_digits(bits));
  ResultTable t{"detsq",
                bits,
                {{"orbifold", doc.origin}, {"z", z_text.str()}, {"cutoff_norm", cutoff.to_string(decimal_digits(bits))}},
                {}};
  ResultRow det_row = value_row("det_squared", det, r_det, bits);
  attach_check(det_row, relative_difference(det, dp * dm), tol);
  t.rows.push_back(std::move(det_row));
  t.rows.push_back(value_row("D_plus", dp, rz, bits));
  t.rows.push_back(value_row("D_minus", dm, r_minus, bits));
  t.rows.push_back(value_row("phi", phi.value, rphi, bits));
  ResultRow rec = value_row("phi_recovered", phi_rec, rphi, bits);
  attach_check(rec, relative_difference(phi_rec, phi.value), tol);
  t.rows.push_back(std::move(rec));
  ResultRow log_row = value_row("log_Z", lz.value, relative_radius(lz.value, lz.tail_bound), bits);
  log_row.tail_bound = lz.tail_bound;
  t.rows.push_back(std::move(log_row));
  t.rows.push_back(value_row("Z", exp(lz.value), rz, bits));
  t.rows.push_back(value_row("G1", exp(log_g1(ctx.orbifold(), z)), ExtReal(0), bits));
  t.rows.push_back(value_row("Z_plus", z_plus(ctx, z), rz, bits));
  t.rows.push_back(value_row("Z_minus", z_minus(ctx, z), r_minus, bits));
  return t;
}

ResultTable cmd_verify(const Options& o, long bits, std::ostream& err) {
  struct FaultScope {
    bool active = false;
    ~FaultScope() {
      if (active) BernoulliTable::instance().reset();
    }
  } fault;
  if (o.fault_index >= 0) {
    auto n = static_cast<std::size_t>(o.fault_index);
    BernoulliTable::instance().inject_fault(n, bernoulli(n) + 1);
    fault.active = true;
  }
  ResultTable t{"verify", bits, {{"suite", o.suite}}, {}};
  long failures = 0;
  for (const auto& c : run_verify_suite(o.suite)) {
    ResultRow r;
    r.label = c.suite + ": " + c.name;
    r.residual = c.measured;
    r.tolerance = c.tolerance;
    r.status = c.passed ? "pass" : "fail";
    if (!c.passed) {
      ++failures;
      err << "FAILED " << r.label;
      if (!c.detail.empty()) err << " (" << c.detail << ")";
      err << '\n';
    }
    t.rows.push_back(std::move(r));
  }
  if (failures > 0) err << failures << " of " << t.rows.size() << " checks failed\n";
  return t;
}

bool any_failed(const ResultTable& t) {
  return std::any_of(t.rows.begin(), t.rows.end(), [](const ResultRow& r) { return r.status == "fail"; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Regularized determinants det^2(Delta - z(1-z)) for hyperbolic orbifolds", "hypdet"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--prec", o.prec, "working precision in bits")->check(CLI::Range(kMinPrecisionBits, 1L << 20));
  app.add_option("--cutoff-norm", o.cutoff, "geodesic norm cutoff");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--orbifold", o.orbifold, "orbifold document (default: the modular group)");
  app.add_option("--threads", o.threads, "enumeration threads (0 = hardware)");

  auto* mn = app.add_subcommand("mn", "trivial-zero multiplicities m_0 .. m_N");
  mn->add_option("--n-max", o.n_max, "largest n")->required()->check(CLI::Range(0L, 100000L));
  auto* det = app.add_subcommand("detsq", "det^2, D+, D-, phi, Z and G1 at z");
  det->add_option("z", o.z, "point with Re(z) > 1: a, a+bi or a,b")->required();
  auto* ver = app.add_subcommand("verify", "run invariant suites");
  std::vector<std::string> suites = verify_suite_names();
  suites.push_back("all");
  ver->add_option("suite", o.suite, "elliptic, special, scattering, regdet or all")->required()->check(CLI::IsMember(suites));
  ver->add_option("--inject-bernoulli-fault", o.fault_index, "corrupt one cached Bernoulli number")->group("");

  Format format = Format::json;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--format=csv" || (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "csv")) {
        format = Format::csv;
      }
    }
    write_error(err, "usage", e.what(), format);
    return kExitUsage;
  }
  format = o.format == "csv" ? Format::csv : Format::json;

  try {
    WorkingPrecision wp(o.prec);
    ResultTable table;
    if (*mn) {
      table = cmd_mn(o, o.prec);
    } else if (*det) {
      table = cmd_detsq(o, o.prec);
    } else {
      table = cmd_verify(o, o.prec, err);
    }
    write_table(out, table, format);
    return any_failed(table) ? kExitInternal : kExitOk;
  } catch (const UsageError& e) {
    write_error(err, "usage", e.what(), format);
    return kExitUsage;
  } catch (const ValidationError& e) {
    write_error(err, "validation", e.what(), format);
    return kExitUsage;
  } catch (const DomainError& e) {
    write_error(err, "domain", e.what(), format);
    return kExitDomain;
  } catch (const std::exception& e) {
    write_error(err, "internal", e.what(), format);
    return kExitInternal;
  }
}

}  // namespace hypdet::cli
