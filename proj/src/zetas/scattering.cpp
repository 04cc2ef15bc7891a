#include "hypdet/zetas/scattering.hpp"

#include <istream>
#include <sstream>
#include <string>

#include "hypdet/errors.hpp"
#include "hypdet/numerics/special_functions.hpp"

namespace hypdet {

namespace {

bool is_nonpositive_integer(const ExtComplex& s) {
  return s.im().is_zero() && s.re().sign() <= 0 && s.re().is_integer();
}

ExtReal half() { return ratio(1, 2); }

// log of sqrt(pi) Gamma(s - 1/2) / Gamma(s)
ExtComplex log_gamma_ratio(const ExtComplex& s) {
  return ExtComplex(log(const_pi()) / ExtReal(2)) + log_gamma(s - ExtComplex(half())) - log_gamma(s);
}

void require_generic_domain(const ExtComplex& s) {
  if (s.re() <= ExtReal(1)) throw ConvergenceError("generic scattering series needs Re(s) > 1");
}

ExtComplex dirichlet_h(const GenericScattering& m, const ExtComplex& s) {
  ExtComplex h(1);
  ExtComplex two_s = s * ExtReal(2);
  for (const auto& t : m.terms) h += t.a * real_base_pow(log(t.u), two_s);
  return h;
}

void check_modular_point(const ExtComplex& s) {
  if (s == ExtComplex(1)) throw PoleError("modular scattering determinant has a pole at s = 1");
  ExtComplex shifted = s - ExtComplex(half());
  if (is_nonpositive_integer(s) || is_nonpositive_integer(shifted)) {
    throw SingularityError("removable singularity of the modular closed form at s = " + s.re().to_string(6));
  }
}

}  // namespace

void validate(const GenericScattering& model) {
  if (model.k < 0) throw ValidationError("scattering: k must be non-negative");
  ExtReal prev(1);
  for (std::size_t i = 0; i < model.terms.size(); ++i) {
    if (!(model.terms[i].u > prev)) {
      throw ValidationError("scattering: u_n must exceed 1 and increase strictly (term " + std::to_string(i + 2) + ")");
    }
    prev = model.terms[i].u;
  }
}

ScatteringConstants scattering_constants(const ScatteringModel& model) {
  if (const auto* g = std::get_if<GenericScattering>(&model)) return {g->k, g->c1, g->c2};
  return {1, ExtReal(0), ExtReal(0)};
}

SeriesValue scattering_phi(const ScatteringModel& model, const ExtComplex& s) {
  if (const auto* g = std::get_if<GenericScattering>(&model)) {
    require_generic_domain(s);
    ExtComplex l = exp(log_gamma_ratio(s) * ExtReal(g->k) + s * g->c1 + ExtComplex(g->c2));
    return {l * dirichlet_h(*g, s), ExtReal(0)};
  }
  if (s == ExtComplex(half())) return {ExtComplex(-1), ExtReal(0)};
  if (s == ExtComplex(0)) return {ExtComplex(0), ExtReal(0)};
  check_modular_point(s);
  ExtComplex two_s = s * ExtReal(2);
  ExtComplex den = riemann_zeta(two_s);
  if (den.re().is_zero() && den.im().is_zero()) throw PoleError("modular scattering determinant: zeta(2s) vanishes");
  ExtComplex num = riemann_zeta(two_s - ExtComplex(1));
  return {exp(log_gamma_ratio(s)) * num / den, ExtReal(0)};
}

ExtComplex scattering_log_phi(const ScatteringModel& model, const ExtComplex& s) {
  if (const auto* g = std::get_if<GenericScattering>(&model)) {
    require_generic_domain(s);
    return log_gamma_ratio(s) * ExtReal(g->k) + s * g->c1 + ExtComplex(g->c2) + log(dirichlet_h(*g, s));
  }
  if (s == ExtComplex(half())) return i_pi();
  check_modular_point(s);
  if (s == ExtComplex(0)) throw SingularityError("modular scattering determinant vanishes at s = 0");
  ExtComplex two_s = s * ExtReal(2);
  return log_gamma_ratio(s) + log(riemann_zeta(two_s - ExtComplex(1))) - log(riemann_zeta(two_s));
}

GenericScattering read_generic_scattering(std::istream& in) {
  GenericScattering m;
  std::string line;
  long lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string a, b, c, extra;
    if (!(ss >> a >> b >> c) || (ss >> extra)) {
      throw ValidationError("scattering file line " + std::to_string(lineno) + ": expected three fields");
    }
    try {
      if (!header) {
        std::size_t used = 0;
        m.k = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument("k");
        m.c1 = ExtReal(b);
        m.c2 = ExtReal(c);
        header = true;
      } else {
        m.terms.push_back({ExtReal(a), ExtComplex(ExtReal(b), ExtReal(c))});
      }
    } catch (const std::exception&) {
      throw ValidationError("scattering file line " + std::to_string(lineno) + ": malformed number");
    }
  }
  if (!header) throw ValidationError("scattering file: missing header line \"k c1 c2\"");
  validate(m);
  return m;
}

}  // namespace hypdet
