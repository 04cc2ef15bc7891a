#include "hypdet/zetas/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "hypdet/errors.hpp"

namespace hypdet {

namespace {

using IntMatrix = std::array<std::int64_t, 4>;  // a b / c d

IntMatrix times_l(const IntMatrix& m) { return {m[0], m[0] + m[1], m[2], m[2] + m[3]}; }
IntMatrix times_r(const IntMatrix& m) { return {m[0] + m[1], m[1], m[2] + m[3], m[3]}; }

struct RawClass {
  std::string word;
  std::int64_t trace;
};

// Depth-first walk over pre-necklaces (Ruskey's scheme) with period p.  A
// pre-necklace whose period equals its length is a Lyndon word.  Every Lyndon
// word containing both letters ends in R, and each letter only grows the
// entries, so no extension of w can beat trace(M_w R) = a + b + d.
void walk(std::string& w, const IntMatrix& m, std::size_t p, std::int64_t t_max, std::vector<RawClass>& out) {
  std::int64_t tr = m[0] + m[3];
  if (p == w.size() && tr <= t_max) out.push_back({w, tr});
  if (m[0] + m[1] + m[3] > t_max) return;
  char prev = w[w.size() - p];
  if (prev == 'L') {
    w.push_back('L');
    walk(w, times_l(m), p, t_max, out);
    w.back() = 'R';
    walk(w, times_r(m), w.size(), t_max, out);
    w.pop_back();
  } else {
    w.push_back('R');
    walk(w, times_r(m), p, t_max, out);
    w.pop_back();
  }
}

// All Lyndon words whose leading L-run has length exactly `run`.
std::vector<RawClass> words_with_run(std::int64_t run, std::int64_t t_max) {
  std::vector<RawClass> out;
  std::string w(static_cast<std::size_t>(run), 'L');
  w.push_back('R');
  IntMatrix m = word_matrix(w);
  walk(w, m, w.size(), t_max, out);
  return out;
}

ComplexMatrix identity(int h) {
  ComplexMatrix m(static_cast<std::size_t>(h), std::vector<ExtComplex>(static_cast<std::size_t>(h), ExtComplex(0)));
  for (int i = 0; i < h; ++i) m[i][i] = ExtComplex(1);
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  std::size_t h = a.size();
  ComplexMatrix c(h, std::vector<ExtComplex>(h, ExtComplex(0)));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t k = 0; k < h; ++k) {
      if (a[i][k].re().is_zero() && a[i][k].im().is_zero()) continue;
      for (std::size_t j = 0; j < h; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

ComplexMatrix power(const ComplexMatrix& base, std::int64_t e) {
  ComplexMatrix result = identity(static_cast<int>(base.size()));
  ComplexMatrix b = base;
  while (e > 0) {
    if (e & 1) result = multiply(result, b);
    e >>= 1;
    if (e > 0) b = multiply(b, b);
  }
  return result;
}

ExtComplex trace_of(const ComplexMatrix& m) {
  ExtComplex t(0);
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

std::vector<ExtComplex> power_sums_for(const std::string& word, const GeneratorImages& images) {
  ComplexMatrix p = identity(images.dim());
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    p = multiply(p, power(word[i] == 'L' ? images.l : images.r, static_cast<std::int64_t>(j - i)));
    i = j;
  }
  std::vector<ExtComplex> sums;
  ComplexMatrix pk = p;
  for (int k = 1; k <= images.dim(); ++k) {
    sums.push_back(trace_of(pk));
    if (k < images.dim()) pk = multiply(pk, p);
  }
  return sums;
}

void check_images(const GeneratorImages& images) {
  int h = images.dim();
  if (h < 1 || static_cast<int>(images.r.size()) != h) throw ValidationError("generator images must be square and of equal size");
  for (const auto& row : images.l) {
    if (static_cast<int>(row.size()) != h) throw ValidationError("generator image L is not square");
  }
  for (const auto& row : images.r) {
    if (static_cast<int>(row.size()) != h) throw ValidationError("generator image R is not square");
  }
}

bool is_lyndon(const std::string& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (w.substr(k) + w.substr(0, k) <= w) return false;
  }
  return !w.empty();
}

int decimal_digits(long bits) { return static_cast<int>(std::ceil(static_cast<double>(bits) * std::log10(2.0))) + 2; }

}  // namespace

ExtReal norm_from_trace(std::int64_t t) {
  ExtReal tt(static_cast<long>(t));
  ExtReal lambda = (tt + sqrt(tt * tt - ExtReal(4))) / ExtReal(2);
  return lambda * lambda;
}

ExtReal GeodesicClass::norm() const { return norm_from_trace(trace); }

ExtReal GeodesicClass::log_norm() const {
  ExtReal tt(static_cast<long>(trace));
  return ExtReal(2) * log((tt + sqrt(tt * tt - ExtReal(4))) / ExtReal(2));
}

ExtReal GeodesicClass::von_mangoldt(long l) const {
  ExtReal ln = log_norm();
  return ln / (ExtReal(1) - exp(-(ExtReal(l) * ln)));
}

ExtComplex GeodesicClass::chi_trace(long l) const {
  if (l < 1) throw DomainError("chi_trace needs a positive power");
  return chi_traces(l).back();
}

std::vector<ExtComplex> GeodesicClass::chi_traces(long count) const {
  if (power_sums.empty()) return std::vector<ExtComplex>(static_cast<std::size_t>(std::max(count, 0L)), ExtComplex(dim));
  int h = static_cast<int>(power_sums.size());
  std::vector<ExtComplex> p(power_sums);
  if (count <= h) {
    p.resize(static_cast<std::size_t>(std::max(count, 0L)));
    return p;
  }
  // elementary symmetric functions of the eigenvalues, then the recurrence
  std::vector<ExtComplex> e(static_cast<std::size_t>(h) + 1, ExtComplex(0));
  e[0] = ExtComplex(1);
  for (int k = 1; k <= h; ++k) {
    ExtComplex acc(0);
    for (int i = 1; i <= k; ++i) {
      ExtComplex term = e[k - i] * power_sums[i - 1];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    e[k] = acc / ExtReal(k);
  }
  for (long n = h + 1; n <= count; ++n) {
    ExtComplex acc(0);
    for (int i = 1; i <= h; ++i) {
      ExtComplex term = e[i] * p[static_cast<std::size_t>(n - i - 1)];
      if (i % 2 == 1) acc += term; else acc -= term;
    }
    p.push_back(acc);
  }
  return p;
}

std::int64_t max_trace_for_norm(const ExtReal& norm_cutoff) {
  ExtReal lambda = sqrt(norm_cutoff);
  return floor(lambda + ExtReal(1) / lambda).to_long();
}

ExtReal smallest_modular_norm() { return norm_from_trace(3); }

std::array<std::int64_t, 4> word_matrix(const std::string& word) {
  IntMatrix m{1, 0, 0, 1};
  for (char ch : word) {
    if (ch == 'L') m = times_l(m);
    else if (ch == 'R') m = times_r(m);
    else throw ValidationError(std::string("word letters must be L or R, got '") + ch + "'");
  }
  return m;
}

std::vector<GeodesicClass> modular_geodesics(const ExtReal& norm_cutoff, const std::optional<GeneratorImages>& images,
                                             unsigned threads) {
  if (!(norm_cutoff >= smallest_modular_norm())) {
    throw CutoffError("norm cutoff " + norm_cutoff.to_string(10) + " is below the smallest norm (7+3 sqrt 5)/2");
  }
  if (images) check_images(*images);
  std::int64_t t_max = max_trace_for_norm(norm_cutoff);
  std::int64_t runs = t_max - 2;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, std::max<std::int64_t>(runs, 1)));

  std::vector<std::vector<RawClass>> parts(static_cast<std::size_t>(std::max<std::int64_t>(runs, 0)));
  auto work = [&](unsigned tid) {
    for (std::int64_t run = 1 + tid; run <= runs; run += threads) parts[run - 1] = words_with_run(run, t_max);
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(work, tid);
    for (auto& th : pool) th.join();
  }

  std::vector<RawClass> raw;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(raw));
  std::sort(raw.begin(), raw.end(), [](const RawClass& a, const RawClass& b) {
    return a.trace != b.trace ? a.trace < b.trace : a.word < b.word;
  });

  std::vector<GeodesicClass> out;
  out.reserve(raw.size());
  std::int64_t last_checked = 0;
  bool last_ok = true;
  for (auto& rc : raw) {
    if (rc.trace != last_checked) {
      last_checked = rc.trace;
      last_ok = norm_from_trace(rc.trace) <= norm_cutoff;
    }
    if (!last_ok) continue;
    GeodesicClass g;
    g.trace = rc.trace;
    g.word = std::move(rc.word);
    if (images) {
      g.dim = images->dim();
      g.power_sums = power_sums_for(g.word, *images);
    }
    out.push_back(std::move(g));
  }
  return out;
}

ModularGeodesicSource::ModularGeodesicSource(std::optional<GeneratorImages> images, unsigned threads)
    : images_(std::move(images)), threads_(threads) {
  if (images_) check_images(*images_);
}

std::vector<GeodesicClass> ModularGeodesicSource::classes(const ExtReal& norm_cutoff) const {
  auto key = std::make_pair(norm_cutoff.to_string(40), working_precision());
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  auto list = std::make_shared<const std::vector<GeodesicClass>>(modular_geodesics(norm_cutoff, images_, threads_));
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, list);
  return *list;
}

TableGeodesicSource::TableGeodesicSource(std::vector<GeodesicClass> classes, ExtReal limit, int dim)
    : classes_(std::move(classes)), limit_(std::move(limit)), dim_(dim) {
  std::sort(classes_.begin(), classes_.end(), [](const GeodesicClass& a, const GeodesicClass& b) {
    return a.trace != b.trace ? a.trace < b.trace : a.word < b.word;
  });
  for (const auto& g : classes_) {
    if (g.dim != dim_) throw ValidationError("table class " + g.word + " has the wrong representation dimension");
  }
}

std::vector<GeodesicClass> TableGeodesicSource::classes(const ExtReal& norm_cutoff) const {
  if (norm_cutoff > limit_) {
    throw CutoffError("table is complete only up to norm " + limit_.to_string(10));
  }
  std::vector<GeodesicClass> out;
  for (const auto& g : classes_) {
    if (g.norm() <= norm_cutoff) out.push_back(g);
  }
  return out;
}

void write_geodesic_table(std::ostream& out, const std::vector<GeodesicClass>& classes) {
  int digits = decimal_digits(working_precision());
  for (const auto& g : classes) {
    out << g.word << '\t' << g.trace << '\t' << g.norm().to_string(digits);
    for (const auto& p : g.power_sums) out << '\t' << p.re().to_string(digits) << ',' << p.im().to_string(digits);
    out << '\n';
  }
}

std::vector<GeodesicClass> read_geodesic_table(std::istream& in) {
  std::vector<GeodesicClass> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    auto fail = [&](const std::string& msg) {
      throw ValidationError("geodesic table line " + std::to_string(lineno) + ": " + msg);
    };
    if (fields.size() < 3) fail("expected word, trace and norm");
    GeodesicClass g;
    g.word = fields[0];
    try {
      g.trace = std::stoll(fields[1]);
    } catch (const std::exception&) {
      fail("trace is not an integer");
    }
    IntMatrix m;
    try {
      m = word_matrix(g.word);
    } catch (const ValidationError& e) {
      fail(e.what());
    }
    if (m[0] + m[3] != g.trace) fail("trace does not match the word");
    if (g.trace < 3 || !is_lyndon(g.word)) fail("word is not a canonical primitive hyperbolic word");
    ExtReal n(fields[2]);
    if (abs(n - g.norm()) > abs(g.norm()) * ExtReal(1e-15)) fail("norm does not match the trace");
    for (std::size_t i = 3; i < fields.size(); ++i) {
      auto comma = fields[i].find(',');
      if (comma == std::string::npos) fail("chi trace field must be re,im");
      g.power_sums.emplace_back(ExtReal(fields[i].substr(0, comma)), ExtReal(fields[i].substr(comma + 1)));
    }
    g.dim = g.power_sums.empty() ? 1 : static_cast<int>(g.power_sums.size());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace hypdet
