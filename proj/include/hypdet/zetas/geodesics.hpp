#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypdet/numerics/ext_complex.hpp"

namespace hypdet {

/// Square complex matrix, row-major.
using ComplexMatrix = std::vector<std::vector<ExtComplex>>;

/// Images of the generators L = [[1,1],[0,1]] and R = [[1,0],[1,1]] under a
/// representation chi.  Both must be h x h; the relations of PSL(2, Z) are
/// the caller's responsibility.
struct GeneratorImages {
  ComplexMatrix l;
  ComplexMatrix r;
  int dim() const { return static_cast<int>(l.size()); }
};

/// A primitive hyperbolic conjugacy class, named by its canonical cyclic word.
///
/// `power_sums[k-1]` holds tr chi(P0)^k for k = 1..h; an empty list stands
/// for the trivial representation of dimension `dim`.  Traces of higher
/// powers come from these through Newton's identities.
struct GeodesicClass {
  std::string word;
  std::int64_t trace = 0;
  int dim = 1;
  std::vector<ExtComplex> power_sums;

  /// N(P0) = ((t + sqrt(t^2 - 4)) / 2)^2.
  ExtReal norm() const;
  ExtReal log_norm() const;
  /// tr chi(P0^l), l >= 1.
  ExtComplex chi_trace(long l) const;
  /// tr chi(P0^l) for l = 1..count.
  std::vector<ExtComplex> chi_traces(long count) const;
  /// Lambda(P0^l) = log N(P0) / (1 - N(P0)^{-l}).
  ExtReal von_mangoldt(long l) const;
};

/// Norm attached to a hyperbolic trace t >= 3.
ExtReal norm_from_trace(std::int64_t t);
/// Largest trace whose norm can still be <= norm_cutoff.
std::int64_t max_trace_for_norm(const ExtReal& norm_cutoff);
/// Smallest norm of PSL(2, Z), (7 + 3 sqrt 5) / 2.
ExtReal smallest_modular_norm();

/// Enumerates primitive hyperbolic classes up to a norm cutoff.  Output is
/// complete, free of duplicates and ordered by (trace, word).
/// Implementations are safe to share between threads.
class GeodesicSource {
 public:
  virtual ~GeodesicSource() = default;
  virtual std::vector<GeodesicClass> classes(const ExtReal& norm_cutoff) const = 0;
  /// Dimension of the representation whose traces are reported.
  virtual int dim() const = 0;
  /// Largest cutoff for which the enumeration is known to be complete.
  virtual std::optional<ExtReal> completeness_limit() const { return std::nullopt; }
};

/// PSL(2, Z), enumerated as Lyndon words over L < R.
class ModularGeodesicSource : public GeodesicSource {
 public:
  explicit ModularGeodesicSource(std::optional<GeneratorImages> images = std::nullopt, unsigned threads = 0);
  std::vector<GeodesicClass> classes(const ExtReal& norm_cutoff) const override;
  int dim() const override { return images_ ? images_->dim() : 1; }

 private:
  std::optional<GeneratorImages> images_;
  unsigned threads_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::string, long>, std::shared_ptr<const std::vector<GeodesicClass>>> cache_;
};

/// A fixed list of classes read from a table; complete up to `limit`.
class TableGeodesicSource : public GeodesicSource {
 public:
  TableGeodesicSource(std::vector<GeodesicClass> classes, ExtReal limit, int dim);
  std::vector<GeodesicClass> classes(const ExtReal& norm_cutoff) const override;
  int dim() const override { return dim_; }
  std::optional<ExtReal> completeness_limit() const override { return limit_; }

 private:
  std::vector<GeodesicClass> classes_;
  ExtReal limit_;
  int dim_;
};

/// Primitive hyperbolic classes of PSL(2, Z) with norm <= norm_cutoff.
/// With `images`, power sums of chi(P0) are filled in from the word product.
/// `threads == 0` uses the hardware concurrency; the result does not depend
/// on it.  Throws CutoffError below the smallest norm.
std::vector<GeodesicClass> modular_geodesics(const ExtReal& norm_cutoff,
                                             const std::optional<GeneratorImages>& images = std::nullopt,
                                             unsigned threads = 0);

/// Integer matrix of a word over {L, R}; throws ValidationError on other letters.
std::array<std::int64_t, 4> word_matrix(const std::string& word);

/// Cache file: one class per line, tab-separated word, trace, norm (decimal)
/// and one "re,im" field per power sum.
void write_geodesic_table(std::ostream& out, const std::vector<GeodesicClass>& classes);
/// Reads a cache file; validates trace against word and norm against trace.
std::vector<GeodesicClass> read_geodesic_table(std::istream& in);

}  // namespace hypdet
