#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <mutex>
#include <vector>

#include "hypdet/numerics/ext_real.hpp"

namespace hypdet {

/// Process-wide table of exact Bernoulli numbers B_0, B_1, ..., B_N with the
/// convention B_1 = -1/2.  Entries are produced by the convolution recursion
///   sum_{k=0}^{n} C(n+1, k) B_k = 0,   n >= 1,
/// and the table grows on demand.  Thread-safe.
class BernoulliTable {
 public:
  static BernoulliTable& instance();

  /// Exact B_n.
  mpq_class get(std::size_t n);
  /// B_n rounded to the working precision.
  ExtReal real(std::size_t n);
  /// Cached entries (at least up to `n`) for inspection.
  std::vector<mpq_class> snapshot(std::size_t n);

  /// Checks that every cached entry satisfies the defining recursion
  /// exactly.  Returns the first failing index, or -1 when all pass.
  long first_recursion_failure();

  /// Overwrites one cached entry.  Only used by fault-injection tests of
  /// the verification suites.
  void inject_fault(std::size_t n, const mpq_class& value);
  /// Drops every cached entry so the next access recomputes from scratch.
  void reset();

 private:
  BernoulliTable() = default;
  void grow_locked(std::size_t n);

  std::mutex mutex_;
  std::vector<mpq_class> values_;
};

/// Shorthand for BernoulliTable::instance().get(n).
mpq_class bernoulli(std::size_t n);

/// Converts an exact rational to the working precision.
ExtReal to_ext(const mpq_class& q);

}  // namespace hypdet
