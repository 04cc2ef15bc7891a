#include "hypdet/numerics/bernoulli.hpp"

namespace hypdet {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// sum_{k=0}^{n} C(n+1, k) B_k over the first n+1 entries of `b`.
mpq_class recursion_sum(const std::vector<mpq_class>& b, std::size_t n) {
  mpq_class acc = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (b[k] == 0) continue;
    acc += mpq_class(binomial(n + 1, k)) * b[k];
  }
  return acc;
}

}  // namespace

BernoulliTable& BernoulliTable::instance() {
  static BernoulliTable table;
  return table;
}

void BernoulliTable::grow_locked(std::size_t n) {
  if (values_.empty()) values_.emplace_back(1);
  while (values_.size() <= n) {
    std::size_t m = values_.size();
    if (m > 1 && m % 2 == 1) {
      values_.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
    mpq_class acc = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (values_[k] == 0) continue;
      acc += mpq_class(binomial(m + 1, k)) * values_[k];
    }
    mpq_class bm = -acc / mpq_class(static_cast<unsigned long>(m + 1));
    bm.canonicalize();
    values_.push_back(bm);
  }
}

mpq_class BernoulliTable::get(std::size_t n) {
  std::lock_guard<std::mutex> lock(mutex_);
  grow_locked(n);
  return values_[n];
}

ExtReal BernoulliTable::real(std::size_t n) { return to_ext(get(n)); }

std::vector<mpq_class> BernoulliTable::snapshot(std::size_t n) {
  std::lock_guard<std::mutex> lock(mutex_);
  grow_locked(n);
  return values_;
}

long BernoulliTable::first_recursion_failure() {
  std::lock_guard<std::mutex> lock(mutex_);
  if (values_.empty()) return -1;
  if (values_[0] != 1) return 0;
  for (std::size_t n = 1; n < values_.size(); ++n) {
    if (n > 1 && n % 2 == 1 && values_[n] != 0) return static_cast<long>(n);
    if (recursion_sum(values_, n) != 0) return static_cast<long>(n);
  }
  return -1;
}

void BernoulliTable::inject_fault(std::size_t n, const mpq_class& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  grow_locked(n);
  values_[n] = value;
}

void BernoulliTable::reset() {
  std::lock_guard<std::mutex> lock(mutex_);
  values_.clear();
}

mpq_class bernoulli(std::size_t n) { return BernoulliTable::instance().get(n); }

ExtReal to_ext(const mpq_class& q) {
  ExtReal r;
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace hypdet
