#include "charquant/cohomology.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "charquant/error.hpp"
#include "charquant/parallel.hpp"
#include "charquant/smith.hpp"

namespace charquant {

int worker_count() {
  if (const char* env = std::getenv("CHARQUANT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(worker_count()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

void check_complex(const std::vector<PolyMatrix>& differentials) {
  for (std::size_t n = 0; n + 1 < differentials.size(); ++n) {
    const PolyMatrix& d0 = differentials[n];
    const PolyMatrix& d1 = differentials[n + 1];
    if (d1.cols() != d0.rows())
      throw Error(ErrorCode::ShapeMismatch, "differential " + std::to_string(n + 1) +
                                                " does not start where differential " +
                                                std::to_string(n) + " ends");
    if (!(d1 * d0).is_zero())
      throw Error(ErrorCode::CompositionNonzero, "d^" + std::to_string(n + 1) + " o d^" +
                                                     std::to_string(n) + " != 0");
  }
}

std::vector<HomologySummary> complex_cohomology(const std::vector<PolyMatrix>& differentials) {
  check_complex(differentials);
  const std::size_t L = differentials.size();
  std::vector<std::vector<Polynomial>> factors(L);
  parallel_for(L, [&](std::size_t n) { factors[n] = invariant_factors(differentials[n]); });

  // ker d^n is saturated in C^n because C^{n+1} is torsion free, so the
  // torsion of ker d^n / im d^{n-1} is the torsion of C^n / im d^{n-1}.
  std::vector<HomologySummary> out;
  for (std::size_t n = 0; n < L; ++n) {
    HomologySummary h;
    h.degree = static_cast<int>(n);
    const int dim = differentials[n].cols();
    const int rank_out = static_cast<int>(factors[n].size());
    const int rank_in = n == 0 ? 0 : static_cast<int>(factors[n - 1].size());
    h.free_rank = dim - rank_out - rank_in;
    if (n > 0)
      for (const auto& f : factors[n - 1])
        if (!f.is_unit()) h.torsion.push_back(f);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<HomologySummary> complex_cohomology(const CochainMatrixComplex& complex) {
  for (std::size_t n = 0; n < complex.differentials.size(); ++n) {
    const PolyMatrix& d = complex.differentials[n];
    if (n + 1 >= complex.ranks.size() || d.cols() != complex.ranks[n] || d.rows() != complex.ranks[n + 1])
      throw Error(ErrorCode::ShapeMismatch, "differential " + std::to_string(n) + " disagrees with ranks");
  }
  return complex_cohomology(complex.differentials);
}

}  // namespace charquant
