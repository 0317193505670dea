#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cyclo/cyclo_ring.hpp"
#include "cyclo/matrix.hpp"
#include "json.hpp"

namespace cyclo {

using Json = nlohmann::ordered_json;

struct Check {
  std::string id;
  std::string subject;
  bool pass = false;
  Json witness;
};

/// Verification report. Checks keep the deterministic order in which they
/// were enumerated, never completion order.
struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<Check> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  void append(std::vector<Check> more);
  Json to_json() const;
};

/// Coefficients as "numerator/p^e" strings, constant term first.
Json to_json(const CycloElem& x);
/// Rows of entries, each entry a coefficient list.
Json to_json(const CycloMatrix& m);

/// Runs body(i) for i in [0, n) on up to `jobs` threads. The first
/// exception thrown by any body is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto run = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cyclo
