#include "hfub/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

namespace hfub::verify {

bool Applicability::contains(int n) const {
  if (n < min_n) return false;
  if (max_n && n > *max_n) return false;
  switch (parity) {
    case Parity::even:
      return n % 2 == 0;
    case Parity::odd:
      return n % 2 != 0;
    case Parity::any:
      break;
  }
  return true;
}

std::string Applicability::str() const {
  std::string out;
  switch (parity) {
    case Parity::even:
      out = "even ";
      break;
    case Parity::odd:
      out = "odd ";
      break;
    case Parity::any:
      out = "all ";
      break;
  }
  out += "n >= " + std::to_string(min_n);
  if (max_n) out += ", n <= " + std::to_string(*max_n);
  return out;
}

void Registry::add(IdentityCheck check) {
  if (find(check.id) != nullptr) throw std::invalid_argument("duplicate check id '" + check.id + "'");
  checks_.push_back(std::move(check));
}

const IdentityCheck* Registry::find(std::string_view id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const IdentityCheck& c) { return c.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

const IdentityCheck& Registry::get(std::string_view id) const {
  const IdentityCheck* check = find(id);
  if (check == nullptr) throw UnknownCheck(std::string(id));
  return *check;
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  out.reserve(checks_.size());
  for (const auto& c : checks_) out.push_back(c.id);
  return out;
}

std::string_view to_string(Status status) { return status == Status::pass ? "pass" : "fail"; }

IdentityReport Verifier::run_check(std::string_view check_id, int max_n, const RunOptions& options) const {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  const IdentityCheck& check = registry_.get(check_id);

  IdentityReport report;
  report.check_id = check.id;
  report.n_min = check.applicable.min_n;
  report.n_max = check.applicable.max_n ? std::min(max_n, *check.applicable.max_n) : max_n;
  if (check.randomized) report.seed = options.seed;

  const CheckContext ctx{tables_, lambdas_, options.seed};
  const auto start = std::chrono::steady_clock::now();
  for (int n = report.n_min; n <= report.n_max; ++n) {
    if (!check.applicable.contains(n)) continue;
    ++report.evaluated;
    std::optional<Mismatch> mismatch;
    try {
      mismatch = check.body(ctx, n);
    } catch (const std::exception& e) {
      mismatch = Mismatch{"exception", e.what()};
    }
    if (!mismatch) continue;
    ++report.failures;
    if (!report.witness) report.witness = Witness{n, std::move(mismatch->lhs), std::move(mismatch->rhs)};
    report.status = Status::fail;
    if (!options.exhaustive) break;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<IdentityReport> Verifier::run_suite(int max_n, const std::vector<std::string>& selection,
                                                const RunOptions& options) const {
  if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  std::vector<std::string> ids;
  if (selection.empty() || (selection.size() == 1 && selection.front() == "all")) {
    ids = registry_.ids();
  } else {
    for (const auto& id : selection) registry_.get(id);  // reject unknown ids before running anything
    ids = selection;
  }

  std::vector<IdentityReport> reports(ids.size());
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(ids.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        reports[i] = run_check(ids[i], max_n, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

IdentityReport run_check(std::string_view check_id, int max_n, const RunOptions& options) {
  return Verifier().run_check(check_id, max_n, options);
}

std::vector<IdentityReport> run_suite(int max_n, const std::vector<std::string>& selection,
                                      const RunOptions& options) {
  return Verifier().run_suite(max_n, selection, options);
}

std::uint64_t count_ordered_partitions_brute_force(int n) {
  if (n < 0 || n > 10) throw std::invalid_argument("count_ordered_partitions_brute_force: n must be in [0, 10]");
  if (n == 0) return 1;
  std::vector<int> rank(static_cast<std::size_t>(n), 0);
  std::vector<int> used(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  while (true) {
    std::fill(used.begin(), used.end(), 0);
    int top = 0;
    for (int r : rank) {
      used[r] = 1;
      top = std::max(top, r);
    }
    // Blocks are ranked 0..top with none empty.
    if (std::all_of(used.begin(), used.begin() + top + 1, [](int u) { return u != 0; })) ++count;

    int i = 0;
    while (i < n && rank[i] == n - 1) rank[i++] = 0;
    if (i == n) break;
    ++rank[i];
  }
  return count;
}

}  // namespace hfub::verify
