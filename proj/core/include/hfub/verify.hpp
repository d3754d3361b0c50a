#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hfub/combinat.hpp"
#include "hfub/families.hpp"

namespace hfub::verify {

inline constexpr std::uint64_t kDefaultSeed = 20131202;

enum class Parity { any, even, odd };

/// The values of n a check is valid for. Enforced by the runner.
struct Applicability {
  int min_n = 1;
  std::optional<int> max_n;
  Parity parity = Parity::any;

  static Applicability at_least(int lo, Parity parity = Parity::any) { return {lo, std::nullopt, parity}; }
  static Applicability between(int lo, int hi) { return {lo, hi, Parity::any}; }

  bool contains(int n) const;
  std::string str() const;
};

/// Both sides of a failed identity, rendered exactly.
struct Mismatch {
  std::string lhs;
  std::string rhs;
};

struct CheckContext {
  const Tables& tables;
  const LambdaTable& lambdas;
  std::uint64_t seed;
};

/// Evaluates the identity at one n; nullopt means it holds.
using CheckBody = std::function<std::optional<Mismatch>(const CheckContext&, int n)>;

struct IdentityCheck {
  std::string id;
  std::string description;
  Applicability applicable;
  /// Randomized checks draw one seeded case per n; n is the case index.
  bool randomized = false;
  CheckBody body;
};

class UnknownCheck : public std::invalid_argument {
 public:
  explicit UnknownCheck(const std::string& id) : std::invalid_argument("unknown check id '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class Registry {
 public:
  /// Throws std::invalid_argument on a duplicate id.
  void add(IdentityCheck check);
  const IdentityCheck* find(std::string_view id) const;
  const IdentityCheck& get(std::string_view id) const;  // throws UnknownCheck
  const std::vector<IdentityCheck>& checks() const { return checks_; }
  std::vector<std::string> ids() const;

 private:
  std::vector<IdentityCheck> checks_;
};

/// Every identity the library knows how to verify.
const Registry& builtin_registry();

enum class Status { pass, fail };
std::string_view to_string(Status status);

struct Witness {
  int n;
  std::string lhs;
  std::string rhs;
};

struct IdentityReport {
  std::string check_id;
  int n_min = 0;
  int n_max = 0;
  Status status = Status::pass;
  std::optional<Witness> witness;  // present iff status == fail
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;
  int evaluated = 0;  // applicable n actually evaluated
  int failures = 0;   // > 1 only when scanning exhaustively
};

struct RunOptions {
  /// Keep scanning after the first failure; the witness stays the smallest n.
  bool exhaustive = false;
  std::uint64_t seed = kDefaultSeed;
  /// Worker threads for run_suite; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Owns the memoized tables the checks read, so faults injected into one
/// Verifier never leak into another.
class Verifier {
 public:
  Verifier() : Verifier(builtin_registry()) {}
  explicit Verifier(const Registry& registry) : registry_(registry) {}

  Tables& tables() { return tables_; }
  LambdaTable& lambdas() { return lambdas_; }
  const Registry& registry() const { return registry_; }

  /// Throws UnknownCheck, or std::invalid_argument if max_n < 1.
  IdentityReport run_check(std::string_view check_id, int max_n, const RunOptions& options = {}) const;

  /// An empty selection or {"all"} runs every registered check. Reports come
  /// back in selection order regardless of scheduling.
  std::vector<IdentityReport> run_suite(int max_n, const std::vector<std::string>& selection,
                                        const RunOptions& options = {}) const;

 private:
  const Registry& registry_;
  Tables tables_;
  LambdaTable lambdas_;
};

IdentityReport run_check(std::string_view check_id, int max_n, const RunOptions& options = {});
std::vector<IdentityReport> run_suite(int max_n, const std::vector<std::string>& selection,
                                      const RunOptions& options = {});

/// Number of ordered set partitions of an n-set, counted by enumerating all
/// n^n rank assignments and keeping those whose ranks form {0, .., k-1}.
std::uint64_t count_ordered_partitions_brute_force(int n);

}  // namespace hfub::verify
