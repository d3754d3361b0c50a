#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hfub {

/// Growable table of rows, extended on demand by a row generator. Row n is
/// built from row n - 1 (null for row 0). Extension takes an exclusive lock;
/// reads of existing rows take a shared one. Rows live in a deque, so
/// extension never moves existing rows.
template <typename T>
class MemoRows {
 public:
  using Row = std::vector<T>;
  using Generator = std::function<Row(std::size_t n, const Row* previous)>;

  explicit MemoRows(Generator generator) : generator_(std::move(generator)) {}

  MemoRows(const MemoRows&) = delete;
  MemoRows& operator=(const MemoRows&) = delete;

  T at(std::size_t n, std::size_t k) const {
    ensure(n);
    std::shared_lock lock(mutex_);
    const Row& r = rows_[n];
    if (k >= r.size()) throw std::out_of_range("MemoRows: column out of range");
    return r[k];
  }

  Row row(std::size_t n) const {
    ensure(n);
    std::shared_lock lock(mutex_);
    return rows_[n];
  }

  std::size_t computed_rows() const {
    std::shared_lock lock(mutex_);
    return rows_.size();
  }

  /// Replaces one cached entry. Rows computed later are derived from the
  /// replaced value. Intended for fault-injection testing.
  void overwrite(std::size_t n, std::size_t k, T value) {
    ensure(n);
    std::unique_lock lock(mutex_);
    Row& r = rows_[n];
    if (k >= r.size()) throw std::out_of_range("MemoRows: column out of range");
    r[k] = std::move(value);
  }

 private:
  void ensure(std::size_t n) const {
    {
      std::shared_lock lock(mutex_);
      if (rows_.size() > n) return;
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const Row* previous = rows_.empty() ? nullptr : &rows_.back();
      rows_.push_back(generator_(rows_.size(), previous));
    }
  }

  Generator generator_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<Row> rows_;
};

}  // namespace hfub
