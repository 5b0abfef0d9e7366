#pragma once

#include <cstddef>
#include <limits>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace sjack {

/// Thread-safe memo table.  Values are pure functions of their key, so two
/// workers racing on the same key store identical values and the second
/// insert is a no-op.  Once `capacity` entries are stored, new keys are
/// computed but not retained.
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
 public:
  explicit ConcurrentMemo(std::size_t capacity = std::numeric_limits<std::size_t>::max())
      : capacity_(capacity) {}

  std::optional<Value> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, const Value& value) {
    std::unique_lock lock(mutex_);
    if (table_.size() >= capacity_) return;
    table_.try_emplace(key, value);
  }

  template <class Compute>
  Value get_or_compute(const Key& key, Compute&& compute) {
    if (auto hit = find(key)) return *std::move(hit);
    Value v = compute();
    insert(key, v);
    return v;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

  void set_capacity(std::size_t capacity) {
    std::unique_lock lock(mutex_);
    capacity_ = capacity;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Value, Hash> table_;
  std::size_t capacity_;
};

/// Memo capacity from SHIFTED_JACK_MEMO_CAP; unbounded when unset or invalid.
std::size_t memo_capacity_from_env();

}  // namespace sjack
