#pragma once

#include <cstddef>
#include <functional>
#include <future>
#include <mutex>
#include <unordered_map>

namespace multimult {

/// Worker count: MULTIMULT_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(0..count-1), possibly on several threads. Each index writes its
/// own output slot, so results do not depend on scheduling. The exception of
/// the lowest failing index is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Per-key memo where each value is computed once; concurrent readers of a
/// key in flight wait for the first computation.
template <class Key, class Value, class Hash = std::hash<Key>>
class OnceCache {
 public:
  template <class F>
  Value get(const Key& key, F&& compute) {
    std::promise<Value> promise;
    std::shared_future<Value> future;
    bool owner = false;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = entries_.find(key);
      if (it == entries_.end()) {
        future = promise.get_future().share();
        entries_.emplace(key, future);
        owner = true;
      } else {
        future = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(compute());
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return future.get();
  }

  bool contains(const Key& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.count(key) > 0;
  }

 private:
  std::mutex mutex_;
  std::unordered_map<Key, std::shared_future<Value>, Hash> entries_;
};

}  // namespace multimult
