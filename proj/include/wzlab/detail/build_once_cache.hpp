#pragma once

#include <exception>
#include <future>
#include <map>
#include <memory>
#include <mutex>

namespace wzlab::detail {

// Thread-safe memo table. The first caller for a key builds the value
// outside the lock; concurrent callers for the same key wait on it.
template <class Key, class Value>
class BuildOnceCache {
 public:
  using Handle = std::shared_ptr<const Value>;

  template <class Builder>
  Handle get(const Key& key, Builder&& build) {
    std::promise<Handle> promise;
    std::shared_future<Handle> result;
    bool owner = false;
    {
      std::lock_guard lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) {
        result = it->second;
      } else {
        result = promise.get_future().share();
        entries_.emplace(key, result);
        owner = true;
      }
    }
    if (owner) {
      try {
        promise.set_value(std::make_shared<const Value>(build()));
      } catch (...) {
        promise.set_exception(std::current_exception());
        std::lock_guard lock(mutex_);
        entries_.erase(key);
      }
    }
    return result.get();
  }

 private:
  std::mutex mutex_;
  std::map<Key, std::shared_future<Handle>> entries_;
};

}  // namespace wzlab::detail
