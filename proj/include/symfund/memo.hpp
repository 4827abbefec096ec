#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <utility>

namespace symfund::detail {

/// Concurrent readers, serialized insertion. Values are computed outside the
/// lock; if two threads race, the first insertion wins and both observe it.
template <class Key, class Value, class Compare = std::less<Key>>
class MemoTable {
public:
    std::optional<Value> find(const Key& key) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    Value insert(const Key& key, Value value)
    {
        std::unique_lock lock(mutex_);
        auto [it, inserted] = table_.try_emplace(key, std::move(value));
        return it->second;
    }

    template <class Fn>
    Value get_or_compute(const Key& key, Fn&& compute)
    {
        if (auto hit = find(key))
            return std::move(*hit);
        return insert(key, compute());
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, Value, Compare> table_;
};

}  // namespace symfund::detail
