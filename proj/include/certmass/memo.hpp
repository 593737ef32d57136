// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace certmass {

// Write-once memo table. Lookups take a shared lock; a miss computes the value
// outside any lock and the first insertion wins. Node-based storage keeps the
// returned references valid until clear().
template <class Key, class Value>
class WriteOnceCache {
public:
    template <class Compute>
    const Value& get(const Key& key, Compute&& compute)
    {
        {
            std::shared_lock lock(mu_);
            if (auto it = table_.find(key); it != table_.end())
                return it->second;
        }
        Value fresh = compute();
        std::unique_lock lock(mu_);
        return table_.try_emplace(key, std::move(fresh)).first->second;
    }

    const Value* find(const Key& key) const
    {
        std::shared_lock lock(mu_);
        auto it = table_.find(key);
        return it == table_.end() ? nullptr : &it->second;
    }

    // Seeding from a persisted table; an existing entry is kept.
    void insert(const Key& key, Value value)
    {
        std::unique_lock lock(mu_);
        table_.try_emplace(key, std::move(value));
    }

    std::vector<std::pair<Key, Value>> snapshot() const
    {
        std::shared_lock lock(mu_);
        return {table_.begin(), table_.end()};
    }

    std::size_t size() const
    {
        std::shared_lock lock(mu_);
        return table_.size();
    }

    void clear()
    {
        std::unique_lock lock(mu_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mu_;
    std::map<Key, Value> table_;
};

}  // namespace certmass
