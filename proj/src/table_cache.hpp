#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "permstat/errors.hpp"
#include "permstat/limits.hpp"

namespace permstat::detail {

/// One immutable lookup table per n. The first caller for a given n builds it under
/// the lock; afterwards lookups are a single acquire load.
class TableCache {
public:
    using Table = std::vector<std::uint32_t>;

    explicit TableCache(const char* what) : what_(what) {}

    template <typename Builder>
    const Table& get(int n, Builder&& build) {
        if (n < 1 || n > table_cap() || n >= static_cast<int>(published_.size())) {
            throw CapExceededError(std::string(what_) + " for n=" + std::to_string(n) +
                                   " exceeds table cap " + std::to_string(table_cap()));
        }
        const auto index = static_cast<std::size_t>(n);
        if (const Table* t = published_[index].load(std::memory_order_acquire)) return *t;

        std::lock_guard lock(mutex_);
        if (const Table* t = published_[index].load(std::memory_order_relaxed)) return *t;
        owned_[index] = std::make_unique<const Table>(build(n));
        published_[index].store(owned_[index].get(), std::memory_order_release);
        return *owned_[index];
    }

private:
    static constexpr std::size_t kSlots = 13;

    const char* what_;
    std::mutex mutex_;
    std::array<std::unique_ptr<const Table>, kSlots> owned_{};
    std::array<std::atomic<const Table*>, kSlots> published_{};
};

inline constexpr std::uint32_t kUnfilled = 0xFFFFFFFFu;

}  // namespace permstat::detail
