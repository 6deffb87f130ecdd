#include "permstat/limits.hpp"

#include <atomic>
#include <string>

#include "permstat/errors.hpp"

namespace permstat {

namespace {

std::atomic<int> g_enumeration_cap{kDefaultEnumerationCap};
std::atomic<int> g_table_cap{kDefaultTableCap};

// 12! still fits the 32-bit table entries.
constexpr int kHardTableLimit = 12;

}  // namespace

int enumeration_cap() noexcept { return g_enumeration_cap.load(); }

void set_enumeration_cap(int n) {
    if (n < 1) throw ValidationError("enumeration cap must be positive");
    g_enumeration_cap.store(n);
}

int table_cap() noexcept { return g_table_cap.load(); }

void set_table_cap(int n) {
    if (n < 1 || n > kHardTableLimit) {
        throw ValidationError("table cap must lie in 1.." + std::to_string(kHardTableLimit));
    }
    g_table_cap.store(n);
}

}  // namespace permstat
