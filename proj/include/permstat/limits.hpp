#pragma once

namespace permstat {

// Process-wide size limits. Reads and writes are atomic; change them before
// starting parallel work.

inline constexpr int kDefaultEnumerationCap = 8;
inline constexpr int kDefaultTableCap = 10;

/// Largest n for which exhaustive enumeration of S_n is allowed.
int enumeration_cap() noexcept;
void set_enumeration_cap(int n);

/// Largest n for which the memoized inverse tables (HAN encode, phi inverse) are built.
int table_cap() noexcept;
void set_table_cap(int n);

}  // namespace permstat
