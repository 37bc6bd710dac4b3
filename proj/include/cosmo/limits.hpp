#pragma once

#include <cstddef>

namespace cosmo {

// Caps on the exponential enumerations; exceeding one raises size_error.
struct EnumLimits {
    int max_subset_edges = 20;          // 2^m subset scans
    std::size_t max_poset_size = 1u << 20;  // bridge-free inclusion poset
    std::size_t max_memo_entries = 1'000'000;  // deletion-contraction caches
};

}  // namespace cosmo
