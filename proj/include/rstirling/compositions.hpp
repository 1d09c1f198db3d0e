#pragma once

#include <cstdint>
#include <vector>

namespace rstirling {

/// Iterates the weak compositions (i_1,...,i_m) of total into m parts in
/// colexicographic order, starting at (total, 0, ..., 0). Iterative, so
/// deep part counts cannot exhaust the stack.
template <typename Fn>
void for_each_composition(std::uint64_t total, std::uint64_t m, Fn&& fn) {
    if (m == 0) {
        return;
    }
    std::vector<std::uint64_t> parts(m, 0);
    parts[0] = total;
    for (;;) {
        fn(static_cast<const std::vector<std::uint64_t>&>(parts));
        std::uint64_t j = 0;
        while (j < m && parts[j] == 0) {
            ++j;
        }
        if (j + 1 >= m) {
            return;  // (0,...,0,total) is the colex maximum
        }
        const std::uint64_t v = parts[j];
        parts[j] = 0;
        parts[0] = v - 1;
        ++parts[j + 1];
    }
}

}  // namespace rstirling
