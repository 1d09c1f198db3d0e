#include "rstirling/stirling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rstirling/compositions.hpp"

namespace rstirling {

StirlingTriangle::StirlingTriangle(std::uint64_t r, std::uint64_t max_p) : r_(r) {
    if (r == 0) {
        throw std::invalid_argument("StirlingTriangle: r must be >= 1");
    }
    rows_.reserve(max_p + 1);
    for (std::uint64_t p = 0; p <= max_p; ++p) {
        fill_row(p);
    }
}

void StirlingTriangle::fill_row(std::uint64_t p) {
    std::vector<Natural> row(p / r_ + 1);
    if (p == 0) {
        row[0] = Natural(1);
    } else {
        for (std::uint64_t m = 1; m < row.size(); ++m) {
            Natural v = Natural(m) * at(p - 1, m);
            if (p >= r_) {
                v += binomial(p - 1, r_ - 1) * at(p - r_, m - 1);
            }
            row[m] = std::move(v);
        }
    }
    rows_.push_back(std::move(row));
}

const Natural& StirlingTriangle::at(std::uint64_t p, std::uint64_t m) const {
    const auto& row = rows_.at(p);
    if (m >= row.size()) {
        return zero_;
    }
    return row[m];
}

Natural StirlingTriangle::row_sum(std::uint64_t p) const {
    Natural total;
    for (const Natural& v : rows_.at(p)) {
        total += v;
    }
    return total;
}

void StirlingTriangle::extend(std::uint64_t new_max_p) {
    for (std::uint64_t p = rows_.size(); p <= new_max_p; ++p) {
        fill_row(p);
    }
}

Natural stirling_lemma_sum(const StirlingQuery& q) {
    if (q.r == 0 || q.m == 0) {
        throw std::invalid_argument("stirling_lemma_sum: requires r >= 1 and m >= 1");
    }
    if (q.p < q.r * q.m) {
        throw std::invalid_argument("stirling_lemma_sum: requires p >= r*m");
    }
    const std::uint64_t k = q.p - q.r * q.m;
    ExactRational sum;
    for_each_composition(k, q.m, [&](const std::vector<std::uint64_t>& parts) {
        Natural denom(1);
        for (std::uint64_t part : parts) {
            denom *= factorial(q.r + part);
        }
        sum += ExactRational(Natural(1), denom);
    });
    const ExactRational value = ExactRational(factorial(q.p), factorial(q.m)) * sum;
    if (!value.is_integer()) {
        throw std::logic_error("stirling_lemma_sum: non-integer result for p=" +
                               std::to_string(q.p) + " m=" + std::to_string(q.m));
    }
    return value.to_natural();
}

StirlingTriangle stirling_recurrence(std::uint64_t r, std::uint64_t max_p) {
    return StirlingTriangle(r, max_p);
}

std::uint64_t brute_force_cap() {
    if (const char* env = std::getenv("STIRLING_BRUTE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return 12;
}

namespace {

// Enumerates all restricted growth strings of length p and hands the block
// sizes of each corresponding partition to fn.
template <typename Fn>
void for_each_partition(std::uint64_t p, Fn&& fn) {
    std::vector<std::uint64_t> sizes;
    if (p == 0) {
        fn(sizes);
        return;
    }
    std::vector<std::uint64_t> a(p, 0);
    std::vector<std::uint64_t> prefix_max(p, 0);
    for (;;) {
        const std::uint64_t blocks = prefix_max[p - 1] + 1;
        sizes.assign(blocks, 0);
        for (std::uint64_t label : a) {
            ++sizes[label];
        }
        fn(static_cast<const std::vector<std::uint64_t>&>(sizes));

        // rightmost position j >= 1 where a[j] may still grow
        // (a[j] <= max(a[0..j-1]) keeps the string restricted-growth)
        std::uint64_t j = p;
        std::uint64_t incrementable = 0;
        while (j > 1) {
            --j;
            if (a[j] <= prefix_max[j - 1]) {
                incrementable = j;
                break;
            }
        }
        if (incrementable == 0) {
            return;
        }
        ++a[incrementable];
        for (std::uint64_t i = incrementable + 1; i < p; ++i) {
            a[i] = 0;
        }
        for (std::uint64_t i = incrementable; i < p; ++i) {
            prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        }
    }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> min_block_census(std::uint64_t p) {
    std::vector<std::vector<std::uint64_t>> census(p + 1, std::vector<std::uint64_t>(p + 1, 0));
    for_each_partition(p, [&](const std::vector<std::uint64_t>& sizes) {
        if (sizes.empty()) {
            census[0][0] += 1;
            return;
        }
        const std::uint64_t smallest = *std::min_element(sizes.begin(), sizes.end());
        census[sizes.size()][smallest] += 1;
    });
    return census;
}

Natural stirling_brute_force(const StirlingQuery& q) {
    if (q.r == 0) {
        throw std::invalid_argument("stirling_brute_force: requires r >= 1");
    }
    if (q.p > brute_force_cap()) {
        throw std::length_error("stirling_brute_force: p=" + std::to_string(q.p) +
                                " exceeds cap " + std::to_string(brute_force_cap()) +
                                " (set STIRLING_BRUTE_CAP to raise)");
    }
    if (q.m == 0) {
        return Natural(q.p == 0 ? 1 : 0);
    }
    std::uint64_t count = 0;
    for_each_partition(q.p, [&](const std::vector<std::uint64_t>& sizes) {
        if (sizes.size() != q.m) {
            return;
        }
        if (*std::min_element(sizes.begin(), sizes.end()) >= q.r) {
            ++count;
        }
    });
    return Natural(count);
}

Natural bell(std::uint64_t p) {
    Natural total;
    for (std::uint64_t m = 0; m <= p; ++m) {
        total += stirling_cache().value(1, p, m);
    }
    return total;
}

std::vector<ExactRational> egf_coefficients(std::uint64_t m, std::uint64_t order_n) {
    if (m == 0) {
        throw std::invalid_argument("egf_coefficients: requires m >= 1");
    }
    const std::size_t n = order_n + 1;
    std::vector<ExactRational> expm1(n);
    for (std::size_t i = 1; i < n; ++i) {
        expm1[i] = ExactRational(Natural(1), factorial(i));
    }
    std::vector<ExactRational> power(n);
    power[0] = ExactRational(1);
    for (std::uint64_t rep = 0; rep < m; ++rep) {
        std::vector<ExactRational> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (power[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 1; i + j < n; ++j) {
                next[i + j] += power[i] * expm1[j];
            }
        }
        power = std::move(next);
    }
    const ExactRational inv_mfact{Natural(1), factorial(m)};
    for (auto& c : power) {
        c *= inv_mfact;
    }
    return power;
}

Natural StirlingCache::value(std::uint64_t r, std::uint64_t p, std::uint64_t m) {
    std::lock_guard<std::mutex> lock(mu_);
    return triangle_locked(r, p).at(p, m);
}

StirlingTriangle& StirlingCache::triangle_locked(std::uint64_t r, std::uint64_t min_p) {
    auto it = triangles_.find(r);
    if (it == triangles_.end()) {
        it = triangles_.emplace(r, StirlingTriangle(r, min_p)).first;
    } else if (it->second.max_p() < min_p) {
        it->second.extend(min_p);
    }
    return it->second;
}

void StirlingCache::corrupt_entry_for_testing(std::uint64_t r, std::uint64_t p, std::uint64_t m) {
    std::lock_guard<std::mutex> lock(mu_);
    StirlingTriangle& t = triangle_locked(r, p);
    auto& row = t.rows_.at(p);
    if (m < row.size()) {
        row[m] += Natural(1);
    }
}

void StirlingCache::clear() {
    std::lock_guard<std::mutex> lock(mu_);
    triangles_.clear();
}

StirlingCache& stirling_cache() {
    static StirlingCache cache;
    return cache;
}

}  // namespace rstirling
