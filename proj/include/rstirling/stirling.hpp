#pragma once

#include <cstdint>
#include <mutex>
#include <map>
#include <vector>

#include "rstirling/exact.hpp"

namespace rstirling {

/// Count of partitions of {1..p} into m blocks, every block of size >= r.
struct StirlingQuery {
    std::uint64_t r = 1;  // minimum block size, >= 1
    std::uint64_t p = 0;  // ground-set size
    std::uint64_t m = 0;  // number of blocks
};

/// Memo table of S_r(p, m) for a fixed r, rows p = 0..max_p. Row p stores
/// m = 0..floor(p/r); everything outside that band is an implicit zero.
/// Built by the recurrence
///   S_r(p, m) = m * S_r(p-1, m) + C(p-1, r-1) * S_r(p-r, m-1)
/// with S_r(0, 0) = 1. Immutable after construction apart from extend().
class StirlingTriangle {
  public:
    StirlingTriangle(std::uint64_t r, std::uint64_t max_p);

    std::uint64_t r() const { return r_; }
    std::uint64_t max_p() const { return rows_.size() - 1; }

    /// S_r(p, m); zero for any m outside the stored band.
    const Natural& at(std::uint64_t p, std::uint64_t m) const;

    /// Sum over m of row p (equals the Bell number when r = 1).
    Natural row_sum(std::uint64_t p) const;

    void extend(std::uint64_t new_max_p);

  private:
    friend class StirlingCache;

    void fill_row(std::uint64_t p);

    std::uint64_t r_;
    std::vector<std::vector<Natural>> rows_;
    Natural zero_;
};

/// S_r(p, m) as (p!/m!) * sum over weak compositions i_1+...+i_m = p-rm of
/// 1/((r+i_1)! ... (r+i_m)!), accumulated in exact rationals. The result is
/// checked to be an integer before returning.
Natural stirling_lemma_sum(const StirlingQuery& q);

/// Recurrence-filled triangle (independent cross-check of the lemma sum).
StirlingTriangle stirling_recurrence(std::uint64_t r, std::uint64_t max_p);

/// Definitional count: enumerates every set partition of {1..p} by
/// restricted growth strings and counts the admissible ones. Guarded by
/// brute_force_cap() since the partition count grows superexponentially.
Natural stirling_brute_force(const StirlingQuery& q);

/// Enumeration cap for stirling_brute_force; default 12, overridable via
/// the STIRLING_BRUTE_CAP environment variable.
std::uint64_t brute_force_cap();

/// One pass over all set partitions of {1..p}: census[m][s] counts the
/// partitions with exactly m blocks whose smallest block has size s.
/// census[0][0] = 1 iff p = 0. Shared by the brute-force oracle so sweeps
/// over several r reuse a single enumeration.
std::vector<std::vector<std::uint64_t>> min_block_census(std::uint64_t p);

/// Bell number B(p): row sum of the r = 1 triangle; B(0) = 1.
Natural bell(std::uint64_t p);

/// Coefficients of t^0..t^order_n in (exp(t) - 1)^m / m!, by exact
/// truncated power-series multiplication. Coefficient p equals
/// S_1(p, m)/p!.
std::vector<ExactRational> egf_coefficients(std::uint64_t m, std::uint64_t order_n);

/// Process-wide triangle store keyed by r, extended on demand. Lookups and
/// extensions are serialized; values are returned by copy.
class StirlingCache {
  public:
    Natural value(std::uint64_t r, std::uint64_t p, std::uint64_t m);

    /// Testing hook: adds 1 to a stored entry so verification harnesses can
    /// be shown to catch corrupted tables.
    void corrupt_entry_for_testing(std::uint64_t r, std::uint64_t p, std::uint64_t m);
    void clear();

  private:
    StirlingTriangle& triangle_locked(std::uint64_t r, std::uint64_t min_p);

    std::mutex mu_;
    std::map<std::uint64_t, StirlingTriangle> triangles_;
};

StirlingCache& stirling_cache();

}  // namespace rstirling
