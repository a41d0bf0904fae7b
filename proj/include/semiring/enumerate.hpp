#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

#include "semiring/errors.hpp"
#include "semiring/finite_table.hpp"

namespace semiring {

struct EnumerateOptions {
    std::size_t cap = 4;          // orders above this raise CapExceeded
    unsigned workers = 1;         // branch-parallel over the first free entry
    bool canonical_only = false;  // keep one representative per relabeling class
};

namespace detail {

// The fixed labeling pins row/column 0 of add (identity), row/column 1 of
// mul (identity) and row/column 0 of mul (absorption); commutativity is
// built in by assigning only the upper triangle. The free variables, in
// assignment order, are the add entries (i,j) with 1 <= i <= j and then the
// mul entries with 2 <= i <= j.
class TableSearch {
public:
    TableSearch(std::size_t n) : n_(n), add_(n * n, kUnset), mul_(n * n, kUnset) {
        for (std::size_t i = 0; i < n; ++i) {
            set(add_, 0, i, i);
            set(mul_, 1, i, i);
            set(mul_, 0, i, 0);
        }
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) vars_.push_back({true, i, j});
        for (std::size_t i = 2; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) vars_.push_back({false, i, j});
    }

    std::size_t var_count() const { return vars_.size(); }

    // Enumerates all completions with variables from `depth` on, assuming
    // the earlier ones are set and consistent.
    void run(std::size_t depth, std::vector<FiniteSemiring>& out) {
        if (depth == vars_.size()) {
            out.push_back(FiniteSemiring::unchecked(n_, add_, mul_));
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            assign(depth, v);
            if (consistent()) run(depth + 1, out);
        }
        clear(depth);
    }

    void assign(std::size_t depth, std::size_t v) {
        auto [is_add, i, j] = vars_[depth];
        auto& t = is_add ? add_ : mul_;
        set(t, i, j, v);
    }

    void clear(std::size_t depth) {
        auto [is_add, i, j] = vars_[depth];
        auto& t = is_add ? add_ : mul_;
        set(t, i, j, kUnset);
    }

    // Checks every associativity/distributivity instance whose lookups are
    // all determined. Cheap at the orders the cap allows.
    bool consistent() const {
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                for (std::size_t c = 0; c < n_; ++c) {
                    std::size_t ab = get(add_, a, b);
                    std::size_t bc = get(add_, b, c);
                    if (ab != kUnset && bc != kUnset) {
                        std::size_t l = get(add_, ab, c), r = get(add_, a, bc);
                        if (l != kUnset && r != kUnset && l != r) return false;
                    }
                    std::size_t mab = get(mul_, a, b);
                    std::size_t mbc = get(mul_, b, c);
                    if (mab != kUnset && mbc != kUnset) {
                        std::size_t l = get(mul_, mab, c), r = get(mul_, a, mbc);
                        if (l != kUnset && r != kUnset && l != r) return false;
                    }
                    if (bc != kUnset) {
                        std::size_t l = get(mul_, a, bc);
                        std::size_t ac = get(mul_, a, c);
                        if (l != kUnset && mab != kUnset && ac != kUnset) {
                            std::size_t r = get(add_, mab, ac);
                            if (r != kUnset && l != r) return false;
                        }
                    }
                }
        return true;
    }

private:
    static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    void set(std::vector<std::size_t>& t, std::size_t i, std::size_t j, std::size_t v) {
        t[i * n_ + j] = v;
        t[j * n_ + i] = v;
    }
    std::size_t get(const std::vector<std::size_t>& t, std::size_t i, std::size_t j) const {
        if (i == kUnset || j == kUnset) return kUnset;
        return t[i * n_ + j];
    }

    std::size_t n_;
    std::vector<std::size_t> add_, mul_;
    std::vector<std::tuple<bool, std::size_t, std::size_t>> vars_;
};

inline std::vector<std::size_t> flatten_tables(const FiniteSemiring& s) {
    std::size_t n = s.order();
    std::vector<std::size_t> flat;
    flat.reserve(2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(s.add_raw(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) flat.push_back(s.mul_raw(i, j));
    return flat;
}

// Relabelings fix 0 and 1, so only permutations of indices 2..n-1 apply.
inline bool is_canonical_form(const FiniteSemiring& s) {
    std::size_t n = s.order();
    if (n <= 3) return true;  // at most one free index, no nontrivial relabeling
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    auto self = flatten_tables(s);
    std::vector<std::size_t> tail(perm.begin() + 2, perm.end());
    do {
        for (std::size_t i = 2; i < n; ++i) perm[i] = tail[i - 2];
        std::vector<std::size_t> add_flat(n * n), mul_flat(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                add_flat[perm[i] * n + perm[j]] = perm[s.add_raw(i, j)];
                mul_flat[perm[i] * n + perm[j]] = perm[s.mul_raw(i, j)];
            }
        std::vector<std::size_t> img;
        img.reserve(2 * n * n);
        img.insert(img.end(), add_flat.begin(), add_flat.end());
        img.insert(img.end(), mul_flat.begin(), mul_flat.end());
        if (img < self) return false;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return true;
}

}  // namespace detail

/// Every semiring on {0..n-1} with the fixed labeling (0 the zero, 1 the
/// one), in deterministic lexicographic order of the free table entries.
inline std::vector<FiniteSemiring> enumerate_semirings(std::size_t order,
                                                       const EnumerateOptions& opts = {}) {
    if (order < 2) throw CapExceeded("order must be at least 2");
    if (order > opts.cap)
        throw CapExceeded("order " + std::to_string(order) + " above cap " +
                          std::to_string(opts.cap));

    std::vector<FiniteSemiring> out;
    unsigned workers = opts.workers;
    detail::TableSearch probe(order);
    if (workers <= 1 || probe.var_count() == 0) {
        detail::TableSearch search(order);
        search.run(0, out);
    } else {
        // Split on the first free entry; each branch is independent and the
        // merge in branch order keeps the output deterministic.
        std::vector<std::vector<FiniteSemiring>> buckets(order);
        std::vector<std::thread> pool;
        std::size_t stride = std::max<std::size_t>(1, (order + workers - 1) / workers);
        for (std::size_t lo = 0; lo < order; lo += stride) {
            std::size_t hi = std::min(order, lo + stride);
            pool.emplace_back([&, lo, hi] {
                for (std::size_t v = lo; v < hi; ++v) {
                    detail::TableSearch search(order);
                    search.assign(0, v);
                    if (search.consistent()) search.run(1, buckets[v]);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& bucket : buckets)
            for (auto& s : bucket) out.push_back(std::move(s));
    }

    if (opts.canonical_only) {
        std::vector<FiniteSemiring> filtered;
        for (auto& s : out)
            if (detail::is_canonical_form(s)) filtered.push_back(std::move(s));
        return filtered;
    }
    return out;
}

}  // namespace semiring
