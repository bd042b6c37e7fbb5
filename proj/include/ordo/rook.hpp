#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordo/bigint.hpp"
#include "ordo/board.hpp"

namespace ordo {

// counts[k] = number of placements of k mutually non-attacking rooks.
// Trailing zeros are trimmed, so equal boards give equal vectors; for any
// nonempty board counts[0] = 1 and counts[1] = cell count.
struct RookVector {
    std::vector<BigInt> counts;

    static RookVector unit() { return {{BigInt(1)}}; }

    std::size_t size() const { return counts.size(); }

    BigInt value(std::size_t k) const { return k < counts.size() ? counts[k] : BigInt(0); }

    friend bool operator==(const RookVector&, const RookVector&) = default;
};

namespace detail {
inline RookVector trimmed(std::vector<BigInt> counts) {
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    return {std::move(counts)};
}

// reduced + x * collapsed, the combination step of the recursion.
inline RookVector combine(const RookVector& reduced, const RookVector& collapsed) {
    std::vector<BigInt> out(std::max(reduced.size(), collapsed.size() + 1));
    for (std::size_t i = 0; i < reduced.size(); ++i) out[i] += reduced.counts[i];
    for (std::size_t i = 0; i < collapsed.size(); ++i) out[i + 1] += collapsed.counts[i];
    return trimmed(std::move(out));
}
}  // namespace detail

// Which step-forming cell drives the decomposition. Any choice yields the
// same rook vector; the boards met along the way differ.
enum class StepRule {
    TallestColumn,  // top cell of the leftmost column of maximal height
    FirstColumn,    // top cell of the first (shortest) column
};

struct BoardSplit {
    FerrersBoard reduced;    // cell removed
    FerrersBoard collapsed;  // cell's row and column removed
    int column = 0;          // chosen cell, 0-based column index
    int row = 0;             // 0-based row index from the bottom
};

// Splits off one step-forming cell. Both rules pick the top cell of a column
// whose left neighbour is strictly shorter, so the cell has no neighbour to
// its left or above it.
inline BoardSplit decompose_step(const FerrersBoard& b, StepRule rule = StepRule::TallestColumn) {
    if (b.empty()) throw std::invalid_argument("decompose_step: nothing to decompose");
    const std::vector<int>& hs = b.heights();

    BoardSplit split;
    if (rule == StepRule::TallestColumn) {
        const int top = hs.back();
        const std::size_t col = std::lower_bound(hs.begin(), hs.end(), top) - hs.begin();
        split.column = static_cast<int>(col);
        split.row = top - 1;

        std::vector<int> reduced = hs;
        reduced[col] -= 1;
        split.reduced = FerrersBoard(std::move(reduced));

        // Removing the top row trims every column of maximal height.
        std::vector<int> collapsed;
        collapsed.reserve(hs.size() - 1);
        for (std::size_t i = 0; i < hs.size(); ++i) {
            if (i == col) continue;
            collapsed.push_back(hs[i] == top ? top - 1 : hs[i]);
        }
        split.collapsed = FerrersBoard(std::move(collapsed));
    } else {
        split.column = 0;
        split.row = hs.front() - 1;

        std::vector<int> reduced = hs;
        reduced[0] -= 1;
        split.reduced = FerrersBoard(std::move(reduced));

        // Removing row hs[0] costs every remaining column one cell.
        std::vector<int> collapsed(hs.begin() + 1, hs.end());
        for (int& h : collapsed) h -= 1;
        split.collapsed = FerrersBoard(std::move(collapsed));
    }
    return split;
}

using RookMemo = std::map<FerrersBoard, RookVector>;

// Rook numbers by the step-cell recursion, memoized on canonical boards.
// Iterative so that very tall CLI-supplied boards cannot exhaust the stack.
inline RookVector rook_numbers(const FerrersBoard& root, StepRule rule, RookMemo& memo) {
    const RookVector unit = RookVector::unit();
    if (root.empty()) return unit;

    auto lookup = [&](const FerrersBoard& b) -> const RookVector* {
        if (b.empty()) return &unit;
        auto it = memo.find(b);
        return it == memo.end() ? nullptr : &it->second;
    };

    std::vector<FerrersBoard> work{root};
    while (!work.empty()) {
        FerrersBoard b = std::move(work.back());
        work.pop_back();
        if (lookup(b)) continue;
        BoardSplit split = decompose_step(b, rule);
        const RookVector* reduced = lookup(split.reduced);
        const RookVector* collapsed = lookup(split.collapsed);
        if (reduced && collapsed) {
            memo.emplace(std::move(b), detail::combine(*reduced, *collapsed));
        } else {
            work.push_back(std::move(b));
            if (!reduced) work.push_back(std::move(split.reduced));
            if (!collapsed) work.push_back(std::move(split.collapsed));
        }
    }
    return memo.at(root);
}

// Shared-cache entry point. The cache is process-wide and mutex-guarded;
// concurrent callers may duplicate work but always observe the same values.
inline RookVector rook_numbers(const FerrersBoard& b) {
    static std::mutex mutex;
    static RookMemo memo;
    std::scoped_lock lock(mutex);
    return rook_numbers(b, StepRule::TallestColumn, memo);
}

// Closed form for the rectangular board of k columns of height s:
// counts[i] = i! C(s,i) C(k,i) for i = 0..min(s,k).
inline RookVector rook_numbers_rect(int s, int k) {
    if (s < 0 || k < 0) throw std::invalid_argument("rook_numbers_rect: negative side");
    const int top = std::min(s, k);
    std::vector<BigInt> counts;
    counts.reserve(top + 1);
    BigInt c = 1;
    for (int i = 0;; ++i) {
        counts.push_back(c);
        if (i == top) break;
        c *= s - i;
        c *= k - i;
        c /= i + 1;
    }
    return detail::trimmed(std::move(counts));
}

// Test oracle: counts placements by direct enumeration, one column at a
// time, visiting every non-attacking arrangement exactly once.
inline RookVector rook_brute_force(const FerrersBoard& b, std::uint64_t cell_limit = 30) {
    if (b.cell_count() > cell_limit || b.max_height() > 63) {
        throw std::length_error("rook_brute_force: board too large for brute force");
    }
    const std::vector<int>& hs = b.heights();
    std::vector<BigInt> counts(std::min<std::size_t>(hs.size(), b.max_height()) + 1);

    auto place = [&](auto&& self, std::size_t col, std::uint64_t used_rows, std::size_t placed) -> void {
        if (col == hs.size()) {
            counts[placed] += 1;
            return;
        }
        self(self, col + 1, used_rows, placed);
        for (int row = 0; row < hs[col]; ++row) {
            if (used_rows >> row & 1) continue;
            self(self, col + 1, used_rows | (std::uint64_t{1} << row), placed + 1);
        }
    };
    place(place, 0, 0, 0);
    return detail::trimmed(std::move(counts));
}

inline std::string to_text(const RookVector& rv) {
    std::string out;
    for (std::size_t k = 0; k < rv.size(); ++k) {
        if (k) out += ", ";
        out += rv.counts[k].str();
    }
    return out;
}

// "1 + 10x + 23x^2 + 9x^3"
inline std::string polynomial_text(const RookVector& rv) {
    if (rv.counts.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < rv.size(); ++k) {
        if (k) out += " + ";
        if (k == 0) {
            out += rv.counts[k].str();
            continue;
        }
        if (rv.counts[k] != 1) out += rv.counts[k].str();
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace ordo
