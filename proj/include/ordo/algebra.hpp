#pragma once

#include <algorithm>

#include "ordo/bigint.hpp"
#include "ordo/normal_form.hpp"
#include "ordo/rook.hpp"
#include "ordo/word.hpp"

namespace ordo {

// Normal ordering through the rook route: with R creators, S annihilators
// and rook numbers r(k) of the word's board,
//   w = sum_k r(k) A^(R-k) a^(S-k).
inline NormalForm normal_order_word(const Word& w, StepRule rule, RookMemo& memo) {
    const LetterCounts lc = excess_counts(w);
    const RookVector rv = rook_numbers(board_of(w), rule, memo);
    NormalForm out;
    for (std::size_t k = 0; k < rv.size(); ++k) {
        const int i = static_cast<int>(k);
        out.add_term({lc.creators - i, lc.annihilators - i}, rv.counts[k]);
    }
    return out;
}

inline NormalForm normal_order_word(const Word& w) {
    const LetterCounts lc = excess_counts(w);
    const RookVector rv = rook_numbers(board_of(w));
    NormalForm out;
    for (std::size_t k = 0; k < rv.size(); ++k) {
        const int i = static_cast<int>(k);
        out.add_term({lc.creators - i, lc.annihilators - i}, rv.counts[k]);
    }
    return out;
}

// Product of basis monomials. The board of A^r a^s A^k a^l is the s-by-k
// rectangle, so the structure constants are i! C(s,i) C(k,i), independent
// of the outer powers r and l:
//   b(r,s) b(k,l) = sum_i i! C(s,i) C(k,i) b(r+k-i, s+l-i).
inline NormalForm multiply_basis(MonomialIndex x, MonomialIndex y) {
    if (x.r < 0 || x.s < 0 || y.r < 0 || y.s < 0) {
        throw std::invalid_argument("multiply_basis: negative power");
    }
    NormalForm out;
    const int top = std::min(x.s, y.r);
    BigInt gamma = 1;
    for (int i = 0;; ++i) {
        out.add_term({x.r + y.r - i, x.s + y.s - i}, gamma);
        if (i == top) break;
        gamma *= x.s - i;
        gamma *= y.r - i;
        gamma /= i + 1;
    }
    return out;
}

inline NormalForm multiply(const NormalForm& x, const NormalForm& y) {
    NormalForm out;
    for (const auto& [xi, xc] : x.terms()) {
        for (const auto& [yi, yc] : y.terms()) {
            const BigInt scale = xc * yc;
            const int top = std::min(xi.s, yi.r);
            BigInt gamma = 1;
            for (int i = 0;; ++i) {
                out.add_term({xi.r + yi.r - i, xi.s + yi.s - i}, scale * gamma);
                if (i == top) break;
                gamma *= xi.s - i;
                gamma *= yi.r - i;
                gamma /= i + 1;
            }
        }
    }
    return out;
}

inline NormalForm power(const NormalForm& x, unsigned long n) {
    NormalForm acc = NormalForm::identity();
    NormalForm base = x;
    while (n > 0) {
        if (n & 1) acc = multiply(acc, base);
        n >>= 1;
        if (n) base = multiply(base, base);
    }
    return acc;
}

}  // namespace ordo
