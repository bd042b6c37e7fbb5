#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ordo/bigint.hpp"
#include "ordo/normal_form.hpp"
#include "ordo/word.hpp"

namespace ordo {

// Brute-force verifiers, deliberately independent of the rook machinery:
// a fixpoint rewriter that applies aA -> Aa + I literally, and the
// polynomial representation a = d/dx, A = x used as an equality oracle.

inline constexpr std::size_t kDefaultRewriteLimit = 20;

enum class RewriteStrategy { Leftmost, Rightmost };

// Intermediate sum of free-algebra words with integer coefficients.
using WordSum = std::map<Word, BigInt>;

struct RewriteStats {
    std::size_t steps = 0;       // redex applications performed
    std::size_t peak_terms = 0;  // largest number of simultaneous pending words
};

// Normal order by rewriting alone. Each step replaces one (a, A) adjacent
// pair by the swapped word plus the word with the pair deleted; both have
// strictly fewer inversions, so processing pending words in order of
// decreasing inversion count visits every intermediate word exactly once
// with its fully merged coefficient.
inline NormalForm rewrite_normal(const Word& w, std::size_t limit = kDefaultRewriteLimit,
                                 RewriteStrategy strategy = RewriteStrategy::Leftmost,
                                 RewriteStats* stats = nullptr) {
    if (w.size() > limit) {
        throw std::length_error("rewrite_normal: word length " + std::to_string(w.size()) +
                                " exceeds limit " + std::to_string(limit));
    }

    std::map<std::uint64_t, WordSum> pending;  // inversion count -> words
    std::size_t live = 1, peak = 1, steps = 0;
    pending[inversion_count(w)].emplace(w, 1);

    auto push = [&](Word v, const BigInt& c) {
        auto& bucket = pending[inversion_count(v)];
        auto [it, inserted] = bucket.try_emplace(std::move(v), c);
        if (inserted) {
            ++live;
        } else {
            it->second += c;
            if (it->second == 0) {
                bucket.erase(it);
                --live;
            }
        }
    };

    NormalForm out;
    while (!pending.empty()) {
        auto bucket_it = std::prev(pending.end());
        const std::uint64_t inversions = bucket_it->first;
        auto node = bucket_it->second.extract(bucket_it->second.begin());
        if (bucket_it->second.empty()) pending.erase(bucket_it);
        --live;

        const Word& u = node.key();
        const BigInt& c = node.mapped();
        if (inversions == 0) {
            LetterCounts lc = excess_counts(u);
            out.add_term({lc.creators, lc.annihilators}, c);
            continue;
        }

        std::size_t redex = 0;
        if (strategy == RewriteStrategy::Leftmost) {
            while (!(u[redex] == Letter::Annihilator && u[redex + 1] == Letter::Creator)) ++redex;
        } else {
            redex = u.size() - 2;
            while (!(u[redex] == Letter::Annihilator && u[redex + 1] == Letter::Creator)) --redex;
        }
        ++steps;

        std::vector<Letter> swapped = u.letters();
        std::swap(swapped[redex], swapped[redex + 1]);
        push(Word(std::move(swapped)), c);

        std::vector<Letter> erased = u.letters();
        erased.erase(erased.begin() + redex, erased.begin() + redex + 2);
        push(Word(std::move(erased)), c);

        peak = std::max(peak, live);
    }

    if (stats) *stats = {steps, peak};
    return out;
}

// Integer polynomial in one variable: degree -> coefficient, no zeros stored.
using IntPolynomial = std::map<int, BigInt>;

namespace detail {
inline void poly_add(IntPolynomial& p, int degree, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = p.try_emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}
}  // namespace detail

// Action of the element on x^m in the model a = d/dx, A = x:
// A^r a^s sends x^m to m(m-1)...(m-s+1) x^(m-s+r), zero when s > m.
inline IntPolynomial apply_to_monomial(const NormalForm& x, int m) {
    if (m < 0) throw std::invalid_argument("apply_to_monomial: negative degree");
    IntPolynomial out;
    for (const auto& [idx, c] : x.terms()) {
        if (idx.s > m) continue;
        detail::poly_add(out, m - idx.s + idx.r, c * falling_factorial(m, idx.s));
    }
    return out;
}

inline IntPolynomial apply_to_polynomial(const NormalForm& x, const IntPolynomial& p) {
    IntPolynomial out;
    for (const auto& [degree, c] : p) {
        for (const auto& [e, v] : apply_to_monomial(x, degree)) detail::poly_add(out, e, c * v);
    }
    return out;
}

// The representation is faithful: if the actions on x^0..x^Smax agree, where
// Smax is the largest annihilator power present, the coefficients agree
// (induction on m recovers the beta_rs column by column).
inline bool equal_by_action(const NormalForm& x, const NormalForm& y) {
    const int s_max = std::max(x.max_annihilator_power(), y.max_annihilator_power());
    for (int m = 0; m <= s_max; ++m) {
        if (apply_to_monomial(x, m) != apply_to_monomial(y, m)) return false;
    }
    return true;
}

}  // namespace ordo
