#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ordo/bigint.hpp"

namespace ordo {

// Index (r,s) of the basis monomial A^r a^s; (0,0) is the identity.
struct MonomialIndex {
    int r = 0;
    int s = 0;

    friend bool operator==(const MonomialIndex&, const MonomialIndex&) = default;
};

// Canonical term order: by total degree r+s, then by creator power r.
struct MonomialOrder {
    bool operator()(const MonomialIndex& a, const MonomialIndex& b) const {
        if (a.r + a.s != b.r + b.s) return a.r + a.s < b.r + b.s;
        return a.r < b.r;
    }
};

// An algebra element expanded in the normally ordered basis: a finite map
// (r,s) -> coefficient with no zero entries. The expansion is unique, so
// map equality is algebra equality.
class NormalForm {
public:
    using TermMap = std::map<MonomialIndex, BigInt, MonomialOrder>;

    NormalForm() = default;

    NormalForm(std::initializer_list<std::pair<MonomialIndex, BigInt>> terms) {
        for (const auto& [idx, c] : terms) add_term(idx, c);
    }

    static NormalForm identity() { return NormalForm{{{0, 0}, 1}}; }

    void add_term(MonomialIndex idx, const BigInt& c) {
        if (idx.r < 0 || idx.s < 0) throw std::invalid_argument("NormalForm: negative power");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigInt coeff(MonomialIndex idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    // Largest annihilator power appearing in any term.
    int max_annihilator_power() const {
        int s = 0;
        for (const auto& [idx, c] : terms_) s = std::max(s, idx.s);
        return s;
    }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;

private:
    TermMap terms_;
};

inline NormalForm add(const NormalForm& x, const NormalForm& y) {
    NormalForm out = x;
    for (const auto& [idx, c] : y.terms()) out.add_term(idx, c);
    return out;
}

inline NormalForm scalar_mul(const BigInt& c, const NormalForm& x) {
    NormalForm out;
    if (c == 0) return out;
    for (const auto& [idx, coeff] : x.terms()) out.add_term(idx, c * coeff);
    return out;
}

inline std::string monomial_text(MonomialIndex idx) {
    if (idx.r == 0 && idx.s == 0) return "I";
    std::string out;
    if (idx.r > 0) {
        out += "A";
        if (idx.r > 1) out += "^" + std::to_string(idx.r);
    }
    if (idx.s > 0) {
        if (!out.empty()) out += " ";
        out += "a";
        if (idx.s > 1) out += "^" + std::to_string(idx.s);
    }
    return out;
}

// Human-readable rendering, highest terms first ("A^5 a^4 + 10 A^4 a^3 + ...").
// The output re-parses to the same element; the zero element renders as "0".
inline std::string to_text(const NormalForm& nf) {
    if (nf.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = nf.terms().rbegin(); it != nf.terms().rend(); ++it) {
        const BigInt& c = it->second;
        const bool negative = c < 0;
        BigInt mag = negative ? BigInt(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        if (mag != 1) out += mag.str() + " ";
        out += monomial_text(it->first);
    }
    return out;
}

}  // namespace ordo
