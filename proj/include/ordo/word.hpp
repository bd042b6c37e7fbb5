#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordo/board.hpp"

namespace ordo {

// The two generators. Annihilator renders as "a", Creator as "A";
// "a†" and "ad" are accepted for the creator on input.
enum class Letter : unsigned char { Annihilator, Creator };

inline char letter_char(Letter l) { return l == Letter::Creator ? 'A' : 'a'; }

namespace detail {

// Scans one letter starting at text[pos], advancing pos past it.
// Returns nullopt when text[pos] does not start a letter.
inline std::optional<Letter> scan_letter(std::string_view text, std::size_t& pos) {
    if (pos >= text.size()) return std::nullopt;
    if (text[pos] == 'A') {
        ++pos;
        return Letter::Creator;
    }
    if (text[pos] != 'a') return std::nullopt;
    ++pos;
    // "a†" (UTF-8 e2 80 a0) and "ad" both mean the creator; the suffix
    // must be adjacent, whitespace breaks it.
    if (text.substr(pos, 3) == "\xe2\x80\xa0") {
        pos += 3;
        return Letter::Creator;
    }
    if (pos < text.size() && text[pos] == 'd') {
        ++pos;
        return Letter::Creator;
    }
    return Letter::Annihilator;
}

}  // namespace detail

// A word over {a, A}: an element of the free algebra before the
// commutation relation is imposed. The empty word is the unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    // Accepts 'a', 'A', 'a†', 'ad'; ASCII whitespace between letters is skipped.
    static Word parse(std::string_view text) {
        std::vector<Letter> ls;
        std::size_t pos = 0;
        while (pos < text.size()) {
            if (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r') {
                ++pos;
                continue;
            }
            auto letter = detail::scan_letter(text, pos);
            if (!letter) {
                throw std::invalid_argument("Word: unexpected character at byte " +
                                            std::to_string(pos));
            }
            ls.push_back(*letter);
        }
        return Word(std::move(ls));
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    std::string text() const {
        std::string out;
        out.reserve(letters_.size());
        for (Letter l : letters_) out += letter_char(l);
        return out;
    }

    friend Word operator+(const Word& u, const Word& v) {
        std::vector<Letter> ls = u.letters_;
        ls.insert(ls.end(), v.letters_.begin(), v.letters_.end());
        return Word(std::move(ls));
    }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

enum class PathStep : unsigned char { Right, Up };

// Staircase path on the lattice, read off a word left to right:
// a step right for each creator, a step up for each annihilator.
struct LatticePath {
    std::vector<PathStep> steps;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

inline LatticePath encode_path(const Word& w) {
    LatticePath p;
    p.steps.reserve(w.size());
    for (Letter l : w) {
        p.steps.push_back(l == Letter::Creator ? PathStep::Right : PathStep::Up);
    }
    return p;
}

inline Word decode_word(const LatticePath& p) {
    std::vector<Letter> ls;
    ls.reserve(p.steps.size());
    for (PathStep s : p.steps) {
        ls.push_back(s == PathStep::Right ? Letter::Creator : Letter::Annihilator);
    }
    return Word(std::move(ls));
}

struct LetterCounts {
    int creators = 0;
    int annihilators = 0;

    friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

inline LetterCounts excess_counts(const Word& w) {
    LetterCounts c;
    for (Letter l : w) {
        if (l == Letter::Creator) ++c.creators;
        else ++c.annihilators;
    }
    return c;
}

// Board of the word: one column per creator, of height equal to the number
// of annihilators preceding it. That count is nondecreasing along the word,
// so the raw sequence is already canonical up to zero columns.
inline FerrersBoard board_of(const Word& w) {
    std::vector<int> heights;
    int ups = 0;
    for (Letter l : w) {
        if (l == Letter::Annihilator) ++ups;
        else heights.push_back(ups);
    }
    return FerrersBoard(std::move(heights));
}

// Number of (annihilator, creator) pairs in wrong order; equals the cell
// count of board_of(w) and strictly decreases under each rewrite step.
inline std::uint64_t inversion_count(const Word& w) {
    std::uint64_t inv = 0;
    std::uint64_t ups = 0;
    for (Letter l : w) {
        if (l == Letter::Annihilator) ++ups;
        else inv += ups;
    }
    return inv;
}

inline bool is_normally_ordered(const Word& w) { return inversion_count(w) == 0; }

}  // namespace ordo
