// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Timing limits are generous CI-grade bounds; correctness checks are exact.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ordo/cli.hpp"
#include "ordo/ordo.hpp"

using namespace ordo;

namespace {

using clock_type = std::chrono::steady_clock;

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    double ms = 0.0;
    double limit_ms = 0.0;  // 0 means no timing bound
    std::string note;
};

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

Word word_of(std::size_t length, std::uint32_t bits) {
    std::vector<Letter> ls(length);
    for (std::size_t i = 0; i < length; ++i) {
        ls[i] = (bits >> i & 1) ? Letter::Creator : Letter::Annihilator;
    }
    return Word(std::move(ls));
}

Word basis_word(int r, int s) {
    std::vector<Letter> ls;
    ls.insert(ls.end(), r, Letter::Creator);
    ls.insert(ls.end(), s, Letter::Annihilator);
    return Word(std::move(ls));
}

RookVector rook_vec(std::vector<int> values) {
    return {std::vector<BigInt>(values.begin(), values.end())};
}

void partitions_into(int cells, int max_part, std::vector<int>& prefix,
                     std::vector<FerrersBoard>& out) {
    if (cells == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(cells, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(cells - part, part, prefix, out);
        prefix.pop_back();
    }
}

std::vector<FerrersBoard> all_boards_up_to(int cells) {
    std::vector<FerrersBoard> out;
    std::vector<int> prefix;
    for (int n = 0; n <= cells; ++n) partitions_into(n, n, prefix, out);
    return out;
}

FerrersBoard random_board(std::mt19937& rng, int max_cells, int max_columns, int max_height) {
    while (true) {
        const int columns = 1 + static_cast<int>(rng() % max_columns);
        std::vector<int> hs(columns);
        int cells = 0;
        for (int& h : hs) {
            h = 1 + static_cast<int>(rng() % max_height);
            cells += h;
        }
        if (cells <= max_cells) return FerrersBoard(std::move(hs));
    }
}

NormalForm random_form(std::mt19937& rng) {
    NormalForm out;
    const int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        const int r = static_cast<int>(rng() % 7);
        const int s = static_cast<int>(rng() % 7);
        const int c = static_cast<int>(rng() % 19) - 9;
        out.add_term({r, s}, c);
    }
    return out;
}

Criterion golden_rook_numbers() {
    Criterion c{1, "golden rook numbers", false, 0.0, 1.0, ""};
    const Word w = Word::parse("aAaAAAaAa");
    bool ok = true;
    double best = 1e9;
    for (int trial = 0; trial < 3; ++trial) {
        RookMemo memo;
        const auto start = clock_type::now();
        const RookVector rv = rook_numbers(board_of(w), StepRule::TallestColumn, memo);
        best = std::min(best, ms_since(start));
        ok = ok && rv == rook_vec({1, 10, 23, 9});
    }
    c.ms = best;
    c.pass = ok && best < c.limit_ms;
    return c;
}

Criterion golden_normal_form() {
    Criterion c{2, "golden normal form", false, 0.0, 1.0, ""};
    const Word w = Word::parse("aAaAAAaAa");
    const NormalForm expected{{{5, 4}, 1}, {{4, 3}, 10}, {{3, 2}, 23}, {{2, 1}, 9}};
    bool ok = true;
    double best = 1e9;
    for (int trial = 0; trial < 3; ++trial) {
        RookMemo memo;
        const auto start = clock_type::now();
        const NormalForm nf = normal_order_word(w, StepRule::TallestColumn, memo);
        best = std::min(best, ms_since(start));
        ok = ok && nf == expected;
    }
    c.ms = best;
    c.pass = ok && best < c.limit_ms;
    return c;
}

Criterion defining_relation() {
    Criterion c{3, "defining relation", false, 0.0, 0.0, ""};
    c.pass = eval_text("aA") == eval_text("Aa + I");
    return c;
}

Criterion structure_constants() {
    Criterion c{4, "structure constants vs rewriter, 1296 cases", false, 0.0, 10000.0, ""};
    const auto start = clock_type::now();
    bool ok = true;
    for (int r = 0; r <= 5 && ok; ++r) {
        for (int s = 0; s <= 5 && ok; ++s) {
            for (int k = 0; k <= 5 && ok; ++k) {
                for (int l = 0; l <= 5 && ok; ++l) {
                    const Word w = basis_word(r, s) + basis_word(k, l);
                    ok = multiply_basis({r, s}, {k, l}) == rewrite_normal(w);
                }
            }
        }
    }
    c.ms = ms_since(start);
    c.pass = ok && c.ms < c.limit_ms;
    return c;
}

Criterion oracle_sweep() {
    Criterion c{5, "oracle sweep over all words of length <= 10", false, 0.0, 30000.0, ""};
    const auto start = clock_type::now();
    bool ok = true;
    std::size_t words = 0;
    for (std::size_t length = 0; length <= 10 && ok; ++length) {
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << length) && ok; ++bits) {
            const Word w = word_of(length, bits);
            const NormalForm by_rook = normal_order_word(w);
            const NormalForm by_rewrite = rewrite_normal(w);
            ok = by_rook == by_rewrite && equal_by_action(by_rook, by_rewrite);
            ++words;
        }
    }
    c.ms = ms_since(start);
    c.note = std::to_string(words) + " words";
    c.pass = ok && c.ms < c.limit_ms;
    return c;
}

Criterion rook_brute_sweep() {
    Criterion c{6, "rook brute-force sweep", false, 0.0, 60000.0, ""};
    const auto start = clock_type::now();
    bool ok = true;

    const std::vector<FerrersBoard> exhaustive = all_boards_up_to(14);
    for (const FerrersBoard& b : exhaustive) {
        if (rook_numbers(b) != rook_brute_force(b, 14)) {
            ok = false;
            break;
        }
    }

    std::mt19937 rng(1924);
    int random_boards = 0;
    for (; random_boards < 500 && ok; ++random_boards) {
        const FerrersBoard b = random_board(rng, 30, 10, 6);
        ok = rook_numbers(b) == rook_brute_force(b, 30);
    }

    c.ms = ms_since(start);
    c.note = std::to_string(exhaustive.size()) + " exhaustive + " +
             std::to_string(random_boards) + " random boards";
    c.pass = ok && c.ms < c.limit_ms;
    return c;
}

Criterion step_rule_independence() {
    Criterion c{7, "step rule independence on 500 boards", false, 0.0, 0.0, ""};
    std::mt19937 rng(1973);
    bool ok = true;
    for (int i = 0; i < 500 && ok; ++i) {
        const FerrersBoard b = random_board(rng, 60, 12, 9);
        RookMemo tallest, first;
        ok = rook_numbers(b, StepRule::TallestColumn, tallest) ==
             rook_numbers(b, StepRule::FirstColumn, first);
    }
    c.pass = ok;
    return c;
}

Criterion property_suite() {
    Criterion c{8, "algebraic properties, 4 suites x 200 instances", false, 0.0, 0.0, ""};
    std::mt19937 rng(2008);
    bool ok = true;

    for (int i = 0; i < 200 && ok; ++i) {
        const NormalForm x = random_form(rng);
        const NormalForm y = random_form(rng);
        const NormalForm z = random_form(rng);
        ok = multiply(multiply(x, y), z) == multiply(x, multiply(y, z));
    }
    for (int i = 0; i < 200 && ok; ++i) {
        const NormalForm x = random_form(rng);
        ok = multiply(NormalForm::identity(), x) == x && multiply(x, NormalForm::identity()) == x;
    }
    for (int i = 0; i < 200 && ok; ++i) {
        const NormalForm x = random_form(rng);
        const NormalForm y = random_form(rng);
        const NormalForm z = random_form(rng);
        ok = multiply(x, add(y, z)) == add(multiply(x, y), multiply(x, z)) &&
             multiply(add(x, y), z) == add(multiply(x, z), multiply(y, z));
    }
    for (int i = 0; i < 200 && ok; ++i) {
        const Word u = word_of(1 + rng() % 8, static_cast<std::uint32_t>(rng()));
        const Word v = word_of(1 + rng() % 8, static_cast<std::uint32_t>(rng()));
        ok = multiply(normal_order_word(u), normal_order_word(v)) == normal_order_word(u + v);
    }

    c.pass = ok;
    return c;
}

Criterion rectangular_closed_form() {
    Criterion c{9, "rectangular closed form, s,k <= 8", false, 0.0, 0.0, ""};
    bool ok = true;
    for (int s = 0; s <= 8 && ok; ++s) {
        for (int k = 0; k <= 8 && ok; ++k) {
            RookMemo memo;
            const FerrersBoard rect(std::vector<int>(k, s));
            ok = rook_numbers_rect(s, k) == rook_numbers(rect, StepRule::TallestColumn, memo);
        }
    }
    c.pass = ok;
    return c;
}

Criterion pair_word_scaling(std::vector<std::string>& detail_lines) {
    Criterion c{10, "rook route vs naive rewriter on pair words (informational)", false, 0.0, 0.0, ""};
    const std::vector<cli::BenchRow> rows = cli::bench_pairs(8, 12, 24);
    bool ok = rows.size() == 5;
    for (const cli::BenchRow& r : rows) {
        ok = ok && r.equal;
        char line[160];
        std::snprintf(line, sizeof line,
                      "     pair n=%2zu: rook %8.3f ms, naive %10.3f ms, peak terms %7zu, steps %8zu",
                      r.length / 2, r.rook_ms, r.naive_ms, r.naive_peak_terms, r.naive_steps);
        detail_lines.emplace_back(line);
    }
    c.pass = ok;
    return c;
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(golden_rook_numbers());
    results.push_back(golden_normal_form());
    results.push_back(defining_relation());
    results.push_back(structure_constants());
    results.push_back(oracle_sweep());
    results.push_back(rook_brute_sweep());
    results.push_back(step_rule_independence());
    results.push_back(property_suite());
    results.push_back(rectangular_closed_form());
    std::vector<std::string> detail_lines;
    results.push_back(pair_word_scaling(detail_lines));

    bool all_pass = true;
    for (const Criterion& c : results) {
        all_pass = all_pass && c.pass;
        std::printf("%2d %s %s", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str());
        if (!c.note.empty()) std::printf(" [%s]", c.note.c_str());
        if (c.limit_ms > 0) std::printf(" (%.3f ms, limit %.0f ms)", c.ms, c.limit_ms);
        std::printf("\n");
        if (c.id == 10) {
            for (const std::string& line : detail_lines) std::printf("%s\n", line.c_str());
        }
    }
    return all_pass ? 0 : 1;
}
