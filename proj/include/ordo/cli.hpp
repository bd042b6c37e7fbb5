#pragma once

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "ordo/algebra.hpp"
#include "ordo/json_io.hpp"
#include "ordo/oracle.hpp"
#include "ordo/parser.hpp"
#include "ordo/rook.hpp"
#include "ordo/word.hpp"

namespace ordo::cli {

// ---------------------------------------------------------------------------
// ASCII board rendering.
//
// The path is drawn onto a character grid, one text row per lattice row,
// top row first; y grows upward, so the word's first letters are at the
// bottom left. Right steps render as "__", up steps as '|', board cells
// as "[]". Column x of the board occupies text columns 2x+1..2x+2; the up
// step crossing a given row always lands immediately left of that row's
// first cell.
// ---------------------------------------------------------------------------

inline std::string render_board_ascii(const Word& w) {
    const LetterCounts lc = excess_counts(w);
    const int creators = lc.creators;
    const int annihilators = lc.annihilators;

    // Height of every creator column (zero heights included: the path shows
    // them even though the board drops them), and the column index reached
    // before each annihilator.
    std::vector<int> height;
    std::vector<int> up_column;
    int ups = 0;
    for (Letter l : w) {
        if (l == Letter::Creator) height.push_back(ups);
        else {
            up_column.push_back(static_cast<int>(height.size()));
            ++ups;
        }
    }

    const std::size_t width = 2 * static_cast<std::size_t>(creators) + 1;
    std::vector<std::string> rows;

    auto draw_step = [&](std::string& row, int x) {
        row[2 * x + 1] = '_';
        row[2 * x + 2] = '_';
    };

    // Top edge: right steps taken after the last annihilator.
    bool top_needed = false;
    for (int x = 0; x < creators; ++x) top_needed |= height[x] == annihilators;
    if (top_needed) {
        std::string row(width, ' ');
        for (int x = 0; x < creators; ++x) {
            if (height[x] == annihilators) draw_step(row, x);
        }
        rows.push_back(std::move(row));
    }

    for (int y = annihilators - 1; y >= 0; --y) {
        std::string row(width, ' ');
        for (int x = 0; x < creators; ++x) {
            if (height[x] == y) draw_step(row, x);
            if (height[x] > y) {
                row[2 * x + 1] = '[';
                row[2 * x + 2] = ']';
            }
        }
        row[2 * up_column[y]] = '|';
        rows.push_back(std::move(row));
    }

    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        while (!rows[i].empty() && rows[i].back() == ' ') rows[i].pop_back();
        if (i) out += '\n';
        out += rows[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Selftest: frozen golden cases plus the exhaustive oracle sweep over every
// word of length 0..10.
// ---------------------------------------------------------------------------

struct SelftestReport {
    bool pass = true;
    std::size_t words_checked = 0;
    std::size_t golden_cases = 0;
    std::string failure;
};

inline Word word_from_bits(std::size_t length, std::uint32_t bits) {
    std::vector<Letter> ls(length);
    for (std::size_t i = 0; i < length; ++i) {
        ls[i] = (bits >> i & 1) ? Letter::Creator : Letter::Annihilator;
    }
    return Word(std::move(ls));
}

// The fast route is injectable so tests can feed a corrupted implementation
// and watch the selftest catch it.
inline SelftestReport run_selftest(
    const std::function<NormalForm(const Word&)>& fast = {},
    std::size_t max_length = 10) {
    auto fast_route = fast ? fast : [](const Word& w) { return normal_order_word(w); };
    SelftestReport report;

    const Word golden_word = Word::parse("aAaAAAaAa");
    const RookVector golden_rooks{{1, 10, 23, 9}};
    if (rook_numbers(board_of(golden_word)) != golden_rooks) {
        report.pass = false;
        report.failure = "rook numbers of board 1,2,2,2,3 differ from 1,10,23,9";
        return report;
    }
    ++report.golden_cases;

    const NormalForm golden_form{{{5, 4}, 1}, {{4, 3}, 10}, {{3, 2}, 23}, {{2, 1}, 9}};
    if (fast_route(golden_word) != golden_form) {
        report.pass = false;
        report.failure = "normal form of aAaAAAaAa differs from the golden expansion";
        return report;
    }
    ++report.golden_cases;

    for (std::size_t length = 0; length <= max_length; ++length) {
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << length); ++bits) {
            const Word w = word_from_bits(length, bits);
            const NormalForm by_rook = fast_route(w);
            const NormalForm by_rewrite = rewrite_normal(w, std::max<std::size_t>(length, 1));
            if (by_rook != by_rewrite || !equal_by_action(by_rook, by_rewrite)) {
                report.pass = false;
                report.failure = "first counterexample word \"" + w.text() + "\"";
                return report;
            }
            ++report.words_checked;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Benchmark: rook-route normalization vs the naive rewriter.
// ---------------------------------------------------------------------------

struct BenchRow {
    std::string series;  // "random" or "pair"
    std::size_t length = 0;
    std::size_t trials = 0;
    double rook_ms = 0.0;
    double naive_ms = 0.0;
    std::size_t naive_peak_terms = 0;
    std::size_t naive_steps = 0;
    bool equal = true;
};

namespace detail {

struct TrialResult {
    double rook_ms = 0.0;
    double naive_ms = 0.0;
    RewriteStats stats;
    bool equal = false;
};

inline TrialResult bench_one(const Word& w, std::size_t rewrite_limit) {
    using clock = std::chrono::steady_clock;
    TrialResult r;

    // Fresh memo per word: timings reflect a cold rook computation.
    const auto t0 = clock::now();
    RookMemo memo;
    const NormalForm by_rook = normal_order_word(w, StepRule::TallestColumn, memo);
    const auto t1 = clock::now();
    const NormalForm by_rewrite = rewrite_normal(w, rewrite_limit, RewriteStrategy::Leftmost, &r.stats);
    const auto t2 = clock::now();

    r.rook_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    r.naive_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    r.equal = by_rook == by_rewrite;
    return r;
}

template <typename T>
T median(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    return values[values.size() / 2];
}

}  // namespace detail

inline BenchRow bench_word(const Word& w, std::string series, std::size_t rewrite_limit) {
    const detail::TrialResult r = detail::bench_one(w, rewrite_limit);
    return {std::move(series), w.size(), 1,       r.rook_ms,
            r.naive_ms,        r.stats.peak_terms, r.stats.steps, r.equal};
}

inline std::vector<BenchRow> bench_random(std::size_t max_len, std::size_t trials,
                                          std::size_t rewrite_limit, std::uint32_t seed) {
    if (max_len > rewrite_limit) {
        throw std::invalid_argument("bench: max length " + std::to_string(max_len) +
                                    " exceeds rewrite limit " + std::to_string(rewrite_limit));
    }
    std::vector<BenchRow> rows;
    if (trials == 0) return rows;
    std::mt19937 rng(seed);
    for (std::size_t length = 1; length <= max_len; ++length) {
        std::vector<double> rook_ms, naive_ms;
        std::vector<std::size_t> peaks, steps;
        bool equal = true;
        for (std::size_t t = 0; t < trials; ++t) {
            const Word w = word_from_bits(length, static_cast<std::uint32_t>(rng()));
            const detail::TrialResult r = detail::bench_one(w, rewrite_limit);
            rook_ms.push_back(r.rook_ms);
            naive_ms.push_back(r.naive_ms);
            peaks.push_back(r.stats.peak_terms);
            steps.push_back(r.stats.steps);
            equal = equal && r.equal;
        }
        rows.push_back({"random", length, trials, detail::median(std::move(rook_ms)),
                        detail::median(std::move(naive_ms)), detail::median(std::move(peaks)),
                        detail::median(std::move(steps)), equal});
    }
    return rows;
}

// Words (aA)^n: the family whose naive-rewrite cost grows fastest per letter.
inline Word pair_word(std::size_t n) {
    std::vector<Letter> ls;
    ls.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        ls.push_back(Letter::Annihilator);
        ls.push_back(Letter::Creator);
    }
    return Word(std::move(ls));
}

inline std::vector<BenchRow> bench_pairs(std::size_t lo, std::size_t hi, std::size_t rewrite_limit) {
    std::vector<BenchRow> rows;
    for (std::size_t n = lo; n <= hi && 2 * n <= rewrite_limit; ++n) {
        rows.push_back(bench_word(pair_word(n), "pair", rewrite_limit));
    }
    return rows;
}

inline void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << "series,length,trials,rook_ms,naive_ms,naive_peak_terms,naive_steps,equal\n";
    for (const BenchRow& r : rows) {
        out << r.series << ',' << r.length << ',' << r.trials << ',' << std::fixed
            << std::setprecision(4) << r.rook_ms << ',' << r.naive_ms << ','
            << r.naive_peak_terms << ',' << r.naive_steps << ','
            << (r.equal ? "yes" : "no") << '\n';
    }
}

inline void write_bench_table(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << std::left << std::setw(8) << "series" << std::right << std::setw(7) << "length"
        << std::setw(8) << "trials" << std::setw(12) << "rook_ms" << std::setw(12) << "naive_ms"
        << std::setw(12) << "peak" << std::setw(12) << "steps" << std::setw(7) << "equal" << '\n';
    for (const BenchRow& r : rows) {
        out << std::left << std::setw(8) << r.series << std::right << std::setw(7) << r.length
            << std::setw(8) << r.trials << std::setw(12) << std::fixed << std::setprecision(4)
            << r.rook_ms << std::setw(12) << r.naive_ms << std::setw(12) << r.naive_peak_terms
            << std::setw(12) << r.naive_steps << std::setw(7) << (r.equal ? "yes" : "no") << '\n';
    }
}

// ---------------------------------------------------------------------------
// Command dispatch. Exit codes: 0 success, 1 internal mismatch or selftest
// failure, 2 usage or parse errors.
// ---------------------------------------------------------------------------

inline std::size_t default_rewrite_limit() {
    if (const char* env = std::getenv("ORDO_REWRITE_LIMIT")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultRewriteLimit;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact normal ordering for the Heisenberg-Weyl algebra"};
    app.name("ordo");
    app.require_subcommand(1);
    const std::size_t env_limit = default_rewrite_limit();

    std::string expr_text;
    bool normalize_json = false;
    CLI::App* normalize = app.add_subcommand("normalize", "Normal-order an expression");
    normalize->add_option("expr", expr_text, "expression over a, A, I, integers, + - * ^ ( )")
        ->required();
    normalize->add_flag("--json", normalize_json, "emit the JSON term schema");

    std::string rook_spec;
    bool rook_json = false;
    CLI::App* rook = app.add_subcommand("rook", "Rook numbers of a word or board");
    rook->add_option("spec", rook_spec, "a word, or \"heights:h1,h2,...\"")->required();
    rook->add_flag("--json", rook_json, "emit a JSON array of decimal strings");

    std::string board_word;
    CLI::App* board = app.add_subcommand("board", "Draw a word's path and Ferrers board");
    board->add_option("word", board_word, "generator string")->required();

    int mul_r = 0, mul_s = 0, mul_k = 0, mul_l = 0;
    bool mul_json = false;
    CLI::App* mul = app.add_subcommand("mul", "Multiply basis monomials A^r a^s * A^k a^l");
    mul->add_option("r", mul_r, "creator power of the left factor")
        ->required()->check(CLI::NonNegativeNumber);
    mul->add_option("s", mul_s, "annihilator power of the left factor")
        ->required()->check(CLI::NonNegativeNumber);
    mul->add_option("k", mul_k, "creator power of the right factor")
        ->required()->check(CLI::NonNegativeNumber);
    mul->add_option("l", mul_l, "annihilator power of the right factor")
        ->required()->check(CLI::NonNegativeNumber);
    mul->add_flag("--json", mul_json, "emit the JSON term schema");

    std::size_t bench_max_len = 10, bench_trials = 50, bench_limit = env_limit;
    std::uint32_t bench_seed = 414152u;
    bool bench_csv = false;
    CLI::App* bench = app.add_subcommand("bench", "Compare rook-route and naive normalization");
    bench->add_option("--max-len", bench_max_len, "largest random word length");
    bench->add_option("--trials", bench_trials, "random words per length");
    bench->add_option("--limit", bench_limit, "naive rewriter word-length cap");
    bench->add_option("--seed", bench_seed, "random word corpus seed");
    bench->add_flag("--csv", bench_csv, "machine-readable output");

    CLI::App* selftest = app.add_subcommand("selftest", "Oracle sweep and golden cases");

    try {
        std::vector<const char*> argv;
        argv.push_back("ordo");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(normalize)) {
            const NormalForm nf = eval_text(expr_text);
            if (normalize_json) out << normal_form_json(nf).dump() << '\n';
            else out << to_text(nf) << '\n';
            return 0;
        }

        if (app.got_subcommand(rook)) {
            constexpr std::string_view heights_prefix = "heights:";
            FerrersBoard b;
            if (rook_spec.starts_with(heights_prefix)) {
                b = FerrersBoard::parse(std::string_view(rook_spec).substr(heights_prefix.size()));
            } else {
                b = board_of(Word::parse(rook_spec));
            }
            const RookVector rv = rook_numbers(b);
            if (rook_json) {
                out << rook_vector_json(rv).dump() << '\n';
            } else {
                out << to_text(rv) << '\n' << polynomial_text(rv) << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(board)) {
            const Word w = Word::parse(board_word);
            if (w.empty()) {
                out << "empty word: empty board\n";
                return 0;
            }
            const FerrersBoard b = board_of(w);
            out << "heights: " << (b.empty() ? "(empty)" : b.text()) << '\n';
            out << render_board_ascii(w) << '\n';
            return 0;
        }

        if (app.got_subcommand(mul)) {
            const MonomialIndex x{mul_r, mul_s};
            const MonomialIndex y{mul_k, mul_l};
            const NormalForm nf = multiply_basis(x, y);
            if (mul_json) {
                out << normal_form_json(nf).dump() << '\n';
                return 0;
            }
            out << to_text(nf) << '\n';
            BigInt gamma = 1;
            const int top = std::min(mul_s, mul_k);
            for (int i = 0;; ++i) {
                out << "gamma i=" << i << ": " << gamma.str() << " -> "
                    << monomial_text({mul_r + mul_k - i, mul_s + mul_l - i}) << '\n';
                if (i == top) break;
                gamma *= mul_s - i;
                gamma *= mul_k - i;
                gamma /= i + 1;
            }
            return 0;
        }

        if (app.got_subcommand(bench)) {
            std::vector<BenchRow> rows = bench_random(bench_max_len, bench_trials, bench_limit, bench_seed);
            if (bench_max_len > 0) {
                const std::vector<BenchRow> pairs = bench_pairs(8, 12, bench_limit);
                rows.insert(rows.end(), pairs.begin(), pairs.end());
            }
            if (bench_csv) write_bench_csv(rows, out);
            else write_bench_table(rows, out);
            for (const BenchRow& r : rows) {
                if (!r.equal) {
                    err << "bench: rook route and naive rewriter disagree on series " << r.series
                        << " length " << r.length << '\n';
                    return 1;
                }
            }
            return 0;
        }

        if (app.got_subcommand(selftest)) {
            const SelftestReport report = run_selftest({}, 10);
            if (!report.pass) {
                out << "FAIL: " << report.failure << '\n';
                return 1;
            }
            out << "PASS (" << report.words_checked << " words, " << report.golden_cases
                << " golden cases)\n";
            return 0;
        }
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace ordo::cli
