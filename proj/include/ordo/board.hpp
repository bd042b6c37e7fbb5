#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordo {

// A Ferrers board given by its column heights, kept in canonical form:
// heights nondecreasing left to right, zero-height columns dropped.
// Canonicalization happens at construction, so two boards compare equal
// exactly when they carry the same multiset of column heights.
class FerrersBoard {
public:
    FerrersBoard() = default;

    explicit FerrersBoard(std::vector<int> heights) : heights_(std::move(heights)) {
        for (int h : heights_) {
            if (h < 0) throw std::invalid_argument("FerrersBoard: negative column height");
        }
        std::erase(heights_, 0);
        std::sort(heights_.begin(), heights_.end());
    }

    // Text form "h1,h2,...,hn"; the empty string is the empty board.
    static FerrersBoard parse(std::string_view text) {
        std::vector<int> hs;
        std::size_t pos = 0;
        while (pos < text.size()) {
            std::size_t end = text.find(',', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view item = text.substr(pos, end - pos);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size()) {
                throw std::invalid_argument("FerrersBoard: bad height '" + std::string(item) + "'");
            }
            hs.push_back(value);
            pos = end + 1;
        }
        return FerrersBoard(std::move(hs));
    }

    const std::vector<int>& heights() const { return heights_; }
    std::size_t columns() const { return heights_.size(); }
    bool empty() const { return heights_.empty(); }
    int max_height() const { return heights_.empty() ? 0 : heights_.back(); }

    std::uint64_t cell_count() const {
        return std::accumulate(heights_.begin(), heights_.end(), std::uint64_t{0});
    }

    std::string text() const {
        std::string out;
        for (std::size_t i = 0; i < heights_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(heights_[i]);
        }
        return out;
    }

    friend auto operator<=>(const FerrersBoard&, const FerrersBoard&) = default;

private:
    std::vector<int> heights_;
};

}  // namespace ordo
