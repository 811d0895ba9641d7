#pragma once

#include "ncf/bigint.hpp"

#include <cstdint>
#include <istream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncf {

/// A finite word over {0,1}. The run-length block list is the authoritative
/// storage (blocks strictly alternate letters); the flat symbol array is
/// materialized on first use and cached.
///
/// Words are value types. Builders mutate; after construction a word is
/// treated as immutable. Call bytes() once before sharing a word across
/// threads — the analysis entry points do this before fanning out.
class BinaryWord {
public:
    struct Run {
        std::uint8_t letter;
        std::uint64_t length;
        bool operator==(const Run&) const = default;
    };

    BinaryWord() = default;

    static BinaryWord run(int letter, std::uint64_t length) {
        BinaryWord w;
        w.append_run(letter, length);
        return w;
    }

    static BinaryWord from_string(std::string_view s) {
        BinaryWord w;
        for (char c : s) {
            if (c == '0' || c == '1') w.append_run(c - '0', 1);
            else if (c == '\n' || c == '\r') continue;
            else throw std::invalid_argument(std::string("word: unexpected character '") + c + "'");
        }
        return w;
    }

    void append_run(int letter, std::uint64_t length) {
        if (length == 0) return;
        if (letter != 0 && letter != 1) throw std::invalid_argument("word: letter must be 0 or 1");
        cache_.reset();
        if (!runs_.empty() && runs_.back().letter == letter) runs_.back().length += length;
        else runs_.push_back({static_cast<std::uint8_t>(letter), length});
        size_ += length;
        counts_[letter] += length;
    }

    void append(const BinaryWord& other) {
        for (const Run& r : other.runs_) append_run(r.letter, r.length);
    }

    void append_repeated(const BinaryWord& other, std::uint64_t times) {
        for (std::uint64_t i = 0; i < times; ++i) append(other);
    }

    /// Appends `other` (repeated `times` times) but stops once this word
    /// reaches `cap` symbols. Used by prefix builders.
    void append_repeated_capped(const BinaryWord& other, std::uint64_t times, std::uint64_t cap) {
        for (std::uint64_t i = 0; i < times && size_ < cap; ++i) {
            for (const Run& r : other.runs_) {
                if (size_ >= cap) break;
                append_run(r.letter, std::min<std::uint64_t>(r.length, cap - size_));
            }
        }
    }

    BinaryWord prefix(std::uint64_t length) const {
        if (length > size_) throw std::invalid_argument("word: prefix longer than word");
        BinaryWord out;
        for (const Run& r : runs_) {
            if (out.size_ + r.length >= length) {
                out.append_run(r.letter, length - out.size_);
                break;
            }
            out.append_run(r.letter, r.length);
        }
        return out;
    }

    std::uint64_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::uint64_t count(int letter) const { return counts_[letter & 1]; }
    const std::vector<Run>& runs() const { return runs_; }

    int at(std::uint64_t i) const { return bytes()[i]; }

    /// Flat symbol array (values 0/1), cached after the first call.
    const std::vector<std::uint8_t>& bytes() const {
        if (!cache_) {
            auto flat = std::make_shared<std::vector<std::uint8_t>>();
            flat->reserve(size_);
            for (const Run& r : runs_)
                flat->insert(flat->end(), r.length, r.letter);
            cache_ = std::move(flat);
        }
        return *cache_;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(size_);
        for (const Run& r : runs_) s.append(r.length, static_cast<char>('0' + r.letter));
        return s;
    }

    bool operator==(const BinaryWord& o) const { return runs_ == o.runs_; }
    bool operator!=(const BinaryWord& o) const { return !(*this == o); }

    bool is_prefix_of(const BinaryWord& o) const {
        if (size_ > o.size_) return false;
        std::uint64_t covered = 0;
        std::size_t i = 0;
        for (const Run& r : runs_) {
            if (i >= o.runs_.size() || o.runs_[i].letter != r.letter) return false;
            bool last = covered + r.length == size_;
            if (r.length > o.runs_[i].length) return false;
            if (r.length < o.runs_[i].length && !last) return false;
            covered += r.length;
            ++i;
        }
        return true;
    }

private:
    std::vector<Run> runs_;
    std::uint64_t size_ = 0;
    std::uint64_t counts_[2] = {0, 0};
    mutable std::shared_ptr<const std::vector<std::uint8_t>> cache_;
};

/// Letter-count vector of a word.
struct AbelianVector {
    BigInt zeros;
    BigInt ones;
    bool operator==(const AbelianVector&) const = default;
};

inline AbelianVector abelianize(const BinaryWord& w) {
    return AbelianVector{BigInt(w.count(0)), BigInt(w.count(1))};
}

// --- word files --------------------------------------------------------------
// Plain format: one line of '0'/'1' characters, newline-terminated.
// RLE format:   comma-separated count:letter tokens, e.g. "2:0,3:1".

inline void write_word_plain(std::ostream& os, const BinaryWord& w) {
    for (const auto& r : w.runs())
        for (std::uint64_t i = 0; i < r.length; ++i) os.put(static_cast<char>('0' + r.letter));
    os.put('\n');
}

inline BinaryWord read_word_plain(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("word file: no content");
    return BinaryWord::from_string(line);
}

inline void write_word_rle(std::ostream& os, const BinaryWord& w) {
    bool first = true;
    for (const auto& r : w.runs()) {
        if (!first) os.put(',');
        os << r.length << ':' << int(r.letter);
        first = false;
    }
    os.put('\n');
}

inline BinaryWord read_word_rle(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("word file: no content");
    BinaryWord w;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        std::string token = line.substr(pos, comma - pos);
        std::size_t colon = token.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("word file: malformed RLE token '" + token + "'");
        std::uint64_t count = std::stoull(token.substr(0, colon));
        int letter = std::stoi(token.substr(colon + 1));
        w.append_run(letter, count);
        pos = comma + 1;
    }
    return w;
}

}  // namespace ncf
