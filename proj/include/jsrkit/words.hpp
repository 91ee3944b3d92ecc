#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace jsrkit {

using Letter = std::uint32_t;

inline constexpr std::uint64_t kDefaultWordBudget = 10'000'000;

/**
 * @brief A finite word over the alphabet {1, ..., r}.
 *
 * Letters are 1-based. A word of length n indexes the product
 * A_{w_n} ... A_{w_1}: the first letter acts first.
 */
class Word {
public:
    Word() = default;

    Word(std::size_t alphabet_size, std::vector<Letter> letters)
        : alphabet_(alphabet_size), letters_(std::move(letters)) {
        if (alphabet_ == 0) throw ArgumentError("word alphabet must be nonempty");
        if (letters_.empty()) throw ArgumentError("word must have at least one letter");
        for (auto x : letters_) {
            if (x < 1 || x > alphabet_) {
                throw ArgumentError("letter " + std::to_string(x) + " outside alphabet {1.." +
                                    std::to_string(alphabet_) + "}");
            }
        }
    }

    /// Word over the smallest alphabet containing all its letters.
    explicit Word(std::vector<Letter> letters) {
        // alphabet first: a delegating call would move-construct the parameter unsequenced with reading it
        const std::size_t alphabet = letters.empty() ? 1 : *std::max_element(letters.begin(), letters.end());
        *this = Word(alphabet, std::move(letters));
    }

    std::size_t alphabet_size() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return letters_.size(); }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter max_letter() const { return *std::max_element(letters_.begin(), letters_.end()); }

    /// Equality is on letters; the alphabet tag does not participate.
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    std::size_t alphabet_ = 1;
    std::vector<Letter> letters_;
};

/// Comma-separated rendering, e.g. "1,2,2".
inline std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

inline Word parse_word(std::string_view text, std::size_t alphabet_size = 0) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("malformed word '" + std::string(text) + "'");
        }
        letters.push_back(value);
        pos = end + 1;
    }
    if (alphabet_size == 0) return Word(std::move(letters));
    return Word(alphabet_size, std::move(letters));
}

/// Cyclic left rotation by k: (w_{k+1}, ..., w_n, w_1, ..., w_k).
inline Word rotate(const Word& w, std::size_t k) {
    std::vector<Letter> out(w.letters());
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % w.size()), out.end());
    return Word(w.alphabet_size(), std::move(out));
}

inline bool rotation_equivalent(const Word& z, const Word& w) {
    if (z.size() != w.size()) return false;
    std::vector<Letter> doubled(w.letters());
    doubled.insert(doubled.end(), w.letters().begin(), w.letters().end());
    return std::search(doubled.begin(), doubled.end(), z.letters().begin(), z.letters().end()) != doubled.end();
}

/// Offset of the lexicographically least rotation (Booth's algorithm).
inline std::size_t least_rotation_offset(const std::vector<Letter>& s) {
    const std::size_t n = s.size();
    std::vector<Letter> ss(s);
    ss.insert(ss.end(), s.begin(), s.end());
    std::vector<std::ptrdiff_t> fail(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Letter sj = ss[j];
        std::ptrdiff_t i = fail[j - k - 1];
        while (i != -1 && sj != ss[k + static_cast<std::size_t>(i) + 1]) {
            if (sj < ss[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
            i = fail[static_cast<std::size_t>(i)];
        }
        if (sj != ss[k + static_cast<std::size_t>(i + 1)]) {
            // i == -1 here
            if (sj < ss[k]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return k % n;
}

/// Lexicographically least rotation: the canonical necklace representative.
inline Word canonical_rotation(const Word& w) {
    return rotate(w, least_rotation_offset(w.letters()));
}

/// True iff w is not a power z^p of a shorter word (w occurs in ww only at 0 and n).
inline bool is_primitive(const Word& w) {
    const auto& s = w.letters();
    const std::size_t n = s.size();
    if (n == 1) return true;
    std::vector<Letter> doubled(s);
    doubled.insert(doubled.end(), s.begin(), s.end());
    auto hit = std::search(doubled.begin() + 1, doubled.end() - 1, s.begin(), s.end());
    return static_cast<std::size_t>(hit - doubled.begin()) >= n;
}

inline Word power(const Word& z, std::size_t p) {
    if (p == 0) throw ArgumentError("word power must be positive");
    std::vector<Letter> out;
    out.reserve(z.size() * p);
    for (std::size_t i = 0; i < p; ++i) out.insert(out.end(), z.letters().begin(), z.letters().end());
    return Word(z.alphabet_size(), std::move(out));
}

/// r^n, or budget + 1 if that would exceed the budget.
inline std::uint64_t word_count_capped(std::size_t r, std::size_t n, std::uint64_t budget) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (count > budget / std::max<std::size_t>(r, 1)) return budget + 1;
        count *= r;
    }
    return count;
}

inline void require_budget(std::size_t r, std::size_t n, std::uint64_t budget) {
    if (word_count_capped(r, n, budget) > budget) {
        throw BudgetExceeded("enumerating " + std::to_string(r) + "^" + std::to_string(n) +
                             " words exceeds the budget of " + std::to_string(budget) +
                             "; lower the word length");
    }
}

/// Visits all r^n words in lexicographic order.
template <class F>
void for_each_word(std::size_t r, std::size_t n, F&& visit, std::uint64_t budget = kDefaultWordBudget) {
    if (r == 0 || n == 0) throw ArgumentError("word enumeration needs r >= 1 and n >= 1");
    require_budget(r, n, budget);
    std::vector<Letter> letters(n, 1);
    while (true) {
        visit(Word(r, letters));
        std::size_t pos = n;
        while (pos > 0 && letters[pos - 1] == r) letters[--pos] = 1;
        if (pos == 0) return;
        ++letters[pos - 1];
    }
}

/**
 * @brief Visits one representative per rotation class, in lexicographic order.
 *
 * Fredricksen-Kessler-Maiorana generation of prenecklaces, keeping those
 * whose period divides n. Each representative is its own least rotation.
 */
template <class F>
void for_each_necklace(std::size_t r, std::size_t n, F&& visit, std::uint64_t budget = kDefaultWordBudget) {
    if (r == 0 || n == 0) throw ArgumentError("necklace enumeration needs r >= 1 and n >= 1");
    require_budget(r, n, budget);
    std::vector<Letter> a(n + 1, 0);
    std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t t, std::size_t p) {
        if (t > n) {
            if (n % p == 0) {
                std::vector<Letter> letters(a.begin() + 1, a.end());
                for (auto& x : letters) ++x;
                visit(Word(r, std::move(letters)));
            }
            return;
        }
        a[t] = a[t - p];
        gen(t + 1, p);
        for (Letter j = a[t - p] + 1; j < r; ++j) {
            a[t] = j;
            gen(t + 1, t);
        }
    };
    gen(1, 1);
}

inline std::vector<Word> enumerate_words(std::size_t r, std::size_t n, std::uint64_t budget = kDefaultWordBudget) {
    std::vector<Word> out;
    for_each_word(r, n, [&](Word w) { out.push_back(std::move(w)); }, budget);
    return out;
}

inline std::vector<Word> enumerate_necklaces(std::size_t r, std::size_t n,
                                             std::uint64_t budget = kDefaultWordBudget) {
    std::vector<Word> out;
    for_each_necklace(r, n, [&](Word w) { out.push_back(std::move(w)); }, budget);
    return out;
}

} // namespace jsrkit
