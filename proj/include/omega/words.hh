// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* words.hh -- alphabets, finite words, lasso words and block words.
 */

#ifndef OMEGA_WORDS_HH_
#define OMEGA_WORDS_HH_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/error.hh"

namespace omega {

/// A letter is an atomic printable token. Most letters are one character,
/// but multi-character tokens are allowed and never split.
using Letter = std::string;
using Word = std::vector<Letter>;

/// Index of a letter inside an Alphabet.
using Symbol = std::size_t;

/// The block marker adjoined to a base alphabet.
inline const Letter kMarker = "A";
/// The padding letter used by the block codings.
inline const Letter kZero = "0";

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<Letter> letters);
    Alphabet(std::initializer_list<Letter> letters)
        : Alphabet(std::vector<Letter>(letters)) {}

    /// Sigma U {A}. Throws if the marker is already a member.
    static Alphabet with_marker(const Alphabet& sigma);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool contains(std::string_view letter) const { return index_of(letter).has_value(); }
    std::optional<Symbol> index_of(std::string_view letter) const;
    /// Like index_of but throws AlphabetMismatch.
    Symbol symbol(std::string_view letter) const;
    const Letter& letter(Symbol s) const { return letters_.at(s); }

    /// Same letters, possibly in a different order.
    bool same_letters(const Alphabet& other) const;
    bool contains_all(const Word& word) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<Letter> letters_;
};

/// Requires 0 in sigma and A not in sigma.
void require_block_alphabet(const Alphabet& sigma);

/// Renders a word: letters concatenated when all are single characters,
/// otherwise separated by spaces. The empty word renders as "".
std::string to_string(const Word& word);
/// Splits text into letters: on whitespace when it contains any, otherwise
/// by greedy longest match against `alphabet` (single characters when the
/// alphabet is absent or nothing matches).
Word parse_word(std::string_view text, const Alphabet* alphabet = nullptr);

Word zeros(std::size_t n);
Word concat(const Word& a, const Word& b);

/// An ultimately periodic word stem . loop^omega.
class LassoWord {
public:
    LassoWord(Word stem, Word loop);

    const Word& stem() const { return stem_; }
    const Word& loop() const { return loop_; }
    /// |stem| + |loop|.
    std::size_t size() const { return stem_.size() + loop_.size(); }

    /// 1-based letter access into stem . loop^omega.
    const Letter& letter_at(std::size_t i) const;

    bool is_canonical() const;

    /// Structural equality. Two canonical lassos are equal iff they denote
    /// the same omega-word.
    bool operator==(const LassoWord&) const = default;
    auto operator<=>(const LassoWord&) const = default;

private:
    Word stem_;
    Word loop_;
};

const Letter& lasso_letter_at(const LassoWord& w, std::size_t i);

/// Canonical representative: primitive loop, then trailing stem letters
/// absorbed by rotating the loop.
LassoWord lasso_normalize(const LassoWord& w);

/// Parses "stem(loop)", e.g. "ab(c)" or "(c)".
LassoWord parse_lasso(std::string_view text, const Alphabet* alphabet = nullptr);
std::string to_string(const LassoWord& w);

/// Every canonical lasso over `letters` with |stem| + |loop| <= max_size,
/// in a fixed enumeration order (by size, then stem length, then
/// lexicographically by letter order).
std::vector<LassoWord> enumerate_lassos(const std::vector<Letter>& letters, std::size_t max_size);

/// A non-periodic word A.b_1.A.b_2.A... given by its blocks. Only blocks and
/// finite prefixes are ever materialized.
class BlockWord {
public:
    using BlockFn = std::function<Word(std::size_t)>;

    BlockWord(Alphabet base, BlockFn block) : base_(std::move(base)), block_(std::move(block)) {}

    /// The base alphabet (without the marker).
    const Alphabet& base() const { return base_; }
    /// The alphabet of the represented word, base U {A}.
    Alphabet alphabet() const { return Alphabet::with_marker(base_); }
    /// Block i >= 1, exclusive of markers.
    Word block(std::size_t i) const;

private:
    Alphabet base_;
    BlockFn block_;
};

/// h(x): block i is 0^i . x(i).
BlockWord h_word(const LassoWord& x, const Alphabet& sigma);
/// alpha: block i is 0^i.
BlockWord alpha_word(const Alphabet& sigma);

/// A.b_1.A.b_2 ... A.b_n; the empty word for n = 0.
Word block_prefix(const BlockWord& w, std::size_t n);

}  // namespace omega

#endif  // OMEGA_WORDS_HH_
