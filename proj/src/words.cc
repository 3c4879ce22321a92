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

#include "omega/words.hh"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace omega {

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw InvalidArgument("alphabet must not be empty");
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& l : letters_) {
        if (l.empty()) {
            throw InvalidArgument("empty letter in alphabet");
        }
        for (char c : l) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"') {
                throw InvalidArgument("letter '" + l + "' contains a reserved character");
            }
        }
        if (!seen.insert(l).second) {
            throw InvalidArgument("duplicate letter '" + l + "' in alphabet");
        }
    }
}

Alphabet Alphabet::with_marker(const Alphabet& sigma) {
    if (sigma.contains(kMarker)) {
        throw InvalidArgument("marker letter A must not belong to the base alphabet");
    }
    auto letters = sigma.letters();
    letters.push_back(kMarker);
    return Alphabet(std::move(letters));
}

std::optional<Symbol> Alphabet::index_of(std::string_view letter) const {
    for (Symbol s = 0; s < letters_.size(); ++s) {
        if (letters_[s] == letter) {
            return s;
        }
    }
    return std::nullopt;
}

Symbol Alphabet::symbol(std::string_view letter) const {
    if (auto s = index_of(letter)) {
        return *s;
    }
    throw AlphabetMismatch("letter '" + std::string(letter) + "' is not in the alphabet");
}

bool Alphabet::same_letters(const Alphabet& other) const {
    if (size() != other.size()) {
        return false;
    }
    return std::all_of(letters_.begin(), letters_.end(),
                       [&](const Letter& l) { return other.contains(l); });
}

bool Alphabet::contains_all(const Word& word) const {
    return std::all_of(word.begin(), word.end(), [&](const Letter& l) { return contains(l); });
}

void require_block_alphabet(const Alphabet& sigma) {
    if (!sigma.contains(kZero)) {
        throw InvalidArgument("base alphabet must contain the letter 0");
    }
    if (sigma.contains(kMarker)) {
        throw InvalidArgument("base alphabet must not contain the marker A");
    }
}

std::string to_string(const Word& word) {
    const bool compact = std::all_of(word.begin(), word.end(),
                                     [](const Letter& l) { return l.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (!compact && i > 0) {
            out += ' ';
        }
        out += word[i];
    }
    return out;
}

Word parse_word(std::string_view text, const Alphabet* alphabet) {
    Word out;
    const bool spaced = std::any_of(text.begin(), text.end(),
                                    [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (spaced) {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            if (j > i) {
                out.emplace_back(text.substr(i, j - i));
            }
            i = j;
        }
        return out;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t best = 1;
        if (alphabet != nullptr) {
            for (const auto& l : alphabet->letters()) {
                if (l.size() > best && text.substr(i, l.size()) == l) {
                    best = l.size();
                }
            }
        }
        out.emplace_back(text.substr(i, best));
        i += best;
    }
    return out;
}

Word zeros(std::size_t n) { return Word(n, kZero); }

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

LassoWord::LassoWord(Word stem, Word loop) : stem_(std::move(stem)), loop_(std::move(loop)) {
    if (loop_.empty()) {
        throw InvalidArgument("lasso loop must be non-empty");
    }
}

const Letter& LassoWord::letter_at(std::size_t i) const {
    if (i == 0) {
        throw InvalidArgument("lasso positions are 1-based");
    }
    if (i <= stem_.size()) {
        return stem_[i - 1];
    }
    return loop_[(i - 1 - stem_.size()) % loop_.size()];
}

bool LassoWord::is_canonical() const { return lasso_normalize(*this) == *this; }

const Letter& lasso_letter_at(const LassoWord& w, std::size_t i) { return w.letter_at(i); }

namespace {

Word primitive_root(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) {
            continue;
        }
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) {
            periodic = w[i] == w[i - p];
        }
        if (periodic) {
            return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
        }
    }
    return w;
}

}  // namespace

LassoWord lasso_normalize(const LassoWord& w) {
    Word stem = w.stem();
    Word loop = primitive_root(w.loop());
    // stem.x . (y.x)^omega == stem . (x.y)^omega
    while (!stem.empty() && stem.back() == loop.back()) {
        stem.pop_back();
        std::rotate(loop.rbegin(), loop.rbegin() + 1, loop.rend());
    }
    return LassoWord(std::move(stem), std::move(loop));
}

LassoWord parse_lasso(std::string_view text, const Alphabet* alphabet) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.empty() || text.back() != ')' ||
        text.find('(', open + 1) != std::string_view::npos) {
        throw InvalidArgument("lasso must be written stem(loop): '" + std::string(text) + "'");
    }
    Word stem = parse_word(trim(text.substr(0, open)), alphabet);
    Word loop = parse_word(trim(text.substr(open + 1, text.size() - open - 2)), alphabet);
    if (alphabet != nullptr) {
        for (const auto* part : {&stem, &loop}) {
            for (const auto& l : *part) {
                if (!alphabet->contains(l)) {
                    throw AlphabetMismatch("letter '" + l + "' is not in the alphabet");
                }
            }
        }
    }
    return LassoWord(std::move(stem), std::move(loop));
}

std::string to_string(const LassoWord& w) {
    return to_string(w.stem()) + "(" + to_string(w.loop()) + ")";
}

std::vector<LassoWord> enumerate_lassos(const std::vector<Letter>& letters, std::size_t max_size) {
    std::vector<LassoWord> out;
    if (letters.empty()) {
        return out;
    }
    const std::size_t k = letters.size();
    for (std::size_t size = 1; size <= max_size; ++size) {
        for (std::size_t stem_len = 0; stem_len < size; ++stem_len) {
            std::vector<std::size_t> digits(size, 0);
            while (true) {
                Word stem, loop;
                for (std::size_t i = 0; i < size; ++i) {
                    (i < stem_len ? stem : loop).push_back(letters[digits[i]]);
                }
                LassoWord w(std::move(stem), std::move(loop));
                if (w.is_canonical()) {
                    out.push_back(std::move(w));
                }
                // odometer, most significant digit first
                std::size_t pos = size;
                while (pos > 0 && ++digits[pos - 1] == k) {
                    digits[pos - 1] = 0;
                    --pos;
                }
                if (pos == 0) {
                    break;
                }
            }
        }
    }
    return out;
}

Word BlockWord::block(std::size_t i) const {
    if (i == 0) {
        throw InvalidArgument("blocks are numbered from 1");
    }
    return block_(i);
}

BlockWord h_word(const LassoWord& x, const Alphabet& sigma) {
    require_block_alphabet(sigma);
    for (const auto* part : {&x.stem(), &x.loop()}) {
        if (!sigma.contains_all(*part)) {
            throw AlphabetMismatch("h: lasso " + to_string(x) + " is not over the base alphabet");
        }
    }
    return BlockWord(sigma, [x](std::size_t i) {
        Word b = zeros(i);
        b.push_back(x.letter_at(i));
        return b;
    });
}

BlockWord alpha_word(const Alphabet& sigma) {
    require_block_alphabet(sigma);
    return BlockWord(sigma, [](std::size_t i) { return zeros(i); });
}

Word block_prefix(const BlockWord& w, std::size_t n) {
    Word out;
    for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(kMarker);
        const Word b = w.block(i);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

}  // namespace omega
