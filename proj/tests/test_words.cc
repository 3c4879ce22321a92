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

#include <doctest.h>

#include "omega/checks.hh"
#include "omega/error.hh"
#include "omega/words.hh"

using namespace omega;

TEST_CASE("lasso letters are read from stem then loop") {
    const LassoWord w = parse_lasso("ab(c)");
    CHECK(lasso_letter_at(w, 1) == "a");
    CHECK(lasso_letter_at(w, 3) == "c");
    CHECK(lasso_letter_at(w, 5) == "c");
    CHECK(lasso_letter_at(parse_lasso("(ab)"), 2) == "b");
    CHECK_THROWS_AS(lasso_letter_at(w, 0), InvalidArgument);
}

TEST_CASE("normalization picks the primitive loop and the shortest stem") {
    CHECK(lasso_normalize(parse_lasso("a(bb)")) == parse_lasso("a(b)"));
    CHECK(lasso_normalize(parse_lasso("a(ba)")) == parse_lasso("(ab)"));
    CHECK(lasso_normalize(parse_lasso("abab(ab)")) == parse_lasso("(ab)"));
    CHECK(lasso_normalize(parse_lasso("ab(ba)")) == parse_lasso("ab(ba)"));
    CHECK(parse_lasso("(ab)").is_canonical());
    CHECK_FALSE(parse_lasso("(abab)").is_canonical());
}

TEST_CASE("lasso syntax") {
    CHECK(to_string(parse_lasso("0 a (b c)")) == "0a(bc)");
    CHECK_THROWS_AS(parse_lasso("ab"), InvalidArgument);
    CHECK_THROWS_AS(parse_lasso("a()"), Error);
    const Alphabet ab{"a", "b"};
    CHECK_THROWS_AS(parse_lasso("(c)", &ab), AlphabetMismatch);
    CHECK_THROWS_AS(LassoWord(Word{"a"}, Word{}), InvalidArgument);
}

TEST_CASE("enumeration yields distinct canonical lassos") {
    const auto all = enumerate_lassos({"a", "b"}, 3);
    for (const auto& w : all) CHECK(w.is_canonical());
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] != all[i + 1]);
    CHECK(enumerate_lassos({"a"}, 5).size() == 1);
}

TEST_CASE("coding and alpha") {
    const Alphabet sigma = sample_sigma();
    const BlockWord hx = h_word(parse_lasso("(ab)"), sigma);
    CHECK(to_string(hx.block(1)) == "0a");
    CHECK(to_string(hx.block(2)) == "00b");
    CHECK(to_string(hx.block(3)) == "000a");
    CHECK(to_string(block_prefix(hx, 2)) == "A0aA00b");
    CHECK(to_string(h_word(parse_lasso("(0)"), sigma).block(4)) == "00000");
    CHECK(to_string(block_prefix(alpha_word(sigma), 3)) == "A0A00A000");
    CHECK(block_prefix(alpha_word(sigma), 0).empty());
    CHECK(hx.alphabet().contains(kMarker));
    CHECK_THROWS_AS(h_word(parse_lasso("(a)"), Alphabet{"a"}), InvalidArgument);
}

TEST_CASE("words properties") {
    CHECK(checks::words_examples().passed());
    CHECK(checks::words_lasso_normalize().passed());
    CHECK(checks::words_letter_at(1).passed());
    CHECK(checks::words_not_block_word().passed());
}
