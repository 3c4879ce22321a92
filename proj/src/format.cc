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

#include "omega/format.hh"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace omega {

namespace {

struct Token {
    std::string text;
    bool quoted = false;
};

struct Line {
    std::size_t number;
    std::string key;
    std::vector<Token> args;
};

std::vector<Token> tokenize(std::string_view s, std::size_t number) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '#') {
            break;
        } else if (c == '"') {
            const auto close = s.find('"', i + 1);
            if (close == std::string_view::npos) {
                throw ParseError(number, "unterminated quoted word");
            }
            out.push_back(Token{std::string(s.substr(i + 1, close - i - 1)), true});
            i = close + 1;
        } else {
            std::size_t j = i;
            while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back(Token{std::string(s.substr(i, j - i)), false});
            i = j;
        }
    }
    return out;
}

/// Splits the text into key lines and reads the kind header.
std::pair<std::string, std::vector<Line>> split(std::string_view text) {
    std::optional<std::string> kind;
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

        std::size_t first = 0;
        while (first < raw.size() && std::isspace(static_cast<unsigned char>(raw[first]))) ++first;
        raw.remove_prefix(first);
        if (raw.starts_with('#')) {
            std::string_view body = raw.substr(1);
            while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
            if (body.starts_with("kind:")) {
                auto toks = tokenize(body.substr(5), number);
                if (toks.size() != 1) throw ParseError(number, "kind header takes one value");
                if (kind) throw ParseError(number, "duplicate kind header");
                kind = toks[0].text;
            }
            continue;
        }
        auto toks = tokenize(raw, number);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;
        if (toks[0].quoted || head.size() < 2 || head.back() != ':') {
            throw ParseError(number, "expected 'key:' at the start of the line");
        }
        Line line{number, head.substr(0, head.size() - 1), {}};
        line.args.assign(toks.begin() + 1, toks.end());
        lines.push_back(std::move(line));
    }
    if (!kind) {
        throw ParseError(1, "missing '# kind:' header");
    }
    return {*kind, std::move(lines)};
}

std::vector<std::string> plain(const Line& line) {
    std::vector<std::string> out;
    for (const auto& t : line.args) {
        if (t.quoted) throw ParseError(line.number, "unexpected quoted word");
        out.push_back(t.text);
    }
    return out;
}

/// States, initial and final lines shared by every kind.
struct Header {
    std::optional<std::vector<std::string>> states;
    std::optional<std::string> initial;
    std::vector<std::string> finals;
    std::size_t finals_line = 0;
    std::size_t initial_line = 0;
};

bool read_header(const Line& line, Header& h) {
    if (line.key == "states") {
        if (h.states) throw ParseError(line.number, "duplicate states line");
        h.states = plain(line);
    } else if (line.key == "initial") {
        auto v = plain(line);
        if (v.size() != 1) throw ParseError(line.number, "initial takes exactly one state");
        if (h.initial) throw ParseError(line.number, "duplicate initial line");
        h.initial = v[0];
        h.initial_line = line.number;
    } else if (line.key == "final") {
        auto v = plain(line);
        h.finals.insert(h.finals.end(), v.begin(), v.end());
        h.finals_line = line.number;
    } else {
        return false;
    }
    return true;
}

template <class Automaton>
void apply_header(Automaton& a, const Header& h, std::size_t last_line) {
    if (!h.states) throw ParseError(last_line, "missing states line");
    for (const auto& s : *h.states) {
        try {
            a.add_state(s, false);
        } catch (const InvalidArgument& e) {
            throw ParseError(last_line, e.what());
        }
    }
    if (!h.initial) throw ParseError(last_line, "missing initial line");
    auto init = a.states.find(*h.initial);
    if (!init) throw ParseError(h.initial_line, "unknown initial state '" + *h.initial + "'");
    a.initial = *init;
    for (const auto& f : h.finals) {
        auto q = a.states.find(f);
        if (!q) throw ParseError(h.finals_line, "unknown final state '" + f + "'");
        a.final[*q] = true;
    }
}

template <class Automaton>
State state_at(const Automaton& a, const std::string& name, std::size_t line) {
    auto q = a.states.find(name);
    if (!q) throw ParseError(line, "unknown state '" + name + "'");
    return *q;
}

Alphabet alphabet_at(const Line& line) {
    try {
        return Alphabet(plain(line));
    } catch (const Error& e) {
        throw ParseError(line.number, e.what());
    }
}

std::size_t last_line(const std::vector<Line>& lines) {
    return lines.empty() ? 1 : lines.back().number;
}

void require_kind(const std::string& kind, const char* expected) {
    if (kind != expected) {
        throw ParseError(1, "expected kind '" + std::string(expected) + "', found '" + kind + "'");
    }
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += items[i];
    }
    return out;
}

template <class Automaton>
std::string header_text(const Automaton& a) {
    std::vector<std::string> finals;
    for (State q = 0; q < a.num_states(); ++q) {
        if (a.is_final(q)) finals.push_back(a.states.name(q));
    }
    std::string out = "states: " + join(a.states.names()) + "\n";
    out += "initial: " + a.states.name(a.initial) + "\n";
    out += finals.empty() ? "final:\n" : "final: " + join(finals) + "\n";
    return out;
}

std::string quoted(const Word& w, const Alphabet& alphabet) {
    const bool multi = std::any_of(alphabet.letters().begin(), alphabet.letters().end(),
                                   [](const Letter& l) { return l.size() > 1; });
    return "\"" + (multi ? join(w) : to_string(w)) + "\"";
}

}  // namespace

BuchiAutomaton parse_buchi(std::string_view text) {
    auto [kind, lines] = split(text);
    require_kind(kind, "buchi");
    std::optional<Alphabet> alphabet;
    Header h;
    std::vector<const Line*> trans;
    for (const auto& line : lines) {
        if (read_header(line, h)) continue;
        if (line.key == "alphabet") {
            alphabet = alphabet_at(line);
        } else if (line.key == "trans") {
            trans.push_back(&line);
        } else {
            throw ParseError(line.number, "unknown key '" + line.key + "'");
        }
    }
    if (!alphabet) throw ParseError(last_line(lines), "missing alphabet line");
    BuchiAutomaton a(*alphabet);
    apply_header(a, h, last_line(lines));
    for (const Line* line : trans) {
        auto v = plain(*line);
        if (v.size() != 3) throw ParseError(line->number, "trans takes: from letter to");
        auto s = a.alphabet.index_of(v[1]);
        if (!s) throw ParseError(line->number, "letter '" + v[1] + "' is not in the alphabet");
        a.add_transition(state_at(a, v[0], line->number), *s, state_at(a, v[2], line->number));
    }
    return a;
}

OneCounterBA parse_counter(std::string_view text) {
    auto [kind, lines] = split(text);
    require_kind(kind, "counter");
    std::optional<Alphabet> alphabet;
    Header h;
    std::vector<const Line*> trans;
    for (const auto& line : lines) {
        if (read_header(line, h)) continue;
        if (line.key == "alphabet") {
            alphabet = alphabet_at(line);
        } else if (line.key == "trans") {
            trans.push_back(&line);
        } else {
            throw ParseError(line.number, "unknown key '" + line.key + "'");
        }
    }
    if (!alphabet) throw ParseError(last_line(lines), "missing alphabet line");
    OneCounterBA m(*alphabet);
    apply_header(m, h, last_line(lines));
    for (const Line* line : trans) {
        auto v = plain(*line);
        if (v.size() != 5) throw ParseError(line->number, "trans takes: from letter flag to delta");
        if (!m.alphabet.contains(v[1])) {
            throw ParseError(line->number, "letter '" + v[1] + "' is not in the alphabet");
        }
        if (v[2] != "0" && v[2] != "1") throw ParseError(line->number, "zero flag must be 0 or 1");
        int delta;
        if (v[4] == "+1") delta = 1;
        else if (v[4] == "0") delta = 0;
        else if (v[4] == "-1") delta = -1;
        else throw ParseError(line->number, "delta must be -1, 0 or +1");
        m.add_transition(state_at(m, v[0], line->number), v[1], v[2] == "1" ? 1 : 0,
                         state_at(m, v[3], line->number), delta);
    }
    return m;
}

TwoTapeBA parse_two_tape(std::string_view text) {
    auto [kind, lines] = split(text);
    require_kind(kind, "2tape");
    std::optional<Alphabet> in, out;
    Header h;
    std::vector<const Line*> trans;
    for (const auto& line : lines) {
        if (read_header(line, h)) continue;
        if (line.key == "alphabet1") {
            in = alphabet_at(line);
        } else if (line.key == "alphabet2") {
            out = alphabet_at(line);
        } else if (line.key == "trans") {
            trans.push_back(&line);
        } else {
            throw ParseError(line.number, "unknown key '" + line.key + "'");
        }
    }
    if (!in) throw ParseError(last_line(lines), "missing alphabet1 line");
    if (!out) throw ParseError(last_line(lines), "missing alphabet2 line");
    TwoTapeBA t(*in, *out);
    apply_header(t, h, last_line(lines));
    for (const Line* line : trans) {
        const auto& a = line->args;
        if (a.size() != 4 || a[0].quoted || !a[1].quoted || !a[2].quoted || a[3].quoted) {
            throw ParseError(line->number, "trans takes: from \"input\" \"output\" to");
        }
        Word u = parse_word(a[1].text, &t.input_alphabet);
        Word v = parse_word(a[2].text, &t.output_alphabet);
        if (!t.input_alphabet.contains_all(u)) {
            throw ParseError(line->number, "input word \"" + a[1].text + "\" is not over alphabet1");
        }
        if (!t.output_alphabet.contains_all(v)) {
            throw ParseError(line->number, "output word \"" + a[2].text + "\" is not over alphabet2");
        }
        t.add_transition(state_at(t, a[0].text, line->number), std::move(u), std::move(v),
                         state_at(t, a[3].text, line->number));
    }
    return t;
}

AnyAutomaton parse_automaton(std::string_view text) {
    const std::string kind = split(text).first;
    if (kind == "buchi") return parse_buchi(text);
    if (kind == "counter") return parse_counter(text);
    if (kind == "2tape") return parse_two_tape(text);
    throw ParseError(1, "unknown kind '" + kind + "'");
}

std::string serialize(const BuchiAutomaton& a) {
    std::string out = "# kind: buchi\n";
    out += "alphabet: " + join(a.alphabet.letters()) + "\n";
    out += header_text(a);
    for (const auto& t : a.transitions) {
        out += "trans: " + a.states.name(t.from) + " " + a.alphabet.letter(t.letter) + " " +
               a.states.name(t.to) + "\n";
    }
    return out;
}

std::string serialize(const OneCounterBA& m) {
    std::string out = "# kind: counter\n";
    out += "alphabet: " + join(m.alphabet.letters()) + "\n";
    out += header_text(m);
    for (const auto& t : m.transitions) {
        const char* delta = t.delta > 0 ? "+1" : t.delta < 0 ? "-1" : "0";
        out += "trans: " + m.states.name(t.from) + " " + m.alphabet.letter(t.letter) + " " +
               std::to_string(t.zero_flag) + " " + m.states.name(t.to) + " " + delta + "\n";
    }
    return out;
}

std::string serialize(const TwoTapeBA& t) {
    std::string out = "# kind: 2tape\n";
    out += "alphabet1: " + join(t.input_alphabet.letters()) + "\n";
    out += "alphabet2: " + join(t.output_alphabet.letters()) + "\n";
    out += header_text(t);
    for (const auto& tr : t.transitions) {
        out += "trans: " + t.states.name(tr.from) + " " + quoted(tr.input, t.input_alphabet) + " " +
               quoted(tr.output, t.output_alphabet) + " " + t.states.name(tr.to) + "\n";
    }
    return out;
}

std::string serialize(const AnyAutomaton& a) {
    return std::visit([](const auto& x) { return serialize(x); }, a);
}

std::string kind_name(const AnyAutomaton& a) {
    switch (a.index()) {
    case 0: return "buchi";
    case 1: return "counter";
    default: return "2tape";
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error("cannot write '" + path + "'");
    }
}

AnyAutomaton load_automaton(const std::string& path) {
    const std::string text = read_file(path);
    try {
        return parse_automaton(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.detail());
    }
}

std::string write_bundle(const std::string& dir, const ReductionBundle& b,
                         const std::string& source_label) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path root(dir);
    write_file((root / "r1.2tape").string(), serialize(b.t_r1));
    write_file((root / "r2.2tape").string(), serialize(b.t_r2));
    write_file((root / "r.2tape").string(), serialize(b.t_r));
    std::string manifest = "# kind: bundle\n";
    manifest += "source: " + source_label + "\n";
    manifest += "alphabet: " + join(b.source.alphabet.letters()) + "\n";
    manifest += "gamma: " + join(b.gamma.letters()) + "\n";
    manifest += "t_r1: r1.2tape\n";
    manifest += "t_r2: r2.2tape\n";
    manifest += "t_r: r.2tape\n";
    write_file((root / "manifest.txt").string(), manifest);
    return manifest;
}

}  // namespace omega
