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

// omegarel: command-line front end.
//
//   omegarel validate FILE...
//   omegarel build-r1 SOURCE [-o OUT]
//   omegarel build-r2 (--sigma "0 a b c" | SOURCE) [-o OUT]
//   omegarel build-r SOURCE -o DIR
//   omegarel member AUTOMATON LASSO
//   omegarel member-pair AUTOMATON LASSO1 LASSO2
//   omegarel empty AUTOMATON
//   omegarel suite [--seed N] [--depth N] [--timing] [-o REPORT]
//   omegarel dag AUTOMATON (--x LASSO | --tape1 W --tape2 W) [--depth N]
//
// SOURCE and AUTOMATON are file paths or built-in names (counter.a0,
// counter.m_ex, counter.empty, 2tape.identity, 2tape.silent, buchi.inf_a).
// Exit status: 0 pass or true, 1 failure or false, 2 usage or parse error,
// 3 budget exhausted.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "omega/checks.hh"
#include "omega/format.hh"

namespace {

using namespace omega;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Options {
    std::size_t depth = 12;
    std::optional<std::uint64_t> counter_cap;
    std::size_t node_budget = 1000000;
    std::string output;
    std::uint64_t seed = 42;
    bool timing = false;
};

const std::map<std::string, AnyAutomaton>& builtins() {
    static const std::map<std::string, AnyAutomaton> table = [] {
        std::map<std::string, AnyAutomaton> t;
        for (const auto& [name, m] : checks::shipped_counters()) t.emplace(name, m);
        t.emplace("2tape.identity", checks::sample_identity());
        t.emplace("2tape.silent", checks::sample_silent());
        t.emplace("buchi.inf_a", checks::sample_inf_a());
        return t;
    }();
    return table;
}

AnyAutomaton load(const std::string& source) {
    const auto it = builtins().find(source);
    if (it != builtins().end()) return it->second;
    return load_automaton(source);
}

OneCounterBA load_counter(const std::string& source) {
    AnyAutomaton a = load(source);
    auto* m = std::get_if<OneCounterBA>(&a);
    if (m == nullptr) throw InvalidArgument(source + ": expected a counter automaton, got " + kind_name(a));
    const auto errors = validation_errors(*m);
    if (!errors.empty()) throw InvalidArgument(source + ": " + errors.front());
    return std::move(*m);
}

CounterOptions counter_options(const Options& o) {
    CounterOptions c;
    c.counter_cap = o.counter_cap;
    c.node_budget = o.node_budget;
    return c;
}

/// Writes to --output when given, stdout otherwise.
void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) std::cout << text;
    else write_file(o.output, text);
}

const char* verdict(bool b) { return b ? "true" : "false"; }

std::size_t transition_count(const AnyAutomaton& a) {
    return std::visit([](const auto& x) { return x.transitions.size(); }, a);
}

std::size_t state_count(const AnyAutomaton& a) {
    return std::visit([](const auto& x) { return x.num_states(); }, a);
}

int cmd_validate(const std::vector<std::string>& files) {
    int status = kPass;
    for (const auto& f : files) {
        const AnyAutomaton a = load(f);
        std::vector<std::string> errors;
        if (const auto* m = std::get_if<OneCounterBA>(&a)) errors = validation_errors(*m);
        if (const auto* t = std::get_if<TwoTapeBA>(&a)) {
            try {
                t->check();
            } catch (const Error& e) {
                errors.push_back(e.what());
            }
        }
        std::cout << "file " << f << " kind=" << kind_name(a) << " states=" << state_count(a)
                  << " transitions=" << transition_count(a) << " valid=" << verdict(errors.empty());
        if (!errors.empty()) std::cout << " error=\"" << errors.front() << "\"";
        std::cout << "\n";
        if (!errors.empty()) status = kFail;
    }
    return status;
}

int cmd_member(const Options& o, const std::string& source, const std::string& word) {
    const AnyAutomaton a = load(source);
    bool result = false;
    if (const auto* b = std::get_if<BuchiAutomaton>(&a)) {
        result = accepts_lasso(*b, parse_lasso(word, &b->alphabet));
    } else if (const auto* m = std::get_if<OneCounterBA>(&a)) {
        if (!validate(*m)) throw InvalidArgument(source + ": " + validation_errors(*m).front());
        const LassoWord w = parse_lasso(word, &m->alphabet);
        result = accepts_lasso(*m, w, counter_options(o));
    } else {
        throw InvalidArgument("member takes a buchi or counter automaton; use member-pair for 2tape");
    }
    std::cout << "member kind=" << kind_name(a) << " word=" << word << " verdict=" << verdict(result) << "\n";
    return result ? kPass : kFail;
}

int cmd_member_pair(const Options& o, const std::string& source, const std::string& first,
                    const std::string& second) {
    const AnyAutomaton a = load(source);
    const auto* t = std::get_if<TwoTapeBA>(&a);
    if (t == nullptr) throw InvalidArgument("member-pair takes a 2tape automaton");
    const LassoPair p{parse_lasso(first, &t->input_alphabet), parse_lasso(second, &t->output_alphabet)};
    const bool result = accepts_lasso_pair(*t, p, o.node_budget);
    std::cout << "member-pair pair=" << to_string(p) << " verdict=" << verdict(result) << "\n";
    return result ? kPass : kFail;
}

int cmd_empty(const Options& o, const std::string& source) {
    const AnyAutomaton a = load(source);
    std::optional<std::string> witness;
    if (const auto* b = std::get_if<BuchiAutomaton>(&a)) {
        if (const auto w = find_accepted_lasso(*b, o.node_budget)) witness = to_string(*w);
    } else if (const auto* m = std::get_if<OneCounterBA>(&a)) {
        if (const auto run = find_accepting_run(*m, counter_options(o))) witness = to_string(run->word(*m));
    } else {
        if (const auto p = find_infinite_pair(std::get<TwoTapeBA>(a), o.node_budget)) witness = to_string(*p);
    }
    std::cout << "empty kind=" << kind_name(a) << " verdict=" << verdict(!witness);
    if (witness) std::cout << " witness=" << *witness;
    std::cout << "\n";
    return witness ? kFail : kPass;
}

int cmd_suite(const Options& o, std::optional<std::size_t> depth) {
    checks::SuiteOptions s;
    s.seed = o.seed;
    if (depth) s.depth = *depth;
    s.counter_cap = o.counter_cap;
    s.node_budget = o.node_budget;
    const auto results = checks::run_suite(s);
    emit(o, checks::render_report(results, o.timing));
    const bool failed = std::any_of(results.begin(), results.end(),
                                    [](const auto& r) { return !r.passed() && !r.budget_exhausted; });
    const bool budget = std::any_of(results.begin(), results.end(), [](const auto& r) { return r.budget_exhausted; });
    return failed ? kFail : budget ? kBudget : kPass;
}

int cmd_dag(const Options& o, const std::string& source, const std::string& x, const std::string& tape1,
            const std::string& tape2) {
    const AnyAutomaton a = load(source);
    std::ostringstream out;
    if (const auto* t = std::get_if<TwoTapeBA>(&a)) {
        const auto n = normalize(*t);
        const RunDag dag = run_dag(n, parse_word(tape1, &t->input_alphabet), parse_word(tape2, &t->output_alphabet),
                                   o.node_budget);
        std::size_t paths = 0, best = 0;
        dag.for_each_maximal_path(
            [&](const std::vector<std::size_t>& p) {
                ++paths;
                best = std::max(best, p.empty() ? 0 : dag.nodes[dag.edges[p.back()].to].max_final_visits);
            },
            o.node_budget);
        out << "dag nodes=" << dag.nodes.size() << " edges=" << dag.edges.size() << " maximal_paths=" << paths
            << " max_final_visits=" << best << "\n";
        emit(o, out.str());
        return kPass;
    }
    const OneCounterBA m = load_counter(source);
    if (x.empty()) throw InvalidArgument("dag on a counter automaton needs --x");
    const LassoWord w = parse_lasso(x, &m.alphabet);
    const TwoTapeBA r1 = build_r1(m);
    const auto n = normalize(r1);
    const auto [g1, g2] = g_pair(w, m.alphabet);
    const RunDag dag = prefix_run_dag(n, g1, g2, o.depth, o.node_budget);
    std::size_t paths = 0, complete = 0, bad = 0, best = 0;
    std::string first_violation;
    dag.for_each_maximal_path(
        [&](const std::vector<std::size_t>& p) {
            ++paths;
            const auto report = check_r1_path(m, &w, r1, n, dag, p);
            if (report.complete_blocks == o.depth) ++complete;
            if (!report.violations.empty()) {
                if (bad++ == 0) first_violation = report.violations.front();
            }
            best = std::max(best, final_visits(n, dag, p));
        },
        o.node_budget);
    out << "dag x=" << to_string(w) << " depth=" << o.depth << " nodes=" << dag.nodes.size()
        << " edges=" << dag.edges.size() << " maximal_paths=" << paths << " complete_paths=" << complete
        << " max_final_visits=" << best << " violations=" << bad;
    if (bad) out << " detail=\"" << first_violation << "\"";
    out << "\n";
    emit(o, out.str());
    return bad ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counter, Buchi and 2-tape automata, and the R1/R2 construction"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--depth", o.depth, "Block depth for dag")->capture_default_str();
    app.add_option("--counter-cap", o.counter_cap, "Counter cap (default |K|^2 + |K| + 2)");
    app.add_option("--node-budget", o.node_budget, "Search node budget")->capture_default_str();
    app.add_option("-o,--output", o.output, "Output path");
    app.add_option("--seed", o.seed, "Suite seed")->capture_default_str();

    std::vector<std::string> files;
    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate automaton files");
    validate_cmd->add_option("files", files)->required();

    std::string source, word, word2, sigma;
    auto* r1_cmd = app.add_subcommand("build-r1", "Build R1 from a counter automaton");
    r1_cmd->add_option("source", source)->required();
    auto* r2_cmd = app.add_subcommand("build-r2", "Build R2 over an alphabet");
    r2_cmd->add_option("source", source);
    r2_cmd->add_option("--sigma", sigma, "Letters of Sigma, space separated");
    auto* r_cmd = app.add_subcommand("build-r", "Write the R1, R2, R bundle into a directory");
    r_cmd->add_option("source", source)->required();
    auto* member_cmd = app.add_subcommand("member", "Lasso membership");
    member_cmd->add_option("automaton", source)->required();
    member_cmd->add_option("lasso", word)->required();
    auto* pair_cmd = app.add_subcommand("member-pair", "Lasso pair membership");
    pair_cmd->add_option("automaton", source)->required();
    pair_cmd->add_option("lasso1", word)->required();
    pair_cmd->add_option("lasso2", word2)->required();
    auto* empty_cmd = app.add_subcommand("empty", "Emptiness with a witness");
    empty_cmd->add_option("automaton", source)->required();
    std::optional<std::size_t> suite_depth;
    auto* suite_cmd = app.add_subcommand("suite", "Run every property check");
    suite_cmd->add_option("--depth", suite_depth, "Deepest block prefix (default 20)");
    suite_cmd->add_option("--seed", o.seed, "Corpus seed");
    suite_cmd->add_flag("--timing", o.timing, "Add per-check seconds");
    suite_cmd->add_option("-o,--output", o.output, "Report path");
    std::string x, tape1, tape2;
    auto* dag_cmd = app.add_subcommand("dag", "Run DAG summary");
    dag_cmd->add_option("automaton", source)->required();
    dag_cmd->add_option("--x", x, "Input lasso for a counter automaton");
    dag_cmd->add_option("--tape1", tape1, "Tape 1 word for a 2tape automaton");
    dag_cmd->add_option("--tape2", tape2, "Tape 2 word for a 2tape automaton");
    for (auto* c : {r1_cmd, r2_cmd, r_cmd, dag_cmd}) c->add_option("-o,--output", o.output, "Output path");
    dag_cmd->add_option("--depth", o.depth, "Block depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*validate_cmd) return cmd_validate(files);
        if (*r1_cmd) {
            emit(o, serialize(build_r1(load_counter(source))));
            return kPass;
        }
        if (*r2_cmd) {
            Alphabet s;
            if (!sigma.empty()) {
                std::istringstream in(sigma);
                std::vector<Letter> letters;
                for (Letter l; in >> l;) letters.push_back(l);
                s = Alphabet(letters);
            } else if (!source.empty()) {
                s = std::visit(
                    [](const auto& a) -> Alphabet {
                        if constexpr (std::is_same_v<std::decay_t<decltype(a)>, TwoTapeBA>) return a.input_alphabet;
                        else return a.alphabet;
                    },
                    load(source));
            } else {
                throw InvalidArgument("build-r2 needs --sigma or a source automaton");
            }
            emit(o, serialize(build_r2(s)));
            return kPass;
        }
        if (*r_cmd) {
            if (o.output.empty()) throw InvalidArgument("build-r needs -o DIR");
            std::cout << write_bundle(o.output, build_r(load_counter(source)), source);
            return kPass;
        }
        if (*member_cmd) return cmd_member(o, source, word);
        if (*pair_cmd) return cmd_member_pair(o, source, word, word2);
        if (*empty_cmd) return cmd_empty(o, source);
        if (*suite_cmd) return cmd_suite(o, suite_depth);
        if (*dag_cmd) return cmd_dag(o, source, x, tape1, tape2);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
