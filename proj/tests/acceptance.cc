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

// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
//
//   acceptance PATH_TO_OMEGAREL

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "omega/checks.hh"

namespace {

using namespace omega::checks;

struct Criterion {
    int id;
    std::string title;
    std::vector<CheckResult> parts;
};

bool report(const Criterion& c) {
    bool ok = !c.parts.empty();
    std::size_t cases = 0, failures = 0, skipped = 0;
    std::string detail;
    for (const auto& p : c.parts) {
        ok = ok && p.passed();
        cases += p.cases;
        failures += p.failures;
        skipped += p.skipped;
        if (detail.empty() && !p.passed()) detail = p.name + ": " + (p.detail.empty() ? "failed" : p.detail);
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.title << ": cases=" << cases
              << " failures=" << failures;
    if (skipped) std::cout << " inconclusive=" << skipped;
    if (!detail.empty()) std::cout << " first=\"" << detail << "\"";
    std::cout << std::endl;
    return ok;
}

CheckResult named(std::string name, CheckResult r) {
    r.name = std::move(name);
    return r;
}

/// stdout of `command` and its exit status.
std::pair<std::string, int> capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {"", -1};
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    return {out, pclose(pipe)};
}

CheckResult determinism(const std::string& cli) {
    CheckResult r;
    r.name = "suite --seed 42";
    const std::string command = "'" + cli + "' suite --seed 42";
    const auto first = capture(command);
    const auto second = capture(command);
    ++r.cases;
    if (first.first.empty()) r.fail("no report from " + command);
    else if (first.first != second.first) r.fail("reports differ");
    ++r.cases;
    if (first.second != second.second) r.fail("exit statuses differ");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance PATH_TO_OMEGAREL\n";
        return 2;
    }
    const SuiteOptions opts;
    bool all = true;
    all &= report({1, "counter-model agreement", {named("counter.oracle", counter_oracle(opts))}});
    all &= report({2,
                   "buchi backbone",
                   {named("buchi.emptiness", buchi_emptiness(opts.seed)),
                    named("buchi.product", buchi_product(opts.seed))}});
    all &= report({3,
                   "normalization and union",
                   {named("rational.normalize", rational_normalize(opts)),
                    named("rational.union", rational_union(opts))}});
    all &= report({4, "R2 universality", {named("reduction.r2_universality", reduction_r2_universality(opts))}});
    all &= report({5, "section sweep", {named("reduction.section_sweep", reduction_section_sweep(opts))}});
    all &= report({6, "R1 completeness", {named("reduction.r1_completeness", reduction_r1_completeness(opts))}});
    all &= report({7, "R1 soundness", {named("reduction.r1_soundness", reduction_r1_soundness(opts))}});
    all &= report({8,
                   "coding properties",
                   {named("words.h_injectivity", words_h_injectivity()),
                    named("words.h_continuity", words_h_continuity()),
                    named("words.lasso_normalize", words_lasso_normalize()),
                    named("words.not_block_word", words_not_block_word())}});
    all &= report({9, "determinism", {determinism(argv[1])}});
    return all ? 0 : 1;
}
