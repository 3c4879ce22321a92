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

/* format.hh -- the line-oriented automaton text format.
 *
 *     # kind: counter
 *     alphabet: 0 a b c
 *     states: q0 qf
 *     initial: q0
 *     final: qf
 *     trans: q0 a 0 q0 +1
 *
 * Kinds are buchi, counter and 2tape. A 2tape file declares alphabet1 and
 * alphabet2 and writes transition labels as quoted words, "" being the
 * empty word. A '#' starting a token begins a comment; the kind header is
 * required. Errors are ParseError carrying the offending line.
 */

#ifndef OMEGA_FORMAT_HH_
#define OMEGA_FORMAT_HH_

#include <string>
#include <string_view>
#include <variant>

#include "omega/buchi.hh"
#include "omega/counter.hh"
#include "omega/rational.hh"
#include "omega/reduction.hh"

namespace omega {

using AnyAutomaton = std::variant<BuchiAutomaton, OneCounterBA, TwoTapeBA>;

AnyAutomaton parse_automaton(std::string_view text);
BuchiAutomaton parse_buchi(std::string_view text);
OneCounterBA parse_counter(std::string_view text);
TwoTapeBA parse_two_tape(std::string_view text);

std::string serialize(const BuchiAutomaton& a);
std::string serialize(const OneCounterBA& m);
std::string serialize(const TwoTapeBA& t);
std::string serialize(const AnyAutomaton& a);

/// "buchi", "counter" or "2tape".
std::string kind_name(const AnyAutomaton& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
AnyAutomaton load_automaton(const std::string& path);

/// Writes r1.2tape, r2.2tape, r.2tape and manifest.txt into `dir`, creating
/// it if needed. Returns the manifest text.
std::string write_bundle(const std::string& dir, const ReductionBundle& b,
                         const std::string& source_label);

}  // namespace omega

#endif  // OMEGA_FORMAT_HH_
