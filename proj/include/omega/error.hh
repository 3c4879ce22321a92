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

#ifndef OMEGA_ERROR_HH_
#define OMEGA_ERROR_HH_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: empty loops, bad alphabets, unknown states.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// A search ran out of its node budget. Never a negative verdict.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::size_t budget)
        : Error("node budget of " + std::to_string(budget) + " exceeded"), budget_(budget) {}
    std::size_t budget() const { return budget_; }

private:
    std::size_t budget_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}
    std::size_t line() const { return line_; }
    /// The message without the line prefix.
    const std::string& detail() const { return detail_; }

private:
    std::size_t line_;
    std::string detail_;
};

/// Internal consistency failure (a broken invariant, not bad input).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace omega

#endif  // OMEGA_ERROR_HH_
