/*
   Copyright 2026 The qsing Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QSING_ERRORS_HPP
#define QSING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsing {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different rings (field or variable count differ).
class RingMismatch : public Error {
   public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// A Groebner or enumeration budget ran out before the computation finished.
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

}  // namespace qsing

#endif  // QSING_ERRORS_HPP
