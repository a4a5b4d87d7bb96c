/*
Copyright 2026 the aqm authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef AQM_ERRORS_HPP
#define AQM_ERRORS_HPP

#include <stdexcept>

namespace aqm {

/// Malformed, truncated or otherwise unreadable input.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Input parsed fine but a decoded value violates its range.
class IntegrityError : public ParseError
{
public:
    using ParseError::ParseError;
};

} // namespace aqm

#endif
