// Copyright 2026 The qrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QREC_FORMAT_HPP_
#define QREC_FORMAT_HPP_

#include <charconv>
#include <string>
#include <system_error>

namespace qrec {

/// Shortest decimal form that parses back to exactly the same double, so
/// text outputs never lose precision.
inline std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

}  // namespace qrec

#endif  // QREC_FORMAT_HPP_
