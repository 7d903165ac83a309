// Copyright 2026 The Catchall Authors. All Rights Reserved.
//
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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace catchall {

inline constexpr const char* kLibraryVersion = "0.1.0";

/// Shortest decimal text that parses back to exactly `value`; "nan", "inf"
/// and "-inf" for non-finite values.
std::string format_double(double value);

/// Strict parse of a whole field as a double. Throws kParse.
double parse_double(std::string_view text);

/// Reads the named column of a CSV with a one-line header. Throws kParse on
/// a missing column, ragged row or non-numeric field.
std::vector<double> read_csv_column(std::istream& in, std::string_view column);

/// Joins fields with commas and terminates the line.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace catchall
