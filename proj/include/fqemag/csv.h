// Copyright 2026 The fqemag Authors
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

#ifndef FQEMAG_CSV_H
#define FQEMAG_CSV_H

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fqemag {

/// Shortest round-trip text for a double; "nan"/"inf" for non-finite values.
std::string format_number(double x);

void write_csv_row(std::ostream &out, const std::vector<std::string> &cells);

/// Writes "# key: value" lines.
void write_metadata(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &entries);

/// Source revision captured at configure time.
const char *git_revision();

}  // namespace fqemag

#endif
