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

#include "fqemag/csv.h"

#include <charconv>
#include <cmath>

#ifndef FQEMAG_GIT_REVISION
#define FQEMAG_GIT_REVISION "unknown"
#endif

namespace fqemag {

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void write_csv_row(std::ostream &out, const std::vector<std::string> &cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out << ',';
        }
        out << cells[i];
    }
    out << '\n';
}

void write_metadata(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &entries) {
    for (const auto &[k, v] : entries) {
        out << "# " << k << ": " << v << '\n';
    }
}

const char *git_revision() { return FQEMAG_GIT_REVISION; }

}  // namespace fqemag
