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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "fqemag/csv.h"

using namespace fqemag;

TEST(Csv, NumberFormatRoundTrips) {
    for (double x : {0.0, -1.5, 0.1, 1e-300, 123456789.125, 5.886170042}) {
        EXPECT_EQ(std::stod(format_number(x)), x);
    }
    EXPECT_EQ(format_number(0.02), "0.02");
    EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
    EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(Csv, RowsAndMetadata) {
    std::ostringstream out;
    write_metadata(out, {{"preset", "harmonic-gaussian"}, {"seed", "7"}});
    write_csv_row(out, {"a", "b", "c"});
    write_csv_row(out, {});
    EXPECT_EQ(out.str(), "# preset: harmonic-gaussian\n# seed: 7\na,b,c\n\n");
    EXPECT_GT(std::string(git_revision()).size(), 0u);
}
