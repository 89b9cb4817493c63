// Copyright 2026 The Commitment Incentives Authors
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

#ifndef COMMITMENT_TABLE_HPP_
#define COMMITMENT_TABLE_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "commitment/sweep.hpp"

namespace commitment {

inline constexpr std::string_view kSweepHeader =
    "scheme,u,gamma,alpha,beta,b_H,b_L,c_H,c_L,epsilon,N,"
    "freq_AHC,freq_AHD,freq_ALC,freq_ALD,freq_NHC,freq_NHD,freq_NLC,freq_NLD,to_c";

inline constexpr std::string_view kSurfaceHeader =
    "u,gamma,alpha,beta,b_H,to_c_reward,to_c_punishment,difference";

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest "%.12g" rendering; identical inputs give identical bytes.
std::string format_number(double value);

std::string format_sweep_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_csv(std::string_view text);

std::string format_surface_csv(const std::vector<SurfacePoint>& surface);

// Writes `text` to `path`, creating parent directories. Errors carry the path.
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

// Throws TableError on empty input.
void emit_table(const std::vector<SweepRow>& rows, const std::filesystem::path& path);

}  // namespace commitment

#endif  // COMMITMENT_TABLE_HPP_
