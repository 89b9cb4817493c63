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

#include "commitment/table.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace commitment {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const SweepRow& r : rows) {
    out += to_string(r.scheme);
    for (double v : {r.u, r.gamma, r.game.alpha, r.population.beta, r.game.b_H, r.game.b_L,
                     r.game.c_H, r.game.c_L, r.game.epsilon}) {
      out += ',';
      out += format_number(v);
    }
    out += ',';
    out += std::to_string(r.population.pop_size);
    for (double f : r.frequencies) {
      out += ',';
      out += format_number(f);
    }
    out += ',';
    out += format_number(r.to_c);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& field, std::size_t line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) {
    throw TableError("line " + std::to_string(line_no) + ": bad number '" + field + "'");
  }
  return v;
}

}  // namespace

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw TableError("line 1: unexpected header");
  }
  std::vector<SweepRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 20) {
      throw TableError("line " + std::to_string(line_no) + ": expected 20 fields, got " +
                       std::to_string(f.size()));
    }
    SweepRow r;
    const auto scheme = parse_scheme(f[0]);
    if (!scheme) throw TableError("line " + std::to_string(line_no) + ": unknown scheme");
    r.scheme = *scheme;
    r.u = parse_double(f[1], line_no);
    r.gamma = parse_double(f[2], line_no);
    r.game.alpha = parse_double(f[3], line_no);
    r.population.beta = parse_double(f[4], line_no);
    r.game.b_H = parse_double(f[5], line_no);
    r.game.b_L = parse_double(f[6], line_no);
    r.game.c_H = parse_double(f[7], line_no);
    r.game.c_L = parse_double(f[8], line_no);
    r.game.epsilon = parse_double(f[9], line_no);
    r.population.pop_size = static_cast<int>(parse_double(f[10], line_no));
    for (std::size_t s = 0; s < kNumStrategies; ++s) {
      r.frequencies[s] = parse_double(f[11 + s], line_no);
    }
    r.to_c = parse_double(f[19], line_no);
    rows.push_back(r);
  }
  return rows;
}

std::string format_surface_csv(const std::vector<SurfacePoint>& surface) {
  std::string out(kSurfaceHeader);
  out += '\n';
  for (const SurfacePoint& p : surface) {
    bool first = true;
    for (double v : {p.u, p.gamma, p.alpha, p.beta, p.b_H, p.to_c_reward, p.to_c_punishment,
                     p.difference}) {
      if (!first) out += ',';
      first = false;
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw TableError(path.string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw TableError(path.string() + ": cannot open for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw TableError(path.string() + ": write failed");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableError(path.string() + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit_table(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw TableError(path.string() + ": refusing to write an empty table");
  write_text_file(path, format_sweep_csv(rows));
}

}  // namespace commitment
