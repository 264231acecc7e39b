// Copyright 2026 The qclone Authors
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

#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include "qclone/protocol/states.hpp"

namespace qclone::cli {

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

nlohmann::json rounded(const nlohmann::json& j) {
  if (j.is_number_float()) return round_significant(j.get<double>());
  if (j.is_array() || j.is_object()) {
    nlohmann::json out = j;
    for (auto& item : out) item = rounded(item);
    return out;
  }
  return j;
}

std::string dump_report(const nlohmann::json& j) { return rounded(j).dump(2) + "\n"; }

void write_atomic(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error(ErrorCode::kInvalidArgument, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error(ErrorCode::kInvalidArgument, "cannot move output into " + path + ": " + ec.message());
  }
}

InputState parse_input_state(const std::optional<std::string>& text, std::uint64_t seed) {
  if (!text) {
    std::mt19937_64 rng(seed);
    return {protocol::haar_random_qubit(rng), "haar:" + std::to_string(seed)};
  }
  if (text->find(',') == std::string::npos) return {protocol::named_qubit(*text), *text};

  std::vector<double> parts;
  std::stringstream ss(*text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !std::isfinite(value)) {
      throw Error(ErrorCode::kInvalidArgument, "bad amplitude component '" + item + "'");
    }
    parts.push_back(value);
  }
  if (parts.size() != 4) {
    throw Error(ErrorCode::kInvalidArgument, "amplitude input needs re0,im0,re1,im1");
  }
  Vector v(2);
  v << Complex(parts[0], parts[1]), Complex(parts[2], parts[3]);
  return {StateVector::normalized(v, RegisterLayout({Role::data()})), "amplitudes"};
}

nlohmann::json amplitudes_json(const StateVector& s) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back({s[i].real(), s[i].imag()});
  return out;
}

}  // namespace qclone::cli
