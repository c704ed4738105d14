// Copyright 2026 The densecode authors
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

#include "qdc/state_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qdc {

namespace {

using nlohmann::json;

std::vector<Complex> parse_complex_list(const json& data) {
  if (!data.is_array()) throw std::invalid_argument("state file: \"data\" must be an array");
  std::vector<Complex> out;
  out.reserve(data.size());
  for (const json& entry : data) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      throw std::invalid_argument("state file: every data entry must be a [re, im] pair");
    out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

}  // namespace

MultipartiteState parse_state_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dims") || !doc.contains("form") || !doc.contains("data"))
    throw std::invalid_argument("state file: expected keys \"dims\", \"form\", \"data\"");

  std::vector<std::size_t> dims;
  for (const json& d : doc["dims"]) {
    if (!d.is_number_unsigned())
      throw std::invalid_argument("state file: dims must be positive integers");
    dims.push_back(d.get<std::size_t>());
  }
  const DimensionProfile profile(dims);

  const std::string form = doc["form"].get<std::string>();
  const std::vector<Complex> data = parse_complex_list(doc["data"]);

  if (form == "pure") {
    return MultipartiteState::from_amplitudes(data, profile);
  }
  if (form == "mixed") {
    const std::size_t side = profile.total_dim();
    if (data.size() != side * side)
      throw std::invalid_argument(
          "dimension invariant violated: mixed data length must be the squared total dimension");
    MultipartiteState state(ComplexMatrix(side, side, data), profile);
    state.assert_positive();
    return state;
  }
  throw std::invalid_argument("state file: form must be \"pure\" or \"mixed\"");
}

MultipartiteState load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state_json(buffer.str());
}

std::string state_to_json(const MultipartiteState& s) {
  nlohmann::ordered_json doc;
  doc["dims"] = s.profile().dims();
  doc["form"] = "mixed";
  json data = json::array();
  for (const Complex& z : s.density().entries()) data.push_back({z.real(), z.imag()});
  doc["data"] = std::move(data);
  return doc.dump();
}

void save_state_file(const MultipartiteState& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << state_to_json(s) << "\n";
}

}  // namespace qdc
