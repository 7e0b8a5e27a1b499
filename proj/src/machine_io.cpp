#include "tcm/machine_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tcm {

using nlohmann::json;

json machine_to_json(const MealyMachine &m) {
  json delta = json::array();
  for (State q = 0; q < m.num_states(); ++q) {
    json row = json::array();
    for (Letter l = 0; l < m.num_letters(); ++l)
      row.push_back({{"out", m.output(q, l)}, {"next", m.next(q, l)}});
    delta.push_back(std::move(row));
  }
  return {{"states", m.state_names()}, {"letters", m.letter_names()}, {"delta", std::move(delta)}};
}

MealyMachine machine_from_json(const json &j) {
  try {
    if (!j.is_object())
      throw FormatError("machine must be a JSON object");
    auto states = j.at("states").get<std::vector<std::string>>();
    auto letters = j.at("letters").get<std::vector<std::string>>();
    const auto &delta = j.at("delta");
    if (!delta.is_array() || delta.size() != states.size())
      throw FormatError("delta must have one row per state");
    std::vector<Letter> output;
    std::vector<State> transition;
    for (const auto &row : delta) {
      if (!row.is_array() || row.size() != letters.size())
        throw FormatError("each delta row must have one entry per letter");
      for (const auto &cell : row) {
        output.push_back(cell.at("out").get<Letter>());
        transition.push_back(cell.at("next").get<State>());
      }
    }
    return MealyMachine(std::move(states), std::move(letters), std::move(output),
                        std::move(transition));
  } catch (const json::exception &e) {
    throw FormatError(std::string("bad machine JSON: ") + e.what());
  } catch (const InvalidMachine &e) {
    throw FormatError(e.what());
  }
}

std::string serialize_machine(const MealyMachine &m) { return machine_to_json(m).dump(1) + "\n"; }

MealyMachine parse_machine(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw FormatError("machine file is not valid JSON");
  return machine_from_json(j);
}

FiniteMonoid parse_monoid_table(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw FormatError("monoid table is not valid JSON");
  try {
    return FiniteMonoid::from_table(j.get<std::vector<std::vector<Element>>>());
  } catch (const json::exception &e) {
    throw FormatError(std::string("bad monoid table: ") + e.what());
  }
}

std::string serialize_monoid_table(const FiniteMonoid &m) {
  std::string out = "[\n";
  const auto rows = m.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += " " + json(rows[i]).dump();
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FormatError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string &path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw FormatError("cannot write " + path);
  out << contents;
}

std::string machine_fingerprint(const MealyMachine &m) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : serialize_machine(m)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace tcm
