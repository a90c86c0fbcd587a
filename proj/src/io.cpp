#include "fibfub/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fibfub::cli {

void write_bfile(std::ostream& os, const SequenceTable& table) {
  for (size_t i = 0; i < table.values.size(); ++i) {
    os << table.offset + static_cast<long>(i) << ' ' << table.values[i] << '\n';
  }
}

SequenceTable parse_bfile(std::istream& is, const std::string& name) {
  SequenceTable table;
  table.name = name;
  std::string line;
  bool first = true;
  long expected_index = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    long index = 0;
    std::string value;
    if (!(fields >> index >> value)) {
      throw std::invalid_argument("b-file: malformed line: " + line);
    }
    std::string extra;
    if (fields >> extra) throw std::invalid_argument("b-file: trailing data: " + line);
    if (first) {
      table.offset = index;
      first = false;
    } else if (index != expected_index) {
      throw std::invalid_argument("b-file: indices must be contiguous ascending");
    }
    expected_index = index + 1;
    try {
      table.values.emplace_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("b-file: bad integer: " + value);
    }
  }
  if (table.values.empty()) throw std::invalid_argument("b-file: no data lines");
  return table;
}

void write_csv(std::ostream& os, const SequenceTable& table) {
  os << "n,value\n";
  for (size_t i = 0; i < table.values.size(); ++i) {
    os << table.offset + static_cast<long>(i) << ',' << table.values[i] << '\n';
  }
}

void write_json(std::ostream& os, const SequenceTable& table) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : table.values) values.push_back(v.str());
  os << values.dump() << '\n';
}

}  // namespace fibfub::cli
