#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cli {

using Json = nlohmann::ordered_json;

struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<std::string> diagnostics;
};

enum class Format { Json, Csv };

// One JSON object per line, or a CSV header plus one row of the outputs.
void emit(const OutputRecord& rec, Format fmt, std::ostream& os);

}  // namespace cli
