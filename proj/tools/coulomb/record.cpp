#include "record.hpp"

namespace cli {

namespace {

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

void emit(const OutputRecord& rec, Format fmt, std::ostream& os) {
  if (fmt == Format::Json) {
    Json j;
    j["command"] = rec.command;
    j["inputs"] = rec.inputs;
    j["outputs"] = rec.outputs;
    j["diagnostics"] = rec.diagnostics;
    os << j.dump() << '\n';
    return;
  }
  std::string header, row;
  for (auto it = rec.outputs.begin(); it != rec.outputs.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += csv_cell(Json(it.key()));
    row += csv_cell(it.value());
  }
  os << header << '\n' << row << '\n';
}

}  // namespace cli
