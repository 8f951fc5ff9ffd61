// Copyright 2026 The Authors.
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

#include "report.h"

#include <sstream>

#include "json.hpp"

namespace csfm::cli {
namespace {

std::string CsvField(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void CsvLine(std::ostringstream& out, const std::vector<std::string>& items) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out << ",";
    out << CsvField(items[i]);
  }
  out << "\n";
}

}  // namespace

std::string Report::Render(OutputFormat format) const {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::kText: {
      for (const auto& [key, value] : fields_) out << key << ": " << value << "\n";
      if (!columns_.empty()) {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
          out << (i ? " " : "") << columns_[i];
        }
        out << "\n";
        for (const auto& row : rows_) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? " " : "") << row[i];
          }
          out << "\n";
        }
      }
      break;
    }
    case OutputFormat::kCsv: {
      if (columns_.empty()) {
        std::vector<std::string> keys;
        std::vector<std::string> values;
        for (const auto& [key, value] : fields_) {
          keys.push_back(key);
          values.push_back(value);
        }
        CsvLine(out, keys);
        CsvLine(out, values);
      } else {
        for (const auto& [key, value] : fields_) {
          out << "# " << key << ": " << value << "\n";
        }
        CsvLine(out, columns_);
        for (const auto& row : rows_) CsvLine(out, row);
      }
      break;
    }
    case OutputFormat::kJson: {
      nlohmann::ordered_json root = nlohmann::ordered_json::object();
      for (const auto& [key, value] : fields_) root[key] = value;
      if (!columns_.empty()) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : rows_) {
          nlohmann::ordered_json item = nlohmann::ordered_json::object();
          for (std::size_t i = 0; i < columns_.size() && i < row.size(); ++i) {
            item[columns_[i]] = row[i];
          }
          rows.push_back(std::move(item));
        }
        root["rows"] = std::move(rows);
      }
      out << root.dump(2) << "\n";
      break;
    }
  }
  return out.str();
}

}  // namespace csfm::cli
