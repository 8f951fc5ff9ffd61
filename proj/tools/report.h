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

#ifndef CSFM_TOOLS_REPORT_H_
#define CSFM_TOOLS_REPORT_H_

#include <string>
#include <utility>
#include <vector>

namespace csfm::cli {

enum class OutputFormat { kText, kCsv, kJson };

// Ordered scalar fields plus an optional table, rendered on demand.
class Report {
 public:
  void Add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
  }
  void SetColumns(std::vector<std::string> columns) {
    columns_ = std::move(columns);
  }
  void AddRow(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  // Text: "key: value" lines, then the table space-separated.
  // Csv: the table if there is one (fields become "# key: value" lines),
  // otherwise one header line and one value line.
  // Json: an object of fields plus "rows" as an array of objects.
  std::string Render(OutputFormat format) const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace csfm::cli

#endif  // CSFM_TOOLS_REPORT_H_
