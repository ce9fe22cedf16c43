#pragma once

#include <optional>
#include <string>
#include <vector>

namespace etass::json_io {

struct DiffLine {
  int page = 0, q = 0, m = 0, n = 0;
  std::string source, target;
  friend bool operator==(const DiffLine&, const DiffLine&) = default;
};

struct GroupLine {
  int m = 0;
  std::string expr;
  std::optional<std::string> realized;
  friend bool operator==(const GroupLine&, const GroupLine&) = default;
};

struct ComputeResult {
  std::string field;
  std::string profile;
  int weight = 0;
  std::vector<GroupLine> groups;
  std::optional<std::string> ring;
  std::vector<DiffLine> differentials;
  friend bool operator==(const ComputeResult&, const ComputeResult&) = default;
};

/* deterministic: fixed key order, 2-space indent, trailing newline */
std::string emit(const ComputeResult& r);
ComputeResult parse(const std::string& text);

}  // namespace etass::json_io
