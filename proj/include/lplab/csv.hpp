#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lplab {

// RFC 4180 quoting for fields that contain a comma, quote or newline.
std::string csv_escape(const std::string& field);

inline void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_escape(fields[i]);
  out << '\n';
}

}  // namespace lplab
