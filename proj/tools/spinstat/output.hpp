#pragma once

#include <string>
#include <vector>

#include "specs.hpp"

namespace spinstat::cli {

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

Json complex_to_json(Complex z);

class CsvTable {
public:
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row);
  std::string str() const;

private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

void write_file(const std::string& path, const std::string& content);

} // namespace spinstat::cli
