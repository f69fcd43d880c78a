#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "halfint/modular_forms.hpp"

namespace halfint {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json complex_vector_to_json(const std::vector<Complex>& v);
std::vector<Complex> complex_vector_from_json(const Json& j);

std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& s);

Json form_to_json(const FourierExpansion& f);
FourierExpansion form_from_json(const Json& j);

// Parses text; syntax errors carry line and column.
Json parse_json_text(const std::string& text);
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

FourierExpansion read_form_file(const std::filesystem::path& path);
void write_form_file(const std::filesystem::path& path, const FourierExpansion& f);

}  // namespace halfint
