#include "halfint/form_io.hpp"

#include <fstream>
#include <sstream>

#include "halfint/errors.hpp"

namespace halfint {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw DomainError("complex value must be a [re, im] pair");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json complex_vector_to_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (auto z : v) out.push_back(complex_to_json(z));
  return out;
}

std::vector<Complex> complex_vector_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(complex_from_json(x));
  return out;
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& s) {
  try {
    std::size_t slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long n = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return Rational(n);
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    long n = std::stol(num, &used);
    if (used != num.size()) throw std::invalid_argument(s);
    long d = std::stol(den, &used);
    if (used != den.size() || d == 0) throw std::invalid_argument(s);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw DomainError("malformed rational '" + s + "'");
  }
}

Json form_to_json(const FourierExpansion& f) {
  Json j;
  j["weight_times_two"] = f.weight_times_two;
  j["level"] = f.level;
  j["cusp_width"] = rational_to_string(f.cusp_width);
  j["coefficients"] = complex_vector_to_json(f.coefficients);
  j["fricke_eigenvalue"] = f.fricke_eigenvalue ? complex_to_json(*f.fricke_eigenvalue) : Json(nullptr);
  if (f.fricke_level) j["fricke_level"] = f.fricke_level;
  j["label"] = f.label;
  j["source"] = f.source;
  j["status"] = status_name(f.status);
  return j;
}

FourierExpansion form_from_json(const Json& j) {
  FourierExpansion f;
  try {
    f.weight_times_two = j.at("weight_times_two").get<int>();
    f.level = j.at("level").get<int>();
    f.cusp_width = parse_rational(j.at("cusp_width").get<std::string>());
    f.coefficients = complex_vector_from_json(j.at("coefficients"));
    if (j.contains("fricke_eigenvalue") && !j.at("fricke_eigenvalue").is_null()) {
      f.fricke_eigenvalue = complex_from_json(j.at("fricke_eigenvalue"));
    }
    f.fricke_level = j.value("fricke_level", 0);
    f.label = j.value("label", std::string{});
    f.source = j.value("source", std::string{"ingested"});
    f.status = parse_status(j.value("status", std::string{"unvalidated"}));
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed form file: ") + e.what());
  }
  f.validate();
  return f;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    int line = 1, column = 1;
    std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("JSON parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

FourierExpansion read_form_file(const std::filesystem::path& path) { return form_from_json(read_json_file(path)); }

void write_form_file(const std::filesystem::path& path, const FourierExpansion& f) {
  write_json_file(path, form_to_json(f));
}

}  // namespace halfint
