#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "halfint/bundled_forms.hpp"
#include "halfint/errors.hpp"
#include "halfint/form_io.hpp"

using namespace halfint;

TEST_SUITE("form_io") {
  TEST_CASE("form JSON round trip") {
    FourierExpansion f = bundled_form("f13", 40);
    Json j = form_to_json(f);
    FourierExpansion back = form_from_json(j);
    CHECK(back.coefficients == f.coefficients);
    CHECK(back.weight_times_two == 13);
    CHECK(back.status == f.status);
    CHECK(form_to_json(back) == j);
  }

  TEST_CASE("file round trip") {
    auto path = std::filesystem::temp_directory_path() / "halfint_form_io_test.json";
    FourierExpansion g = bundled_form("g6", 30);
    write_form_file(path, g);
    CHECK(form_to_json(read_form_file(path)) == form_to_json(g));
    std::filesystem::remove(path);
  }

  TEST_CASE("malformed JSON reports line and column") {
    try {
      parse_json_text("{\n  \"level\": 4,\n  \"weight_times_two\" 13\n}");
      FAIL("no parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 0);
    }
  }

  TEST_CASE("rationals") {
    CHECK(parse_rational("17/4") == Rational(17, 4));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(rational_to_string(Rational(9, 2)) == "9/2");
    CHECK_THROWS(parse_rational("x/2"));
  }

  TEST_CASE("complex values") {
    Complex z(1.5, -0.25);
    CHECK(complex_from_json(complex_to_json(z)) == z);
  }
}
