#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include <unistd.h>

#include "deplen/error.hpp"
#include "deplen/output.hpp"

using namespace deplen;
using namespace deplen::output;

namespace {

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("format_number round-trips with 17 significant digits") {
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1e-20) == "9.9999999999999995e-21");
  CHECK(format_number(1234567.0) == "1234567");
  CHECK(format_number(std::nan("")) == "nan");
  for (double x : {1.0 / 3, 2.0 / 3, 5.0 / 6, 1e300, 123456.789, -0.125}) {
    CHECK(std::stod(format_number(x)) == x);
  }
}

TEST_CASE("numbers ignore the global locale") {
  const std::locale saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  const Table t{{"a", "b"}, {{std::int64_t{1234567}, 0.5}}};
  const std::string csv = t.to_csv();
  std::locale::global(saved);
  CHECK(csv == "a,b\n1234567,0.5\n");
}

TEST_CASE("csv and json tables") {
  const Table t{{"n", "x", "label"}, {{std::int64_t{2}, 1.5, std::string("a")}, {std::int64_t{3}, 0.25, std::string()}}};
  CHECK(t.to_csv() == "n,x,label\n2,1.5,a\n3,0.25,\n");
  const auto j = t.to_json();
  REQUIRE(j.size() == 2);
  CHECK(j[0]["n"] == 2);
  CHECK(j[1]["x"] == 0.25);
  CHECK(j[0].begin().key() == "n");
  const Table empty{{"only"}, {}};
  CHECK(empty.to_csv() == "only\n");
}

TEST_CASE("writing files") {
  const auto dir = std::filesystem::temp_directory_path() / ("deplen_out_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  const Table t{{"a"}, {{std::int64_t{1}}}};
  const auto nested = (dir / "x" / "y").string();
  const auto csv = write_table(nested, "t", t, Format::csv);
  CHECK(csv == (dir / "x" / "y" / "t.csv").string());
  CHECK(slurp(csv) == "a\n1\n");
  const auto js = write_table(nested, "t", t, Format::json);
  CHECK(slurp(js).find("\"a\": 1") != std::string::npos);

  write_file(dir.string(), "plain", "x");
  CHECK_THROWS_AS(write_file((dir / "plain").string(), "child", "x"), IoError);
  CHECK_THROWS_AS(ensure_directory((dir / "plain" / "sub").string()), IoError);
  std::filesystem::remove_all(dir);
}
