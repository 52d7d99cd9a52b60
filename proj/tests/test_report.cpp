#include <doctest.h>

#include "chartab/error.hpp"
#include "chartab/report.hpp"

using namespace chartab;

TEST_CASE("formats") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("text") == Format::Text);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
}

TEST_CASE("CSV quoting and text alignment") {
  TextTable t;
  t.id = "x";
  t.row_names = {"r1", "r,2"};
  t.column_names = {"a", "b\"c"};
  t.cells = {{"1", "2"}, {"q^2 - q", "x\ny"}};
  CHECK(render_csv(t) == ",a,\"b\"\"c\"\nr1,1,2\n\"r,2\",q^2 - q,\"x\ny\"\n");
  TextTable u;
  u.column_names = {"name", "v"};
  u.cells = {{"long-name", "1"}, {"s", "22"}};
  const std::string text = render_text(u);
  CHECK(text.find("long-name  1") != std::string::npos);
  CHECK(text.find("s          22") != std::string::npos);
  const auto j = t.to_json();
  CHECK(j["rows"][1]["name"] == "r,2");
  CHECK(j["rows"][1]["values"][0] == "q^2 - q");
}

TEST_CASE("suite status") {
  SuiteReport rep;
  rep.suite = "demo";
  CHECK(!rep.passed());
  rep.checks.push_back({"a", "1", "1", true});
  CHECK(rep.passed());
  rep.checks.push_back({"b", "1", "2", false});
  CHECK(!rep.passed());
  CHECK(rep.to_json()["status"] == "fail");
  CHECK(rep.to_table().cells[1][3] == "FAIL");
}

TEST_CASE("every suite passes") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const SuiteReport rep = run_suite(name);
    for (const auto& c : rep.checks) {
      CAPTURE(c.id);
      CAPTURE(c.computed);
      CHECK(c.pass);
    }
    CHECK(rep.passed());
  }
  const SuiteReport with_q = run_suite("e6-tables", 7);
  CHECK(with_q.passed());
  CHECK_THROWS_AS(run_suite("nope"), DomainError);
}

TEST_CASE("emitted tables") {
  for (const auto& id : emit_ids()) {
    CAPTURE(id);
    const TextTable t = emit_table(id);
    CHECK(t.id == id);
    CHECK(!t.cells.empty());
  }
  const TextTable t4 = emit_table("table4");
  CHECK(render_csv(t4).find("f1,q^2,-q^2,q^3,-q^3,0\nf2,0,0,q^4,-q^4,0\n") != std::string::npos);
  bool noted = false;
  for (const auto& n : t4.notes) noted = noted || n == kLabel221Note;
  CHECK(noted);
  CHECK(emit_table("table1").cells.size() == 6);
  CHECK(emit_table("table3").cells.size() == 9);
  CHECK(emit_table("prop5.3").cells.size() == 2);
  CHECK_THROWS_AS(emit_table("table9"), DomainError);
}
