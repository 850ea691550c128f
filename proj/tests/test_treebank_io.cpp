#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "deplen/error.hpp"
#include "deplen/null_models.hpp"
#include "deplen/random.hpp"
#include "deplen/treebank_io.hpp"
#include "fixtures.hpp"

using namespace deplen;
using namespace deplen::io;

namespace {

std::string row(int id, int head, const std::string& upos = "X") {
  return std::to_string(id) + "\tw\tw\t" + upos + "\t_\t_\t" + std::to_string(head) + "\tdep\t_\t_\n";
}

std::vector<RawSentence> parse(const std::string& text) {
  std::istringstream in(text);
  return read_conllu(in);
}

RawSentence raw(std::vector<std::pair<int, int>> tokens) {
  RawSentence s;
  for (auto [p, h] : tokens) s.tokens.push_back({p, h, "X"});
  return s;
}

}  // namespace

TEST_CASE("smallest valid sentence") {
  const auto s = parse(row(1, 2) + row(2, 0));
  REQUIRE(s.size() == 1);
  REQUIRE(s[0].tokens.size() == 2);
  CHECK(s[0].tokens[0] == Token{1, 2, "X"});
  CHECK(s[0].tokens[1] == Token{2, 0, "X"});
  CHECK(s[0].id == "1");
}

TEST_CASE("range lines are skipped") {
  const auto s = parse("# sent_id = a\n" + row(1, 2) + row(2, 0) + "3-4\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n" + row(3, 2) +
                       row(4, 3) + row(5, 2) + "\n");
  REQUIRE(s.size() == 1);
  CHECK(s[0].tokens.size() == 5);
  CHECK(s[0].id == "a");
}

TEST_CASE("empty nodes are skipped") {
  const auto s = parse(row(1, 0) + "1.1\te\t_\t_\t_\t_\t_\t_\t0:root\t_\n" + row(2, 1));
  REQUIRE(s.size() == 1);
  CHECK(s[0].tokens.size() == 2);
}

TEST_CASE("malformed lines carry their line number") {
  const std::string nine = "2\tw\tw\tX\t_\t_\t0\tdep\t_\n";
  try {
    parse("# c\n" + row(1, 2) + nine);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("x\tw\tw\tX\t_\t_\t0\tdep\t_\t_\n"), ParseError);
  CHECK_THROWS_AS(parse("1\tw\tw\tX\t_\t_\t_\tdep\t_\t_\n"), ParseError);
}

TEST_CASE("empty input is an empty sequence") {
  CHECK(parse("").empty());
  CHECK(parse("\n\n# only a comment\n\n").empty());
}

TEST_CASE("to_dep_tree examples") {
  const auto star = to_dep_tree(raw({{1, 2}, {2, 0}, {3, 2}}));
  REQUIRE(std::holds_alternative<DepTree>(star));
  const auto& t = std::get<DepTree>(star);
  CHECK(t.size() == 3);
  CHECK(std::vector<Edge>(t.edges().begin(), t.edges().end()) == std::vector<Edge>{{1, 2}, {2, 3}});

  const auto two_cycle = to_dep_tree(raw({{1, 2}, {2, 1}}));
  REQUIRE(std::holds_alternative<Rejection>(two_cycle));
  const auto reason = std::get<Rejection>(two_cycle).reason;
  CHECK((reason == RejectReason::no_root || reason == RejectReason::cycle));

  const auto roots = to_dep_tree(raw({{1, 0}, {2, 0}}));
  REQUIRE(std::holds_alternative<Rejection>(roots));
  CHECK(std::get<Rejection>(roots).reason == RejectReason::multiple_roots);

  const auto cyc = to_dep_tree(raw({{1, 0}, {2, 3}, {3, 2}}));
  REQUIRE(std::holds_alternative<Rejection>(cyc));
  CHECK(std::get<Rejection>(cyc).reason == RejectReason::cycle);

  const auto one = to_dep_tree(raw({{1, 0}}));
  REQUIRE(std::holds_alternative<Rejection>(one));
  CHECK(std::get<Rejection>(one).reason == RejectReason::too_short);

  CHECK_THROWS_AS(to_dep_tree(raw({{1, 0}, {2, 3}})), StructuralError);
}

TEST_CASE("punctuation drop reattaches to the nearest kept ancestor") {
  RawSentence s;
  s.tokens = {{1, 2, "X"}, {2, 0, "X"}, {3, 4, "PUNCT"}, {4, 2, "X"}, {5, 3, "X"}, {6, 2, "PUNCT"}};
  const RawSentence d = drop_punctuation(s);
  REQUIRE(d.tokens.size() == 4);
  // positions 1 2 4 5 become 1 2 3 4; token 5's head 3 is punctuation, so it climbs to 4 (now 3)
  CHECK(d.tokens[0] == Token{1, 2, "X"});
  CHECK(d.tokens[1] == Token{2, 0, "X"});
  CHECK(d.tokens[2] == Token{3, 2, "X"});
  CHECK(d.tokens[3] == Token{4, 3, "X"});
}

TEST_CASE("ingest rejects n_min below 2 and unreadable files") {
  std::istringstream in("");
  CHECK_THROWS_AS(ingest(in, {1, PunctMode::keep}), ValidationError);
  CHECK_THROWS_AS(ingest_file("/nonexistent/x.conllu", {}), IoError);
}

TEST_CASE("write_conllu round trip") {
  Rng rng(4);
  std::ostringstream out;
  std::vector<DepTree> trees;
  for (int i = 0; i < 50; ++i) {
    trees.push_back(nullmodel::random_arrangement(nullmodel::random_tree(2 + i % 9, rng), rng));
    io::write_conllu(out, trees.back(), 1 + i % trees.back().size(), "t" + std::to_string(i));
  }
  std::istringstream in(out.str());
  const Corpus c = ingest(in, {2, PunctMode::keep});
  CHECK(c.trees == trees);
  CHECK(c.ids.front() == "t0");
  CHECK(c.report.sentences_kept == 50);
}

TEST_CASE("fixture tallies") {
  auto paths = fixtures::list(DEPLEN_TEST_DATA "/ingest");
  paths.push_back(DEPLEN_SAMPLE_DATA "/sample.conllu");
  CHECK(paths.size() >= 11);
  for (const auto& p : paths) {
    CAPTURE(p.string());
    for (const auto& problem : fixtures::check(p)) FAIL_CHECK(problem);
  }
}
