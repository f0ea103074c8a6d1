#include <doctest.h>

#include "hspec/fixtures.hpp"
#include "hspec/generators.hpp"
#include "hspec/io.hpp"
#include "support.hpp"

using namespace hspec;

namespace {

std::string parse_error(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("no error");
  return {};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("tensor format") {
  SymmetricTensor t = parse_tensor("# comment\ntensor 3 2\n\n1 1 2  1/3  # trailing\n2 2 2 -0.5\n");
  CHECK(t.order() == 3);
  CHECK(t.dim() == 2);
  CHECK(t.entry(std::vector<Index>{1, 0, 0}) == doctest::Approx(1.0 / 3));
  CHECK(t.entry(std::vector<Index>{1, 1, 1}) == -0.5);
  CHECK(parse_tensor("tensor 4 3\n").is_zero());
}

TEST_CASE("tensor round trip") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    SymmetricTensor t = random_tensor(rng, rng.integer(2, 5), rng.integer(1, 5), 0.5, false, false);
    CHECK(parse_tensor(serialize_tensor(t)) == t);
  }
  SymmetricTensor q = samples::quartic_mixed();
  CHECK(parse_tensor(serialize_tensor(q)) == q);
}

TEST_CASE("hypergraph format and round trip") {
  Hypergraph g = parse_hypergraph("hypergraph 3 5\n1 2 3\n3 4 5\n");
  CHECK(g == Hypergraph(3, 5, {{0, 1, 2}, {2, 3, 4}}));
  CHECK(parse_hypergraph(serialize_hypergraph(fano_plane())) == fano_plane());
  CHECK(parse_hypergraph(serialize_hypergraph(samples::g4_four_edges())) ==
        samples::g4_four_edges());
}

TEST_CASE("errors carry source and line") {
  auto msg = parse_error([] { parse_tensor("tensor 3 2\n1 1 3 1\n", "t.txt"); });
  CHECK(msg.find("t.txt:2") == 0);
  msg = parse_error([] { parse_tensor("tensor 3 2\n1 1 x\n", "t.txt"); });
  CHECK(msg.find("t.txt:2") == 0);
  msg = parse_error([] { parse_tensor("tensor 3 2\n1 1 2 1/0\n", "t.txt"); });
  CHECK(msg.find("t.txt:2") == 0);
  try {
    parse_tensor("tensor 3 2\n1 1 2 1\n2 1 1 2\n", "t.txt");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConflictingOrbitValues);
    CHECK(std::string(e.what()).find("t.txt") == 0);
  }
  msg = parse_error([] { parse_tensor("matrix 3 2\n", "m"); });
  CHECK(msg.find("m:1") == 0);
  parse_error([] { parse_tensor("tensor 1 2\n"); });
  parse_error([] { parse_tensor("tensor 3 0\n"); });
  parse_error([] { parse_tensor("tensor 3\n"); });
  parse_error([] { parse_tensor(""); });
  parse_error([] { parse_tensor("tensor 3 2\n1 1 2 nan\n"); });
  parse_error([] { parse_hypergraph("hypergraph 3 4\n1 2 2\n"); });
  parse_error([] { parse_hypergraph("hypergraph 3 4\n1 2 5\n"); });
  parse_error([] { parse_hypergraph("hypergraph 3 4\n1 2\n"); });
  parse_error([] { parse_hypergraph("hypergraph 3 4\n0 1 2\n"); });
}

TEST_CASE("instances dispatch on the header") {
  CHECK(std::holds_alternative<SymmetricTensor>(parse_instance("tensor 2 2\n1 2 1\n")));
  CHECK(std::holds_alternative<Hypergraph>(parse_instance("hypergraph 2 2\n1 2\n")));
  parse_error([] { parse_instance("graph 2 2\n"); });
  parse_error([] { load_instance("/nonexistent/file.hg"); });
}

TEST_CASE("bundled data files") {
  const std::string dir = HSPEC_DATA_DIR;
  CHECK(std::get<SymmetricTensor>(load_instance(dir + "/quartic_mixed.tensor")) ==
        samples::quartic_mixed());
  CHECK(std::get<SymmetricTensor>(load_instance(dir + "/cubic_mixed.tensor")) ==
        samples::cubic_mixed());
  CHECK(std::get<Hypergraph>(load_instance(dir + "/g4_three_edges.hg")) ==
        samples::g4_three_edges());
  CHECK(std::get<Hypergraph>(load_instance(dir + "/fano.hg")) == fano_plane());
  CHECK(std::get<Hypergraph>(load_instance(dir + "/c6.hg")) == hypercycle3(3));
}

}  // TEST_SUITE
