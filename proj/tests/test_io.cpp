#include <doctest.h>

#include "mubar/diagrams.hpp"
#include "mubar/io.hpp"
#include "mubar/milnor.hpp"
#include "mubar/words.hpp"

using namespace mubar;

TEST_CASE("braid JSON round trip") {
  Braid b(3, {1, -2, 1, -2});
  Json j = braid_to_json(b);
  Braid back = braid_from_json(j);
  CHECK(back.strands == b.strands);
  CHECK(back.word == b.word);
}

TEST_CASE("longitudes JSON round trip") {
  std::vector<Word> lams = {Word::parse("X2 X1^-1"), Word::parse("X1 X2^-1")};
  Json j = longitudes_to_json(lams);
  auto back = longitudes_from_json(j);
  REQUIRE(back.size() == 2);
  CHECK(back[0] == lams[0]);
  CHECK(back[1] == lams[1]);
}

TEST_CASE("PD JSON round trip") {
  LinkDiagram d = close_link(Braid(2, {1, 1}));
  Json j = pd_to_json(d);
  LinkDiagram back = pd_from_json(j);
  CHECK(back.components == d.components);
  CHECK(back.free_loops == d.free_loops);
  REQUIRE(back.crossings.size() == d.crossings.size());
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    CHECK(back.crossings[i].a == d.crossings[i].a);
    CHECK(back.crossings[i].b == d.crossings[i].b);
    CHECK(back.crossings[i].c == d.crossings[i].c);
    CHECK(back.crossings[i].d == d.crossings[i].d);
    CHECK(back.crossings[i].sign == d.crossings[i].sign);
  }
}

TEST_CASE("mu table serialization carries the schema") {
  Braid b(2, {1, 1});
  auto raw = longitudes_from_braid(b);
  std::vector<Word> lams;
  for (int i = 1; i <= 2; ++i) lams.push_back(normalize_longitude(raw[i - 1], i));
  Json j = mu_to_json(mu_table(lams, 5));
  CHECK(j["schema"] == kSchema);
  CHECK(j["m"] == 2);
  CHECK(j["q"] == 5);
  CHECK(j["entries"].is_array());
  CHECK_FALSE(j["entries"].empty());
}

TEST_CASE("verify report serializes deterministically") {
  VerifyResult r = verify_factorization(Braid(2, {1, 1}), 7, 64);
  std::string once = verify_to_json(r).dump(2);
  VerifyResult r2 = verify_factorization(Braid(2, {1, 1}), 7, 64);
  std::string twice = verify_to_json(r2).dump(2);
  CHECK(once == twice);
}
