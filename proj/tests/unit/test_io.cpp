#include "doctest.h"

#include <string>

#include "golden/paper_tables.hpp"
#include "qwalk/error.hpp"
#include "qwalk/io.hpp"
#include "qwalk/prep_product.hpp"

using namespace qwalk;

TEST_CASE("named targets follow the table rows") {
  for (const auto& r : golden::kProductRows) {
    const Bitstring z = parse_bits(r.state);
    const bool half = z == named_target("half", r.n);
    const bool mis = z == named_target("mis", r.n);
    CAPTURE(r.state);
    CHECK((half || mis));
  }
  CHECK(named_target("00101", 5) == 5);
  CHECK_THROWS_AS(named_target("0101", 5), Error);
}

TEST_CASE("fnv1a") {
  CHECK(hex64(fnv1a("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("schedule round trip") {
  const auto s = product_schedule(parse_bits("0000101"), 7, 2, 0.226, 0.663);
  const Json doc = schedule_to_json(s, 7);
  CHECK(doc["schema"] == kScheduleSchema);
  int n = 0;
  const auto back = schedule_from_json(doc, n);
  CHECK(n == 7);
  CHECK(back.tau0 == s.tau0);
  REQUIRE(back.layers.size() == 2);
  CHECK(back.layers[1].gamma == s.layers[1].gamma);
  CHECK(back.layers[1].tau == s.layers[1].tau);
  CHECK(back.phase_mask == s.phase_mask);
  CHECK(back.phasor_kind == s.phasor_kind);

  Json broken = doc;
  broken["layers"][1]["tau"] = "x";
  try {
    schedule_from_json(broken, n);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("layers[1].tau") != std::string::npos);
  }
  Json wrong = doc;
  wrong["schema"] = "qwalk.schedule/2";
  CHECK_THROWS_AS(schedule_from_json(wrong, n), Error);
}

TEST_CASE("config parsing") {
  const auto c = parse_config(R"({"schema": "qwalk.config/1", "ring": [5, 6], "depths": [1, 2],
                                  "backends": ["ctqw", "shots"], "channel": {"p00": 0.99, "p11": 0.93}})");
  CHECK(c.sizes == std::vector<int>{5, 6});
  CHECK(c.depths == std::vector<int>{1, 2});
  CHECK(c.backends == std::vector<Backend>{Backend::ctqw, Backend::shots});
  CHECK(c.targets == std::vector<std::string>{"half"});
  const auto again = parse_config(config_to_json(c).dump());
  CHECK(again.sizes == c.sizes);
  CHECK(again.seed == c.seed);

  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::validation);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("{\n  \"schema\": \"qwalk.config/1\",\n  \"ring\": [5,\n}").find("line 4") != std::string::npos);
  CHECK(message(R"({"schema": "qwalk.config/1", "ring": [5], "depths": []})").find("depths") != std::string::npos);
  CHECK(message(R"({"schema": "qwalk.config/1", "ring": [5], "colour": 1})").find("colour") != std::string::npos);
  CHECK(message(R"({"schema": "qwalk.config/1"})").find("ring") != std::string::npos);
  CHECK(message(R"({"schema": "qwalk.config/1", "ring": [5], "depths": [1], "channel": {"p00": 0.4, "p11": 0.9}})").find("p00") !=
        std::string::npos);
  CHECK(message(R"({"schema": "qwalk.config/1", "ring": [5], "family": "bracelet", "depths": [2]})").find("depths") !=
        std::string::npos);
}
