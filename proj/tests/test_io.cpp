#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>

#include "covchan/io.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace covchan;

namespace {

std::string temp_path(const char* stem) {
  return std::string("/tmp/covchan-io-") + stem + "-" + std::to_string(::getpid()) + ".json";
}

Channel sample_channel() {
  Rng rng(77);
  std::vector<Matrix> kraus = {random_matrix(3, rng), random_matrix(3, rng)};
  return make_channel(3, kraus, "sample", {1.25, -0.25});
}

}  // namespace

TEST_CASE("channel files round-trip exactly enough") {
  Channel ch = sample_channel();
  std::string path = temp_path("roundtrip");
  Json meta;
  meta["note"] = "test";
  write_channel_file(path, ch, meta);
  Json meta_out;
  Channel back = read_channel_file(path, &meta_out);
  CHECK(back.d == 3);
  CHECK(back.label == "sample");
  REQUIRE(back.kraus.size() == 2);
  for (int a = 0; a < 2; ++a) CHECK(testutil::diff(back.kraus[a], ch.kraus[a]) <= 1e-15);
  REQUIRE(back.weights.size() == 2);
  CHECK(back.weights[0] == 1.25);
  CHECK(back.weights[1] == -0.25);
  CHECK(meta_out["note"] == "test");
  CHECK(channels_equal(ch, back, 1e-12));
  std::remove(path.c_str());
}

TEST_CASE("unit weights are left implicit in the file") {
  Channel ch = make_channel(3, {Matrix::Identity(3, 3)}, "plain");
  Json j = channel_to_json(ch);
  CHECK_FALSE(j["meta"].contains("weights"));
  Channel back = channel_from_json(j);
  CHECK(back.unit_weights());
}

TEST_CASE("non-finite entries are rejected on write") {
  Channel ch = make_channel(3, {Matrix::Identity(3, 3)}, "bad");
  ch.kraus[0](1, 1) = Complex(std::nan(""), 0.0);
  CHECK_THROWS(channel_to_json(ch));
  Channel wbad = make_channel(3, {Matrix::Identity(3, 3)}, "badw", {1.0});
  wbad.weights[0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS(channel_to_json(wbad));
}

TEST_CASE("malformed channel files are rejected with context") {
  auto parse = [](const char* text) { return channel_from_json(Json::parse(text)); };
  CHECK_THROWS(parse(R"({"label": "x", "kraus": []})"));                      // missing dim
  CHECK_THROWS(parse(R"({"dim": 1, "label": "x", "kraus": [[[[1,0]]]]})"));   // dim < 2
  CHECK_THROWS(parse(R"({"dim": 2, "label": "x", "kraus": []})"));            // empty kraus
  CHECK_THROWS(parse(R"({"dim": 2, "label": "x",
    "kraus": [[[[1,0],[0,0]]]]})"));                                          // wrong row count
  CHECK_THROWS(parse(R"({"dim": 2, "label": "x",
    "kraus": [[[[1,0],[0,0]],[[0,0],["a",0]]]]})"));                          // non-numeric entry
  CHECK_THROWS(parse(R"({"dim": 2, "label": "x",
    "kraus": [[[[1,0],[0,0]],[[0,0],[1,0]]]],
    "meta": {"weights": [1.0, 2.0]}})"));                                     // weight count
  CHECK_THROWS(read_channel_file("/nonexistent/covchan.json"));
}

TEST_CASE("format_sig prints 12 significant digits") {
  CHECK(format_sig(1.0 / 3.0) == "0.333333333333");
  CHECK(format_sig(2.0) == "2");
  CHECK(format_sig(0.08496250072115608) == "0.0849625007212");
  CHECK(format_sig(-1.5e-12) == "-1.5e-12");
}

TEST_CASE("Choi files parse the stored block matrix") {
  std::string path = temp_path("choi");
  {
    std::ofstream out(path);
    out << R"({"dim": 2, "choi": [)";
    for (int r = 0; r < 4; ++r) {
      out << (r ? "," : "") << "[";
      for (int c = 0; c < 4; ++c) {
        out << (c ? "," : "") << "[" << (r == c ? 1.0 : 0.0) << ", 0]";
      }
      out << "]";
    }
    out << "]}";
  }
  int d = 0;
  Matrix j = read_choi_file(path, &d);
  CHECK(d == 2);
  CHECK(testutil::diff(j, Matrix::Identity(4, 4)) <= 1e-15);
  std::remove(path.c_str());
  CHECK_THROWS(read_choi_file("/nonexistent/choi.json"));
}
