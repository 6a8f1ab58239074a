#include <doctest.h>

#include <filesystem>

#include "sl3/json_io.hpp"
#include "sl3/standard_foams.hpp"

using namespace sl3;

TEST_CASE("web JSON round trip") {
  for (const Web& w : {webs::circle(), webs::theta(), webs::cube()}) {
    Json j = web_to_json(w);
    CHECK(web_from_json(j) == w);
    CHECK(web_checksum(web_from_json(j)) == web_checksum(w));
  }
  CHECK(web_checksum(webs::theta()) != web_checksum(webs::cube()));
}

TEST_CASE("movie JSON round trip with checksums") {
  WebBasis b = basis(webs::cube());
  for (const auto& u : b.foams) CHECK(movie_from_json(movie_to_json(u)) == u);
  Json j = movie_to_json(b.foams.back());
  j["moves"][0]["checksum"] = "0000000000000000";
  CHECK_THROWS_AS(movie_from_json(j), std::invalid_argument);
  SquareMaps m = square_maps(webs::cube(), faces(webs::cube()).faces[0].edge_ids());
  CHECK(movie_from_json(movie_to_json(m.nu[1])) == m.nu[1]);
}

TEST_CASE("homology JSON schema") {
  LinkDiagram d = parse_pd("Loop(1)");
  Json j = homology_to_json(d, link_bracket(d), homology(build_complex(d)));
  CHECK(j["bracket"] == "q^-2 + 1 + q^2");
  CHECK(j["euler_check"] == true);
  REQUIRE(j["homology"].size() == 3);
  CHECK(j["homology"][0]["i"] == 0);
  CHECK(j["homology"][0]["j"] == -2);
  CHECK(j["homology"][0]["rank"] == 1);
  CHECK(j["homology"][0]["torsion"].empty());
}

TEST_CASE("diagram JSON") {
  LinkDiagram d = braid_closure(3, {1, 2, -1});
  CHECK(diagram_from_json(diagram_to_json(d)).to_pd() == d.to_pd());
  CHECK(crossing_signs(diagram_from_json(diagram_to_json(d))) == crossing_signs(d));
  CHECK(parse_diagram("  {\"pd\": [[1,2,2,1]]}").size() == 1);
  CHECK(parse_diagram("X(1,2,2,1)").size() == 1);
  CHECK(diagram_from_json(Json("Loop(1)")).components() == 1);
}

TEST_CASE("bracket cache persistence") {
  auto path = (std::filesystem::temp_directory_path() / "sl3_cache_test.json").string();
  kuperberg_bracket(webs::cube());
  save_bracket_cache(path);
  CHECK(load_bracket_cache(path) > 0);
  CHECK(load_bracket_cache(path + ".missing") == 0);
  std::filesystem::remove(path);
}
