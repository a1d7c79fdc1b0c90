#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polecalc/cli.hpp"

using namespace polecalc;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "polecalc-tests";
  std::filesystem::create_directories(dir);
  std::filesystem::path p = dir / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

const char* kSquare = R"({"name":"boolean-square","size":4,"leq":["1111","0101","0011","0001"]})";
const char* kChain3 = R"({"name":"chain-3","size":3,"leq":["111","011","001"]})";
const char* kNPoset = R"({"name":"n-poset","size":4,"leq":["1010","0111","0010","0001"]})";
const char* kM3 = R"({"name":"diamond","size":5,"leq":["11111","01001","00101","00011","00001"]})";

}  // namespace

TEST_CASE("file parsing") {
  LatticeFile f = lattice_file_from_json_text(kSquare);
  CHECK(f.name == "boolean-square");
  CHECK(f.size == 4);
  Poset p = poset_from_file(f);
  CHECK(p.le(0, 3));
  CHECK_FALSE(p.le(1, 2));

  CHECK_THROWS_AS(lattice_file_from_json_text("{"), parse_error);
  CHECK_THROWS_AS(lattice_file_from_json_text(R"({"size":1})"), parse_error);
  CHECK_THROWS_AS(poset_from_file(lattice_file_from_json_text(
                      R"({"name":"bad","size":2,"leq":["11","0"]})")),
                  parse_error);
  CHECK_THROWS_AS(poset_from_file(lattice_file_from_json_text(
                      R"({"name":"bad","size":2,"leq":["11","x1"]})")),
                  parse_error);
  CHECK_THROWS_AS(poset_from_file(lattice_file_from_json_text(
                      R"({"name":"cycle","size":2,"leq":["11","11"]})")),
                  parse_error);

  LatticeFile labeled = lattice_file_from_json_text(
      R"({"name":"pair","size":2,"leq":["11","01"],"labels":["lo","hi"]})");
  CHECK(poset_from_file(labeled).ground.label(1) == "hi");
  std::string round = lattice_file_to_json_text(labeled);
  CHECK(lattice_file_from_json_text(round) == labeled);
}

TEST_CASE("check-pole command") {
  std::ostringstream out, err;
  CHECK(cmd_check_pole(write_temp("chain3.json", kChain3), out, err) == 0);
  CHECK(out.str().find("blocks: 1,1,1") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_check_pole(write_temp("n.json", kNPoset), out2, err2) == 1);
  CHECK(out2.str().find("not a pole poset") != std::string::npos);

  std::ostringstream out3, err3;
  std::string bad = write_temp("bad.json", R"({"name":"bad","size":2,"leq":["11","0"]})");
  CHECK(cmd_check_pole(bad, out3, err3) == 2);
  CHECK(cmd_check_pole("/nonexistent/file.json", out3, err3) == 2);
}

TEST_CASE("decompose command and report round trip") {
  std::string path = write_temp("square.json", kSquare);
  std::ostringstream out, err;
  CHECK(cmd_decompose(path, false, out, err) == 0);
  CHECK(out.str().find("M_1(k) ⊕ M_3(k) ⊕ M_2(k) ⊕ M_1(kC2), dim 16") != std::string::npos);

  std::ostringstream jout, jerr;
  CHECK(cmd_decompose(path, true, jout, jerr) == 0);
  DecompositionReport parsed = report_from_json_text(jout.str());
  DecompositionReport direct = decomposition_report(
      make_lattice_ptr(*lattice_from_poset(poset_from_file(lattice_file_from_json_text(kSquare)))),
      "boolean-square");
  CHECK(report_equal(parsed, direct));
  CHECK(report_to_json_text(parsed) == jout.str());

  // a poset that is not a lattice is an input error
  std::ostringstream out2, err2;
  CHECK(cmd_decompose(write_temp("n.json", kNPoset), false, out2, err2) == 2);
}

TEST_CASE("rank command") {
  std::ostringstream out, err;
  CHECK(cmd_rank(write_temp("square.json", kSquare), 2, out, err) == 0);
  CHECK(out.str().find("0\t0\t0") != std::string::npos);
  CHECK(out.str().find("1\t0\t0") != std::string::npos);
  CHECK(out.str().find("2\t2\t2") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_rank(write_temp("m3.json", kM3), 2, out2, err2) == 1);

  std::ostringstream out3, err3;
  CHECK(cmd_rank(write_temp("chain3.json", kChain3), 1, out3, err3) == 0);
}

TEST_CASE("verify command") {
  std::string path = write_temp("square.json", kSquare);
  std::ostringstream out, err;
  CHECK(cmd_verify(path, "all", 0, 1, false, out, err) == 0);
  CHECK(out.str().find("all checks passed") != std::string::npos);

  std::ostringstream out2, err2;
  CHECK(cmd_verify(path, "no-such-suite", 0, 1, false, out2, err2) == 2);

  std::ostringstream out3, err3;
  CHECK(cmd_verify("", "corpus", 3, 2, false, out3, err3) == 0);

  // identical runs give identical bytes
  std::ostringstream a, b, devnull;
  cmd_verify(path, "idempotents", 0, 1, true, a, devnull);
  cmd_verify(path, "idempotents", 0, 1, true, b, devnull);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("decompose output is byte-identical across runs") {
  std::string path = write_temp("square.json", kSquare);
  std::ostringstream a, b, devnull;
  cmd_decompose(path, true, a, devnull);
  cmd_decompose(path, true, b, devnull);
  CHECK(a.str() == b.str());
}
