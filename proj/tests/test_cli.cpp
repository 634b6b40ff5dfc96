#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "bd/config.hpp"

using namespace bd;

namespace {

std::string write_cfg(const std::string& name, const std::string& body) {
  std::ofstream f(name);
  f << body;
  return name;
}

njson parse_out(const RunResult& rr) { return njson::parse(rr.out); }

}  // namespace

TEST_CASE("cli help and argument errors") {
  RunResult help = run_command({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("nichols-hilbert") != std::string::npos);
  CHECK(help.out.find("cherednik-pbw") != std::string::npos);

  CHECK(run_command({}).code == 2);                    // missing subcommand
  CHECK(run_command({"frobnicate"}).code == 2);        // unknown subcommand
  CHECK(run_command({"nichols-hilbert", "--format", "yaml"}).code == 2);
}

TEST_CASE("cli config file errors") {
  RunResult missing =
      run_command({"nichols-hilbert", "--config", "no_such_file.json"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open") != std::string::npos);

  write_cfg("test_cli_broken.json", "{ not json !");
  RunResult broken =
      run_command({"nichols-hilbert", "--config", "test_cli_broken.json"});
  CHECK(broken.code == 2);
  CHECK(broken.err.find("parse error") != std::string::npos);

  write_cfg("test_cli_badgroup.json",
            R"json({"group": {"type": "sporadic", "n": 1},
                "module": {"type": "trivial"},
                "structure": {"type": "trivial"}})json");
  RunResult bad =
      run_command({"check-qyd", "--config", "test_cli_badgroup.json"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("input error") != std::string::npos);

  // braiding-based command without a YD structure
  write_cfg("test_cli_noyd.json",
            R"json({"structure": {"type": "example", "name": "pathological"}})json");
  RunResult noyd =
      run_command({"nichols-hilbert", "--config", "test_cli_noyd.json"});
  CHECK(noyd.code == 2);
  CHECK(noyd.err.find("Yetter-Drinfeld") != std::string::npos);
}

TEST_CASE("cli resource guards") {
  write_cfg("test_cli_fk.json",
            R"json({"structure": {"type": "example", "name": "fomin-kirillov"},
                "N": 8})json");
  RunResult guarded = run_command({"nichols-hilbert", "--config",
                                   "test_cli_fk.json", "--max-matrix-dim",
                                   "100"});
  CHECK(guarded.code == 2);
  CHECK(guarded.err.find("max-matrix-dim") != std::string::npos);
}

TEST_CASE("fomin-kirillov command") {
  RunResult rr = run_command({"fomin-kirillov"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("dims") == njson::parse("[1, 3, 4, 3, 1, 0]"));
  CHECK(out.at("total") == 12);
  CHECK(out.at("quadratic_cover_agrees") == true);

  // byte-identical reruns
  RunResult again = run_command({"fomin-kirillov"});
  CHECK(again.out == rr.out);

  // csv rendering flattens arrays with semicolons
  RunResult csv = run_command({"fomin-kirillov", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.find("dims,1;3;4;3;1;0") != std::string::npos);
  CHECK(csv.out.find("total,12") != std::string::npos);
}

TEST_CASE("nichols-hilbert command with output file") {
  write_cfg("test_cli_nh.json",
            R"json({"structure": {"type": "example", "name": "transpositions",
                              "n": 3},
                "N": 5, "oracle": true})json");
  RunResult rr = run_command({"nichols-hilbert", "--config",
                              "test_cli_nh.json", "--output",
                              "test_cli_nh_out.json"});
  REQUIRE(rr.code == 0);
  CHECK(rr.wrote_file);
  njson out = parse_out(rr);
  CHECK(out.at("dims") == njson::parse("[1, 3, 4, 3, 1, 0]"));
  CHECK(out.at("kernel_cross_check") == true);
  CHECK(out.at("oracle_agrees") == true);
  std::ifstream in("test_cli_nh_out.json");
  std::string disk((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(disk == rr.out);
}

TEST_CASE("check-qyd command") {
  write_cfg("test_cli_path.json",
            R"json({"structure": {"type": "example", "name": "pathological"}})json");
  RunResult rr = run_command({"check-qyd", "--config", "test_cli_path.json"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("qyd_ok") == true);
  CHECK(out.at("module_ok") == true);
  CHECK(out.at("commutative_left") == false);

  // one-dimensional classification on the braided line
  write_cfg("test_cli_qline.json",
            R"json({"field": "GF(7)",
                "structure": {"type": "example", "name": "qline",
                              "m": 3, "q": 2}})json");
  RunResult ql = run_command({"check-qyd", "--config", "test_cli_qline.json"});
  REQUIRE(ql.code == 0);
  njson qo = parse_out(ql);
  CHECK(qo.at("yd_ok") == true);
  CHECK(qo.at("one_dim").at("is_genuine_yd") == true);
}

TEST_CASE("free-double-pbw command") {
  write_cfg("test_cli_free.json",
            R"json({"structure": {"type": "example", "name": "pathological"},
                "N": 3})json");
  RunResult rr = run_command({"free-double-pbw", "--config",
                              "test_cli_free.json"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("pass") == true);
  CHECK(out.at("dims_match_free_formula") == true);
}

TEST_CASE("minimal-relations command on the quantum line") {
  write_cfg("test_cli_ml.json",
            R"json({"field": "GF(7)",
                "structure": {"type": "example", "name": "qline",
                              "m": 3, "q": 2},
                "N": 4})json");
  RunResult rr = run_command({"minimal-relations", "--config",
                              "test_cli_ml.json"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("left_quotient_dims") == njson::parse("[1, 1, 1, 0, 0]"));
  CHECK(out.at("triangular") == true);
}

TEST_CASE("deformed-hilbert command") {
  write_cfg("test_cli_def.json",
            R"json({"structure": {"type": "example", "name": "transpositions",
                              "n": 3},
                "N": 2})json");
  RunResult rr = run_command({"deformed-hilbert", "--config",
                              "test_cli_def.json", "--seed", "12345"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("seed") == 12345);
  CHECK(out.at("kernel_dims") == njson::parse("[0, 0, 1]"));
  CHECK(out.at("quotient_dims") == njson::parse("[1, 3, 8]"));
}

TEST_CASE("hc-gram command") {
  write_cfg("test_cli_hc.json",
            R"json({"structure": {"type": "example", "name": "fomin-kirillov"},
                "relations": "minimal", "N": 3})json");
  RunResult rr = run_command({"hc-gram", "--config", "test_cli_hc.json"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("factorial_cross_check") == true);
  CHECK(out.at("nondegenerate") == true);
}

TEST_CASE("minimality command flags free-double violations") {
  write_cfg("test_cli_min.json",
            R"json({"structure": {"type": "example", "name": "fomin-kirillov"},
                "relations": "free", "N": 2})json");
  RunResult rr = run_command({"minimality", "--config", "test_cli_min.json"});
  CHECK(rr.code == 1);
  njson out = parse_out(rr);
  CHECK(out.at("minimal") == false);
  REQUIRE(out.at("violations").size() > 0);
  CHECK(out.at("violations")[0].at("degree") == 2);
}

TEST_CASE("cherednik-pbw and dunkl-check commands") {
  write_cfg("test_cli_chered.json",
            R"json({"group": {"type": "symmetric", "n": 3},
                "module": {"type": "reflection"},
                "structure": {"type": "tc", "t": 1, "c": {"(1 2)": 1}},
                "N": 3})json");
  RunResult pbw = run_command({"cherednik-pbw", "--config",
                               "test_cli_chered.json"});
  REQUIRE(pbw.code == 0);
  CHECK(parse_out(pbw).at("pass") == true);

  RunResult dunkl = run_command({"dunkl-check", "--config",
                                 "test_cli_chered.json"});
  REQUIRE(dunkl.code == 0);
  CHECK(parse_out(dunkl).at("ok") == true);
}

TEST_CASE("restricted-dims command") {
  write_cfg("test_cli_restr.json",
            R"json({"group": {"type": "symmetric", "n": 3},
                "module": {"type": "reflection"},
                "structure": {"type": "tc", "c": {"(1 2)": 1}},
                "N": 4, "minimality": true})json");
  RunResult rr = run_command({"restricted-dims", "--config",
                              "test_cli_restr.json"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("coinvariant_dims") == njson::parse("[1, 2, 2, 1, 0]"));
  CHECK(out.at("complete") == true);
  CHECK(out.at("total_dim") == 216);
  CHECK(out.at("minimal") == true);
}

TEST_CASE("embed-check command") {
  write_cfg("test_cli_embed.json",
            R"json({"group": {"type": "symmetric", "n": 3},
                "module": {"type": "reflection"},
                "structure": {"type": "tc", "c": {"(1 2)": 1}},
                "N": 2})json");
  RunResult rr = run_command({"embed-check", "--config",
                              "test_cli_embed.json"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("pass") == true);
  CHECK(out.at("t_prime") == "0");
  CHECK(out.at("cover_dims") == njson::parse("[1, 3, 4]"));
}

TEST_CASE("kaplansky command") {
  RunResult rr = run_command({"kaplansky"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("smash_dim") == 8);
  CHECK(out.at("omega_central") == true);
  CHECK(out.at("omega_square_zero") == true);
  CHECK(out.at("delta_multiplicative") == true);

  write_cfg("test_cli_kap3.json", R"json({"dim": 3})json");
  RunResult r3 = run_command({"kaplansky", "--config", "test_cli_kap3.json"});
  REQUIRE(r3.code == 0);
  CHECK(parse_out(r3).at("smash_dim") == 16);
}

TEST_CASE("standard-module command") {
  write_cfg("test_cli_weyl.json",
            R"json({"group": {"type": "symmetric", "n": 1},
                "module": {"type": "trivial", "dim": 1},
                "structure": {"type": "tc", "t": 1},
                "N": 3})json");
  RunResult rr = run_command({"standard-module", "--config",
                              "test_cli_weyl.json"});
  REQUIRE(rr.code == 0);
  njson out = parse_out(rr);
  CHECK(out.at("total_dim") == 4);
  CHECK(out.at("degree_dims") == njson::parse("[1, 1, 1, 1]"));
  CHECK(out.at("axioms_ok") == true);
}
