#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cmtheta/cli.hpp"
#include "cmtheta/serialize.hpp"

using namespace cmtheta;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// parse + dump must reproduce the emitted JSON byte for byte
void check_json_round_trip(const std::string& payload) {
  CHECK(Json::parse(payload).dump(2) + "\n" == payload);
}

} // namespace

TEST_CASE("eulerian subcommand") {
  CHECK(run_cli({"eulerian", "--n", "0"}).out == "1\n");
  CHECK(run_cli({"eulerian", "--n", "3"}).out == "1 + 4*x + x^2\n");
  const RunResult checked = run_cli({"eulerian", "--n", "5", "--check", "40", "--format", "json"});
  CHECK(checked.code == 0);
  check_json_round_trip(checked.out);
  const Json j = Json::parse(checked.out);
  CHECK(j.at("coeffs") == Json({"1", "26", "66", "26", "1"}));
  CHECK(j.at("check").at("holds") == true);
  const RunResult csv = run_cli({"eulerian", "--n", "3", "--format", "csv"});
  CHECK(csv.out == "power,coefficient\n0,1\n1,4\n2,1\n");
}

TEST_CASE("ecoef subcommand") {
  CHECK(run_cli({"ecoef", "--n", "8", "--g", "5", "--k", "4", "--index", "1"}).out == "20\n");
  const RunResult r = run_cli({"ecoef", "--n", "6", "--g", "3", "--k", "3", "--index", "0,1", "--format", "json"});
  CHECK(r.code == 0);
  check_json_round_trip(r.out);
  CHECK(Json::parse(r.out).at("value") == "-6");
  CHECK(run_cli({"ecoef", "--n", "9", "--g", "4", "--k", "2"}).out == "36\n");
}

TEST_CASE("jacobian-classes subcommand with format parity") {
  const RunResult json_run = run_cli({"jacobian-classes", "--g", "5", "--case", "hyp", "--format", "json"});
  const RunResult csv_run = run_cli({"jacobian-classes", "--g", "5", "--case", "hyp", "--format", "csv"});
  CHECK(json_run.code == 0);
  check_json_round_trip(json_run.out);
  const Json j = Json::parse(json_run.out);
  std::istringstream csv(csv_run.out);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "r,multiplier");
  size_t i = 0;
  while (std::getline(csv, line)) {
    const auto comma = line.find(',');
    CHECK(j.at("classes")[i].at("r") == std::stoi(line.substr(0, comma)));
    CHECK(j.at("classes")[i].at("multiplier") == line.substr(comma + 1));
    ++i;
  }
  CHECK(i == 5);
  CHECK(j.at("classes")[0].at("multiplier") == "42");
}

TEST_CASE("criterion subcommand") {
  const RunResult r = run_cli({"criterion", "--g", "6", "--case", "nonhyp", "--c0", "252", "--c1", "70",
                               "--c2", "20", "--codim", "3", "--format", "json"});
  CHECK(r.code == 0);
  check_json_round_trip(r.out);
  const Json j = Json::parse(r.out);
  CHECK(j.at("verdict") == "jacobian");
  CHECK(j.at("reconstruction").at("c0") == "10");
  CHECK(j.at("reconstruction").at("c1") == "1");
  CHECK(j.at("reconstruction").at("c2") == "0");

  const RunResult inapplicable = run_cli({"criterion", "--g", "6", "--case", "nonhyp", "--c0", "252",
                                          "--c1", "70", "--c2", "20", "--codim", "2", "--format", "json"});
  CHECK(Json::parse(inapplicable.out).at("verdict") == "inapplicable");

  // rational inputs accept a/b literals
  const RunResult rat = run_cli({"criterion", "--g", "6", "--case", "nonhyp", "--c0", "252", "--c1",
                                 "140/2", "--c2", "20", "--codim", "3", "--format", "json"});
  CHECK(Json::parse(rat.out).at("verdict") == "jacobian");
}

TEST_CASE("prym-chi subcommand") {
  const RunResult single = run_cli({"prym-chi", "--g", "5", "--t", "2", "--format", "json"});
  CHECK(single.code == 0);
  check_json_round_trip(single.out);
  CHECK(Json::parse(single.out).at("rows")[0].at("chi").at("value") == "60");

  const RunResult part = run_cli({"prym-chi", "--g", "5", "--partition", "1,4", "--k", "3", "--format", "json"});
  CHECK(Json::parse(part.out).at("rows")[0].at("chi").at("value") == "67");

  const RunResult sweep_json = run_cli({"prym-chi", "--g", "4", "--sweep", "--format", "json"});
  const RunResult sweep_csv = run_cli({"prym-chi", "--g", "4", "--sweep", "--format", "csv"});
  CHECK(sweep_json.code == 0);
  check_json_round_trip(sweep_json.out);
  const Json rows = Json::parse(sweep_json.out).at("rows");
  // t = 0,1,2 plus the two boundary partitions, k = 0..3 each
  CHECK(rows.size() == 20);
  std::istringstream csv(sweep_csv.out);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "g,locus,k,chi_tag,chi_value,matches_jacobian");
  size_t i = 0;
  size_t matches = 0;
  while (std::getline(csv, line)) {
    // numeric content parity between the csv and json tables
    std::vector<std::string> fields;
    std::stringstream fs(line);
    std::string field;
    while (std::getline(fs, field, ',')) fields.push_back(field);
    while (fields.size() < 6) fields.push_back("");
    const Json& row = rows[i];
    CHECK(fields[2] == std::to_string(row.at("k").get<int>()));
    CHECK(fields[3] == row.at("chi").at("tag").get<std::string>());
    if (row.at("chi").contains("value")) CHECK(fields[4] == row.at("chi").at("value"));
    if (row.at("matches_jacobian").get<bool>()) ++matches;
    CHECK(fields[5] == (row.at("matches_jacobian").get<bool>() ? "true" : "false"));
    ++i;
  }
  CHECK(i == 20);
  CHECK(matches == 3);

  const RunResult missing = run_cli({"prym-chi", "--g", "5"});
  CHECK(missing.code == 2);
}

TEST_CASE("prym-classes subcommand") {
  const RunResult t0 = run_cli({"prym-classes", "--g", "5", "--t", "0", "--format", "json"});
  CHECK(t0.code == 0);
  check_json_round_trip(t0.out);
  CHECK(Json::parse(t0.out).at("classes")[0].at("multiplier") == "20");

  const RunResult t2_json = run_cli({"prym-classes", "--g", "5", "--t", "2", "--format", "json"});
  const RunResult t2_csv = run_cli({"prym-classes", "--g", "5", "--t", "2", "--format", "csv"});
  CHECK(t2_json.code == 0);
  check_json_round_trip(t2_json.out);
  const Json j = Json::parse(t2_json.out);
  CHECK(j.at("note").get<std::string>().find("B_{-1} = 0") != std::string::npos);
  // r = 4 row carries the two endpoint entries with coefficient 1
  const Json& last = j.at("classes")[3];
  CHECK(last.at("r") == 4);
  CHECK(last.at("entries")[0].at("coeff") == "1");
  CHECK(last.at("entries")[1].at("coeff") == "1");
  // csv covers the same (r, a, b) triples
  std::istringstream csv(t2_csv.out);
  std::string line;
  std::getline(csv, line);
  CHECK(line == "r,a,b,coeff");
  size_t csv_rows = 0;
  while (std::getline(csv, line)) ++csv_rows;
  size_t json_rows = 0;
  for (const Json& cls : j.at("classes")) json_rows += cls.at("entries").size();
  CHECK(csv_rows == json_rows);
}

TEST_CASE("genus5 subcommand") {
  const RunResult r = run_cli({"genus5", "--format", "json"});
  CHECK(r.code == 0);
  check_json_round_trip(r.out);
  const Json j = Json::parse(r.out);
  CHECK(j.at("dim_omega") == "42");
  CHECK(j.at("rhs_multiplier") == "14");
  CHECK(j.at("verdicts")[0].at("residue") == 2);
  CHECK(j.at("verdicts")[1].at("residue") == 1);
  CHECK(j.at("verdicts")[0].at("divisible") == false);
  CHECK(j.at("verdicts")[1].at("divisible") == false);
  CHECK(j.at("excluded") == true);

  const RunResult text = run_cli({"genus5"});
  CHECK(text.out.find("not divisible") != std::string::npos);
  CHECK(text.out.find("exclusion holds: yes") != std::string::npos);
}

TEST_CASE("exit codes and output routing") {
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"eulerian"}).code == 2);                       // missing required --n
  CHECK(run_cli({"eulerian", "--n", "3", "--bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);                                 // a subcommand is required
  CHECK(run_cli({"eulerian", "--n", "-1"}).code == 1);          // domain violation
  CHECK(run_cli({"criterion", "--g", "3", "--case", "nonhyp", "--c0", "1", "--c1", "1", "--c2", "1",
                 "--codim", "3"})
            .code == 1);
  CHECK(run_cli({"--help"}).code == 0);

  const std::string path = "cli_test_output.json";
  const RunResult file_run = run_cli({"genus5", "--format", "json", "--output", path});
  CHECK(file_run.code == 0);
  CHECK(file_run.out.empty());
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  CHECK(Json::parse(content.str()).at("dim_omega") == "42");
  std::remove(path.c_str());
}
