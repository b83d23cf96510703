#include <regex>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qschubert/cli.hpp"
#include "qschubert/quantum.hpp"

using namespace qschubert;
using nlohmann::json;

namespace {

cli::Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "qschubert");
  return cli::run(args);
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("product command") {
  const auto r = run({"product", "--l", "1", "--k", "1", "--lambda", "1", "--mu", "1"});
  CHECK(r.exit_code == cli::kExitOk);
  CHECK(r.err.empty());
  const auto out = lines(r.out);
  REQUIRE(out.size() == 3);
  CHECK(out[0] == "schema qschubert/1");
  CHECK(out[2] == "q^1 * sigma[-] : 1");

  const auto unit = run({"product", "--l", "2", "--k", "2", "--lambda", "-", "--mu", "2,1"});
  CHECK(lines(unit.out).back() == "q^0 * sigma[2,1] : 1");

  const auto doc = run_json({"product", "--l", "2", "--k", "2", "--lambda", "2,1", "--mu", "2,1"});
  CHECK(doc.at("schema") == "qschubert/1");
  CHECK(doc.at("command").at("name") == "product");
  CHECK(doc.at("context").at("l") == 2);
  const auto& terms = doc.at("payload").at("terms");
  REQUIRE(terms.size() == 2);
  for (const auto& t : terms) {
    CHECK(t.at("d") == 1);
    CHECK(t.at("coeff") == 1);
  }
}

TEST_CASE("text and json carry the same numbers") {
  const GrassmannianContext ctx{2, 3};
  const std::regex term(R"(q\^(\d+) \* sigma\[([-0-9,]+)\] : (-?\d+))");
  for (const auto& lam : partitions_in_box(ctx)) {
    for (const auto& mu : partitions_in_box(ctx)) {
      const std::vector<std::string> args{"product", "--l", "2", "--k", "3", "--lambda", to_string(lam),
                                          "--mu", to_string(mu)};
      const auto text = run(args);
      REQUIRE(text.exit_code == 0);
      json from_text = json::array();
      for (const auto& line : lines(text.out)) {
        std::smatch m;
        if (std::regex_match(line, m, term)) {
          // Printed partitions must parse back.
          const Partition nu = parse_partition(m[2].str());
          from_text.push_back({{"d", std::stoi(m[1].str())}, {"nu", nu.parts()}, {"coeff", std::stoll(m[3].str())}});
        }
      }
      const auto doc = run_json(args);
      CHECK(doc.at("payload").at("terms") == from_text);

      const std::vector<std::string> dargs{"degrees", "--l", "2", "--k", "3", "--lambda", to_string(lam),
                                           "--mu", to_string(mu)};
      const auto dtext = lines(run(dargs).out);
      const auto ddoc = run_json(dargs).at("payload");
      CHECK(dtext.at(2) == "d_min: " + std::to_string(ddoc.at("d_min").get<int>()));
      CHECK(dtext.at(3) == "square: " + std::to_string(ddoc.at("square").get<int>()));
      CHECK(dtext.at(4) == "d_max: " + std::to_string(ddoc.at("d_max").get<int>()));
      CHECK(ddoc.at("d_min") == ddoc.at("square"));
    }
  }
}

TEST_CASE("core command") {
  const auto text = run({"core", "--n", "4", "--rho", "2,2,2", "--l", "2", "--k", "2"});
  CHECK(text.exit_code == 0);
  const auto out = lines(text.out);
  CHECK(out.at(2) == "core: 1,1");
  CHECK(out.at(3) == "r: 1");
  CHECK(out.at(4) == "widths: 2");
  CHECK(out.at(5) == "epsilon: +1");

  const auto doc = run_json({"core", "--n", "3", "--rho", "3,1"});
  CHECK(doc.at("context").is_null());
  CHECK(doc.at("payload").at("core") == json::array({3, 1}));
  CHECK(doc.at("payload").at("r") == 0);
  CHECK(doc.at("payload").at("epsilon").is_null());
  CHECK(parse_partition(lines(run({"core", "--n", "3", "--rho", "3,1"}).out).at(2).substr(6)) == Partition{3, 1});
}

TEST_CASE("degrees and gw commands") {
  const auto doc = run_json({"degrees", "--l", "2", "--k", "2", "--lambda", "2,2", "--mu", "2,2"});
  CHECK(doc.at("payload").at("d_min") == 2);
  CHECK(doc.at("payload").at("d_max") == 2);
  CHECK(doc.at("payload").at("square") == 2);
  CHECK(run({"dmin-dmax", "--l", "2", "--k", "2", "--lambda", "2,2", "--mu", "2,2"}).exit_code == 0);

  const auto gw = run_json({"gw", "--l", "1", "--k", "1", "--lambda", "1", "--mu", "1", "--nu", "1", "--d", "1"});
  CHECK(gw.at("payload").at("invariant") == 1);
}

TEST_CASE("exit codes") {
  // Malformed partitions and bad flags.
  CHECK(run({"product", "--l", "2", "--k", "2", "--lambda", "1,2"}).exit_code == cli::kExitUsage);
  CHECK(run({"product", "--l", "2", "--k", "2", "--lambda", "2, 1"}).exit_code == cli::kExitUsage);
  CHECK(run({"product", "--l", "2", "--k", "2", "--lambda", "x"}).exit_code == cli::kExitUsage);
  CHECK(run({"product", "--l", "0", "--k", "2"}).exit_code == cli::kExitUsage);
  CHECK(run({"product", "--l", "2"}).exit_code == cli::kExitUsage);
  CHECK(run({"product", "--l", "2", "--k", "2", "--format", "xml"}).exit_code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).exit_code == cli::kExitUsage);
  CHECK(run({}).exit_code == cli::kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).exit_code == cli::kExitUsage);
  CHECK(run({"core", "--n", "1", "--rho", "1"}).exit_code == cli::kExitUsage);
  CHECK(run({"core", "--n", "4", "--rho", "1", "--l", "2"}).exit_code == cli::kExitUsage);

  // Box violations name the argument.
  const auto box = run({"product", "--l", "2", "--k", "2", "--lambda", "3", "--mu", "1"});
  CHECK(box.exit_code == cli::kExitBox);
  CHECK(box.err.find("--lambda") != std::string::npos);
  CHECK(box.out.empty());
  CHECK(run({"gw", "--l", "2", "--k", "2", "--nu", "1,1,1", "--d", "0"}).exit_code == cli::kExitBox);

  // l + k must equal n.
  CHECK(run({"core", "--n", "5", "--rho", "2,2,2", "--l", "2", "--k", "2"}).exit_code == cli::kExitNMismatch);

  // A failing statement exits with 5 and names the case.
  const auto bad = run({"verify", "--suite", "conj-descent-literal", "--max-n", "4", "--workers", "1"});
  CHECK(bad.exit_code == cli::kExitCounterexample);
  CHECK(bad.out.find("l=2;k=2;lambda=") != std::string::npos);
}

TEST_CASE("verify command") {
  const auto ok = run({"verify", "--suite", "all", "--max-n", "3", "--workers", "2"});
  CHECK(ok.exit_code == 0);
  const auto one = run_json({"verify", "--suite", "thm-dmin", "--max-n", "4", "--workers", "1"});
  auto many = run_json({"verify", "--suite", "thm-dmin", "--max-n", "4", "--workers", "4"});
  CHECK(one.at("payload").at("passed") == true);
  // Identical documents apart from timings.
  auto strip = [](json doc) {
    for (auto& report : doc.at("payload").at("reports")) {
      report.erase("elapsed_ms");
    }
    return doc;
  };
  CHECK(strip(one) == strip(many));
  const auto& reports = one.at("payload").at("reports");
  REQUIRE(reports.size() == 6);
  for (const auto& report : reports) {
    CHECK(report.at("cases") == report.at("expected_cases"));
  }
}
