#include <sstream>

#include "doctest.h"
#include "z2mem/cli.hpp"
#include "z2mem/csv.hpp"
#include "z2mem/errors.hpp"

using namespace z2mem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("csv_cli") {
  TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -8.509082235140284, 1e-300, 12345678.9}) {
      CHECK(std::stod(format_double(v)) == v);
    }
  }

  TEST_CASE("writer and reader round-trip") {
    std::ostringstream os;
    CsvWriter w(os, {"first", "second"});
    w.write({"gap", 5, 0.5, std::nullopt, {{"E0", -1.25}, {"gap", 0.1}}});
    w.write({"gap", 6, 0.5, 0.25, {{"E0", -2.5}, {"gap", 0.05}}});
    std::istringstream is(os.str());
    const CsvTable t = read_csv(is);
    CHECK(t.comments == std::vector<std::string>{"first", "second"});
    REQUIRE(t.records.size() == 2);
    CHECK_FALSE(t.records[0].kT.has_value());
    CHECK(*t.records[1].kT == 0.25);
    CHECK(t.records[1].columns[1].second == 0.05);
    CHECK_THROWS_AS(w.write({"gap", 7, 0.5, std::nullopt, {{"gap", 0.1}, {"E0", 1.0}}}), DomainError);
  }

  TEST_CASE("malformed CSV is rejected") {
    std::istringstream no_header("gap,1,2,,3\n");
    CHECK_THROWS_AS(read_csv(no_header), DomainError);
    std::istringstream ragged("scan_kind,n,lambda,kT,a\ngap,4,0.5,\n");
    CHECK_THROWS_AS(read_csv(ragged), DomainError);
  }

  TEST_CASE("gap subcommand output is deterministic and parseable") {
    const Run a = run({"gap", "--n-min", "4", "--n-max", "7", "--threads", "2"});
    const Run b = run({"gap", "--n-min", "4", "--n-max", "7", "--threads", "1"});
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    std::istringstream is(a.out);
    const CsvTable t = read_csv(is);
    REQUIRE(t.records.size() == 4);
    CHECK(t.records[0].columns[2].first == "gap");
    CHECK(t.records[0].columns[2].second == doctest::Approx(3.549043263992413e-2));
  }

  TEST_CASE("pz of the superposed state is one-sided") {
    const Run r = run({"pz", "--n", "8", "--state", "superposed"});
    CHECK(r.code == kExitOk);
    std::istringstream is(r.out);
    double positive = 0.0;
    for (const auto& rec : read_csv(is).records) {
      if (rec.columns[0].second > 0) positive += rec.columns[1].second;
    }
    CHECK(positive > 0.99);
  }

  TEST_CASE("thermal subcommand fills the kT column") {
    const Run r = run({"thermal", "--n", "4", "--kt-points", "3"});
    CHECK(r.code == kExitOk);
    std::istringstream is(r.out);
    const CsvTable t = read_csv(is);
    REQUIRE(t.records.size() == 3);
    for (const auto& rec : t.records) CHECK(rec.kT.has_value());
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"nonsense"}).code == kExitUsage);
    CHECK(run({"gap", "--lambda", "0"}).code == kExitUsage);
    CHECK(run({"gap", "--n-min", "2"}).code == kExitUsage);
    CHECK(run({"thermal", "--n", "11"}).code == kExitCapability);
    CHECK(run({"stabilizer", "--n", "5"}).code == kExitOk);
    CHECK(run({"--help"}).code == kExitOk);
  }

  TEST_CASE("rvb report reflects the check outcomes") {
    const Run r = run({"rvb", "--n", "14"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
}
