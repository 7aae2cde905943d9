// Tests for the built-in verification suite: embedded scripts stay in
// sync with the files under scripts/, ids dispatch correctly, and the
// search-backed verifications pass.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pwrep/theorems.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("embedded scripts are byte-identical to the script files") {
  for (const std::string& name : pwrep::theorems::script_names()) {
    CAPTURE(name);
    std::string from_file =
        read_file(std::string(PWREP_SOURCE_DIR) + "/scripts/" + name + ".wal");
    CHECK(pwrep::theorems::script_text(name) == from_file);
  }
  CHECK(pwrep::theorems::script_names().size() == 6);
  CHECK_THROWS_AS(pwrep::theorems::script_text("nosuch"),
                  std::invalid_argument);
}

TEST_CASE("verification ids are recognised and unknown ids rejected") {
  auto ids = pwrep::theorems::verification_ids();
  CHECK(ids.size() == 13);
  for (const std::string& id : ids) {
    CAPTURE(id);
    CHECK(pwrep::theorems::is_verification_id(id));
  }
  CHECK(!pwrep::theorems::is_verification_id("thm4"));
  CHECK(!pwrep::theorems::is_verification_id("thm8-i5"));
  CHECK_THROWS_AS(pwrep::theorems::verify("thm4"), std::invalid_argument);
}

TEST_CASE("closed-form verification passes") {
  pwrep::theorems::Report report = pwrep::theorems::verify("closed-forms");
  CHECK(report.id == "closed-forms");
  CHECK(report.method == "exhaustive");
  CHECK(report.passed);
}

TEST_CASE("small table verifications pass") {
  for (const char* id : {"table2-small", "table3-small"}) {
    CAPTURE(id);
    pwrep::theorems::Report report = pwrep::theorems::verify(id);
    CHECK(report.method == "exhaustive");
    CHECK(report.passed);
    CHECK(report.detail.find("cells exact") != std::string::npos);
  }
}

TEST_CASE("a decided verification reports its evals") {
  pwrep::theorems::Report report = pwrep::theorems::verify("thm1");
  CHECK(report.method == "decided");
  CHECK(report.passed);
  CHECK(report.detail == "no_sq=TRUE");
}

TEST_CASE("theorem 8 variants substitute the hole letter") {
  pwrep::theorems::Report report = pwrep::theorems::verify("thm8-i2");
  CHECK(report.method == "decided");
  CHECK(report.passed);
  CHECK(report.detail == "ov0=TRUE, t0=TRUE");
}
