#include <cstring>
#include <string>

#include "doctest.h"
#include "latbar/latbar.h"

namespace {

struct JobGuard {
  latbar_job* j;
  explicit JobGuard(latbar_job* p) : j(p) {}
  ~JobGuard() { latbar_job_free(j); }
};

}  // namespace

TEST_CASE("version string is set") {
  const char* v = latbar_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) >= 5);
}

TEST_CASE("job lifecycle over a graph input") {
  latbar_job* j = latbar_job_new("graph", "markov", "cycle:4");
  JobGuard g(j);
  REQUIRE(j != nullptr);
  CHECK(std::string(latbar_job_report(j)).empty());

  CHECK(latbar_job_run(j) == LATBAR_OK);
  std::string rep = latbar_job_report(j);
  CHECK(rep.find("mu 1") != std::string::npos);
  CHECK(rep.find("x1 x3 - x2 x4") != std::string::npos);
  CHECK(std::string(latbar_job_error(j)).empty());

  // re-running replaces the report
  CHECK(latbar_job_run(j) == LATBAR_OK);
  CHECK(std::string(latbar_job_report(j)) == rep);
}

TEST_CASE("machine option switches the report format") {
  latbar_job* j = latbar_job_new("graph", "circuits", "cycle:4");
  JobGuard g(j);
  REQUIRE(latbar_job_set_option(j, "machine", 1) == 0);
  CHECK(latbar_job_run(j) == LATBAR_OK);
  std::string rep = latbar_job_report(j);
  CHECK(rep.find("\"command\": \"circuits\"") != std::string::npos);
  CHECK(rep.find("\"x1 x3 - x2 x4\"") != std::string::npos);
}

TEST_CASE("status codes surface through the interface") {
  {
    latbar_job* j = latbar_job_new("nope", "bounds", "1 1 1");
    JobGuard g(j);
    CHECK(latbar_job_run(j) == LATBAR_BAD_INPUT);
    CHECK(std::string(latbar_job_error(j)).find("unknown input kind") != std::string::npos);
  }
  {
    latbar_job* j = latbar_job_new("graph", "verify-witness", "cycle:4");
    JobGuard g(j);
    latbar_job_set_aux(j, "x1 - x2\n");
    CHECK(latbar_job_run(j) == LATBAR_VERIFY_FAILED);
    CHECK(std::string(latbar_job_report(j)).find("verdict fail") != std::string::npos);
  }
  {
    latbar_job* j = latbar_job_new("graph", "verify-witness", "cycle:4");
    JobGuard g(j);
    latbar_job_set_aux(j, "x1 x3 - x2 x4\n");
    CHECK(latbar_job_run(j) == LATBAR_OK);
    CHECK(std::string(latbar_job_report(j)).find("verdict pass") != std::string::npos);
  }
  {
    latbar_job* j = latbar_job_new("determinantal", "det", "3 1 1 1");
    JobGuard g(j);
    REQUIRE(latbar_job_set_option(j, "limit-states", 1) == 0);
    REQUIRE(latbar_job_set_option(j, "orders", 2) == 0);
    CHECK(latbar_job_run(j) == LATBAR_RESOURCE_LIMIT);
  }
}

TEST_CASE("option validation") {
  latbar_job* j = latbar_job_new("graph", "bounds", "cycle:4");
  JobGuard g(j);
  CHECK(latbar_job_set_option(j, "degree-bound", 12) == 0);
  CHECK(latbar_job_set_option(j, "face-cap", 3) == 0);
  CHECK(latbar_job_set_option(j, "orders", 0) == 0);
  CHECK(latbar_job_set_option(j, "seed", 7) == 0);
  CHECK(latbar_job_set_option(j, "limit-states", 100) == 0);
  CHECK(latbar_job_set_option(j, "machine", 0) == 0);

  CHECK(latbar_job_set_option(j, "unknown", 1) == 1);
  CHECK(latbar_job_set_option(j, "degree-bound", -1) == 1);
  CHECK(latbar_job_set_option(j, "face-cap", 0) == 1);
  CHECK(latbar_job_set_option(j, "limit-states", 0) == 1);
  CHECK(latbar_job_set_option(j, nullptr, 1) == 1);

  CHECK(latbar_job_run(j) == LATBAR_OK);
}

TEST_CASE("null handles are inert") {
  CHECK(latbar_job_run(nullptr) == LATBAR_BAD_INPUT);
  CHECK(std::string(latbar_job_report(nullptr)).empty());
  CHECK(std::string(latbar_job_error(nullptr)).empty());
  CHECK(latbar_job_set_option(nullptr, "seed", 1) == 1);
  latbar_job_set_aux(nullptr, "x");  // no crash
  latbar_job_free(nullptr);          // no crash

  latbar_job* j = latbar_job_new(nullptr, nullptr, nullptr);
  JobGuard g(j);
  REQUIRE(j != nullptr);
  CHECK(latbar_job_run(j) == LATBAR_BAD_INPUT);
}
