#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "otwb.h"

namespace {

struct Session {
  otwb_session* s = otwb_session_new();
  ~Session() { otwb_session_free(s); }
};

}  // namespace

TEST_CASE("list of check ids") {
  Session ses;
  char* out = nullptr;
  REQUIRE(otwb_list_checks(ses.s, &out) == OTWB_OK);
  std::string ids(out);
  otwb_string_free(out);
  CHECK(ids.find("eulerian") != std::string::npos);
  CHECK(ids.find("conj-5.2") != std::string::npos);
}

TEST_CASE("running the smallest case succeeds") {
  Session ses;
  char* reports = nullptr;
  int exit_code = -1;
  REQUIRE(otwb_run(ses.s, "", 2, 2, 0, &reports, &exit_code) == OTWB_OK);
  CHECK(exit_code == 0);
  std::string text(reports);
  otwb_string_free(reports);
  CHECK(text.find("\"id\":\"eulerian\"") != std::string::npos);
  CHECK(text.find("\"status\":\"fail\"") == std::string::npos);
}

TEST_CASE("fault injection surfaces through the exit code") {
  Session ses;
  char* reports = nullptr;
  int exit_code = 0;
  REQUIRE(otwb_run(ses.s, "eulerian", 2, 2, OTWB_RUN_INJECT_FAULT, &reports, &exit_code) == OTWB_OK);
  CHECK(exit_code != 0);
  std::string text(reports);
  otwb_string_free(reports);
  CHECK(text.find("fault-injection") != std::string::npos);
}

TEST_CASE("argument validation sets last_error") {
  Session ses;
  char* reports = nullptr;
  int exit_code = 0;
  CHECK(otwb_run(ses.s, "", 5, 2, 0, &reports, &exit_code) == OTWB_ERR_INVALID_ARGUMENT);
  CHECK(std::string(otwb_last_error(ses.s)) == "invalid n range");
  CHECK(otwb_run(ses.s, "no-such-check", 2, 2, 0, &reports, &exit_code) == OTWB_ERR_INVALID_ARGUMENT);
  CHECK(std::string(otwb_last_error(ses.s)).find("no-such-check") != std::string::npos);
  CHECK(otwb_run(nullptr, "", 2, 2, 0, &reports, &exit_code) == OTWB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("character table export") {
  Session ses;
  char* out = nullptr;
  REQUIRE(otwb_character_table_csv(ses.s, 3, &out) == OTWB_OK);
  std::string csv(out);
  otwb_string_free(out);
  CHECK(csv.rfind("partition,", 0) == 0);
  CHECK(csv.find("2.1") != std::string::npos);
  char* bad = nullptr;
  CHECK(otwb_character_table_csv(ses.s, 0, &bad) == OTWB_ERR_INVALID_ARGUMENT);
}
