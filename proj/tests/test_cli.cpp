#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(RIMFORGE_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string value_of(const std::string& out, const std::string& key) {
  std::string needle = key + ": ";
  auto pos = out.find(needle);
  if (pos == std::string::npos) return "";
  auto end = out.find('\n', pos);
  return out.substr(pos + needle.size(), end - pos - needle.size());
}

}  // namespace

TEST_CASE("cli: branched covers of the spec examples") {
  RunResult r = run_cli("branched-cover --knot \"twobridge(3,1)\" --d 3");
  CHECK(r.exit_code == 0);
  CHECK(value_of(r.out, "result.order") == "8");

  r = run_cli("branched-cover --knot \"twobridge(1,1)\" --d 4");
  CHECK(r.exit_code == 0);
  CHECK(value_of(r.out, "result.order") == "1");

  r = run_cli("branched-cover --knot \"torus(2,5)\" --d 3");
  CHECK(r.exit_code == 0);
  CHECK(value_of(r.out, "result.order") == "120");
}

TEST_CASE("cli: rim surgery produces the dihedral group") {
  RunResult r = run_cli(
      "rim-surgery --base \"<u|u^2>\" --meridian u --steps \"[(twobridge(5,3),2)]\"");
  CHECK(r.exit_code == 0);
  CHECK(value_of(r.out, "result.order") == "10");
  CHECK(value_of(r.out, "result.abelianization") == "Z/2");

  // empty steps echo the base
  r = run_cli("rim-surgery --base \"<u|u^2>\" --meridian u --steps \"[]\"");
  CHECK(r.exit_code == 0);
  CHECK(value_of(r.out, "result.order") == "2");
}

TEST_CASE("cli: byte-identical output for identical inputs") {
  const std::string cmd =
      "rim-surgery --base \"<u|u^2>\" --meridian u "
      "--steps \"[(twobridge(5,3),2),(twobridge(3,1),3)]\" --format json";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("cli: normalized echo round-trips") {
  RunResult first = run_cli("alexander --knot \"Jn(Torus(5,3), 2)\"");
  CHECK(first.exit_code == 0);
  std::string echo = value_of(first.out, "input.knot");
  CHECK(!echo.empty());
  RunResult second = run_cli("alexander --knot \"" + echo + "\"");
  CHECK(second.out == first.out);
}

TEST_CASE("cli: exit codes encode the report status") {
  // parse error -> 1
  RunResult r = run_cli("alexander --knot \"torus(2,4)\"");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("error") != std::string::npos);

  // indeterminate -> 2
  r = run_cli("kd --group \"<a,b|a^2,b^3>\" --gamma \"(a*b)^7\" --max-cosets 1000");
  CHECK(r.exit_code == 2);

  // ok -> 0
  r = run_cli("kd --group \"<x|x^2>\" --gamma x");
  CHECK(r.exit_code == 0);
  CHECK(value_of(r.out, "result.kd") == "HOLDS(2)");
}

TEST_CASE("cli: RIMFORGE_MAX_COSETS sets the default budget") {
  std::string cmd = std::string("RIMFORGE_MAX_COSETS=800 ") + RIMFORGE_CLI_PATH +
                    " kd --group \"<a,b|a^2,b^3>\" --gamma \"(a*b)^7\" 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 2);
  CHECK(out.find("INDETERMINATE") != std::string::npos);
}

TEST_CASE("cli: parse errors carry positions") {
  RunResult r = run_cli("kd --group \"<x|x^2\" --gamma x");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("offset") != std::string::npos);
}

TEST_CASE("cli: symplectic pipeline report") {
  RunResult r = run_cli("symplectic --group \"<x|x^6>\" --gamma x");
  CHECK(r.exit_code == 0);
  CHECK(value_of(r.out, "result.kd") == "HOLDS(6)");
  CHECK(value_of(r.out, "result.md.order") == "6");
  CHECK(value_of(r.out, "result.m.order") == "1");
}
