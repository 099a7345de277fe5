#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "selfsim/cli.hpp"

namespace {

struct CliRun {
  int rc;
  std::string out, err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int rc = selfsim::run_cli(args, out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST_CASE("alpha prints the digit line") {
  auto r = cli({"alpha", "--eta", "int:6", "-n", "4"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1 1 1 0\n");
  CHECK(cli({"alpha", "--eta", "int:2", "-n", "5"}).out == "1 0 0 0 0\n");
  CHECK(cli({"alpha", "--eta", "seed:0xC0FFEE:128", "-n", "16"}).out ==
        "1 1 1 0 1 1 1 1 1 1 0 1 0 1 1 1\n");
  CHECK(cli({"alpha", "--eta", "rat:6/5", "-n", "8"}).out == "1 1 0 1 1 0 1 1\n");
}

TEST_CASE("alpha verbose appends the division chain") {
  auto r = cli({"alpha", "--eta", "int:6", "-n", "2", "--verbose"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1 1\np1: -2/3\np2: -10/9\n");
}

TEST_CASE("digits prints expansions least significant first") {
  CHECK(cli({"digits", "--eta", "int:6", "--value", "2", "-n", "5"}).out == "01110\n");
  CHECK(cli({"digits", "--eta", "int:2", "--value", "3", "-n", "4"}).out == "1100\n");
  CHECK(cli({"digits", "--eta", "int:6", "--value", "0", "-n", "6"}).out == "000000\n");
}

TEST_CASE("act prints the image vertex") {
  CHECK(cli({"act", "--machine", "adding", "--element", "1", "--vertex", "011"}).out ==
        "111\n");
  // identity echoes the vertex
  CHECK(cli({"act", "--machine", "adding", "--element", "0", "--vertex", "0101"}).out ==
        "0101\n");
}

TEST_CASE("machine and element grammars cover the constructions") {
  CHECK(cli({"act", "--machine", R"({"type":"product","left":"adding","right":"adding"})",
             "--element", R"({"left":1,"right":2})", "--vertex", "00"})
            .out == "21\n");
  CHECK(cli({"act", "--machine", R"({"type":"economical","base":"adding","dimension":3})",
             "--element", "[1,0,0]", "--vertex", "01"})
            .out == "11\n");
  auto c2 = cli({"portrait", "--machine", R"({"type":"c2","base":"adding"})", "--element",
                 R"({"sigma":1})", "--depth", "1"});
  CHECK(c2.out == "\xce\xb5\t(0 1)(2 3)\n");
  auto lamp = cli({"states", "--machine",
                   R"({"type":"lamplighter","base":"adding","modulus":2})", "--element",
                   R"({"lamps":[{"pos":0,"val":1}]})", "--budget", "10"});
  CHECK(lamp.rc == 0);
  CHECK(lamp.out == "count: 2\nstatus: closed\nstate: {0:1}|0\nstate: {}|0\n");
}

TEST_CASE("dyadic elements come as rationals or digit words") {
  // the word 01110 in base 6 names 258, congruent to 2 modulo 2^5
  CHECK(cli({"act", "--machine", R"({"type":"dyadic","eta":"int:6"})", "--element",
             R"({"digits":[0,1,1,1,0]})", "--vertex", "00000"})
            .out == "01110\n");
  auto via_elem = cli({"act", "--machine", R"({"type":"dyadic","eta":"int:6"})",
                       "--element", R"({"rational":"1/3"})", "--vertex", "000000"});
  auto via_digits = cli({"digits", "--eta", "int:6", "--value", "1/3", "-n", "6"});
  CHECK(via_elem.out == via_digits.out);
}

TEST_CASE("portrait lists vertices with their cycles") {
  auto r = cli({"portrait", "--machine", "adding", "--element", "1", "--depth", "2"});
  CHECK(r.rc == 0);
  CHECK(r.out == "\xce\xb5\t(0 1)\n0\t()\n1\t(0 1)\n");
}

TEST_CASE("states reports count, status, and canonical renderings") {
  auto r = cli({"states", "--machine", "adding", "--element", "1", "--budget", "10"});
  CHECK(r.out == "count: 2\nstatus: closed\nstate: 0\nstate: 1\n");
  r = cli({"states", "--machine", "adding", "--element", "5", "--budget", "3"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("status: budget_exhausted\n") != std::string::npos);
}

TEST_CASE("verify prints one status line and sets the exit code") {
  auto r = cli({"verify", "--suite", "action-axioms", "--machine", "adding", "--trials",
                "50", "--seed", "7"});
  CHECK(r.rc == 0);
  CHECK(r.out == "PASS action-axioms trials=50 depth=8\n");

  r = cli({"verify", "--suite", "transitivity", "--machine", "adding", "--depth", "10"});
  CHECK(r.rc == 0);
  CHECK(r.out == "PASS transitivity depth=10 orbit=1024/1024\n");

  // base 2 collapses every higher basis vector, so the probe finds them
  r = cli({"verify", "--suite", "corefree", "--machine", R"({"type":"zomega","eta":"int:2"})",
           "--max-len", "1", "--depth", "8"});
  CHECK(r.rc == 1);
  CHECK(r.out.substr(0, 4) == "FAIL");
}

TEST_CASE("verify can borrow the base from the machine spec") {
  auto r = cli({"verify", "--suite", "digits-roundtrip", "--machine",
                R"({"type":"dyadic","eta":"int:6"})", "--trials", "20", "--seed", "1"});
  CHECK(r.rc == 0);
  CHECK(r.out.substr(0, 4) == "PASS");
}

TEST_CASE("invalid input exits 2") {
  CHECK(cli({"digits", "--eta", "int:6", "--value", "1/2", "-n", "4"}).rc == 2);
  CHECK(cli({"alpha", "--eta", "int:5", "-n", "3"}).rc == 2);
  CHECK(cli({"alpha", "--eta", "nonsense", "-n", "3"}).rc == 2);
  CHECK(cli({"act", "--machine", "{broken", "--element", "1", "--vertex", "0"}).rc == 2);
  CHECK(cli({"act", "--machine", R"({"type":"dyadic"})", "--element", "1", "--vertex",
             "0"})
            .rc == 2);
  CHECK(cli({"act", "--machine", "adding", "--element", "1", "--vertex", "012"}).rc == 2);
  CHECK(cli({"verify", "--suite", "no-such-suite", "--seed", "1"}).rc == 2);
  CHECK(cli({"verify", "--suite", "action-axioms", "--machine", "adding"}).rc == 2);
  CHECK(cli({"verify", "--suite", "intertwining", "--seed", "3"}).rc == 2);
  CHECK(cli({"bogus"}).rc == 2);
  CHECK(cli({}).rc == 2);
}

TEST_CASE("running out of window bits exits 3") {
  auto r = cli({"alpha", "--eta", "seed:7:8", "-n", "9"});
  CHECK(r.rc == 3);
  CHECK(!r.err.empty());
}

TEST_CASE("help goes to stdout and exits 0") {
  auto r = cli({"--help"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("alpha") != std::string::npos);
}

TEST_CASE("identical invocations are byte identical") {
  auto a = cli({"verify", "--suite", "boundary", "--eta", "int:6", "--trials", "20",
                "--seed", "42"});
  auto b = cli({"verify", "--suite", "boundary", "--eta", "int:6", "--trials", "20",
                "--seed", "42"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
}
