#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "maxorder/cli.hpp"
#include "maxorder/curves.hpp"
#include "maxorder/errors.hpp"

using namespace maxorder;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("curve specs") {
    CHECK(parse_curve_spec("x3+x").A() == 1);
    CHECK(parse_curve_spec("t4").A() == -385875);
    CHECK(parse_curve_spec("cm7").B() == -113447250);
    CHECK(parse_curve_spec("-7,6").B() == 6);
    CHECK(parse_curve_spec(" 1 , +1 ").A() == 1);
    CHECK_THROWS_AS(parse_curve_spec("nope"), UsageError);
    CHECK_THROWS_AS(parse_curve_spec("1,"), UsageError);
    CHECK_THROWS_AS(parse_curve_spec("-3,2"), SingularCurve);
    CHECK(named_curves().size() == 7);
}

TEST_CASE("rofp") {
    const Run r = run({"rofp", "--curve", "x3+x", "--p", "179"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "p=179 r=21 n=180 L=1 M=180 a_p=0 supersingular=true\n");
    const Run j = run({"rofp", "--curve", "x3-x", "--p", "537599", "--json"});
    CHECK(j.code == kExitOk);
    CHECK(j.out.find("\"r\":192") != std::string::npos);
    const Run bad = run({"rofp", "--curve", "x3+x", "--p", "2"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("bad reduction") != std::string::npos);
    CHECK(run({"rofp", "--curve", "x3+x", "--p", "100"}).code == kExitUsage);
    CHECK(run({"rofp", "--curve", "x3+x"}).code == kExitUsage);
}

TEST_CASE("records") {
    const Run r = run({"records", "--curve", "x3+x", "--pmax", "1000", "--format", "markdown"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("| 719 | 22 | 1.78 | 0.94 |") != std::string::npos);
    CHECK(run({"records", "--curve", "x3+x", "--pmax", "1000", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"records", "--curve", "x3+x", "--pmax", "1000", "--pmin-display", "3"}).code == kExitUsage);
    CHECK(run({"records", "--curve", "0,0", "--pmax", "1000"}).code == kExitUsage);
}

TEST_CASE("records output is identical across thread counts and runs") {
    const std::vector<std::string> base{"records", "--curve", "x3+1", "--pmax", "60000", "--format", "csv"};
    auto with = [&](const std::string& t) {
        auto args = base;
        args.insert(args.end(), {"--threads", t});
        return run(args).out;
    };
    const std::string one = with("1");
    CHECK(one == with("1"));
    CHECK(one == with("2"));
    CHECK(one == with("5"));
    CHECK(run({"records", "--curve", "x3+1", "--pmax", "60000", "--threads", "0"}).code == kExitUsage);
}

TEST_CASE("verify-construction") {
    const Run r = run({"verify-construction", "--curve", "x3+x", "--N", "1", "--jmax", "4", "--degree-primes", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("result: PASS") != std::string::npos);
    const Run none = run({"verify-construction", "--curve", "x3+x", "--N", "0", "--pmax", "20", "--degree-primes", "2"});
    CHECK(none.code == kExitVerificationFailed);
}

TEST_CASE("bounds") {
    const Run r = run({"bounds", "--N", "1000000"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("mode=unconditional") != std::string::npos);
    CHECK(r.out.find("limit=1.386294361") != std::string::npos);
    CHECK(run({"bounds", "--N", "1000", "--mode", "grh"}).out.find("quantity=log p") != std::string::npos);
    CHECK(run({"bounds", "--N", "0"}).code == kExitUsage);
    CHECK(run({"bounds", "--N", "5", "--mode", "riemann"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("thread default") {
    setenv("MAXORDER_THREADS", "3", 1);
    CHECK(default_thread_count() == 3);
    unsetenv("MAXORDER_THREADS");
    CHECK(default_thread_count() >= 1);
}
