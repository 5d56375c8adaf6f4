#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sstream>

#include "acell/cli.hpp"

using namespace acell;

namespace {

std::string data_dir;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::string& verb, std::map<std::string, std::vector<std::string>> options) {
  Command c{verb, std::move(options)};
  std::ostringstream out, err;
  const int code = run_command(c, out, err);
  return {code, out.str(), err.str()};
}

std::string datum(const std::string& name) { return data_dir + "/" + name; }

}  // namespace

TEST_CASE("schur") {
  CHECK(run("schur", {{"m", {"2"}}, {"weight", {"2,0"}}}).out == "z1^2 + z1*z2 + z2^2\n");
  CHECK(run("schur", {{"m", {"2"}}, {"weight", {"0,-1"}}}).out == "z2^-1 + z1^-1\n");
  CHECK(run("schur", {{"m", {"2,1"}}, {"weight", {"1,1/-1"}}}).out == "z[1][1]*z[1][2]*z[2][1]^-1\n");
  CHECK(run("schur", {{"m", {"2"}}, {"weight", {"1,0"}}, {"format", {"records"}}}).out ==
        "poly=z1 + z2\n");
  const Run bad = run("schur", {{"m", {"2"}}, {"weight", {"0,1"}}});
  CHECK(bad.code == kExitError);
  CHECK(bad.out.empty());
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run("schur", {{"m", {"2"}}}).code == kExitUsage);
  CHECK(run("schur", {{"m", {"2"}}, {"weight", {"1,0/1"}}}).code == kExitUsage);
  CHECK(run("schur", {{"m", {"x"}}, {"weight", {"1,0"}}}).code == kExitUsage);
}

TEST_CASE("expand and pair") {
  CHECK(run("expand", {{"m", {"2"}}, {"poly", {"(z1+z2)^2"}}}).out == "s(2,0) + s(1,1)\n");
  CHECK(run("expand", {{"m", {"2"}}, {"poly", {"(z1+z2)^2"}}, {"method", {"project"}}}).out ==
        "s(2,0) + s(1,1)\n");
  CHECK(run("expand", {{"m", {"2"}}, {"poly", {"z1^5+z2^5"}}, {"method", {"project"}}}).code ==
        kExitError);
  CHECK(run("expand", {{"m", {"2"}}, {"poly", {"z1^5+z2^5"}}, {"method", {"project"}},
                       {"bound", {"5"}}})
            .out == "s(5,0) - s(4,1)\n");
  CHECK(run("expand", {{"m", {"2"}}, {"poly", {"z1"}}}).code == kExitError);
  CHECK(run("expand", {{"m", {"2"}}, {"poly", {"z1+z2"}}, {"method", {"guess"}}}).code == kExitUsage);
  const Run parse = run("expand", {{"m", {"2"}}, {"poly", {"z1 + w"}}});
  CHECK(parse.code == kExitError);
  CHECK(parse.err == "error: column 6: unknown identifier 'w'\n");

  CHECK(run("pair", {{"m", {"2"}}, {"f", {"s(1,0)"}}, {"g", {"s(1,0)"}}}).out == "1\n");
  CHECK(run("pair", {{"m", {"2"}}, {"f", {"s(2,0)"}}, {"g", {"s(1,1)"}}}).out == "0\n");
  CHECK(run("pair", {{"m", {"2"}}, {"f", {"q*s(1,0)"}}, {"g", {"z1+z2"}}, {"format", {"records"}}}).out ==
        "inner=q\n");
}

TEST_CASE("mult") {
  const Run r = run("mult", {{"datum", {datum("three_labels.dat")}},
                             {"x", {"b1 | 1 | b2"}},
                             {"y", {"b1 | z1 + z2 | b1"}}});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "b1 | q^-1*s(2,0) + q^-1*s(1,1) | b1\n");
  CHECK(run("mult", {{"datum", {datum("unit.dat")}}, {"x", {"b0 | 1 | b0"}}, {"y", {"b0 | 1 | b0"}}}).out ==
        "b0 | s(0,0) | b0\n");
  CHECK(run("mult", {{"datum", {datum("unit.dat")}}, {"x", {"0"}}, {"y", {"b0 | 1 | b0"}}}).out == "0\n");
  CHECK(run("mult", {{"datum", {datum("unit.dat")}}, {"x", {"b0 | 1 | b7"}}, {"y", {"0"}}}).code ==
        kExitError);
  CHECK(run("mult", {{"datum", {datum("nope.dat")}}, {"x", {"0"}}, {"y", {"0"}}}).code == kExitError);
}

TEST_CASE("check") {
  const Run r = run("check", {{"datum", {datum("unit.dat")}}});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("layer_idempotent yes\n") != std::string::npos);

  const Run s = run("check", {{"datum", {datum("sigma_fail.dat")}}, {"format", {"records"}}});
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("check.b=FAIL\n") != std::string::npos);
  CHECK(s.out.find("layer_idempotent=inconclusive\n") != std::string::npos);

  const Run chain = run("check", {{"datum", {datum("unit.dat"), datum("det_unit.dat")}},
                                  {"format", {"records"}}});
  CHECK(chain.out.find("layer.2.datum=det_unit.dat\n") != std::string::npos);
  CHECK(chain.out.find("chain_idempotent=yes\n") != std::string::npos);

  const Run bad = run("check", {{"datum", {datum("asymmetric.dat")}}});
  CHECK(bad.code == kExitError);
  CHECK(bad.err == "error: invalid datum: gram not block-symmetric at (b,b)\n");
  CHECK(run("check", {}).code == kExitUsage);
  CHECK(run("check", {{"datum", {datum("unit.dat")}}, {"seed", {"x"}}}).code == kExitUsage);

  // Same seed, same bytes.
  const auto opts = std::map<std::string, std::vector<std::string>>{
      {"datum", {datum("three_labels.dat")}}, {"seed", {"5"}}, {"samples", {"6"}}};
  CHECK(run("check", opts).out == run("check", opts).out);
}

TEST_CASE("simples") {
  const Run r = run("simples", {{"datum", {datum("rank_one.dat")}}, {"point", {"5"}}});
  CHECK(r.out == "point 5 | drinfeld u - 5 | has_simple true | rank 1\n");
  const Run d = run("simples", {{"datum", {datum("three_labels.dat")}},
                                {"drinfeld", {"u^2 - 5*u + 6"}},
                                {"format", {"records"}}});
  CHECK(d.out == "point.1=2,3\ndrinfeld.1=u^2 - 5*u + 6\nhas_simple.1=true\nrank.1=3\n");
  const Run z = run("simples", {{"datum", {datum("zero_gram.dat")}}, {"point", {"(1/2)"}}});
  CHECK(z.out == "point (1/2) | drinfeld u - 1/2 | has_simple false | rank 0\n");
  const Run irr = run("simples", {{"datum", {datum("unit.dat")}}, {"drinfeld", {"u^2 + 1"}}});
  CHECK(irr.code == kExitError);
  CHECK(irr.err.find("u^2 + 1") != std::string::npos);
  CHECK(run("simples", {{"datum", {datum("unit.dat")}}}).code == kExitUsage);
  CHECK(run("simples", {{"datum", {datum("unit.dat")}}, {"point", {"0,1"}}}).code == kExitError);
}

TEST_CASE("unknown verb and format") {
  CHECK(run("frobnicate", {}).code == kExitUsage);
  CHECK(run("schur", {{"m", {"1"}}, {"weight", {"1"}}, {"format", {"json"}}}).code == kExitUsage);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  data_dir = TEST_DATA_DIR;
  return ctx.run();
}
