#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "support/process.hpp"

using support::cli;
using support::data;
using support::run;

TEST_CASE("inequalities on A2") {
  auto r = run(cli("inequalities " + data("a2.quiver") + " --essential"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "EQ\tsum[all] = 0\n"
        "K\tx:{};y:{}\teul=0\tsum[] <= 0\ttrivial\n"
        "K\tx:{};y:{1}\teul=0\tsum[y:1] <= 0\n"
        "K\tx:{2};y:{1}\teul=0\tsum[x:2,y:1] <= 0\n"
        "K\tx:{1};y:{2}\teul=0\tsum[x:1,y:2] <= 0\n"
        "K\tx:{};y:{1,2}\teul=0\tsum[y:1,y:2] <= 0\n"
        "K\tx:{1};y:{1,2}\teul=0\tsum[x:1,y:1,y:2] <= 0\n"
        "K\tx:{1,2};y:{1,2}\teul=0\tsum[x:1,x:2,y:1,y:2] <= 0\ttrivial\n");
  auto p = run(cli("inequalities " + data("a2.quiver") + " --essential --prune"));
  CHECK(p.exit_code == 0);
  CHECK(p.out.rfind("EQ\tsum[all] = 0\n", 0) == 0);
}

TEST_CASE("horn listing") {
  auto r = run(cli("horn " + data("a2.quiver")));
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("K\tx:{};y:{}\teul=0\n", 0) == 0);
  CHECK(r.out.find("K\tx:{1};y:{1}") == std::string::npos);
  auto e = run(cli("horn " + data("a2.quiver") + " --essential"));
  CHECK(e.out.find("eul=1") == std::string::npos);
  CHECK(run(cli("horn " + data("a2.quiver") + " --no-memo")).out == r.out);
  CHECK(run(cli("horn " + data("a2.quiver") + " --parallel 2")).out == r.out);
}

TEST_CASE("weight membership") {
  auto yes = run(cli("check " + data("a2.quiver") + " --weights " + data("a2_cauchy.weights")));
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "MEMBER\n");
  auto no = run(cli("check " + data("a2.quiver") + " --weights " + data("a2_outside.weights")));
  CHECK(no.exit_code == 1);
  CHECK(no.out.rfind("NOT_MEMBER\tviolated\t", 0) == 0);
}

TEST_CASE("sigma subcommands") {
  auto s = run(cli("sigma " + data("a2.quiver")));
  CHECK(s.exit_code == 0);
  CHECK(s.out.rfind("EQ\tsum[2*x,2*y] = 0\n", 0) == 0);
  CHECK(s.out.find("ALPHA\tx=1,y=1\tsum[1*x,1*y] <= 0\n") != std::string::npos);
  CHECK(run(cli("sigma-check " + data("a2.quiver") + " --sigma x=1,y=-1")).exit_code == 0);
  CHECK(run(cli("sigma-check " + data("a2.quiver") + " --sigma x=-1,y=1")).exit_code == 1);
  CHECK(run(cli("sigma-check " + data("a2.quiver") + " --sigma x=1")).exit_code == 1);
}

TEST_CASE("classify and oracle reports") {
  auto c = run(cli("classify " + data("a2.quiver") + " --K 'x:1;y:2'"));
  CHECK(c.exit_code == 0);
  CHECK(c.out == "K\tx:{1};y:{2}\teul=0\tadmissible=1\tcovering=1\tressayre=1\thorn_element=1\n");
  auto o = run(cli("oracle " + data("a2.quiver") + " --K 'x:1;y:1' --seed 3"));
  CHECK(o.exit_code == 0);
  CHECK(o.out == "K\tx:{1};y:{1}\trows=1\tcols=0\trank=0\text_min=1\thom_min=0\teul=-1\tdet_nonzero=na\n");
}

TEST_CASE("selftest report") {
  auto r = run(cli("selftest " + data("a2.quiver") + " --seed 7"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.size() > 16);
  CHECK(r.out.substr(r.out.size() - 17) == "AGREEMENTS 16/16\n");
  auto s = run(cli("selftest --sweep 2,1,2 --seed 7"));
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("AGREEMENTS ") != std::string::npos);
}

TEST_CASE("LR subcommands") {
  auto c = run(cli("lr --lam 2,1 --mu 2,1 --nu 3,2,1"));
  CHECK(c.exit_code == 0);
  CHECK(c.out == "c\t2,1\t2,1\t3,2,1\t2\n");
  auto e = run(cli("lr --lam 1 --mu 1"));
  CHECK(e.out == "nu=2\tc=1\nnu=1,1\tc=1\n");
  auto s = run(cli("star-check --n 2 --s 2 --lam 1,0 --lam 1,0 --mu 1,1"));
  CHECK(s.exit_code == 0);
  CHECK(s.out == "lr=1\tcone=1\tagree=1\n");
}

TEST_CASE("errors carry a machine readable prefix") {
  const std::string bad = (std::filesystem::temp_directory_path() / "qhorn_cli_cycle.quiver").string();
  {
    std::ofstream out(bad);
    out << "vertex x 1\narrow x x\n";
  }
  auto cyc = run(cli("horn " + bad), true);
  CHECK(cyc.exit_code == 2);
  CHECK(cyc.out.rfind("ERROR 2:", 0) == 0);
  CHECK(cyc.out.find("cycle") != std::string::npos);
  std::remove(bad.c_str());

  auto missing = run(cli("horn /nonexistent/file.quiver"), true);
  CHECK(missing.exit_code == 2);
  CHECK(missing.out.rfind("ERROR 2:", 0) == 0);

  auto foreign = run(cli("classify " + data("a2.quiver") + " --K 'x:4'"), true);
  CHECK(foreign.exit_code == 2);
  CHECK(foreign.out.rfind("ERROR 2:", 0) == 0);

  auto unseeded = run(cli("oracle " + data("a2.quiver") + " --K 'x:1'"), true);
  CHECK(unseeded.exit_code == 2);
  CHECK(unseeded.out.rfind("ERROR 2:", 0) == 0);

  auto unknown = run(cli("frobnicate"), true);
  CHECK(unknown.exit_code == 2);

  auto capped = run(cli("horn " + data("a2.quiver") + " --cap 8"), true);
  CHECK(capped.exit_code == 3);
  CHECK(capped.out.rfind("ERROR 3:", 0) == 0);
}
