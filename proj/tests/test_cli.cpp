#include "hopfcore/cli.hpp"
#include "hopfcore/errors.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace hopfcore;

namespace {

const std::string data = HOPFCORE_DATA_DIR;

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(HOPFCORE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunConfig config(std::string command, std::string instance) {
  RunConfig c;
  c.command = std::move(command);
  c.instance = std::move(instance);
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

} // namespace

TEST_CASE("build reports") {
  RunConfig c = config("build", data + "/heis.json");
  c.degree = 4;
  const CommandResult r = cmd_build(c);
  CHECK(r.exit_code == exit_pass);
  CHECK(r.report["pipeline"]["layer_dims"] == json::array({1, 4, 10, 20, 35}));

  const CommandResult g = cmd_build(config("build", data + "/grouplike.json"));
  CHECK(g.exit_code == exit_fail);
  CHECK(g.report["pipeline"]["failed_stage"] == "check_connected");

  RunConfig x = config("build", data + "/xyw.json");
  x.degree = 4;
  const json gens = cmd_build(x).report["pipeline"]["generators"];
  CHECK(gens == json::parse(R"([{"id":"x","degree":1},{"id":"y","degree":1},{"id":"w","degree":2}])"));
}

TEST_CASE("verify reports") {
  RunConfig h = config("verify", data + "/heis.json");
  h.degree = 4;
  const CommandResult rh = cmd_verify(h);
  CHECK(rh.exit_code == exit_pass);
  CHECK(rh.checks.count(Status::pass, "tech1") == 35);
  CHECK(rh.checks.count(Status::pass, "comH") > 0);
  CHECK(rh.checks.count(Status::pass, "basis_m") == 34);

  RunConfig x = config("verify", data + "/xyw.json");
  x.degree = 4;
  const CommandResult rx = cmd_verify(x);
  CHECK(rx.exit_code == exit_pass);
  bool tech1_w = false;
  for (const auto& l : rx.checks.lines())
    if (l.check == "tech1" && l.subject == "w")
      tech1_w = l.status == Status::pass;
  CHECK(tech1_w);

  const CommandResult bad = cmd_verify(config("verify", data + "/corrupted_comult.json"));
  CHECK(bad.exit_code == exit_fail);
  bool violation = false;
  for (const auto& l : bad.checks.lines())
    if (l.check == "tech1" && l.status == Status::fail)
      violation = l.detail.find("Tech1Violation") != std::string::npos;
  CHECK(violation);
}

TEST_CASE("conv reports") {
  RunConfig m = config("conv", "");
  m.ring = "m2q";
  m.trials = 100;
  m.seed = 42;
  const CommandResult rm = cmd_conv(m);
  CHECK(rm.exit_code == exit_pass);
  CHECK(rm.report["tech2_pass"] == 100);
  CHECK(rm.report["prime_witnesses"] == 100);

  RunConfig n = config("conv", "");
  n.ring = "qx2";
  n.trials = 10;
  const CommandResult rn = cmd_conv(n);
  CHECK(rn.exit_code == exit_pass);
  CHECK(rn.checks.count(Status::pass, "nilpotent") == 1);

  RunConfig q = config("conv", "");
  q.ring = "qxq";
  q.trials = 10;
  const CommandResult rq = cmd_conv(q);
  CHECK(rq.report["semiprime_witnesses"] == 10);
  bool refuted = false;
  for (const auto& l : rq.checks.lines())
    if (l.check == "prime_refuted")
      refuted = l.detail == "((1,0), (0,1))";
  CHECK(refuted);

  RunConfig f = config("conv", "");
  f.ring = data + "/nilpotent_ring.json";
  f.trials = 5;
  CHECK(cmd_conv(f).checks.count(Status::pass, "nilpotent") == 1);
}

TEST_CASE("hcore reports") {
  RunConfig c = config("hcore", data + "/sl2.json");
  c.action = data + "/sl2_on_xy.json";
  c.degree = 5;
  c.probe_bound = 2;
  const CommandResult r = cmd_hcore(c);
  CHECK(r.exit_code == exit_pass);
  CHECK(r.report["core"]["basis"].empty());
  CHECK(r.report["core"]["stabilized"] == true);

  c.ideal = "whole";
  const CommandResult w = cmd_hcore(c);
  CHECK(w.exit_code == exit_pass);
  CHECK(w.report["core"]["basis"].size() == 15);
  CHECK(w.checks.count(Status::skipped, "probe_domain") == 1);

  RunConfig d = config("hcore", data + "/abelian1.json");
  d.action = data + "/d_on_x.json";
  CHECK(cmd_hcore(d).report["core"]["basis"].empty());

  RunConfig s = config("hcore", data + "/xyw.json");
  s.action = data + "/xyw_on_st.json";
  CHECK(cmd_hcore(s).checks.count(Status::fail) == 0);
}

TEST_CASE("exit codes of the binary") {
  CHECK(cli("build --instance " + data + "/heis.json --degree 3").code == exit_pass);
  CHECK(cli("build --instance " + data + "/grouplike.json").code == exit_fail);
  CHECK(cli("build --instance /nonexistent.json").code == exit_format);
  CHECK(cli("build --instance " + data + "/sl2_on_xy.json").code == exit_format);
  CHECK(cli("frobnicate").code == exit_format);
  CHECK(cli("conv --ring nope --trials 2").code == exit_format);
  // Cap 4 leaves the core unsettled: inconclusive only.
  CHECK(cli("hcore --instance " + data + "/sl2.json --action " + data + "/sl2_on_xy.json").code ==
        exit_inconclusive);
  const Run ok = cli("build --instance heis --degree 2");
  CHECK(ok.out.find("PASS basis n=2: dim 10") != std::string::npos);
}

TEST_CASE("identical seeds give byte-identical reports") {
  const std::string a = "/tmp/hopfcore_test_a.json", b = "/tmp/hopfcore_test_b.json";
  for (const std::string& args : std::vector<std::string>
       {"verify --instance " + data + "/xyw.json --seed 5 --trials 30",
        std::string("conv --ring m2q --trials 30 --seed 42"),
        "hcore --instance " + data + "/sl2.json --degree 5 --action " + data + "/sl2_on_xy.json"}) {
    const Run r1 = cli(args + " --out " + a);
    const Run r2 = cli(args + " --out " + b);
    CHECK(r1.out == r2.out);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
  }
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("command-line ideal forms") {
  const auto A = std::make_shared<const DeskAlgebra>(DeskAlgebra::polynomial({"x", "y"}, 3));
  CHECK(make_ideal(A, std::string("(x, y^2)")).space().dim() == 8);
  CHECK(make_ideal(A, std::string("zero")).space().dim() == 0);
  CHECK_THROWS_AS(make_ideal(A, std::string("(z)")), FormatError);
  CHECK_THROWS_AS(make_ideal(A, std::string("x")), FormatError);
}
