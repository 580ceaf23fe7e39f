// Black-box tests for the gpoly binary.  argv[1] is the binary, argv[2] the
// directory with the checked-in graph files.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;
std::string gpoly;
std::string data;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = gpoly + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "FATAL: popen failed for: " << cmd << "\n";
    std::exit(2);
  }
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

void expect_eq(const std::string& got, const std::string& want, const std::string& what) {
  if (got != want) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n  want: " << want << "\n  got:  " << got << "\n";
  }
}

std::string file(const std::string& name) { return data + "/" + name; }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cli_tests <gpoly-binary> <data-dir>\n";
    return 2;
  }
  gpoly = argv[1];
  data = argv[2];

  {
    RunResult r = run("compute ubar " + file("triangle.el"));
    expect(r.exit_code == 0, "compute ubar exits 0");
    expect_eq(r.output, "z[1,0]^3 + 3*z[1,0]*z[2,0] + 3*z[3,0] + z[3,1]\n", "ubar of the triangle");
  }
  {
    RunResult r = run("compute u " + file("g1.el"));
    RunResult s = run("compute u " + file("g2.el"));
    expect(r.exit_code == 0 && s.exit_code == 0, "compute u exits 0");
    expect_eq(r.output, "x[1]^3*y + 2*x[1]*x[2]*y + x[3]*y\n", "u of the loop graph");
    expect_eq(s.output, r.output, "u ignores loop placement");
  }
  {
    RunResult r = run("compute wbar " + file("triangle_w123.el"));
    expect_eq(r.output,
              "z[1,0]*z[2,0]*z[3,0] + z[1,0]*z[5,0] + z[2,0]*z[4,0] + z[3,0]^2 + "
              "3*z[6,0] + z[6,1]\n",
              "wbar of the weighted triangle");
  }
  {
    RunResult r = run("compute v-function " + file("loop1.el"));
    expect_eq(r.output, "yk[1]\n", "v-function of a single loop");
  }
  {
    RunResult r = run("compute ybar " + file("triangle.el"));
    expect_eq(r.output, "p[1,0]^3 + 3*p[2,1]*p[1,0] + 3*p[3,2] + p[3,3]\n",
              "ybar of the triangle");
  }
  {
    RunResult r = run("compute ubar - < " + file("triangle.el"));
    expect_eq(r.output, "z[1,0]^3 + 3*z[1,0]*z[2,0] + 3*z[3,0] + z[3,1]\n", "stdin input");
  }
  {
    RunResult r = run("compare u " + file("g1.el") + " " + file("g2.el"));
    expect(r.exit_code == 0, "compare u exits 0 on equal graphs");
    expect_eq(r.output, "EQUAL\n", "compare u output");
  }
  {
    RunResult r = run("compare ubar " + file("g1.el") + " " + file("g2.el"));
    expect(r.exit_code == 1, "compare ubar exits 1 on differing graphs");
    expect(r.output.rfind("DIFFER at ", 0) == 0, "compare ubar names the first difference");
  }
  {
    RunResult r = run("compare ubar " + file("brylawski1.el") + " " + file("brylawski2.el"));
    expect(r.exit_code == 0, "the 11-vertex pair shares ubar");
    expect_eq(r.output, "EQUAL\n", "compare ubar on the 11-vertex pair");
  }
  {
    RunResult one = run("compute ubar " + file("brylawski1.el") + " --jobs 1");
    RunResult four = run("compute ubar " + file("brylawski1.el") + " --jobs 4");
    expect(one.exit_code == 0 && four.exit_code == 0, "parallel compute exits 0");
    expect(one.output == four.output, "output is identical across worker counts");
  }
  {
    RunResult text = run("compute ybar " + file("triangle.el"));
    RunResult chained = run("compute ubar " + file("triangle.el") + " --format json | " + gpoly +
                            " convert --from ubar --to ybar-p - --format text");
    expect_eq(chained.output, text.output, "convert ubar -> ybar-p matches direct ybar");
  }
  {
    RunResult back = run("compute ubar " + file("g1.el") + " --format json | " + gpoly +
                         " convert --from ubar --to ybar-p - | " + gpoly +
                         " convert --from ybar-p --to ubar - --format text");
    RunResult direct = run("compute ubar " + file("g1.el"));
    expect_eq(back.output, direct.output, "ubar -> ybar-p -> ubar round trip");
  }
  {
    RunResult ext = run("compute ubar " + file("g2.el") + " --format json | " + gpoly +
                        " convert --from ubar --to ext-polychromate - --format text");
    RunResult direct = run("compute ext-polychromate " + file("g2.el"));
    expect_eq(ext.output, direct.output, "convert reaches the extended polychromate");
  }
  {
    RunResult r = run("compute ubar " + file("big.el"), true);
    expect(r.exit_code == 3, "guard trips with exit 3");
    expect(r.output.find("--force") != std::string::npos, "guard message suggests --force");
  }
  {
    RunResult r = run("compute tutte " + file("nonexistent.el"));
    expect(r.exit_code == 2, "missing file exits 2");
    RunResult s = run("compute nosuch " + file("triangle.el"));
    expect(s.exit_code == 4, "unknown invariant exits 4");
  }
  {
    RunResult r = run("verify examples");
    expect(r.exit_code == 0, "verify examples exits 0");
    expect(r.output.find("result: PASS") != std::string::npos, "verify examples passes");
  }
  {
    RunResult r = run("search --graphs " + file("brylawski.g6"));
    expect(r.exit_code == 0, "search exits 0");
    expect(r.output.find("graphs processed:        2") != std::string::npos,
           "search ingests both graphs");
    expect(r.output.find("counterexamples:         0") != std::string::npos,
           "search finds no counterexample");
    expect(r.output.find("(2 graphs, 1 ubar class)") != std::string::npos,
           "the pair lands in one bucket with one ubar class");
  }
  {
    RunResult one = run("search --enumerate 4 --jobs 1");
    RunResult three = run("search --enumerate 4 --jobs 3");
    expect(one.exit_code == 0 && three.exit_code == 0, "search enumerate exits 0");
    expect(one.output == three.output, "search output is identical across worker counts");
  }

  if (failures == 0) {
    std::cout << "cli tests passed\n";
    return 0;
  }
  std::cerr << failures << " cli test(s) failed\n";
  return 1;
}
