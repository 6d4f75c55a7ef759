// Drives the installed CLI binary (path in GTPOLY_BIN) and checks outputs,
// exit codes and byte determinism.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::string bin() {
  const char* b = std::getenv("GTPOLY_BIN");
  if (!b) {
    std::cerr << "GTPOLY_BIN not set\n";
    std::exit(1);
  }
  return b;
}

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = bin() + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {127, {}};
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int rc = pclose(p);
  return {WEXITSTATUS(rc), out};
}

int failures = 0;

void expect(bool cond, const std::string& what) {
  if (!cond) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

void expect_contains(const Result& r, const std::string& needle, const std::string& what) {
  expect(r.out.find(needle) != std::string::npos, what + " (missing `" + needle + "` in: " + r.out + ")");
}

}  // namespace

int main() {
  {
    Result r = run("vertices --family B --rank 2 --omega 0,1 --format json");
    expect(r.status == 0, "vertices exit status");
    expect(r.out ==
               "[[[1,2],[0,1],[0,1],[0,1]],[[1,2],[0,1],[1,2],[0,1]],"
               "[[1,2],[0,1],[1,2],[1,2]],[[1,2],[1,2],[1,2],[0,1]],"
               "[[1,2],[1,2],[1,2],[1,2]]]\n",
           "exactly the five expected vertices in sorted JSON");
    // byte determinism
    Result r2 = run("vertices --family B --rank 2 --omega 0,1 --format json");
    expect(r.out == r2.out, "vertices output is byte-stable");
  }
  {
    Result r = run("is-lattice --family D --rank 4 --omega 0,0,0,1");
    expect(r.status == 2, "is-lattice exit code 2 on the odd spin weight");
    expect_contains(r, "odd", "is-lattice cites the odd pairing sum");
    expect_contains(r, "witness", "is-lattice shows the witness");
    Result r0 = run("is-lattice --family C --rank 3 --omega 1,1,1");
    expect(r0.status == 0, "is-lattice exit 0 for the symplectic family");
  }
  {
    Result r = run("map --family D --rank 3 --eps 4,2,0 --string 1,1,3,2,2,1 --format json");
    expect(r.status == 0, "map exit status");
    expect_contains(r, "\"zup\":[[1,1],[1,1]]", "map zup values");
    expect_contains(r, "\"zdown\":[[1,1]]", "map zdown values");
    expect_contains(r, "\"z\":[[[3,1]]]", "map z value");
    expect_contains(r, "\"y\":[[[2,1],[0,1]],[[0,1]]]", "map y values");
  }
  {
    Result r = run("count --family A --rank 2 --eps 4,2 --lattice integers");
    expect(r.status == 0, "count exit status");
    expect(r.out == "27\n", "A2 (4,2) count output");
    Result d = run("dim --family A --rank 2 --eps 4,2");
    expect(d.out == "27\n", "dim output");
  }
  {
    Result r = run("reflexive --family D --rank 3 --kind stringD --omega 2,2,2");
    expect(r.status == 0, "reflexive exit 0");
    expect_contains(r, "(1, 1, 3, 2, 2, 1)", "reflexive interior point");
    Result r2 = run("reflexive --family A --rank 2 --eps 3,1");
    expect(r2.status == 2, "reflexive exit 2 on a non-reflexive weight");
  }
  {
    Result r = run("sweep --family B --rank 2 --max-omega 2");
    expect(r.status == 0, "sweep exit status");
    expect_contains(r, "mismatches: 0", "sweep reports zero mismatches");
    expect_contains(r, "witness=", "sweep shows witnesses on non-lattice rows");
  }
  {
    Result r = run("sweep --family C --rank 2 --max-omega 2");
    expect(r.status == 0, "symplectic sweep exit status");
    expect(r.out.find("non-lattice") == std::string::npos, "every symplectic row is lattice");
  }
  {
    Result r = run("sweep --family D --rank 4 --max-omega 1");
    expect(r.status == 0, "rank-4 sweep exit status");
    size_t nonlattice = 0;
    for (size_t pos = 0; (pos = r.out.find("observed=non-lattice", pos)) != std::string::npos;
         ++pos)
      ++nonlattice;
    expect(nonlattice == 8, "spin-adjacent rows are the non-lattice ones");
    expect_contains(r, "omega=(0, 0, 0, 1) eps=(1/2, 1/2, 1/2, 1/2) predicted=non-lattice",
                    "the half-spin row is non-lattice");
    expect_contains(r, "omega=(0, 1, 0, 0) eps=(1, 1, 0, 0) predicted=lattice",
                    "the second fundamental row is lattice");
  }
  {
    Result r = run("diagram --family D --rank 3 --eps 2,1,0 --point 2,0,1,2,0,2,2 --format dot");
    expect(r.status == 0, "diagram exit status");
    expect_contains(r, "digraph", "diagram emits DOT");
    expect_contains(r, "\"zdown_1\"", "diagram names the isolated node");
    Result r2 = run("diagram --family D --rank 3 --eps 2,1,0 --point 2,0,1,2,0,2,2 --format dot");
    expect(r.out == r2.out, "diagram output is byte-stable");
  }
  {
    Result r = run("diagram --family D --rank 3 --eps 2,1,0 --point 2,0,1,2,0,2,2 --format json");
    expect(r.status == 0, "diagram JSON exit status");
    expect_contains(r, "\"single-impurity\"", "diagram JSON tags the isolated node");
  }
  {
    Result r = run("witness --family B --rank 2 --omega 0,1");
    expect(r.status == 0, "witness exit status");
    Result r2 = run("build --family B --rank 2 --omega 0,1");
    expect_contains(r2, "8 inequalities", "build reports the 8 rows");
  }
  {
    Result r = run("vertices --family A --rank 2 --eps 4,2 --omega 2,2");
    expect(r.status == 1, "both bases given exits 1");
    expect_contains(r, "exactly one", "both-bases diagnostic names the precondition");
    Result rd = run("diagram --family A --rank 1 --eps 1 --point 1/2");
    expect(rd.status == 0, "rank-1 diagram works");
    expect_contains(rd, "digraph", "rank-1 diagram emits a DOT header");
  }
  {
    Result r = run("vertices --family Q --rank 2 --omega 0,1");
    expect(r.status == 1, "bad family exits 1");
    Result r2 = run("count --family A --rank 2 --eps 4,2 --lattice bogus");
    expect(r2.status == 1, "bad lattice exits 1");
    expect_contains(r2, "error:", "bad lattice prints a diagnostic");
  }
  if (failures) {
    std::cerr << failures << " CLI checks failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
