// Acceptance gate: one line per criterion, exit code counts failures.
// Each criterion rebuilds what it needs so the reported time is honest.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "abid/abid.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::vector<abid::SweepCase> swept_plus_e8() {
  auto cases = abid::sweep_cases();
  cases.push_back({abid::Family::E, 8});
  return cases;
}

struct Gate {
  int fails = 0;

  void run(const std::string& name, double budget_s,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto t0 = Clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
      ok = false;
      detail += detail.empty() ? "" : "; ";
      detail += "over time budget";
    }
    char timing[64];
    if (budget_s > 0)
      std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, budget_s);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::printf("[%s] %s (%s)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), timing,
                detail.empty() ? "" : " ", detail.c_str());
    if (!ok) ++fails;
  }
};

bool sweep_report(const std::vector<abid::SweepCase>& cases,
                  const std::function<abid::Report(const abid::CaseData&)>& check,
                  std::string& detail) {
  bool ok = true;
  for (const auto& c : cases) {
    const abid::CaseData cd(c);
    const abid::Report rep = check(cd);
    if (!rep.pass()) {
      ok = false;
      for (const auto& row : rep.rows)
        if (!row.pass) detail += row.name + " ";
    }
  }
  return ok;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main() {
  Gate gate;
  const auto cases = swept_plus_e8();

  gate.run("1 encoding bijections across the sweep", 10.0, [&](std::string& d) {
    return sweep_report(cases, [](const abid::CaseData& cd) { return abid::verify_encodings(cd); },
                        d);
  });

  gate.run("2 ideal counts from two independent engines", 10.0, [&](std::string& d) {
    return sweep_report(cases, [](const abid::CaseData& cd) { return abid::verify_counts(cd); },
                        d);
  });

  gate.run("3 moved base point equals base plus ideal weight", 0, [&](std::string& d) {
    return sweep_report(cases,
                        [](const abid::CaseData& cd) { return abid::verify_rho_points(cd); }, d);
  });

  gate.run("4 order symmetries match diagram symmetries, C3 aside", 30.0, [&](std::string& d) {
    bool ok = sweep_report(
        cases, [](const abid::CaseData& cd) { return abid::verify_poset_diagram_match(cd.ideals, cd.hasse); },
        d);
    const abid::CaseData c3(abid::Family::C, 3);
    const auto group = abid::poset_automorphisms(c3.hasse);
    if (group.size() != 2 || abid::aut_pi(c3.rs).size() != 1) {
      ok = false;
      d += "C3-exception ";
    }
    return ok;
  });

  gate.run("5 graph symmetries match extended diagram, doubled for C3 and G2", 0,
           [&](std::string& d) {
             return sweep_report(cases,
                                 [](const abid::CaseData& cd) {
                                   return abid::verify_hasse_symmetry(cd.ideals, cd.hasse);
                                 },
                                 d);
           });

  gate.run("6 word fibers: pattern avoidance and commutation closure", 0, [&](std::string& d) {
    return sweep_report(cases,
                        [](const abid::CaseData& cd) {
                          return abid::verify_words(cd, cd.rs.n() <= 4);
                        },
                        d);
  });

  gate.run("7 degree formula at every node, rank at most six", 0, [&](std::string& d) {
    std::vector<abid::SweepCase> small;
    for (const auto& c : cases)
      if (c.rank <= 6) small.push_back(c);
    return sweep_report(small,
                        [](const abid::CaseData& cd) { return abid::verify_degrees(cd); }, d);
  });

  gate.run("8 center and diagram actions span a product of full size", 0, [&](std::string& d) {
    std::vector<abid::SweepCase> small;
    for (const auto& c : cases)
      if (c.rank <= 6) small.push_back(c);
    return sweep_report(
        small, [](const abid::CaseData& cd) { return abid::verify_center_semidirect(cd); }, d);
  });

  gate.run("9 dihedral action on staircase shapes, n up to eight", 5.0, [&](std::string& d) {
    bool ok = true;
    for (int n = 3; n <= 8; ++n) {
      const abid::Report rep = abid::verify_dihedral(n);
      if (!rep.pass()) {
        ok = false;
        for (const auto& row : rep.rows)
          if (!row.pass) d += row.name + " ";
      }
    }
    return ok;
  });

  gate.run("10 stored diagram fixtures byte-match", 0, [&](std::string& d) {
    const std::string dir = ABID_FIXTURE_DIR;
    bool ok = true;
    const abid::CaseData c2(abid::Family::C, 2);
    if (abid::hasse_text(c2.hasse) != slurp(dir + "/hasse_c2.txt")) {
      ok = false;
      d += "C2 ";
    }
    const abid::CaseData a3(abid::Family::A, 3);
    if (abid::hasse_text(a3.hasse) != slurp(dir + "/hasse_a3.txt")) {
      ok = false;
      d += "A3 ";
    }
    return ok;
  });

  if (gate.fails == 0) std::printf("acceptance: all 10 criteria hold\n");
  else std::printf("acceptance: %d criteria failed\n", gate.fails);
  return gate.fails;
}
