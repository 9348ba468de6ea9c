#pragma once

#include <cstdlib>

#include "abid/serialize.hpp"
#include "abid/verify.hpp"

namespace abid {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct RunConfig {
  std::string command;          // enumerate | hasse | aut | verify | young | rootsys
  std::string type;             // C3, E8, ...
  int shapes_n = 0;             // young only
  std::string format = "text";  // text | json | dot (dot: hasse only)
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
  std::string error;
};

// rank ceiling for CLI requests; larger systems take exponentially longer
inline int max_rank_limit() {
  if (const char* s = std::getenv("ABID_MAX_RANK")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 15) return static_cast<int>(v);
  }
  return 8;
}

namespace detail {

inline RunResult usage_error(std::string msg) {
  return RunResult{kExitUsage, "", std::move(msg) + "\n"};
}

inline std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

inline RunResult run(const RunConfig& cfg) {
  const bool wants_json = cfg.format == "json";
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "dot")
    return detail::usage_error("unknown format " + cfg.format);
  if (cfg.format == "dot" && cfg.command != "hasse")
    return detail::usage_error("dot output is only defined for hasse");

  try {
    if (cfg.command == "young") {
      const int n = cfg.shapes_n;
      if (n < 2 || n - 1 > max_rank_limit())
        return detail::usage_error("young needs 2 <= n <= " +
                                   std::to_string(max_rank_limit() + 1) +
                                   " (raise ABID_MAX_RANK for more)");
      const CaseData cd(Family::A, n - 1);
      return RunResult{kExitOk, wants_json ? detail::dump(young_json(n, cd.ideals))
                                           : young_text(n, cd.ideals)};
    }

    const SweepCase which = parse_type(cfg.type);
    if (which.rank > max_rank_limit())
      return detail::usage_error("rank above limit " + std::to_string(max_rank_limit()) +
                                 " (raise ABID_MAX_RANK to allow)");

    if (cfg.command == "rootsys") {
      const RootSystem rs = build_root_system(which.family, which.rank);
      return RunResult{kExitOk,
                       wants_json ? detail::dump(rootsys_json(rs)) : rootsys_text(rs)};
    }

    const CaseData cd(which.family, which.rank);
    if (cfg.command == "enumerate")
      return RunResult{kExitOk, wants_json ? detail::dump(ideals_json(cd.ideals))
                                           : ideals_text(cd.ideals)};
    if (cfg.command == "hasse") {
      if (cfg.format == "dot") return RunResult{kExitOk, hasse_dot(cd.hasse)};
      return RunResult{kExitOk,
                       wants_json ? detail::dump(hasse_json(cd.hasse)) : hasse_text(cd.hasse)};
    }
    if (cfg.command == "aut")
      return RunResult{kExitOk, wants_json ? detail::dump(aut_json(cd.rs, cd.ideals, cd.hasse))
                                           : aut_text(cd.rs, cd.ideals, cd.hasse)};
    if (cfg.command == "verify") {
      const Report rep = run_all_checks(which.family, which.rank);
      return RunResult{rep.pass() ? kExitOk : kExitVerifyFailed,
                       wants_json ? detail::dump(report_json(rep)) : report_text(rep)};
    }
    return detail::usage_error("unknown command " + cfg.command);
  } catch (const Error& e) {
    return detail::usage_error(e.what());
  }
}

}  // namespace abid
