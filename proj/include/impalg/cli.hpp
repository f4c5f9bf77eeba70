#pragma once

#include <string>
#include <vector>

namespace impalg::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;                  // success / yes
inline constexpr int kExitNo = 1;                  // not isomorphic / rejected / conditions fail verdict
inline constexpr int kExitInputError = 2;          // unreadable or invalid input
inline constexpr int kExitConditionsFail = 3;      // realize refused the profile
inline constexpr int kExitInternalInconsistency = 4;

// What a subcommand produced. stdout_payload is a complete JSON document
// exactly when exit_code is 0 or 1 (or DOT text when dot was requested);
// diagnostics are notices for the error stream and never mix into stdout.
struct CommandResult {
    int exit_code = kExitOk;
    std::string stdout_payload;
    std::vector<std::string> diagnostics;
};

struct GlobalOptions {
    bool pretty = false;
    bool dot = false;
};

CommandResult cmd_profile(const std::string& hypergraph_path, const GlobalOptions& opts = {});
CommandResult cmd_rho(const std::string& hypergraph_path, const GlobalOptions& opts = {});
CommandResult cmd_iso(const std::string& path1, const std::string& path2,
                      const GlobalOptions& opts = {});
CommandResult cmd_check_profile(const std::string& profile_path, const GlobalOptions& opts = {});
CommandResult cmd_realize(const std::string& profile_path, const GlobalOptions& opts = {});
CommandResult cmd_recognize(const std::string& polymatroid_path, const GlobalOptions& opts = {});
CommandResult cmd_verify_corpus(int max_vertices, int max_edges, const GlobalOptions& opts = {});

// Full argv-level entry point (excluding argv[0]).
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace impalg::cli
