#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hermitrig::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;  // also: solver failure
inline constexpr int kExitInputError = 2;

struct BuildOptions {
    std::string input;
    std::string output;
    std::optional<std::string> mode;  // "strict" | "paper"; overrides the file
    bool verbose = false;
};

struct EvalOptions {
    std::string coeffs;
    std::string points;
    int order = 0;
    std::optional<std::string> output;  // stdout when absent
};

struct VerifyOptions {
    std::string input;
    std::optional<std::string> mode;
    bool verbose = false;
};

struct ConvergenceOptions {
    std::string function;
    int p = 1;
    int family = 0;
    std::string n_list;  // comma-separated
    std::optional<std::string> output;
};

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_convergence(const ConvergenceOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace hermitrig::cli
