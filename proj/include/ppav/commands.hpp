#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ppav/serialize.hpp"

namespace ppav {

enum ExitCode { exit_ok = 0, exit_certification = 1, exit_budget = 2, exit_validation = 3 };

struct RunConfig {
    std::string command; // quotient | cover | welters | dims
    long g = 2;
    long m = 2;
    long r = 0;
    std::string mode = "all";   // quotient: one | all
    std::string preset = "pullback_quotient";
    std::string fixture_path;
    std::string k_label;        // welters: "a:b"
    Integer budget = default_enumeration_budget;
    std::string out_path;
    std::string format = "json"; // json | text
};

/*
 * A command's payload. `failed` lists identities that did not hold; the
 * payload is still complete when it is nonempty.
 */
struct CommandReport {
    Json payload;
    std::vector<std::string> failed;
};

CommandReport cmd_quotient(long g, long m, bool all, const Integer& budget = default_enumeration_budget);
CommandReport cmd_cover(long g, long m);
CommandReport cmd_welters(const Json& fixture, const std::string& k_label, Preset preset = Preset::pullback_quotient);
CommandReport cmd_dims(long g, long m, long r);

/* "a:b" or "(a:b)". Throws ValidationError. */
std::pair<long, long> parse_k_label(const std::string& s);

/*
 * Validates the configuration, runs the command and writes the payload to
 * `out` (or to cfg.out_path). Errors go to `err`; the return value is the
 * process exit code.
 */
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace ppav
