#pragma once

#include "polyrec/laurent.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polyrec::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kSchema = 2, kPrecondition = 3, kNotFound = 4 };

struct JobSpec {
    std::string command;
    std::string input;   // file path or inline JSON; empty reads stdin
    std::string output;  // empty writes stdout
    std::optional<std::size_t> n_max;
    std::optional<std::size_t> m_max;
    std::optional<std::size_t> deg_max;
    std::optional<std::size_t> prefix_budget;
    std::vector<Exponent> omega;
    std::int64_t f = 1;
    std::uint64_t seed = 0;
    bool strict = false;
    std::string svg;  // path for the polygon-sequence rendering
};

struct JobResult {
    nlohmann::json output;
    bool found = true;   // false when a search came back empty
    std::string svg;     // rendered frames, when the command produces them
};

const std::vector<std::string>& commands();

// Runs one command on already-parsed input. Throws SchemaError or
// PreconditionError.
JobResult run_job(const JobSpec& job, const nlohmann::json& input);

// Resolves input/output, maps errors to exit codes, writes artifacts.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyrec::cli
