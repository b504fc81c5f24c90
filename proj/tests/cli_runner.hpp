#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace defzero::testing {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

/// Runs the CLI through the shell with `args` appended; stderr is discarded.
/// `env` is prepended verbatim, e.g. "DEFZERO_THREADS=4".
inline CliResult run_cli(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + DEFZERO_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed: " + cmd);
    CliResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// CSV body with the wall_time_ms column (always last) removed from every line.
inline std::string strip_wall_time(const std::string& csv)
{
    std::string out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t end = csv.find('\n', pos);
        if (end == std::string::npos)
            end = csv.size();
        std::string line = csv.substr(pos, end - pos);
        if (!line.empty() && line[0] != '#') {
            const auto comma = line.rfind(',');
            if (comma != std::string::npos)
                line.resize(comma);
        }
        out += line + "\n";
        pos = end + 1;
    }
    return out;
}

} // namespace defzero::testing
