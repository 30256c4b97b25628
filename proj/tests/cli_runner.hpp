#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace cli_test {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI through the shell with stderr folded into stdout.
inline Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" HYPERFORMAN_CLI "' " + args + " 2>&1";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

inline std::string corpus(const std::string& name) { return std::string("'" HYPERFORMAN_CORPUS "/") + name + "'"; }

} // namespace cli_test
