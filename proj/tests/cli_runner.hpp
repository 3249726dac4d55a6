// Small helper for tests that exercise the command-line binary: runs it
// through /bin/sh with stdout/stderr captured to temp files and returns
// the exit status together with both streams.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cli_test {

struct CmdResult {
    int status = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// `env_prefix` may set variables inline, e.g. "FUTAKI_OUTPUT_FORMAT=json".
// The default prefix pins the format variable to empty so ambient state
// cannot leak into the tests.
inline CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string base =
        "/tmp/futaki_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const std::string out_path = base + ".out";
    const std::string err_path = base + ".err";
    std::string cmd = env_prefix.empty() ? "FUTAKI_OUTPUT_FORMAT= " : env_prefix + " ";
    cmd += std::string(FUTAKI_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int rc = std::system(cmd.c_str());
    CmdResult r;
    r.status = (rc == -1) ? -1 : WEXITSTATUS(rc);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

inline bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

inline std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(s);
    while (std::getline(ss, cur)) out.push_back(cur);
    return out;
}

}  // namespace cli_test
