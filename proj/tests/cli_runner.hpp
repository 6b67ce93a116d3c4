#ifndef CHAINISOM_TESTS_CLI_RUNNER_HPP
#define CHAINISOM_TESTS_CLI_RUNNER_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace chainisom::testing {

  struct CliResult {
    int         exit_code = -1;
    std::string out;  // standard output only
  };

  inline CliResult run_cli(std::string const& args) {
    std::string const cmd = std::string(CHAINISOM_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult         r;
    FILE*             pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), got);
    }
    int const status = ::pclose(pipe);
    r.exit_code      = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  inline std::size_t count_lines(std::string const& s) {
    std::size_t n = 0;
    for (char c : s) {
      n += c == '\n';
    }
    return n;
  }

}  // namespace chainisom::testing

#endif
