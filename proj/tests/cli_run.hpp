#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

struct CliResult {
  int code = -1;
  std::string out;
};

// Runs the tlkl binary with the given argument string; stderr is discarded.
inline CliResult run_cli(const std::string& args, bool keep_stderr = false) {
  const std::string cmd = std::string("\"") + TLKL_CLI + "\" " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  CliResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
