#ifndef TESTS_RUN_TOOL_H
#define TESTS_RUN_TOOL_H

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

struct ToolResult {
  int exit_code = -1;
  std::string output;
};

inline ToolResult run_tool(const std::string& args) {
  std::string cmd = std::string(LGSTOOL_PATH) + " " + args + " 2>/dev/null";
  ToolResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

#endif
