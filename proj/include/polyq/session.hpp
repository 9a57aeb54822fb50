#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "polyq/element.hpp"

namespace polyq {

struct Options {
  Coord window = 4;
  long long coeff_height = 3;
  unsigned depth = 3;
  bool records = false;     // text vs line-record output
  std::string exe_path;     // this binary, for suites that respawn it
};

struct Session {
  std::map<std::string, Element> bindings;
  Options opts;
};

// Quote-aware whitespace split; '#' starts a comment.
std::vector<std::string> tokenize_command(const std::string& line);

// Executes one command (let, eq, empty, member, witness, dims, classify, poz,
// closure, search, decompose, fuse, recover, suite).  Reports start with a
// header echoing the session options.  Returns 0 on success.
int run_command_tokens(const std::vector<std::string>& tokens, Session& s, std::ostream& out);
int run_command(const std::string& line, Session& s, std::ostream& out);

}  // namespace polyq
