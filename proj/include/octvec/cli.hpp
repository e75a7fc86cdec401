#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace octvec {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs the `octvec` command line; `args` excludes the program name.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The scripted `demo index` transcript.
std::string demoIndexTranscript();
/// The scripted `demo replace` transcript.
std::string demoReplaceTranscript();

}  // namespace octvec
