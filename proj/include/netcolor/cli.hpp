#pragma once

#include <string>
#include <vector>

namespace netcolor {

// Command-line surface of the toolkit. Returns the process exit code:
// 0 on success, 2 for usage errors, 1 for runtime failures.
int cli_main(const std::vector<std::string>& args);  // args without argv[0]
int cli_main(int argc, char** argv);

}  // namespace netcolor
