#pragma once

#include <ostream>

namespace equichar {

/// Command line entry point. Exit status: 0 pass, 1 usage or input error, 2 verification failure.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace equichar
