#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "ammet/worldbank_api.hpp"

namespace ammet::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kData = 2,
    kNumeric = 3,
};

/// Process environment the command line depends on, injectable for tests.
struct Context {
    std::optional<std::string> env_data_path;  // value of AMMET_DATA, if set
    std::string default_data_path;             // vendored World Bank CSV
    std::function<std::unique_ptr<HttpTransport>()> make_transport = [] { return make_http_transport(); };
};

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err, const Context& context);

}  // namespace ammet::cli
