#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ammet/cli.hpp"

#ifndef AMMET_DEFAULT_DATA
#define AMMET_DEFAULT_DATA "data/API_NE.CON.GOVT.ZS_DS2_en_csv_v2.csv"
#endif

int main(int argc, char** argv) {
    ammet::cli::Context context;
    context.default_data_path = AMMET_DEFAULT_DATA;
    if (const char* env = std::getenv("AMMET_DATA"); env != nullptr && *env != '\0') {
        context.env_data_path = env;
    }
    const std::vector<std::string> args(argv + 1, argv + argc);
    return ammet::cli::run(args, std::cout, std::cerr, context);
}
