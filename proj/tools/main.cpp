#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "command.hpp"
#include "run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    sfill::cli::CommandParser parser;
    sfill::cli::Command cmd;
    try {
        cmd = parser.parse(args);
    } catch (const CLI::Error& e) {
        return parser.report(e);
    }
    return sfill::cli::run(cmd, std::cin, std::cout, std::cerr);
}
