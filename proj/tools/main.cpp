#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "cfcon/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    try {
        return cfcon::run_cli(args, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return cfcon::kExitBudget;
    }
}
