#include <vector>

#include "starrad/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return starrad::run_cli(args);
}
