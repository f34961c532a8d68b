#include <iostream>
#include <string>
#include <vector>

#include "sigtau/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sigtau::run(args, std::cout, std::cerr);
}
