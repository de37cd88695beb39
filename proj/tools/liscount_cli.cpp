#include <iostream>
#include <string>
#include <vector>

#include "liscount/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return liscount::run(args, std::cout, std::cerr);
}
