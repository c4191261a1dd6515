#include <iostream>
#include <string>
#include <vector>

#include "azk/cli/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return azk::dispatch(args, std::cout, std::cerr);
}
