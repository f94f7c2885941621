#include <iostream>

#include "gf/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return gf::run_cli(args, std::cout, std::cerr);
}
