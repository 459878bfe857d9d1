#include "ulrich/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return ulrich::run_cli(argc, argv, std::cout, std::cerr);
}
