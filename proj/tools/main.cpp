#include <iostream>

#include "borelres/cli.hpp"

int main(int argc, char** argv)
{
    return borelres::run_cli(argc, argv, std::cout, std::cerr);
}
