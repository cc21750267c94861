#include <iostream>

#include "pathalg/cli.hpp"

int main(int argc, char** argv)
{
    return pathalg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
