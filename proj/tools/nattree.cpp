#include <iostream>

#include "nattree/cli.hpp"

int main(int argc, char** argv)
{
    return nattree::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
