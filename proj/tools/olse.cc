/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <olse/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return olse::cli::run(argc, argv, std::cout, std::cerr);
}
