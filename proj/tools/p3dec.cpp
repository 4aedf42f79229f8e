#include <iostream>
#include <string>
#include <vector>

#include <p3dec/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return p3dec::cli::run(std::move(args), std::cout, std::cerr);
}
