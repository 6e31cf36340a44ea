#include <mmds/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mmds::run_cli(args, std::cout, std::cerr);
}
