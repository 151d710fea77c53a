#include <string>
#include <vector>

#include <nafil/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return nafil::cli::run(args);
}
