#include <string>
#include <vector>

#include "osc3d/cli.hpp"

int main(int argc, char** argv) {
    return osc3d::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
