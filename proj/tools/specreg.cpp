#include <string>
#include <vector>

#include "specreg/cli.hpp"

int main(int argc, char** argv) { return specreg::cli::run(std::vector<std::string>(argv, argv + argc)); }
