#include "aowf/cli.hpp"

int main(int argc, char** argv) {
  return aowf::cli::run_command(std::vector<std::string>(argv + 1, argv + argc));
}
