#include <string>
#include <vector>

#include "ftop/cli.hpp"

int main(int argc, char** argv) {
  return ftop::run_command(std::vector<std::string>(argv + 1, argv + argc));
}
