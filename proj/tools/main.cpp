#include <vector>
#include <string>

#include "photonstat/cli.hpp"

int main(int argc, char** argv) {
  return photonstat::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
