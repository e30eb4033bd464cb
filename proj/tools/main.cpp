#include <vector>

#include "tightpath/cli.hpp"

int main(int argc, char** argv) {
  return tightpath::run(std::vector<const char*>(argv, argv + argc));
}
