#include <iostream>

#include "elw/workbench.hpp"

int main(int argc, char** argv) {
  return elw::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
