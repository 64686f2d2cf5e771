#include <cstdlib>
#include <iostream>

#include "qeei_cli/app.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> env_tol;
  if (const char* t = std::getenv("QEEI_TOL")) env_tol = t;
  return qeei::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr, env_tol);
}
