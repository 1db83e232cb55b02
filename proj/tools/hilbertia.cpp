#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "hilbertia/cli.hpp"

namespace {

void on_sigint(int) { hilbertia::interrupt_flag().store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);
  std::vector<std::string> args(argv + 1, argv + argc);
  return hilbertia::run_command(args, std::cout, std::cerr);
}
