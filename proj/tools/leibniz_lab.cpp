#include "leibniz/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const auto report = leibniz::cli::run(args);
    if (report.structured) {
      std::cout << leibniz::cli::render_structured(report);
    } else {
      std::cout << report.text;
    }
    if (!report.error.empty()) std::cerr << "error: " << report.error << "\n";
    return report.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return leibniz::cli::refuted;
  }
}
