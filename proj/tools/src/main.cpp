#include "fockseries/cli/app.hpp"

int main(int argc, char** argv) {
  return fockseries::cli::run_app(std::vector<std::string>(argv, argv + argc));
}
