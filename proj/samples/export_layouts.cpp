// Writes the reference layouts and verification fixtures as text grids and
// JSON into the given directory (default: current directory).

#include <fstream>
#include <iostream>
#include <string>

#include "cpcf/cpcf.hpp"

int main(int argc, char** argv) {
  using namespace cpcf;
  const std::string dir = argc > 1 ? argv[1] : ".";
  auto dump = [&](const layouts::NamedLayout& l) {
    std::ofstream(dir + "/" + l.name + ".grid") << render_grid(l.config);
    std::ofstream(dir + "/" + l.name + ".json") << config_to_json(l.config) << '\n';
    std::cout << l.name << ": " << l.config.domain().lx() << "x" << l.config.domain().ly() << ", "
              << l.config.clusters().size() << " clusters\n";
  };
  for (const auto& l : layouts::reference_layouts()) dump(l);
  for (const auto& l : layouts::verification_fixtures()) dump(l);
}
