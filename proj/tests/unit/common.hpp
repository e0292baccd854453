#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "starlike/diagram.hpp"

inline starlike::LinkDiagram load(const std::string& name) {
  std::ifstream in(std::string(STARLIKE_DATA_DIR) + "/" + name + ".json");
  std::stringstream ss;
  ss << in.rdbuf();
  return starlike::parse_diagram(ss.str());
}
