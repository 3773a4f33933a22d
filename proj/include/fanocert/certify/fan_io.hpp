#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanocert/toric/fan.hpp"

namespace fanocert::certify {

/// {"dim": n, "rays": [[...], ...], "cones": [[i, j, ...], ...]}
toric::Fan parse_fan(const std::string& text);
toric::Fan load_fan(const std::string& path);

struct FanCheck {
  int dim = 0;
  std::size_t rays = 0;
  std::size_t maximal_cones = 0;
  bool simplicial = false;
  std::optional<bool> smooth;  // only for simplicial fans
  std::vector<std::string> singular_cones;
  bool complete = false;
  std::optional<toric::Vec> fibration;
};

FanCheck check_fan(const toric::Fan& fan);
nlohmann::ordered_json to_json(const FanCheck& c);
std::string to_text(const FanCheck& c);

}  // namespace fanocert::certify
