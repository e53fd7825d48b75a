#include "grouplat/json_io.hpp"

#include <json.hpp>

namespace grouplat {

Group group_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("degree") || !j.contains("generators"))
    throw std::invalid_argument("group record needs degree and generators");
  int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& images : j.at("generators")) {
    std::vector<uint16_t> im;
    for (const auto& v : images) im.push_back(v.get<uint16_t>());
    gens.push_back(Perm(std::move(im)));
  }
  return Group::generate(degree, gens);
}

std::string group_to_json_text(const Group& g, const std::string& name) {
  nlohmann::ordered_json j;
  j["degree"] = g.degree();
  j["generators"] = nlohmann::ordered_json::array();
  for (const Perm& p : g.generators()) {
    nlohmann::ordered_json images = nlohmann::ordered_json::array();
    for (int x = 0; x < p.degree(); ++x) images.push_back(p[x]);
    j["generators"].push_back(images);
  }
  if (!name.empty()) j["name"] = name;
  j["order"] = big_to_string(g.order());
  return j.dump();
}

}  // namespace grouplat
