#include "fanocert/certify/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "fanocert/error.hpp"

namespace fanocert::certify {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

long long integer_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(where + ": expected an integer, got " + j.dump());
  return j.get<long long>();
}

const nlohmann::json& array_field(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(std::string("missing field '") + key + "'");
  const auto& v = doc[key];
  if (!v.is_array()) throw Error(std::string("field '") + key + "': expected an array");
  return v;
}

}  // namespace

toric::Fan parse_fan(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw Error("fan file parse error at " + line_col(text, at));
  }
  if (!doc.is_object()) throw Error("fan file must be a JSON object");
  if (!doc.contains("dim")) throw Error("missing field 'dim'");
  long long dim = integer_at(doc["dim"], "field 'dim'");
  if (dim < 1 || dim > 6) throw Error("field 'dim': dimension must be between 1 and 6");

  std::vector<toric::Vec> rays;
  const auto& jr = array_field(doc, "rays");
  for (std::size_t i = 0; i < jr.size(); ++i) {
    std::string where = "rays[" + std::to_string(i) + "]";
    if (!jr[i].is_array()) throw Error(where + ": expected an array");
    if (jr[i].size() != static_cast<std::size_t>(dim))
      throw Error(where + ": expected " + std::to_string(dim) + " entries, got " + std::to_string(jr[i].size()));
    toric::Vec v;
    for (std::size_t k = 0; k < jr[i].size(); ++k) v.push_back(integer_at(jr[i][k], where + "[" + std::to_string(k) + "]"));
    rays.push_back(std::move(v));
  }
  std::vector<std::vector<std::size_t>> cones;
  const auto& jc = array_field(doc, "cones");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    std::string where = "cones[" + std::to_string(i) + "]";
    if (!jc[i].is_array()) throw Error(where + ": expected an array");
    std::vector<std::size_t> c;
    for (std::size_t k = 0; k < jc[i].size(); ++k) {
      long long idx = integer_at(jc[i][k], where + "[" + std::to_string(k) + "]");
      if (idx < 0 || static_cast<std::size_t>(idx) >= rays.size())
        throw Error(where + "[" + std::to_string(k) + "]: ray index " + std::to_string(idx) + " out of range");
      c.push_back(static_cast<std::size_t>(idx));
    }
    cones.push_back(std::move(c));
  }
  return toric::Fan(static_cast<int>(dim), std::move(rays), std::move(cones));
}

toric::Fan load_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open fan file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_fan(ss.str());
}

FanCheck check_fan(const toric::Fan& fan) {
  FanCheck c;
  c.dim = fan.dim();
  c.rays = fan.ray_count();
  c.maximal_cones = fan.cones().size();
  c.simplicial = fan.is_simplicial();
  if (c.simplicial) {
    bool smooth = true;
    for (const auto& cone : fan.cones()) {
      auto s = toric::cone_is_smooth(fan, cone);
      if (s.smooth) continue;
      smooth = false;
      std::string name = "{";
      for (std::size_t i = 0; i < cone.rays.size(); ++i) name += (i ? "," : "") + std::to_string(cone.rays[i]);
      c.singular_cones.push_back(name + "} multiplicity " + exact::to_string(s.multiplicity));
    }
    c.smooth = smooth;
  }
  c.complete = fan.is_complete();
  // a map onto P1 needs a complete fan
  if (c.complete) c.fibration = toric::fibration_to_p1(fan);
  return c;
}

nlohmann::ordered_json to_json(const FanCheck& c) {
  nlohmann::ordered_json j;
  j["dim"] = c.dim;
  j["rays"] = c.rays;
  j["maximal_cones"] = c.maximal_cones;
  j["simplicial"] = c.simplicial;
  j["smooth"] = c.smooth ? nlohmann::ordered_json(*c.smooth) : nlohmann::ordered_json(nullptr);
  j["singular_cones"] = c.singular_cones;
  j["complete"] = c.complete;
  j["fibration"] = c.fibration ? nlohmann::ordered_json(toric::to_string(*c.fibration)) : nlohmann::ordered_json(nullptr);
  return j;
}

std::string to_text(const FanCheck& c) {
  std::ostringstream os;
  os << "dimension " << c.dim << ", " << c.rays << " rays, " << c.maximal_cones << " maximal cones\n";
  os << "simplicial: " << (c.simplicial ? "yes" : "no") << "\n";
  if (c.smooth) os << "smooth: " << (*c.smooth ? "yes" : "no") << "\n";
  for (const auto& s : c.singular_cones) os << "  singular cone " << s << "\n";
  os << "complete: " << (c.complete ? "yes" : "no") << "\n";
  os << "fibration to P1: " << (c.fibration ? toric::to_string(*c.fibration) : "none") << "\n";
  return os.str();
}

}  // namespace fanocert::certify
