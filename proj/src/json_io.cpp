#include "etass/json_io.hpp"

#include "etass/numext.hpp"
#include "json.hpp"

namespace etass::json_io {

using nlohmann::ordered_json;

std::string emit(const ComputeResult& r) {
  ordered_json j;
  j["field"] = r.field;
  j["profile"] = r.profile;
  j["weight"] = r.weight;
  j["groups"] = ordered_json::array();
  for (const auto& g : r.groups) {
    ordered_json line;
    line["m"] = g.m;
    line["expr"] = g.expr;
    if (g.realized) line["realized"] = *g.realized;
    j["groups"].push_back(std::move(line));
  }
  if (r.ring) j["ring"] = *r.ring;
  j["differentials"] = ordered_json::array();
  for (const auto& d : r.differentials) {
    ordered_json line;
    line["page"] = d.page;
    line["q"] = d.q;
    line["m"] = d.m;
    line["n"] = d.n;
    line["source"] = d.source;
    line["target"] = d.target;
    j["differentials"].push_back(std::move(line));
  }
  return j.dump(2) + "\n";
}

ComputeResult parse(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad result document: ") + e.what());
  }
  try {
    ComputeResult r;
    r.field = j.at("field").get<std::string>();
    r.profile = j.at("profile").get<std::string>();
    r.weight = j.at("weight").get<int>();
    for (const auto& line : j.at("groups")) {
      GroupLine g;
      g.m = line.at("m").get<int>();
      g.expr = line.at("expr").get<std::string>();
      if (line.contains("realized")) g.realized = line.at("realized").get<std::string>();
      r.groups.push_back(std::move(g));
    }
    if (j.contains("ring")) r.ring = j.at("ring").get<std::string>();
    for (const auto& line : j.at("differentials")) {
      DiffLine d;
      d.page = line.at("page").get<int>();
      d.q = line.at("q").get<int>();
      d.m = line.at("m").get<int>();
      d.n = line.at("n").get<int>();
      d.source = line.at("source").get<std::string>();
      d.target = line.at("target").get<std::string>();
      r.differentials.push_back(std::move(d));
    }
    return r;
  } catch (const ordered_json::exception& e) {
    throw ConfigError(std::string("result document missing fields: ") + e.what());
  }
}

}  // namespace etass::json_io
