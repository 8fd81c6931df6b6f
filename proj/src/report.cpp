#include "sba/report.hpp"

#include "sba/cells.hpp"
#include "sba/oracles.hpp"
#include "sba/poset.hpp"
#include "sba/quotients.hpp"

namespace sba {

using nlohmann::ordered_json;

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json RunConfig::to_json() const {
  ordered_json j;
  j["command"] = command;
  j["n"] = n;
  if (has_label) j["label"] = label;
  j["param"] = param;
  j["seed"] = seed;
  j["format"] = format;
  if (!cache_dir.empty()) j["cache_dir"] = cache_dir;
  return j;
}

std::string GramReport::to_json() const {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "gram";
  j["n"] = n;
  j["label"] = label;
  j["dimension"] = dimension;
  j["determinant"] = determinant.to_string();
  ordered_json ms = ordered_json::array();
  for (const auto& m : matched) ms.push_back({{"id", m.id}, {"sign", m.sign}});
  j["matched"] = ms;
  j["tried"] = tried;
  return dump_json(j);
}

std::string GramReport::csv_row() const {
  std::string matched_id = matched.empty() ? "" : matched.front().id;
  std::string sign = matched.empty() ? "0" : std::to_string(matched.front().sign);
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
    return out;
  };
  return std::to_string(n) + "," + std::to_string(label) + "," +
         std::to_string(dimension) + "," + quote(determinant.to_string()) + "," +
         quote(matched_id) + "," + sign;
}

std::string OracleReport::to_json() const {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "oracle";
  j["ok"] = ok();
  ordered_json cs = ordered_json::array();
  for (const auto& c : checks)
    cs.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  return dump_json(j);
}

std::string Poset::to_json() const {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "poset";
  j["n"] = n;
  j["elements"] = elements;
  ordered_json cv;
  for (const auto& [x, ys] : covers) cv[std::to_string(x)] = ys;
  j["covers"] = cv;
  j["maximal"] = maximal();
  j["minimal"] = minimal();
  return dump_json(j);
}

std::string PosetConsistency::to_json() const {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "poset-consistency";
  j["n"] = n;
  j["p"] = p;
  auto rows = [](const std::vector<HomEntry>& es) {
    ordered_json a = ordered_json::array();
    for (const auto& e : es)
      a.push_back({{"src", e.src}, {"dst", e.dst}, {"dim", e.dim}});
    return a;
  };
  j["nonzero"] = rows(nonzero);
  j["violations"] = rows(violations);
  j["ok"] = ok;
  return dump_json(j);
}

std::string QuotientReport::to_json() const {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["kind"] = "quotient";
  j["n"] = n;
  j["locus"] = locus;
  j["multiplicative"] = multiplicative;
  j["checked_pairs"] = checked_pairs;
  j["image_dim"] = image_dim;
  j["expected_image_dim"] = expected_image_dim;
  j["kernel_dim"] = kernel_dim;
  j["note"] = note;
  j["ok"] = ok;
  return dump_json(j);
}

}  // namespace sba
