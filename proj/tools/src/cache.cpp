#include "cache.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "isoendo/errors.hpp"

namespace isoendo::tools {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kFormat = 1;

json encode_poly(const Polynomial& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.encode());
  return out;
}

}  // namespace

json snapshot_to_json(const GraphSnapshot& s) {
  json j;
  j["format"] = kFormat;
  j["p"] = s.p.get_str();
  j["ell"] = s.ell;
  j["vertices"] = json::array();
  for (const auto& v : s.vertices) j["vertices"].push_back({{"j", v.j.encode()}, {"A", v.A.encode()}, {"B", v.B.encode()}});
  j["edges"] = json::array();
  for (const auto& e : s.edges)
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"kernel_id", e.kernel_id},
                          {"dual", e.dual},
                          {"kernel", encode_poly(e.kernel)},
                          {"iso_scale", e.iso_scale.encode()},
                          {"exact_dual", e.exact_dual}});
  return j;
}

GraphSnapshot snapshot_from_json(const json& j) {
  try {
    if (j.at("format").get<int>() != kFormat) raise(ErrorKind::BadInput, "unknown snapshot format");
    GraphSnapshot s;
    s.p = Integer(j.at("p").get<std::string>());
    s.ell = j.at("ell").get<int>();
    const Field F = Field::get(s.p, 2);
    for (const auto& v : j.at("vertices"))
      s.vertices.push_back({F.decode(v.at("j").get<std::string>()), F.decode(v.at("A").get<std::string>()),
                            F.decode(v.at("B").get<std::string>())});
    for (const auto& e : j.at("edges")) {
      std::vector<FieldElement> coeffs;
      for (const auto& c : e.at("kernel")) coeffs.push_back(F.decode(c.get<std::string>()));
      s.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), e.at("kernel_id").get<int>(),
                         e.at("dual").get<int>(), Polynomial(F, coeffs), F.decode(e.at("iso_scale").get<std::string>()),
                         e.at("exact_dual").get<bool>()});
    }
    return s;
  } catch (const json::exception& ex) {
    raise(ErrorKind::BadInput, std::string("malformed graph snapshot: ") + ex.what());
  }
}

std::string checksum(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<fs::path> cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("ISOGENY_ENDO_CACHE"); env && *env) return fs::path(env);
  return std::nullopt;
}

namespace {

std::optional<IsogenyGraph> try_load(const fs::path& file, const Integer& p, int ell, std::ostream& diag) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    const json doc = json::parse(in);
    const json& payload = doc.at("graph");
    if (checksum(payload.dump()) != doc.at("checksum").get<std::string>())
      raise(ErrorKind::IntegrityFailure, "checksum mismatch");
    GraphSnapshot s = snapshot_from_json(payload);
    if (s.p != p || s.ell != ell) raise(ErrorKind::IntegrityFailure, "cached graph is for different parameters");
    return s.restore();
  } catch (const std::exception& ex) {
    diag << "warning: ignoring cache file " << file.string() << ": " << ex.what() << "; rebuilding\n";
    return std::nullopt;
  }
}

void store(const fs::path& dir, const fs::path& file, const IsogenyGraph& G, std::ostream& diag) {
  try {
    fs::create_directories(dir);
    const json payload = snapshot_to_json(GraphSnapshot::of(G));
    const json doc = {{"checksum", checksum(payload.dump())}, {"graph", payload}};
    fs::path tmp = file;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp);
      out << doc.dump() << '\n';
      if (!out) raise(ErrorKind::BadInput, "write failed");
    }
    fs::rename(tmp, file);
  } catch (const std::exception& ex) {
    diag << "warning: could not write cache file " << file.string() << ": " << ex.what() << '\n';
  }
}

}  // namespace

IsogenyGraph load_or_build_graph(const Integer& p, int ell, const std::optional<fs::path>& dir, std::ostream& diag) {
  if (!dir) return build_graph(p, ell);
  const fs::path file = *dir / ("graph-" + p.get_str() + "-" + std::to_string(ell) + ".json");
  if (auto G = try_load(file, p, ell, diag)) return std::move(*G);
  IsogenyGraph G = build_graph(p, ell);
  store(*dir, file, G, diag);
  return G;
}

}  // namespace isoendo::tools
