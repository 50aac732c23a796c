#include "nck/json_io.hpp"

#include <set>

namespace nck {

namespace {

void require_fields(const json& j, const std::set<std::string>& required,
                    const std::set<std::string>& optional, const char* what) {
  if (!j.is_object()) throw precondition_error(std::string(what) + ": expected a JSON object");
  for (auto& [k, v] : j.items()) {
    (void)v;
    if (!required.count(k) && !optional.count(k))
      throw precondition_error(std::string(what) + ": unknown field '" + k + "'");
  }
  for (auto& k : required)
    if (!j.contains(k)) throw precondition_error(std::string(what) + ": missing field '" + k + "'");
}

void check_schema(const json& j, const char* tag, const char* what) {
  if (!j.contains("schema") || j.at("schema") != tag)
    throw precondition_error(std::string(what) + ": schema must be '" + tag + "'");
}

std::vector<int> bit_list(std::uint32_t mask) {
  std::vector<int> out;
  for (int b = 0; b < 32; ++b)
    if (mask & (1u << b)) out.push_back(b);
  return out;
}

}  // namespace

json sset_to_json(const SSet& K) {
  json j;
  j["schema"] = "sset/v1";
  j["truncation"] = K->trunc;
  json levels = json::array();
  for (int n = 0; n <= K->trunc; ++n) {
    json lv;
    lv["count"] = K->counts[static_cast<std::size_t>(n)];
    lv["faces"] = n >= 1 ? json(K->faces[static_cast<std::size_t>(n)]) : json::array();
    lv["degeneracies"] =
        n < K->trunc ? json(K->degen[static_cast<std::size_t>(n)]) : json::array();
    if (n == 0 && !K->vertex_labels.empty()) lv["labels"] = K->vertex_labels;
    levels.push_back(std::move(lv));
  }
  j["levels"] = std::move(levels);
  return j;
}

SSet sset_from_json(const json& j) {
  require_fields(j, {"schema", "truncation", "levels"}, {}, "sset/v1");
  check_schema(j, "sset/v1", "sset/v1");
  SSetData d;
  d.trunc = j.at("truncation").get<int>();
  auto& levels = j.at("levels");
  if (!levels.is_array() || static_cast<int>(levels.size()) != d.trunc + 1)
    throw precondition_error("sset/v1: levels must list dimensions 0..truncation");
  d.faces.resize(static_cast<std::size_t>(d.trunc) + 1);
  d.degen.resize(static_cast<std::size_t>(d.trunc) + 1);
  for (int n = 0; n <= d.trunc; ++n) {
    auto& lv = levels[static_cast<std::size_t>(n)];
    require_fields(lv, {"count", "faces", "degeneracies"}, {"labels"}, "sset/v1 level");
    auto count = lv.at("count").get<std::size_t>();
    if (n == 0) {
      d.n_vertices = count;
      if (lv.contains("labels")) d.vertex_labels = lv.at("labels").get<std::vector<std::string>>();
    } else {
      d.faces[static_cast<std::size_t>(n)] = lv.at("faces").get<std::vector<std::vector<Idx>>>();
      if (d.faces[static_cast<std::size_t>(n)].size() != count)
        throw precondition_error("sset/v1: face table size disagrees with count");
    }
    if (n < d.trunc) {
      d.degen[static_cast<std::size_t>(n)] = lv.at("degeneracies").get<std::vector<std::vector<Idx>>>();
      if (d.degen[static_cast<std::size_t>(n)].size() != count)
        throw precondition_error("sset/v1: degeneracy table size disagrees with count");
    }
  }
  return finalize(std::move(d));
}

json map_to_json(const SimplicialMap& f) {
  json j;
  j["levels"] = f.at;
  return j;
}

json necklace_to_json(const Necklace& nk) {
  json j;
  j["schema"] = "nec/v1";
  j["beads"] = nk.dims;
  return j;
}

Necklace necklace_from_json(const json& j) {
  require_fields(j, {"schema", "beads"}, {}, "nec/v1");
  check_schema(j, "nec/v1", "nec/v1");
  return make_necklace(j.at("beads").get<std::vector<int>>());
}

json necklace_map_to_json(const NecklaceMap& T) {
  json j;
  j["schema"] = "nec/v1";
  j["necklace"] = json{{"beads", T.nk.dims}};
  j["target"] = sset_to_json(T.f.dst);
  j["vertices"] = T.f.at[0];
  j["simplices"] = T.f.at;
  j["endpoints"] = json::array({T.a, T.b});
  return j;
}

json necklace_category_to_json(const NecklaceCategory& N) {
  json j;
  j["schema"] = "nec/v1";
  j["tnd_only"] = N.tnd_only;
  j["endpoints"] = json::array({N.a, N.b});
  json objs = json::array();
  for (auto& T : N.objects) {
    json o;
    o["beads"] = T.nk.dims;
    o["vertices"] = T.f.at[0];
    objs.push_back(std::move(o));
  }
  j["objects"] = std::move(objs);
  json homs = json::array();
  for (auto& mor : N.mors) homs.push_back(json::array({mor.src, mor.dst}));
  j["hom"] = std::move(homs);
  json comp = json::array();
  for (int g = 0; g < N.cat.n_mors(); ++g) {
    std::vector<std::pair<int, int>> row(N.cat.comp[static_cast<std::size_t>(g)].begin(),
                                         N.cat.comp[static_cast<std::size_t>(g)].end());
    std::sort(row.begin(), row.end());
    for (auto& [f, gf] : row) comp.push_back(json::array({g, f, gf}));
  }
  j["composition"] = std::move(comp);
  return j;
}

json cube_object_to_json(const CubeObject& o) {
  json j;
  j["I"] = bit_list(o.I);
  j["S"] = bit_list(o.S);
  return j;
}

json cube_to_json(const CubeCategory& C) {
  json j;
  j["schema"] = "cube/v1";
  j["m"] = C.m;
  json objs = json::array();
  for (auto& o : C.objects) objs.push_back(cube_object_to_json(o));
  j["objects"] = std::move(objs);
  json mors = json::array();
  for (auto& mor : C.cat.mors) mors.push_back(json::array({mor.src, mor.dst}));
  j["morphisms"] = std::move(mors);
  return j;
}

json pair_to_json(const FinSetPair& pair) {
  json j;
  j["schema"] = "pair/v1";
  j["Y"] = pair.y;
  json x = json::array();
  for (std::size_t i = 0; i < pair.y.size(); ++i)
    if (pair.in_x[i]) x.push_back(pair.y[i]);
  j["X"] = std::move(x);
  j["connected"] = true;
  return j;
}

FinSetPair pair_from_json(const json& j) {
  require_fields(j, {"schema", "Y", "X"}, {"connected"}, "pair/v1");
  check_schema(j, "pair/v1", "pair/v1");
  FinSetPair pair;
  pair.y = j.at("Y").get<std::vector<std::string>>();
  pair.in_x.assign(pair.y.size(), 0);
  for (auto& x : j.at("X")) {
    auto it = std::find(pair.y.begin(), pair.y.end(), x.get<std::string>());
    if (it == pair.y.end()) throw precondition_error("pair/v1: X must be a subset of Y");
    pair.in_x[static_cast<std::size_t>(it - pair.y.begin())] = 1;
  }
  return pair;
}

json ecat_to_json(const EnrichedCategory& C) {
  json j;
  j["schema"] = "ecat/v1";
  j["objects"] = C.n_objects;
  j["truncation"] = C.trunc;
  json homs = json::array();
  for (int i = 0; i < C.n_objects; ++i) {
    json row = json::array();
    for (int k = 0; k < C.n_objects; ++k)
      row.push_back(sset_to_json(C.hom[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]));
    homs.push_back(std::move(row));
  }
  j["hom"] = std::move(homs);
  j["identities"] = C.id_vertex;
  json comps = json::array();
  for (auto& [key, c] : C.comp) {
    json e;
    e["at"] = json::array({key[0], key[1], key[2]});
    e["map"] = c.map.at;
    comps.push_back(std::move(e));
  }
  j["composition"] = std::move(comps);
  return j;
}

json iso_report_to_json(const std::string& name, const IsoReport& r) {
  json j;
  j["check"] = name;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

json cofibrancy_to_json(const CofibrancyCertificate& c) {
  json j;
  j["schema"] = "cube/v1";
  j["kind"] = "cofibrancy-certificate";
  j["m"] = c.m;
  j["k_max"] = c.k_max;
  j["verdict"] = c.status == CertStatus::pass ? "pass" : "fail";
  j["bounds_note"] = c.bounds_note;
  json checks = json::array();
  for (auto& ck : c.checks) {
    json e;
    e["name"] = ck.name;
    e["pass"] = ck.pass;
    if (!ck.detail.empty()) e["counterexample"] = ck.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

json finality_to_json(const FinalityCertificate& c, int max_beads, int max_bead_dim) {
  json j;
  j["schema"] = "nec/v1";
  j["kind"] = "finality-certificate";
  j["verdict"] = c.status == CertStatus::pass ? "pass"
                 : c.status == CertStatus::fail ? "fail"
                                                : "inconclusive";
  j["bounds"] = json{{"max_beads", max_beads}, {"max_bead_dim", max_bead_dim}};
  j["detail"] = c.detail;
  json items = json::array();
  for (auto& it : c.items) {
    json e;
    e["object"] = it.u;
    e["comma_objects"] = it.comma_objects;
    e["connected"] = it.connected;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  return j;
}

std::string dump_stable(const json& j) { return j.dump(2) + "\n"; }

}  // namespace nck
