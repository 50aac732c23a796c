#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "nck/json_io.hpp"

namespace {

using nck::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nck::precondition_error("cannot open input file: " + path);
  return json::parse(in);
}

void emit(const json& j, const std::string& out) {
  auto s = nck::dump_stable(j);
  if (out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw nck::precondition_error("cannot open output file: " + out);
  f << s;
}

int read_thread_cap() {
  const char* env = std::getenv("NECKLACE_ENGINE_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (!end || *end != '\0' || v < 1)
    throw nck::precondition_error("NECKLACE_ENGINE_THREADS must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"necklace-engine: exact necklace calculus computations"};
  app.require_subcommand(1);

  std::string space_path, pair_path, out_path;
  int m = 1, kmax = 4, trunc = 3, max_beads = 0, max_bead_dim = 0;
  nck::Idx from = 0, to = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file (default: stdout)");
  };

  auto* hom = app.add_subcommand("hom", "hom space of c^h applied to a simplicial set");
  hom->add_option("--space", space_path, "sset/v1 input")->required();
  hom->add_option("--from", from, "source vertex")->required();
  hom->add_option("--to", to, "target vertex")->required();
  hom->add_option("--trunc", trunc, "output truncation");
  hom->add_option("--max-beads", max_beads, "bounded necklace category instead of tnd");
  hom->add_option("--max-bead-dim", max_bead_dim, "bead dimension bound");
  add_common(hom);

  auto* nec = app.add_subcommand("necklaces", "bi-pointed necklace category");
  nec->add_option("--space", space_path, "sset/v1 input")->required();
  nec->add_option("--from", from, "source vertex")->required();
  nec->add_option("--to", to, "target vertex")->required();
  nec->add_option("--max-beads", max_beads, "bounded category instead of tnd");
  nec->add_option("--max-bead-dim", max_bead_dim, "bead dimension bound");
  add_common(nec);

  auto* cub = app.add_subcommand("cube", "the poset Cube_m");
  cub->add_option("--m", m, "dimension")->required();
  add_common(cub);

  auto* plv = app.add_subcommand("p-level", "pre-nerve level P(X -> Y)");
  plv->add_option("--m", m, "level")->required();
  plv->add_option("--pair", pair_path, "pair/v1 input")->required();
  plv->add_option("--trunc", trunc, "output truncation");
  add_common(plv);

  auto* wc = app.add_subcommand("weighted-colim", "long hom as a weighted colimit");
  wc->add_option("--m", m, "level")->required();
  wc->add_option("--pair", pair_path, "pair/v1 input")->required();
  wc->add_option("--trunc", trunc, "output truncation");
  add_common(wc);

  auto* nrv = app.add_subcommand("nerve", "strict nerve of the one-arrow category on a space");
  nrv->add_option("--space", space_path, "sset/v1 input (the hom object X)")->required();
  nrv->add_option("--m", m, "maximal nerve level")->required();
  nrv->add_option("--trunc", trunc, "hom truncation");
  add_common(nrv);

  auto* chm = app.add_subcommand("certify-hm", "cofibrancy certificate for the cube weight");
  chm->add_option("--m", m, "dimension")->required();
  chm->add_option("--kmax", kmax, "maximal checked simplex dimension");
  add_common(chm);

  auto* cgx = app.add_subcommand("certify-gx", "retraction/lifting certificate for G(X)");
  cgx->add_option("--m", m, "dimension")->required();
  cgx->add_option("--pair", pair_path, "pair/v1 input; its X is used")->required();
  add_common(cgx);

  auto* cls = app.add_subcommand("classify", "ordered / 1-ordered predicates");
  cls->add_option("--space", space_path, "sset/v1 input")->required();
  add_common(cls);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);  // prints help text / usage message
    return rc == 0 ? 0 : 2;
  }

  try {
    read_thread_cap();  // validated; the engine is deterministic regardless

    if (hom->parsed()) {
      auto K = nck::sset_from_json(load_json(space_path));
      bool tnd = max_beads == 0;
      auto H = nck::ch_hom(K, from, to, trunc, tnd, max_beads,
                           max_bead_dim > 0 ? max_bead_dim : K->trunc);
      emit(nck::sset_to_json(H.colim.object), out_path);
    } else if (nec->parsed()) {
      auto K = nck::sset_from_json(load_json(space_path));
      auto N = max_beads == 0
                   ? nck::tnd_necklaces(K, from, to)
                   : nck::bounded_necklaces(K, from, to, max_beads,
                                            max_bead_dim > 0 ? max_bead_dim : K->trunc);
      emit(nck::necklace_category_to_json(N), out_path);
    } else if (cub->parsed()) {
      emit(nck::cube_to_json(nck::cube(m)), out_path);
    } else if (plv->parsed()) {
      auto pair = nck::pair_from_json(load_json(pair_path));
      auto pl = nck::p_level(m, pair);
      json j = nck::sset_to_json(pl.P);
      j["anchors"] = pl.vertex;
      emit(j, out_path);
    } else if (wc->parsed()) {
      auto pair = nck::pair_from_json(load_json(pair_path));
      emit(nck::sset_to_json(nck::hom_CP_level(m, pair, 0, m, trunc)), out_path);
    } else if (nrv->parsed()) {
      auto X = nck::sset_from_json(load_json(space_path));
      auto S = nck::sigma_m(X, 1, trunc);
      auto N = nck::strict_nerve(S.C, m, trunc);
      json j;
      j["schema"] = "ecat/v1";
      j["kind"] = "strict-nerve";
      json levels = json::array();
      for (auto& L : N.level) levels.push_back(nck::sset_to_json(L));
      j["levels"] = std::move(levels);
      json segal = json::array();
      for (int n = 2; n <= m; ++n) segal.push_back(nck::segal_check(N, n));
      j["segal"] = std::move(segal);
      emit(j, out_path);
    } else if (chm->parsed()) {
      auto cert = nck::hm_certificate(m, kmax);
      emit(nck::cofibrancy_to_json(cert), out_path);
      return cert.status == nck::CertStatus::pass ? 0 : 1;
    } else if (cgx->parsed()) {
      auto pair = nck::pair_from_json(load_json(pair_path));
      auto cert = nck::gx_certificate(m, pair.x_size());
      emit(nck::cofibrancy_to_json(cert), out_path);
      return cert.status == nck::CertStatus::pass ? 0 : 1;
    } else if (cls->parsed()) {
      auto K = nck::sset_from_json(load_json(space_path));
      auto c = nck::classify_order(K);
      json j;
      j["ordered"] = c.ordered;
      j["one_ordered"] = c.one_ordered;
      emit(j, out_path);
    }
  } catch (const nck::resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
