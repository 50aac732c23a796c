#pragma once

#include <json.hpp>

#include "nck/cofib.hpp"
#include "nck/ecat.hpp"

namespace nck {

// All emitters use ordered JSON so identical inputs produce identical bytes.
using json = nlohmann::ordered_json;

// "sset/v1"
json sset_to_json(const SSet& K);
SSet sset_from_json(const json& j);  // strict: unknown fields rejected

// simplicial maps as per-level index arrays
json map_to_json(const SimplicialMap& f);

// "nec/v1"
json necklace_to_json(const Necklace& nk);
Necklace necklace_from_json(const json& j);
json necklace_map_to_json(const NecklaceMap& T);
json necklace_category_to_json(const NecklaceCategory& N);

// "cube/v1"
json cube_object_to_json(const CubeObject& o);
json cube_to_json(const CubeCategory& C);

// "pair/v1"
json pair_to_json(const FinSetPair& pair);
FinSetPair pair_from_json(const json& j);  // strict

// "ecat/v1"
json ecat_to_json(const EnrichedCategory& C);

// certificates
json iso_report_to_json(const std::string& name, const IsoReport& r);
json cofibrancy_to_json(const CofibrancyCertificate& c);
json finality_to_json(const FinalityCertificate& c, int max_beads, int max_bead_dim);

std::string dump_stable(const json& j);  // 2-space indent, trailing newline

}  // namespace nck
