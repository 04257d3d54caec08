#include "pargroup/jsonout.hpp"

#include <map>
#include <numeric>

namespace pargroup {

namespace {

std::string subgroup_key(const Subgroup& h) {
  return std::to_string(h.order) + ":" + h.elems.to_hex();
}

Json profile_json(const WedderburnProfile& p) {
  Json arr = Json::array();
  for (const auto& [size, mult] : p.sizes) arr.push_back({{"size", size}, {"mult", mult.str()}});
  return arr;
}

Json degrees_json(const DegreeProfile& p) {
  Json arr = Json::array();
  for (const auto& [size, mult] : p.degrees) arr.push_back({{"size", size}, {"mult", mult.str()}});
  return arr;
}

}  // namespace

Json group_info_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["identity"] = g.identity();
  j["abelian"] = g.is_abelian();
  j["conjugacy_classes"] = conjugacy_classes(g).size();
  int exponent = 1;
  for (int x = 0; x < g.order(); ++x) exponent = std::lcm(exponent, g.element_order(x));
  j["exponent"] = exponent;
  j["partial_algebra_dim"] = dim_partial_algebra(g.order()).str();
  return j;
}

Json lattice_json(const FiniteGroup& g, const SubgroupLattice& lat) {
  Json j;
  j["group_order"] = g.order();
  j["count"] = lat.size();
  Json subs = Json::array();
  for (int i = 0; i < lat.size(); ++i) {
    subs.push_back({{"index", i},
                    {"order", lat.subgroups[i].order},
                    {"bits", lat.subgroups[i].elems.to_hex()},
                    {"normalizer", lat.normalizer[i]},
                    {"commutator", lat.commutator[i]},
                    {"class", lat.class_id[i]}});
  }
  j["subgroups"] = subs;
  Json census = Json::object();
  std::map<int, int> by_order;
  for (const auto& h : lat.subgroups) by_order[h.order] += 1;
  for (const auto& [order, count] : by_order) census[std::to_string(order)] = count;
  j["census"] = census;
  return j;
}

Json groupoid_json(const PartialGroupoid& gpd) {
  Json j;
  j["group_order"] = gpd.group.order();
  j["arrow_count"] = gpd.arrow_count.str();
  Json levels = Json::array();
  for (std::size_t k = 0; k < gpd.levels.size(); ++k) {
    // (m, |isotropy|) census of the components at this level
    std::map<std::pair<int, int>, int> census;
    for (const auto& comp : gpd.components)
      if (comp.level == static_cast<int>(k + 1)) census[{comp.m(), comp.isotropy.order}] += 1;
    Json comps = Json::array();
    for (const auto& [key, count] : census)
      comps.push_back({{"m", key.first}, {"isotropy_order", key.second}, {"count", count}});
    levels.push_back({{"level", k + 1},
                      {"vertices", gpd.levels[k].size()},
                      {"components", comps}});
  }
  j["levels"] = levels;
  return j;
}

Json decomposition_json(const StructuralDecomposition& d) {
  Json j;
  j["group_order"] = d.group.order();
  j["method"] = d.method == DecompMethod::direct ? "direct" : "formula";
  Json blocks = Json::array();
  for (const Block& b : d.blocks) {
    blocks.push_back({{"m", b.m},
                      {"H", subgroup_key(d.lattice.subgroups[b.subgroup])},
                      {"mult", b.mult.str()}});
  }
  j["blocks"] = blocks;
  j["dimension"] = decomposition_dimension(d).str();
  return j;
}

Json wedderburn_json(const WedderburnProfile& p) {
  Json j;
  j["sizes"] = profile_json(p);
  j["dimension"] = p.dimension().str();
  return j;
}

Json survey_json(const SurveyReport& r) {
  Json j;
  j["order"] = r.order;
  Json classes = Json::array();
  for (const auto& entry : r.entries) {
    classes.push_back({{"invariants", entry.type.factors},
                       {"profile", profile_json(entry.profile)}});
  }
  j["classes"] = classes;
  j["verdict"] = r.all_distinct ? "AllDistinct" : "Collisions";
  if (!r.all_distinct) {
    Json cols = Json::array();
    for (auto [a, b] : r.collisions) cols.push_back({a, b});
    j["collisions"] = cols;
  }
  return j;
}

Json counterexample_json(const CounterexampleReport& r) {
  Json j;
  auto census = [](const std::map<int, int>& c) {
    Json out = Json::object();
    for (const auto& [order, count] : c) out[std::to_string(order)] = count;
    return out;
  };
  j["g1"] = {{"subgroups", r.subgroup_count1},
             {"census", census(r.census1)},
             {"group_algebra", degrees_json(r.group_algebra1)},
             {"profile", profile_json(r.profile1)}};
  j["g2"] = {{"subgroups", r.subgroup_count2},
             {"census", census(r.census2)},
             {"group_algebra", degrees_json(r.group_algebra2)},
             {"profile", profile_json(r.profile2)}};
  j["censuses_equal"] = r.censuses_equal;
  j["group_algebras_equal"] = r.group_algebras_equal;
  j["profiles_equal"] = r.profiles_equal;
  j["blocks_equal"] = r.blocks_equal;
  j["nonisomorphic"] = "known result, taken from the literature; not verified here";
  return j;
}

}  // namespace pargroup
