#include "sumset/report_json.hpp"

namespace sumset {

Json wide_json(Wide v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

Json rational_json(const Rational& r) {
  return Json{{"num", wide_json(r.num())}, {"den", wide_json(r.den())}, {"float", r.to_double()}};
}

Json elements_json(const PointSet& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = s.at(i);
    out.push_back(Json(std::vector<std::int64_t>(c.begin(), c.end())));
  }
  return out;
}

Json point_set_json(const PointSet& s) {
  return Json{{"group", s.group().moduli()}, {"size", s.size()}, {"elements", elements_json(s)}};
}

Json profile_json(const SumsetProfile& p) {
  Json alpha = Json::array();
  for (const auto& a : p.alpha) alpha.push_back(rational_json(a));
  return Json{{"sizes", p.sizes}, {"K", rational_json(p.K)}, {"alpha", alpha}};
}

Json bound_report_json(const BoundReport& r) {
  Json roots = Json::array();
  for (const auto& root : r.roots) {
    Json j{{"h", root.h}, {"x", root.x}};
    j["integral"] = root.integral ? Json(*root.integral) : Json(nullptr);
    roots.push_back(j);
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"h", c.h}, {"measured", c.measured}};
    j["bound"] = c.exact_bound ? wide_json(*c.exact_bound) : Json(c.bound);
    j["exact"] = c.exact_bound.has_value();
    j["holds"] = c.holds;
    j["equality"] = c.equality;
    j["slack"] = c.slack();
    checks.push_back(j);
  }
  return Json{{"sizes", r.sizes}, {"roots", roots}, {"checks", checks}, {"allHold", r.all_hold()}};
}

Json shadow_report_json(const ShadowIdentityReport& r) {
  return Json{{"h", r.h},
              {"passed", r.passed},
              {"sSize", r.s_size},
              {"shadowSize", r.shadow_size},
              {"cSize", r.c_size}};
}

Json projection_report_json(const ProjectionReport& r) {
  return Json{{"sTuples", r.embedding.s.size()},
              {"cTuples", r.embedding.c.size()},
              {"pi12", r.pi12.size()},
              {"pi13", r.pi13.size()},
              {"pi23", r.pi23.size()},
              {"pi12InC", r.pi12_in_c},
              {"pi13InC", r.pi13_in_c},
              {"pi23InC", r.pi23_in_c},
              {"sizeMatches", r.size_matches},
              {"lwLhs", wide_json(r.lw_lhs)},
              {"lwRhs", wide_json(r.lw_rhs)},
              {"lwHolds", r.lw_holds}};
}

Json triangle_stats_json(const TriangleStats& t) {
  return Json{{"vertexCount", t.vertex_count},
              {"edgeCount", t.edge_count},
              {"triangleCount", t.triangle_count},
              {"distinctTripleCount", t.distinct_triple_count},
              {"distinctPairCount", t.distinct_pair_count},
              {"sSize", t.s_size},
              {"cSize", t.c_size},
              {"triangleCountBounded", t.triangle_count_bounded},
              {"triplesInTriangles", t.triples_in_triangles},
              {"repeatedPartBounded", t.repeated_part_bounded},
              {"eq22Bound", t.eq22_bound},
              {"eq22Holds", t.eq22_holds}};
}

Json construction_json(const Construction& c) {
  const auto& p = c.params;
  Json params{{"family", family_name(p.family)}};
  switch (p.family) {
    case Family::geometric:
      params["n"] = p.size;
      params["base"] = p.base;
      break;
    case Family::ruzsa:
      params["m"] = p.m;
      params["K"] = p.K;
      break;
    case Family::random:
      params["m"] = p.m;
      params["p"] = p.p;
      params["K"] = p.K;
      params["seed"] = p.seed;
      break;
    case Family::gap:
      params["k"] = p.k;
      params["d"] = p.d;
      params["K"] = p.K;
      break;
    case Family::higher:
      params["h"] = p.h;
      params["m"] = p.m;
      params["alpha"] = p.alpha;
      break;
  }
  Json j{{"params", params}, {"group", c.set.group().moduli()}, {"size", c.set.size()}};
  if (c.spline_target) j["splineTarget"] = *c.spline_target;
  if (c.spline_length) j["L"] = *c.spline_length;
  if (c.modulus_target) j["modulusTarget"] = *c.modulus_target;
  if (c.modulus) j["n"] = *c.modulus;
  Json parts = Json::object();
  for (const auto& [name, set] : c.parts) parts[name] = set.size();
  j["parts"] = parts;
  return j;
}

Json large_subset_json(const LargeSubset& r) {
  return Json{{"strategy", strategy_name(r.strategy)},
              {"minSize", r.min_size},
              {"X", elements_json(r.x)},
              {"cost", r.cost},
              {"boundK", r.bound_K},
              {"boundAlpha", r.bound_alpha},
              {"boundKHolds", r.bound_K_holds},
              {"boundAlphaHolds", r.bound_alpha_holds}};
}

Json extraction_json(const ExtractionReport& r) {
  Json j{{"variant", variant_name(r.variant)},
         {"strategy", strategy_name(r.strategy)},
         {"h", r.h},
         {"M", r.M},
         {"delta", r.delta},
         {"sizes", {{"A", r.size_a}, {"2A", r.size_2a}, {"hA", r.size_ha}, {"(h+1)A", r.size_next}}},
         {"K", rational_json(r.K)},
         {"alpha", rational_json(r.alpha)},
         {"MMax", r.m_max},
         {"hypothesisBound", r.hypothesis_bound},
         {"hypothesisHolds", r.hypothesis_holds},
         {"applicable", r.extracted}};
  if (r.extracted) {
    j["X"] = elements_json(r.x);
    j["Y"] = elements_json(r.y);
    j["xCost"] = r.x_cost;
    j["largeSubsetBound"] = r.large_subset_bound;
    j["largeSubsetBoundHolds"] = r.large_subset_bound_holds;
    j["ySize"] = r.y_size;
    j["yNextSize"] = r.y_next;
    j["yWindow"] = {r.y_lower, r.y_upper};
    j["yNextBound"] = r.y_next_bound;
    j["conclusion1Holds"] = r.conclusion1_holds;
    j["conclusion2Holds"] = r.conclusion2_holds;
  }
  j["notes"] = r.notes;
  return j;
}

Json stability_json(const StabilityReport& r) {
  Json j{{"strategy", strategy_name(r.strategy)},
         {"sizes", {r.size_a, r.size_2a, r.size_3a}},
         {"x", r.x},
         {"xIntegral", r.x_integral ? Json(*r.x_integral) : Json(nullptr)},
         {"macaulayBound", r.macaulay_bound},
         {"delta", r.delta},
         {"deltaClamped", r.delta_clamped},
         {"window", {r.window_lo, r.window_hi}},
         {"found", r.found},
         {"Y", elements_json(r.y)},
         {"ySize", r.y_size},
         {"y2Size", r.y_2sum},
         {"y3Size", r.y_3sum},
         {"yRatio", r.y_ratio},
         {"tripleBound", r.triple_bound},
         {"xY", r.x_y},
         {"sizeWindowHolds", r.size_window_holds},
         {"tripleBoundHolds", r.triple_bound_holds},
         {"deltaWithinTheorem", r.delta_within_theorem},
         {"numeratorConsistent", r.numerator_consistent},
         {"notes", r.notes}};
  return j;
}

}  // namespace sumset
