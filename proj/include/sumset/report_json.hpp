#pragma once

#include <json.hpp>

#include "sumset/bounds.hpp"
#include "sumset/constructions.hpp"
#include "sumset/extractor.hpp"
#include "sumset/multiset.hpp"
#include "sumset/point_set.hpp"
#include "sumset/rational.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

using Json = nlohmann::ordered_json;

/// Integers beyond 64 bits are emitted as decimal strings.
Json wide_json(Wide v);
/// {num, den, float}
Json rational_json(const Rational& r);
/// {group: [moduli], elements: [[coords]...]}
Json point_set_json(const PointSet& s);
Json elements_json(const PointSet& s);

Json profile_json(const SumsetProfile& p);
Json bound_report_json(const BoundReport& r);
Json shadow_report_json(const ShadowIdentityReport& r);
Json projection_report_json(const ProjectionReport& r);
Json triangle_stats_json(const TriangleStats& t);
Json construction_json(const Construction& c);
Json large_subset_json(const LargeSubset& r);
Json extraction_json(const ExtractionReport& r);
Json stability_json(const StabilityReport& r);

}  // namespace sumset
