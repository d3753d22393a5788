// SPDX-License-Identifier: Apache-2.0

/// nlohmann::json conversions for reports. Absent optionals are omitted.

#pragma once

#include <json.hpp> // vendored nlohmann single header

#include "analysis.hpp"
#include "oracle.hpp"

namespace bentkit
{

inline void to_json( nlohmann::ordered_json& j, const AnalysisProfile& p )
{
  j = nlohmann::ordered_json{ { "n", p.n },
                              { "weight", p.weight },
                              { "balanced", p.balanced },
                              { "nonlinearity", p.nonlinearity },
                              { "degree", p.degree },
                              { "ci_order", p.ci_order },
                              { "resiliency", p.resiliency },
                              { "bent", p.bent } };
  if ( p.plateaued_order )
  {
    j["plateaued_order"] = *p.plateaued_order;
  }
  j["semi_bent"] = p.semi_bent;
  if ( p.sarkar_maitra_bound )
  {
    j["sarkar_maitra_bound"] = *p.sarkar_maitra_bound;
  }
}

inline void to_json( nlohmann::ordered_json& j, const OracleReport& r )
{
  j = nlohmann::ordered_json{ { "subject", r.subject }, { "agreed", r.agreed } };
  if ( r.first_divergence )
  {
    j["first_divergence"] = { { "index", r.first_divergence->index },
                              { "fast", r.first_divergence->fast },
                              { "oracle", r.first_divergence->oracle } };
  }
}

} // namespace bentkit
