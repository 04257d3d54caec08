#pragma once

#include <json.hpp>

#include "pargroup/decomp.hpp"
#include "pargroup/groupoid.hpp"
#include "pargroup/lattice.hpp"
#include "pargroup/survey.hpp"

namespace pargroup {

using Json = nlohmann::ordered_json;

// Machine mirrors of the text outputs. Multiplicities are decimal strings
// (they do not fit in JSON numbers), subgroups are "<order>:<hex-bits>".

Json group_info_json(const FiniteGroup& g);
Json lattice_json(const FiniteGroup& g, const SubgroupLattice& lat);
Json groupoid_json(const PartialGroupoid& gpd);
Json decomposition_json(const StructuralDecomposition& d);
Json wedderburn_json(const WedderburnProfile& p);
Json survey_json(const SurveyReport& r);
Json counterexample_json(const CounterexampleReport& r);

}  // namespace pargroup
