#ifndef MSV_EXPORT_HPP
#define MSV_EXPORT_HPP

#include <string>

#include <json.hpp>

#include "msv/ci.hpp"
#include "msv/mixed_graph.hpp"
#include "msv/param.hpp"
#include "msv/rank_array.hpp"
#include "msv/schubert.hpp"

namespace msv {

using json = nlohmann::json;

// JSON codecs for the documented file formats.
json to_json(const Permutation& w);
json to_json(const MinorSpec& m);
json to_json(const IdealSpec& spec);
json to_json(const RankArray& r);            // {"size": s, "cells": [[..], ..]}
json to_json(const MixedGraph& g);           // {"m":.., "directed": [[i,j],..], "bidirected": ..}
json to_json(const CIStatement& s);          // {"A": .., "B": .., "C": .., "n": ..}
json to_json(const RankReport& report);

RankArray rank_array_from_json(const json& j);
MixedGraph graph_from_json(const json& j);

// CAS scripts declaring the variable matrix of the flavor and every minor
// of the generator list as an explicit determinant, ready for external
// primality / Groebner verification.
std::string to_macaulay2(const IdealSpec& spec);
std::string to_singular(const IdealSpec& spec);

} // namespace msv

#endif
