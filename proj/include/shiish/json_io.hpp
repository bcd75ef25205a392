#pragma once

// JSON shapes used by the CLI and by the Python module.

#include <string>
#include <vector>

#include "json.hpp"
#include "shiish/arrangement.hpp"
#include "shiish/core.hpp"
#include "shiish/graphs.hpp"
#include "shiish/verify.hpp"

namespace shiish {

using Json = nlohmann::ordered_json;

Json to_json(const Word& a);
Word word_from_json(const Json& j);

/// {"word", "parking", "ish", "partial": {"k": bool}, "centre", "sigma": {"k": [...]|null}}
Json classification_json(const Word& a, const std::vector<int>& ks);

/// {"burnt", "tree", "damp", "success"}; arc heads keep the v + m*n encoding.
Json to_json(const BurnReport& br);

/// {"signs", "w", "H", "I", "label", "diagram"}
Json region_json(const Arrangement& arr, const LabelledRegion& lr);

Json to_json(const EquivalenceReport& rep);
Json to_json(const ArtifactCheck& c);
Json to_json(const CountRow& row);

}  // namespace shiish
