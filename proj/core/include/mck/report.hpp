#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mck/coloring.hpp"
#include "mck/constructions.hpp"
#include "mck/harness.hpp"
#include "mck/kecss.hpp"
#include "mck/search.hpp"
#include "mck/tree_packing.hpp"

namespace mck {

using Json = nlohmann::ordered_json;

Json to_json(const CutCertificate& cut);
Json to_json(const VerificationReport& report);
Json to_json(const KecssResult& result);
Json to_json(const MaderReport& report);
Json to_json(const TreePacking& packing);
Json to_json(const PsiResult& psi);
Json to_json(const SearchResult& result);
Json to_json(const Decomposition& d);
Json to_json(const ConjectureRecord& record);
Json to_json(const ConjectureSweep& sweep);
Json to_json(const TheoremReport& report);
Json to_json(const HamiltonicityResult& result);

/// Header plus one row per record, columns in ConjectureRecord field order (witness lists omitted).
std::string conjecture_csv(const ConjectureSweep& sweep);

}  // namespace mck
