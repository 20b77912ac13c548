// JSON (and CSV) encodings used by the command-line front end.

#pragma once

#include <json.hpp>

#include "qzero/bialg.hpp"
#include "qzero/classifier.hpp"
#include "qzero/crystal.hpp"
#include "qzero/qrep.hpp"

namespace qz {

using Json = nlohmann::json;

// { "shape": [{"kind":"half"|"line","dim":n}, ...],
//   "entries": [[[re,im], ...], ...] }   (row-major)
Json matrix_to_json(const TruncatedOperator& op);
TruncatedOperator matrix_from_json(const Json& j);

// { "n": ..., "shape": [...], "gens": {"i,j": matrix-json} }
Json rep_to_json(const DenseRep& r);
DenseRep rep_from_json(const Json& j);

// Representation JSON extended with q/phases/word provenance.
Json qrep_to_json(const QRep& r);

// Representation JSON extended with lambda/mu/word tags.
Json canonical_to_json(const CanonicalModel& m);

// { "relations": [{"id":..., "indices":[...], "residual":...}], "pass": ... }
Json report_to_json(const RelationReport& r);
std::string report_to_csv(const RelationReport& r);

// { "q": [...], "deviation": [...], "slope": [...], "verdict": "..." }
Json limit_to_json(const LimitScanReport& r);

Json classification_to_json(const ClassificationReport& r);

Json bialg_to_json(const BialgebraReport& r);

}  // namespace qz
