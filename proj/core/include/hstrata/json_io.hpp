#ifndef HSTRATA_JSON_IO_HPP
#define HSTRATA_JSON_IO_HPP

#include <json.hpp>

#include "hstrata/equivariance.hpp"
#include "hstrata/higgs.hpp"
#include "hstrata/torus.hpp"

namespace hstrata {

using Json = nlohmann::json;

// Schemas:
//   field:        {"field":"Q"} | {"field":"Fp","p":7}
//   polynomial:   {"vars":d,"terms":[{"c":"<scalar>","e":[e_1,...,e_d]},...]}
//                 terms in ascending grlex order, scalars "a" or "a/b"
//   matrix:       [["a","b"],["c","d"]] row-major scalar strings
//   Higgs field:  {"r":...,"d":...,"components":[matrix,...]}
//   Hitchin pt:   {"r":...,"coeffs":[poly_1,...,poly_r]} (+"s0" projective)
//   group:        {"generators":[matrix,...]}
//   torus action: {"n":...,"maps":[{"A":[[ints]],"b":["1/2","0"]},...],
//                  "J":optional matrix, "codim":"real"|"complex"}

Json field_to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

Json poly_to_json(const GradedPoly& p);
GradedPoly poly_from_json(const Json& j, const FieldSpec& field);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldSpec& field);

Json higgs_to_json(const HiggsField& theta);
HiggsField higgs_from_json(const Json& j, const FieldSpec& field);

Json hitchin_to_json(const HitchinPoint& s);
HitchinPoint hitchin_from_json(const Json& j, const FieldSpec& field);

Json proj_to_json(const ProjHitchinPoint& s);
ProjHitchinPoint proj_from_json(const Json& j, const FieldSpec& field);

Json roots_to_json(const RootMultiset& roots);

Json group_to_json(const GroupRep& g);
GroupRep group_from_json(const Json& j, const FieldSpec& field);

Json orbits_to_json(const OrbitDecomposition& dec);
Json spectral_datum_to_json(const SpectralDatum& datum);
Json split_result_to_json(const SplitResult& result);
Json split_profile_to_json(const SplitProfile& profile);
Json h_split_to_json(const std::vector<HSplitEntry>& entries);

Json torus_map_to_json(const AffineTorusMap& m);
AffineTorusMap torus_map_from_json(const Json& j);
Json torus_action_to_json(const TorusGroupAction& action);
TorusGroupAction torus_action_from_json(const Json& j);
Json fixed_locus_to_json(const FixedLocusReport& rep);
Json connecting_series_to_json(const ConnectingSeries& series);
Json classification_to_json(const CoverClassification& c);

// Strict parse wrapper: throws Error(InvalidInput) on malformed JSON.
Json parse_json(const std::string& text);

}  // namespace hstrata

#endif
