#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "steinberg_rsk/correspondence.hpp"
#include "steinberg_rsk/field_matrix.hpp"
#include "steinberg_rsk/rsk.hpp"

namespace srsk {

using Json = nlohmann::json;

/// Input that does not follow the documented JSON layout.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const Partition& p);
Json to_json(const Composition& c);
Json to_json(const RowStandardTableau& t);
Json to_json(const Signature& s);
Json to_json(const SignedYoungDiagram& d);
Json to_json(const PartialPermutation& t);
Json to_json(const MarginMatrix& m);
Json to_json(const FieldMatrix& m);
Json to_json(const CorrespondenceTriple& tr);
Json to_json(const CensusReport& r);
Json to_json(const CalibrationReport& r);

/// Parses a value of type T; throws SchemaError with a path-qualified message.
template <class T>
T from_json(const Json& j);

template <> Partition from_json<Partition>(const Json& j);
template <> Composition from_json<Composition>(const Json& j);
template <> RowStandardTableau from_json<RowStandardTableau>(const Json& j);
template <> Signature from_json<Signature>(const Json& j);
template <> SignedYoungDiagram from_json<SignedYoungDiagram>(const Json& j);
template <> PartialPermutation from_json<PartialPermutation>(const Json& j);
template <> MarginMatrix from_json<MarginMatrix>(const Json& j);
template <> FieldMatrix from_json<FieldMatrix>(const Json& j);
template <> CorrespondenceTriple from_json<CorrespondenceTriple>(const Json& j);

/// Row-per-line, comma-separated integers, reduced mod P.
FieldMatrix field_matrix_from_csv(const std::string& text, const PrimeField& field);

}  // namespace srsk
