#pragma once

// JSON views of library results. Vertices are written as the family's
// external labels; integers that can exceed 64 bits and all reals are decimal
// strings.

#include <json.hpp>

#include "ifam/codec.hpp"
#include "ifam/counting.hpp"
#include "ifam/covering.hpp"
#include "ifam/degree_lemmas.hpp"
#include "ifam/family.hpp"
#include "ifam/search.hpp"

namespace ifam {

using Json = nlohmann::ordered_json;

std::string to_decimal(const BigInt& v);
std::string to_decimal(const Real& v, int digits = kRealDigits);
std::string to_fraction(const Rational& v);

Json labels_json(const Family& f, std::span<const Vertex> ids);
Json labels_json(const Family& f, const VertexSet& s);
Json edge_json(const Family& f, const Edge& e);

Json to_json(const Family& f, const ValidationReport& r);
Json to_json(const Family& f, const CoverCertificate& c);
Json to_json(const Family& f, const DegreeBoundReport& r);
Json to_json(const Family& f, const CodecRun& run, bool with_trace);
Json to_json(const Family& f, const InjectivityReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const PairScan& s);
Json to_json(const DegreeClassification& c);
Json to_json(const SearchResult& r);

}  // namespace ifam
