#pragma once

/// JSON and text serialization. Integers that may exceed 2^53 are written
/// as decimal strings.

#include <string>
#include <variant>

#include <json.hpp>

#include "isokit/boxfree.hpp"
#include "isokit/field.hpp"
#include "isokit/formulas.hpp"
#include "isokit/isotropy.hpp"
#include "isokit/rank.hpp"
#include "isokit/subspace.hpp"
#include "isokit/tensor.hpp"

namespace isokit::io {

using Json = nlohmann::ordered_json;

Json big(const BigInt& v);
BigInt parse_big(const Json& j);
Json rational(const BigRational& v);

Json to_json(const FieldSpec& s);
FieldSpec field_spec_from_json(const Json& j);

Json to_json(const Tensor& t);
Json to_json(const AltTensor& t);
using AnyTensor = std::variant<Tensor, AltTensor>;
AnyTensor tensor_from_json(const Json& j);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Field& f, const Json& j);

Json to_json(const IsotropyResult& r);
Json to_json(const HomIsotropyResult& r, std::size_t k);
Json to_json(const RankReport& r);

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);
/// Header "# d n q m" followed by one "v1 ... vd" line per edge.
std::string edge_list_text(const Hypergraph& h, std::uint64_t q, std::size_t n, std::size_t m);
Json to_json(const BoxCertificate& c);

}  // namespace isokit::io
