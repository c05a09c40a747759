#ifndef K3SALEM_SERIALIZATION_HPP
#define K3SALEM_SERIALIZATION_HPP

#include "k3salem/pipeline.hpp"

#include "json.hpp"

#include <string>

namespace k3salem {

using Json = nlohmann::json;

// Integers are written as decimal strings; readers also accept JSON numbers.
Integer integer_from_json(const Json& j);
Json to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"coeffs_desc": [...]}
Json polynomial_to_json(const IntPolynomial& f);
IntPolynomial polynomial_from_json(const Json& j);

/// {"p", "sigma", "q", "gamma", "gram", "tags"}
Json lattice_to_json(const RSLattice& rs);

/// {"h", "singularities", "matrix", "components"}
Json involution_to_json(const InvolutionRecord& rec);
InvolutionRecord involution_from_json(const Json& j);

/// Polynomial JSON plus lambda enclosure, entropy and the check record.
Json certificate_to_json(const SalemCertificate& cert);

Json pool_to_json(const SearchConfig& config, const std::vector<InvolutionRecord>& pool);
std::vector<InvolutionRecord> pool_from_json(const Json& j);

Json result_to_json(const SearchResult& result, const SearchStats* stats = nullptr);
SearchResult result_from_json(const Json& j);

/// {"vectors": [{"a", "u2", "v"}, ...]}; u2 must be 1.
std::vector<Sigma10Seed> seeds_from_json(const Json& j);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

}  // namespace k3salem

#endif  // K3SALEM_SERIALIZATION_HPP
