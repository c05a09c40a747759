#include "k3salem/serialization.hpp"

#include <fstream>

namespace k3salem {

Integer integer_from_json(const Json& j) {
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw PreconditionError("not a decimal integer: " + j.get<std::string>());
    return x;
  }
  if (j.is_number_integer()) return Integer(j.get<long>());
  throw PreconditionError("expected an integer, got " + j.dump());
}

Json to_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("expected an integer array");
  std::vector<Integer> v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return IntVector(std::move(v));
}

Json to_json(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
  return j;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("expected a matrix");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw PreconditionError("ragged matrix");
  return IntMatrix::from_rows(rows);
}

Json polynomial_to_json(const IntPolynomial& f) {
  Json c = Json::array();
  for (const auto& x : f.descending()) c.push_back(x.get_str());
  return {{"coeffs_desc", c}};
}

IntPolynomial polynomial_from_json(const Json& j) {
  const Json& c = j.contains("coeffs_desc") ? j.at("coeffs_desc") : j;
  return IntPolynomial::from_descending(vector_from_json(c).entries());
}

Json lattice_to_json(const RSLattice& rs) {
  Json tags = Json::array();
  for (const auto& t : rs.tags) {
    const char* kind = t.kind == BasisTag::Kind::UPair ? "U" : t.kind == BasisTag::Kind::HBlock ? "H" : "E8";
    tags.push_back({{"name", t.name}, {"kind", kind}, {"block", t.block_index}, {"index", t.index}, {"scale", std::to_string(t.scale)}});
  }
  return {{"p", std::to_string(rs.params.p)},
          {"sigma", std::to_string(rs.params.sigma)},
          {"q", std::to_string(rs.params.q)},
          {"gamma", std::to_string(rs.params.gamma)},
          {"gram", to_json(rs.lattice.gram())},
          {"tags", tags}};
}

Json involution_to_json(const InvolutionRecord& rec) {
  Json comps = Json::array();
  for (const auto& c : rec.components) {
    Json roots = Json::array();
    for (const auto& r : c.roots) roots.push_back(to_json(r));
    comps.push_back({{"type", std::string(1, c.type)}, {"rank", c.rank}, {"roots", roots}});
  }
  return {{"h", to_json(rec.h)}, {"singularities", rec.singularity_string()}, {"matrix", to_json(rec.matrix)}, {"components", comps}};
}

InvolutionRecord involution_from_json(const Json& j) {
  InvolutionRecord rec;
  rec.h = vector_from_json(j.at("h"));
  rec.matrix = matrix_from_json(j.at("matrix"));
  if (j.contains("components")) {
    for (const auto& c : j.at("components")) {
      ADEComponent comp;
      comp.type = c.at("type").get<std::string>().at(0);
      comp.rank = c.at("rank").get<int>();
      for (const auto& r : c.at("roots")) comp.roots.push_back(vector_from_json(r));
      rec.components.push_back(std::move(comp));
    }
  }
  if (j.contains("components") && j.contains("singularities") && j.at("singularities").get<std::string>() != rec.singularity_string())
    throw PreconditionError("singularity string does not match the stored components");
  return rec;
}

Json certificate_to_json(const SalemCertificate& cert) {
  Json j = polynomial_to_json(cert.poly);
  j["trace_coeffs_desc"] = polynomial_to_json(cert.trace_poly).at("coeffs_desc");
  j["lambda_lo"] = cert.root.lo.get_str();
  j["lambda_hi"] = cert.root.hi.get_str();
  j["lambda"] = format_root(cert.root.value, 12);
  j["entropy"] = cert.root.entropy;
  j["entropy_error"] = cert.root.entropy_error;
  j["irreducibility"] = to_string(cert.irreducibility);
  j["cyclotomic_tested"] = cert.cyclotomic_tested;
  j["sieve_primes"] = cert.sieve_primes;
  j["roots_above_two"] = cert.roots_above_two;
  j["roots_in_unit_range"] = cert.roots_in_unit_range;
  return j;
}

Json pool_to_json(const SearchConfig& config, const std::vector<InvolutionRecord>& pool) {
  Json recs = Json::array();
  for (const auto& r : pool) recs.push_back(involution_to_json(r));
  return {{"p", std::to_string(config.p)}, {"sigma", std::to_string(config.sigma)}, {"seed", std::to_string(config.seed)}, {"involutions", recs}};
}

std::vector<InvolutionRecord> pool_from_json(const Json& j) {
  std::vector<InvolutionRecord> pool;
  for (const auto& r : j.at("involutions")) pool.push_back(involution_from_json(r));
  return pool;
}

Json result_to_json(const SearchResult& result, const SearchStats* stats) {
  Json recs = Json::array();
  for (const auto& r : result.involutions) recs.push_back(involution_to_json(r));
  Json j = {{"p", std::to_string(result.p)},
            {"sigma", std::to_string(result.sigma)},
            {"q", std::to_string(result.q)},
            {"gamma", std::to_string(result.gamma)},
            {"seed", std::to_string(result.seed)},
            {"version", K3SALEM_VERSION},
            {"trial_index", result.trial_index},
            {"word", result.word},
            {"word_length", result.word.size()},
            {"involutions", recs},
            {"charpoly", polynomial_to_json(result.charpoly)},
            {"certificate", certificate_to_json(result.certificate)}};
  if (result.base_k > 0) j["base_k"] = result.base_k;
  if (stats) {
    j["stats"] = {{"trials", stats->trials},
                  {"prefilter_rejections", stats->prefilter_rejections},
                  {"exact_checks", stats->exact_checks},
                  {"rejection_reasons", stats->rejection_reasons},
                  {"seconds", stats->seconds}};
  }
  return j;
}

SearchResult result_from_json(const Json& j) {
  SearchResult r;
  r.p = integer_from_json(j.at("p")).get_si();
  r.sigma = static_cast<int>(integer_from_json(j.at("sigma")).get_si());
  if (j.contains("q")) r.q = integer_from_json(j.at("q")).get_si();
  if (j.contains("gamma")) r.gamma = integer_from_json(j.at("gamma")).get_si();
  r.seed = std::stoull(j.at("seed").get<std::string>());
  r.trial_index = j.value("trial_index", -1L);
  r.word = j.at("word").get<std::vector<std::size_t>>();
  for (const auto& rec : j.at("involutions")) r.involutions.push_back(involution_from_json(rec));
  for (std::size_t i : r.word)
    if (i >= r.involutions.size()) throw PreconditionError("word index out of range");
  r.charpoly = polynomial_from_json(j.at("charpoly"));
  r.base_k = j.value("base_k", 0);
  const Json& c = j.at("certificate");
  r.certificate.poly = polynomial_from_json(c);
  r.certificate.root.lo = Rational(c.at("lambda_lo").get<std::string>());
  r.certificate.root.hi = Rational(c.at("lambda_hi").get<std::string>());
  r.certificate.root.lo.canonicalize();
  r.certificate.root.hi.canonicalize();
  r.certificate.root.entropy = c.at("entropy").get<double>();
  r.certificate.irreducibility =
      c.at("irreducibility").get<std::string>() == "sieve-proved" ? Irreducibility::SieveProved : Irreducibility::ContextImplied;
  return r;
}

std::vector<Sigma10Seed> seeds_from_json(const Json& j) {
  std::vector<Sigma10Seed> seeds;
  for (const auto& v : j.at("vectors")) {
    if (v.contains("u2") && integer_from_json(v.at("u2")) != 1) throw PreconditionError("seed vectors must have u2 coefficient 1");
    Sigma10Seed s{integer_from_json(v.at("a")), vector_from_json(v.at("v"))};
    if (s.v.size() != 4) throw PreconditionError("seed H-part must have 4 coordinates");
    seeds.push_back(std::move(s));
  }
  return seeds;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw PreconditionError("malformed JSON in " + path + ": " + e.what());
  }
}

void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace k3salem
