#include "fanotk/certify.hpp"

#include <fstream>

#include <openssl/evp.h>

namespace fanotk {

namespace {

const Int kJsonIntMax = Int(1) << 53;

void reject_floats(const json& j, const std::string& path) {
  if (j.is_number_float())
    throw ParamError("certificate: floating-point field at " + path);
  if (j.is_object()) {
    for (const auto& [key, val] : j.items())
      reject_floats(val, path + "/" + key);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      reject_floats(j[i], path + "/" + std::to_string(i));
  }
}

void diff_json(const json& expect, const json& got, const std::string& path,
               std::vector<std::string>& out) {
  if (expect == got) return;
  if (expect.is_object() && got.is_object()) {
    for (const auto& [key, val] : expect.items()) {
      if (!got.contains(key)) {
        out.push_back(path + "/" + key);
        continue;
      }
      diff_json(val, got.at(key), path + "/" + key, out);
    }
    for (const auto& [key, val] : got.items()) {
      if (!expect.contains(key)) out.push_back(path + "/" + key);
    }
    return;
  }
  if (expect.is_array() && got.is_array() && expect.size() == got.size()) {
    for (std::size_t i = 0; i < expect.size(); ++i)
      diff_json(expect[i], got[i], path + "/" + std::to_string(i), out);
    return;
  }
  out.push_back(path.empty() ? "/" : path);
}

json planes_to_json(const std::vector<PlaneRREF>& planes) {
  json arr = json::array();
  for (const auto& pl : planes) {
    json rows = json::array();
    for (std::size_t r = 0; r < pl.basis.rows; ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < pl.basis.cols; ++c)
        row.push_back(pl.basis.at(r, c));
      rows.push_back(std::move(row));
    }
    arr.push_back(std::move(rows));
  }
  return arr;
}

json poly_to_json(const HomogPoly& p) {
  json arr = json::array();
  for (const auto& [mon, coeff] : p.terms()) {
    json term = json::array();
    term.push_back(json(mon.e));
    term.push_back(json_u64(coeff));
    arr.push_back(std::move(term));
  }
  return arr;
}

json sample_tables_json(const CISample& sample) {
  json c = json::array();
  for (const auto& [key, val] : sample.c) {
    json entry = json::array();
    entry.push_back(key.i);
    entry.push_back(key.h);
    entry.push_back(json(key.mu.e));
    entry.push_back(json_u64(val));
    c.push_back(std::move(entry));
  }
  json r = json::array();
  for (const auto& ri : sample.r) r.push_back(poly_to_json(ri));
  return json{{"c", std::move(c)}, {"r", std::move(r)}};
}

// Either the full tables or their digest, depending on size.
json sample_to_json(const CISample& sample, std::size_t coeff_cap) {
  std::size_t entries = sample.c.size();
  for (const auto& ri : sample.r) entries += ri.terms().size();
  json tables = sample_tables_json(sample);
  if (entries <= coeff_cap)
    return json{{"tables", std::move(tables)}, {"entries", entries}};
  return json{{"tables_digest",
               json{{"algorithm", "sha256"},
                    {"digest", sha256_hex(canonical_dump(tables))}}},
              {"entries", entries}};
}

}  // namespace

json json_int(const Int& v) {
  if (v >= -kJsonIntMax && v <= kJsonIntMax)
    return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

json json_u64(std::uint64_t v) {
  if (v <= (1ull << 53)) return json(v);
  return json(std::to_string(v));
}

std::uint64_t u64_from_json(const json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    auto v = j.get<std::int64_t>();
    if (v < 0) throw VerifyError("certificate: negative value where a seed "
                                 "or modulus was expected");
    return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) return std::stoull(j.get<std::string>());
  throw VerifyError("certificate: malformed integer field");
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                 nullptr) != 1)
    throw InternalError("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xF]);
  }
  return out;
}

json params_to_json(const Parameters& p) {
  return json{{"m", p.m}, {"k", p.k}, {"d", p.d}};
}

Parameters params_from_json(const json& j) {
  Parameters p;
  p.m = j.at("m").get<int>();
  p.k = j.at("k").get<int>();
  p.d = j.at("d").get<std::vector<int>>();
  p.validate();
  return p;
}

json certificate_to_json(const Certificate& c) {
  return json{{"schema_version", c.schema_version},
              {"kind", c.kind},
              {"params", c.params},
              {"p_or_q", json_u64(c.p_or_q)},
              {"seed", json_u64(c.seed)},
              {"payload", c.payload},
              {"toolkit_version", c.toolkit_version},
              {"wall_time_ms", c.wall_time_ms}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.schema_version = j.at("schema_version").get<std::string>();
  if (c.schema_version != kSchemaVersion)
    throw VerifyError("certificate: unknown schema_version '" +
                      c.schema_version + "'");
  c.kind = j.at("kind").get<std::string>();
  c.params = j.at("params");
  c.p_or_q = u64_from_json(j.at("p_or_q"));
  c.seed = u64_from_json(j.at("seed"));
  c.payload = j.at("payload");
  c.toolkit_version = j.at("toolkit_version").get<std::string>();
  c.wall_time_ms = j.at("wall_time_ms").get<std::uint64_t>();
  return c;
}

std::string canonical_dump(const json& j) {
  return j.dump(2) + "\n";
}

void write_certificate(const Certificate& c,
                       const std::filesystem::path& path) {
  reject_floats(c.payload, "payload");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << canonical_dump(certificate_to_json(c));
  if (!out)
    throw std::runtime_error("write failed for " + path.string());
}

Certificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw VerifyError("cannot open certificate " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw VerifyError("certificate parse failure in " + path.string() + ": " +
                      e.what());
  }
  return certificate_from_json(j);
}

json payload_invariants(const Parameters& params) {
  RegimeReport reg = classify(params);
  json deltas = json::array();
  json dims = json::array();
  for (int h = -1; h <= params.k - 1; ++h) {
    deltas.push_back(json{{"h", h}, {"value", json_int(delta_h(params, h))}});
    DimRecord rec = dim_formulas(params, h);
    json h0p = json::array(), h0t = json::array();
    for (const auto& v : rec.h0_plane) h0p.push_back(json_int(v));
    if (h >= 0)
      for (const auto& v : rec.h0_two_planes) h0t.push_back(json_int(v));
    dims.push_back(json{{"h", h},
                        {"dim_S_star", json_int(rec.dim_S_star)},
                        {"dim_J", json_int(rec.dim_J)},
                        {"dim_G2h", json_int(rec.dim_G2h)},
                        {"dim_Th", json_int(rec.dim_Th)},
                        {"h0_plane", std::move(h0p)},
                        {"h0_two_planes", std::move(h0t)}});
  }
  return json{{"t", json_int(reg.t)},
              {"w_is_proper", reg.w_is_proper},
              {"smooth_possible", reg.smooth_possible},
              {"expected_fano_dim", json_int(reg.expected_fano_dim)},
              {"expected_sing_dim", reg.expected_sing_dim},
              {"w_codim", json_int(reg.w_codim)},
              {"delta", std::move(deltas)},
              {"dims", std::move(dims)}};
}

json payload_rigidity(const Parameters& params, std::uint64_t p,
                      std::uint64_t seed, std::size_t coeff_cap) {
  CISample sample = sample_ci(params, p, seed);
  RigidityReport rep = rigidity_check(sample);
  return json{{"rank", rep.rank},
              {"nullity", rep.nullity},
              {"is_rigid", rep.is_rigid},
              {"row_order", "i-major-lex"},
              {"col_order", "(h,j)-lex"},
              {"coeff_cap", coeff_cap},
              {"sample", sample_to_json(sample, coeff_cap)}};
}

json payload_rigidity_batch(const Parameters& params, std::uint64_t p,
                            std::uint64_t seed0, int trials) {
  json per_seed = json::array();
  std::size_t full_rank = 0, consistent = 0;
  std::size_t min_nullity = SIZE_MAX, max_nullity = 0;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t seed = seed0 + static_cast<std::uint64_t>(t);
    CISample sample = sample_ci(params, p, seed);
    RigidityReport rep = rigidity_check(sample);
    // Functional route must reproduce the matrix route on a seeded random
    // motion vector.
    SigmaMatrix C = build_sigma_matrix(sample);
    UniformFieldDraw draw(mix64(seed ^ 0xC0FFEE5EEDull), p);
    std::vector<std::uint64_t> a(C.col_index.size());
    for (auto& v : a) v = draw();
    bool ok = sigma_apply_matrix(C, a) == sigma_apply_poly(sample, a);
    if (rep.is_rigid) ++full_rank;
    if (ok) ++consistent;
    min_nullity = std::min(min_nullity, rep.nullity);
    max_nullity = std::max(max_nullity, rep.nullity);
    per_seed.push_back(json{{"seed", json_u64(seed)},
                            {"rank", rep.rank},
                            {"nullity", rep.nullity},
                            {"is_rigid", rep.is_rigid},
                            {"consistent", ok}});
  }
  return json{{"trials", trials},
              {"full_rank_count", full_rank},
              {"consistent_count", consistent},
              {"min_nullity", min_nullity},
              {"max_nullity", max_nullity},
              {"row_order", "i-major-lex"},
              {"col_order", "(h,j)-lex"},
              {"per_seed", std::move(per_seed)}};
}

json payload_fano(const Parameters& params, std::uint64_t q,
                  std::uint64_t seed, std::uint64_t max_planes) {
  CISample sample = sample_ci(params, q, seed);
  FanoResult res = fano_points(sample, q, EnumerationCaps{max_planes});
  json payload{{"count", res.count},
               {"contains_standard", res.contains_standard},
               {"max_planes", max_planes}};
  if (res.count <= kCoeffEmbedCap) {
    payload["planes"] = planes_to_json(res.planes);
  } else {
    payload["planes_digest"] =
        json{{"algorithm", "sha256"},
             {"digest", sha256_hex(canonical_dump(planes_to_json(res.planes)))}};
  }
  return payload;
}

json payload_fano_batch(const Parameters& params, std::uint64_t q,
                        std::uint64_t seed0, int trials,
                        std::uint64_t max_planes) {
  json per_seed = json::array();
  std::size_t unique = 0, standard_found = 0;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t seed = seed0 + static_cast<std::uint64_t>(t);
    CISample sample = sample_ci(params, q, seed);
    FanoResult res = fano_points(sample, q, EnumerationCaps{max_planes});
    if (res.count == 1) ++unique;
    if (res.contains_standard) ++standard_found;
    per_seed.push_back(json{{"seed", json_u64(seed)},
                            {"count", res.count},
                            {"contains_standard", res.contains_standard}});
  }
  return json{{"trials", trials},
              {"max_planes", max_planes},
              {"standard_found_count", standard_found},
              {"unique_count", unique},
              {"unique_permille",
               trials > 0 ? (1000 * unique) / trials : 0},
              {"per_seed", std::move(per_seed)}};
}

json payload_singular(const Parameters& params,
                      const std::vector<std::uint64_t>& primes,
                      std::uint64_t family_base, int family_size,
                      std::uint64_t max_points) {
  SingDimReport rep = sing_dim_estimate(params, primes, family_base,
                                        family_size, PointCaps{max_points});
  json per_prime = json::array();
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    json entry{{"p", json_u64(primes[pi])},
               {"counts", rep.counts[pi]},
               {"total", rep.totals[pi]}};
    // Point lists are replayed only for small loci.
    json point_lists = json::array();
    bool any = false;
    PrimeField f(primes[pi]);
    for (int j = 0; j < family_size; ++j) {
      if (rep.counts[pi][j] > 100) {
        point_lists.push_back(nullptr);
        continue;
      }
      CISample sample = sample_ci(params, primes[pi],
                                  family_base + static_cast<std::uint64_t>(j));
      auto pts = rank_drop_points(jacobian_on_plane(sample), f,
                                  PointCaps{max_points});
      json pts_json = json::array();
      for (const auto& pt : pts) pts_json.push_back(pt);
      point_lists.push_back(std::move(pts_json));
      any = true;
    }
    if (any) entry["points"] = std::move(point_lists);
    per_prime.push_back(std::move(entry));
  }
  json primes_json = json::array();
  for (std::uint64_t p : primes) primes_json.push_back(json_u64(p));
  json payload{{"primes", std::move(primes_json)},
               {"family_size", family_size},
               {"max_points", max_points},
               {"per_prime", std::move(per_prime)},
               {"status", rep.status == SingDimReport::Status::estimated
                              ? "estimated"
                              : "inconclusive"},
               {"expected", rep.expected},
               {"match", rep.match},
               {"assumes",
                "rank-drop locus on the embedded plane equals the full "
                "singular locus"}};
  if (rep.status == SingDimReport::Status::estimated)
    payload["estimate"] = rep.estimate;
  if (params.s() == 1) {
    payload["bezout_bound"] = rep.bezout_bound;
    payload["bezout_route"] = rep.bezout_route;
  }
  return payload;
}

json payload_singular_batch(const Parameters& params,
                            const std::vector<std::uint64_t>& primes,
                            std::uint64_t family_base0, int families,
                            int family_size, std::uint64_t max_points) {
  json per_family = json::array();
  std::size_t matches = 0;
  bool all_within_bezout = true;
  for (int fam = 0; fam < families; ++fam) {
    std::uint64_t base =
        family_base0 + static_cast<std::uint64_t>(fam) * family_size;
    SingDimReport rep = sing_dim_estimate(params, primes, base, family_size,
                                          PointCaps{max_points});
    std::size_t max_count = 0;
    for (const auto& row : rep.counts)
      for (std::size_t c : row) max_count = std::max(max_count, c);
    if (params.s() == 1 &&
        max_count > static_cast<std::size_t>(rep.bezout_bound))
      all_within_bezout = false;
    if (rep.match) ++matches;
    json entry{{"family_base", json_u64(base)},
               {"totals", rep.totals},
               {"max_per_seed_count", max_count},
               {"status", rep.status == SingDimReport::Status::estimated
                              ? "estimated"
                              : "inconclusive"},
               {"match", rep.match}};
    if (rep.status == SingDimReport::Status::estimated)
      entry["estimate"] = rep.estimate;
    per_family.push_back(std::move(entry));
  }
  json primes_json = json::array();
  for (std::uint64_t p : primes) primes_json.push_back(json_u64(p));
  json payload{{"primes", std::move(primes_json)},
               {"families", families},
               {"family_size", family_size},
               {"max_points", max_points},
               {"expected", classify(params).expected_sing_dim},
               {"match_count", matches},
               {"per_family", std::move(per_family)}};
  if (params.s() == 1) {
    long long b = 1;
    for (int i = 0; i < params.m - params.k; ++i) b *= params.d[0] - 1;
    payload["bezout_bound"] = b;
    payload["all_within_bezout"] = all_within_bezout;
  }
  return payload;
}

json payload_detcheck(const Parameters& params) {
  SymbolicDetReport rep = symbolic_det_leading(params);
  json leading = json::array();
  for (const auto& [id, exp] : rep.leading_monomial) {
    const IndetLabel& lab = rep.indets[id];
    leading.push_back(json{
        {"h", lab.h}, {"i", lab.i}, {"mu", lab.mu.e}, {"exp", exp}});
  }
  json payload{{"square_size", rep.square_size},
               {"nonzero", rep.det_is_nonzero_poly},
               {"term_count", rep.term_count},
               {"leading_coeff", rep.leading_coeff},
               {"leading_monomial", std::move(leading)}};
  if (rep.interleaved_tried) {
    payload["interleaved_rows"] =
        json{{"nonzero", rep.interleaved_nonzero},
             {"leading_coeff", rep.interleaved_leading_coeff}};
  }
  return payload;
}

json payload_enumeration(int m, int k, std::uint64_t q,
                         std::uint64_t max_planes) {
  std::size_t count = 0;
  enumerate_planes(m, k, q, EnumerationCaps{max_planes},
                   [&](const PlaneRREF&) { ++count; });
  return json{{"count", count},
              {"expected", json_int(count_planes(m, k, q))},
              {"max_planes", max_planes}};
}

Certificate make_certificate(const std::string& kind, json params,
                             std::uint64_t p_or_q, std::uint64_t seed,
                             json payload, std::uint64_t wall_time_ms) {
  Certificate c;
  c.kind = kind;
  c.params = std::move(params);
  c.p_or_q = p_or_q;
  c.seed = seed;
  c.payload = std::move(payload);
  c.wall_time_ms = wall_time_ms;
  return c;
}

namespace {

json regenerate_payload(const Certificate& c) {
  const json& pl = c.payload;
  if (c.kind == "invariants") {
    return payload_invariants(params_from_json(c.params));
  }
  if (c.kind == "rigidity") {
    return payload_rigidity(params_from_json(c.params), c.p_or_q, c.seed,
                            pl.at("coeff_cap").get<std::size_t>());
  }
  if (c.kind == "rigidity-batch") {
    return payload_rigidity_batch(params_from_json(c.params), c.p_or_q,
                                  c.seed, pl.at("trials").get<int>());
  }
  if (c.kind == "fano") {
    return payload_fano(params_from_json(c.params), c.p_or_q, c.seed,
                        pl.at("max_planes").get<std::uint64_t>());
  }
  if (c.kind == "fano-batch") {
    return payload_fano_batch(params_from_json(c.params), c.p_or_q, c.seed,
                              pl.at("trials").get<int>(),
                              pl.at("max_planes").get<std::uint64_t>());
  }
  if (c.kind == "singular" || c.kind == "singular-batch") {
    std::vector<std::uint64_t> primes;
    for (const auto& pj : pl.at("primes")) primes.push_back(u64_from_json(pj));
    if (c.kind == "singular") {
      return payload_singular(params_from_json(c.params), primes, c.seed,
                              pl.at("family_size").get<int>(),
                              pl.at("max_points").get<std::uint64_t>());
    }
    return payload_singular_batch(
        params_from_json(c.params), primes, c.seed,
        pl.at("families").get<int>(), pl.at("family_size").get<int>(),
        pl.at("max_points").get<std::uint64_t>());
  }
  if (c.kind == "detcheck") {
    return payload_detcheck(params_from_json(c.params));
  }
  if (c.kind == "enumeration") {
    return payload_enumeration(c.params.at("m").get<int>(),
                               c.params.at("k").get<int>(), c.p_or_q,
                               pl.at("max_planes").get<std::uint64_t>());
  }
  throw VerifyError("certificate: unknown kind '" + c.kind + "'");
}

}  // namespace

VerifyReport verify_certificate(const std::filesystem::path& path) {
  Certificate cert = read_certificate(path);
  json fresh = regenerate_payload(cert);
  VerifyReport rep;
  diff_json(cert.payload, fresh, "", rep.mismatches);
  rep.valid = rep.mismatches.empty() &&
              canonical_dump(cert.payload) == canonical_dump(fresh);
  return rep;
}

}  // namespace fanotk
