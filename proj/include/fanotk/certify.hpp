#ifndef FANOTK_CERTIFY_HPP
#define FANOTK_CERTIFY_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fanotk/fano.hpp"
#include "fanotk/rigidity.hpp"
#include "fanotk/singular.hpp"

namespace fanotk {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "fanocert/1";
inline constexpr const char* kToolkitVersion = "fanotk 0.1.0";
inline constexpr const char* kCertSuffix = ".fanocert.json";

// Coefficient tables above this many entries are replaced by a digest; the
// seed alone still reproduces them.
inline constexpr std::size_t kCoeffEmbedCap = 10'000;

// Every experiment emits one self-contained record of this shape. Replaying
// (params, p_or_q, seed, kind) regenerates the payload bit-exactly;
// wall_time_ms and toolkit_version are informational only.
struct Certificate {
  std::string schema_version = kSchemaVersion;
  std::string kind;  // invariants | rigidity | rigidity-batch | fano |
                     // fano-batch | singular | singular-batch | detcheck |
                     // enumeration
  json params;
  std::uint64_t p_or_q = 0;
  std::uint64_t seed = 0;
  json payload;
  std::string toolkit_version = kToolkitVersion;
  std::uint64_t wall_time_ms = 0;
};

// Integers in certificates: JSON numbers up to 2^53 in magnitude, decimal
// strings beyond. Floats are forbidden throughout.
json json_int(const Int& v);
json json_u64(std::uint64_t v);
std::uint64_t u64_from_json(const json& j);

std::string sha256_hex(const std::string& bytes);

json params_to_json(const Parameters& p);
Parameters params_from_json(const json& j);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

// Rejects payloads containing floating-point values, then writes canonical
// bytes. Identical certificates produce identical files.
void write_certificate(const Certificate& c,
                       const std::filesystem::path& path);

Certificate read_certificate(const std::filesystem::path& path);

struct VerifyReport {
  bool valid = false;
  std::vector<std::string> mismatches;  // JSON paths into the payload
};

// Re-runs the pipeline recorded in the certificate and field-compares the
// regenerated payload with the stored one.
VerifyReport verify_certificate(const std::filesystem::path& path);

// Payload builders (shared by the CLI, fixtures, and replay).
json payload_invariants(const Parameters& params);
json payload_rigidity(const Parameters& params, std::uint64_t p,
                      std::uint64_t seed,
                      std::size_t coeff_cap = kCoeffEmbedCap);
json payload_rigidity_batch(const Parameters& params, std::uint64_t p,
                            std::uint64_t seed0, int trials);
json payload_fano(const Parameters& params, std::uint64_t q,
                  std::uint64_t seed, std::uint64_t max_planes);
json payload_fano_batch(const Parameters& params, std::uint64_t q,
                        std::uint64_t seed0, int trials,
                        std::uint64_t max_planes);
json payload_singular(const Parameters& params,
                      const std::vector<std::uint64_t>& primes,
                      std::uint64_t family_base, int family_size,
                      std::uint64_t max_points);
json payload_singular_batch(const Parameters& params,
                            const std::vector<std::uint64_t>& primes,
                            std::uint64_t family_base0, int families,
                            int family_size, std::uint64_t max_points);
json payload_detcheck(const Parameters& params);
json payload_enumeration(int m, int k, std::uint64_t q,
                         std::uint64_t max_planes);

Certificate make_certificate(const std::string& kind, json params,
                             std::uint64_t p_or_q, std::uint64_t seed,
                             json payload, std::uint64_t wall_time_ms = 0);

}  // namespace fanotk

#endif
