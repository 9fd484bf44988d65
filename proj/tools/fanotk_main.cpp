// fanotk: exact finite-field experiments on linear subspaces contained in
// complete intersections. Every randomized run takes an explicit seed and can
// emit replayable JSON certificates.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "fanotk/certify.hpp"

namespace {

using namespace fanotk;

constexpr int kExitUsage = 2;
constexpr int kExitRegime = 3;
constexpr int kExitCap = 4;
constexpr int kExitVerify = 5;

std::uint64_t now_ms() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

struct CommonOpts {
  int m = 0;
  int k = 0;
  std::vector<int> d;
  bool json_out = false;

  Parameters params() const { return Parameters::checked(m, k, d); }
};

void add_param_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("-m", o.m, "ambient projective dimension")->required();
  cmd->add_option("-k", o.k, "dimension of the linear subspace")->required();
  cmd->add_option("-d", o.d,
                  "degrees of the defining equations (repeatable)")
      ->required();
  cmd->add_flag("--json", o.json_out, "emit JSON instead of a table");
}

std::string default_out_dir() {
  const char* env = std::getenv("FANOTK_OUT_DIR");
  return env ? env : "";
}

// Deterministic fan-out of trials over a small worker pool; results land in
// trial order regardless of scheduling.
template <class Fn>
void run_trials(int trials, int jobs, Fn&& fn) {
  if (jobs <= 1) {
    for (int t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(jobs, trials);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int t = next.fetch_add(1);
        if (t >= trials) return;
        fn(t);
      }
    });
  }
  for (auto& th : pool) th.join();
}

int cmd_invariants(const CommonOpts& o) {
  Parameters params = o.params();
  json payload = payload_invariants(params);
  if (o.json_out) {
    std::cout << canonical_dump(payload);
    return 0;
  }
  RegimeReport reg = classify(params);
  std::printf("parameters: m=%d k=%d d=(", params.m, params.k);
  for (int i = 0; i < params.s(); ++i)
    std::printf("%s%d", i ? "," : "", params.d[i]);
  std::printf(")\n");
  std::printf("t                 = %s\n", reg.t.str().c_str());
  std::printf("regime            = %s\n",
              reg.w_is_proper ? "t > 0: k-planes are a codim-t condition"
                              : "t <= 0: every member contains k-planes");
  std::printf("codim W           = %s\n", reg.w_codim.str().c_str());
  std::printf("expected fano dim = %s\n", reg.expected_fano_dim.str().c_str());
  std::printf("expected sing dim = %d\n", reg.expected_sing_dim);
  std::printf("smooth possible   = %s\n", reg.smooth_possible ? "yes" : "no");
  std::printf("\n  h  delta_h      dim_J     dim_Th\n");
  for (int h = -1; h <= params.k - 1; ++h) {
    DimRecord rec = dim_formulas(params, h);
    std::printf("%3d  %7s  %9s  %9s\n", h, delta_h(params, h).str().c_str(),
                rec.dim_J.str().c_str(), rec.dim_Th.str().c_str());
  }
  return 0;
}

int cmd_lemma_scan(int m_max, int s_max, int d_max, bool json_out) {
  GridBounds bounds{m_max, s_max, d_max};
  auto hits = lemma_scan(bounds);
  if (json_out) {
    json arr = json::array();
    for (const auto& hit : hits) {
      arr.push_back(json{{"params", params_to_json(hit.params)},
                         {"h", hit.h},
                         {"delta", json_int(hit.delta)},
                         {"t", json_int(hit.t)}});
    }
    std::cout << canonical_dump(json{{"m_max", m_max},
                                     {"s_max", s_max},
                                     {"d_max", d_max},
                                     {"counterexamples", arr}});
  } else {
    std::printf("%zu counterexamples on grid m<=%d s<=%d d<=%d\n", hits.size(),
                m_max, s_max, d_max);
    for (const auto& hit : hits) {
      std::printf("  m=%d k=%d s=%d h=%d delta=%s t=%s\n", hit.params.m,
                  hit.params.k, hit.params.s(), hit.h, hit.delta.str().c_str(),
                  hit.t.str().c_str());
    }
  }
  return hits.empty() ? 0 : kExitVerify;
}

int cmd_detcheck(const CommonOpts& o) {
  Parameters params = o.params();
  json payload = payload_detcheck(params);
  if (o.json_out) {
    std::cout << canonical_dump(payload);
    return 0;
  }
  std::printf("leading square submatrix: %llu x %llu\n",
              (unsigned long long)payload["square_size"].get<std::size_t>(),
              (unsigned long long)payload["square_size"].get<std::size_t>());
  std::printf("det is nonzero polynomial: %s (%llu terms)\n",
              payload["nonzero"].get<bool>() ? "yes" : "no",
              (unsigned long long)payload["term_count"].get<std::size_t>());
  std::printf("greatest monomial coefficient: %lld\n",
              (long long)payload["leading_coeff"].get<std::int64_t>());
  if (payload.contains("interleaved_rows")) {
    const json& alt = payload["interleaved_rows"];
    std::printf("block-interleaved rows: det %s, greatest coefficient %lld\n",
                alt["nonzero"].get<bool>() ? "nonzero" : "zero",
                (long long)alt["leading_coeff"].get<std::int64_t>());
  }
  return 0;
}

int cmd_enumerate(int m, int k, std::uint64_t q, bool count_only,
                  std::uint64_t max_planes, bool json_out) {
  if (!is_prime_u64(q)) throw ParamError("enumerate: q must be prime");
  std::size_t count = 0;
  json planes = json::array();
  enumerate_planes(m, k, q, EnumerationCaps{max_planes},
                   [&](const PlaneRREF& pl) {
                     ++count;
                     if (count_only) return;
                     json rows = json::array();
                     for (std::size_t r = 0; r < pl.basis.rows; ++r) {
                       json row = json::array();
                       for (std::size_t c = 0; c < pl.basis.cols; ++c)
                         row.push_back(pl.basis.at(r, c));
                       rows.push_back(std::move(row));
                     }
                     planes.push_back(std::move(rows));
                   });
  if (json_out) {
    json out{{"m", m}, {"k", k}, {"q", q}, {"count", count}};
    if (!count_only) out["planes"] = std::move(planes);
    std::cout << canonical_dump(out);
  } else if (count_only) {
    std::printf("%zu\n", count);
  } else {
    std::printf("%zu planes of dimension %d in P^%d(F_%llu)\n", count, k, m,
                (unsigned long long)q);
    for (const auto& pl : planes) std::printf("%s\n", pl.dump().c_str());
  }
  return 0;
}

struct VerifyOpts {
  CommonOpts common;
  std::uint64_t q = 0;
  std::uint64_t p = 1009;
  int trials = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  int family_size = 5;
  std::vector<std::uint64_t> sing_primes{101, 211};
  std::uint64_t max_planes = 10'000'000;
  std::uint64_t max_points = 1'000'000;
  std::string out_dir = default_out_dir();
};

int cmd_verify(const VerifyOpts& o) {
  Parameters params = o.common.params();
  Int t = t_invariant(params);
  if (t <= 0)
    throw RegimeError(
        "verify: t = " + t.str() +
        " <= 0; every general member contains k-planes in this regime and "
        "the unique-plane check does not apply");
  if (!is_prime_u64(o.q)) throw ParamError("verify: --q must be prime");

  struct TrialResult {
    std::size_t fano_count = 0;
    bool contains_standard = false;
    std::size_t rank = 0, nullity = 0;
    bool is_rigid = false;
    bool sing_estimated = false;
    int sing_estimate = 0;
    bool sing_match = false;
    json rigidity_payload, fano_payload, singular_payload;
  };
  std::vector<TrialResult> results(o.trials);

  run_trials(o.trials, o.jobs, [&](int tr) {
    std::uint64_t seed = o.seed + static_cast<std::uint64_t>(tr);
    TrialResult& res = results[tr];

    res.rigidity_payload = payload_rigidity(params, o.p, seed);
    res.rank = res.rigidity_payload["rank"].get<std::size_t>();
    res.nullity = res.rigidity_payload["nullity"].get<std::size_t>();
    res.is_rigid = res.rigidity_payload["is_rigid"].get<bool>();

    res.fano_payload = payload_fano(params, o.q, seed, o.max_planes);
    res.fano_count = res.fano_payload["count"].get<std::size_t>();
    res.contains_standard = res.fano_payload["contains_standard"].get<bool>();

    std::uint64_t family_base =
        o.seed + static_cast<std::uint64_t>(tr) * o.family_size;
    res.singular_payload = payload_singular(params, o.sing_primes, family_base,
                                            o.family_size, o.max_points);
    res.sing_estimated =
        res.singular_payload["status"].get<std::string>() == "estimated";
    if (res.sing_estimated)
      res.sing_estimate = res.singular_payload["estimate"].get<int>();
    res.sing_match = res.singular_payload["match"].get<bool>();
  });

  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (int tr = 0; tr < o.trials; ++tr) {
      std::uint64_t seed = o.seed + static_cast<std::uint64_t>(tr);
      std::string stem = "m" + std::to_string(params.m) + "k" +
                         std::to_string(params.k) + "_seed" +
                         std::to_string(seed);
      auto dir = std::filesystem::path(o.out_dir);
      write_certificate(
          make_certificate("rigidity", params_to_json(params), o.p, seed,
                           results[tr].rigidity_payload),
          dir / ("rigidity_" + stem + kCertSuffix));
      write_certificate(make_certificate("fano", params_to_json(params), o.q,
                                         seed, results[tr].fano_payload),
                        dir / ("fano_" + stem + kCertSuffix));
      write_certificate(
          make_certificate("singular", params_to_json(params),
                           o.sing_primes[0],
                           o.seed + static_cast<std::uint64_t>(tr) *
                                        o.family_size,
                           results[tr].singular_payload),
          dir / ("singular_" + stem + kCertSuffix));
    }
  }

  int rigid = 0, unique = 0, standard_found = 0, sing_match = 0;
  for (const auto& res : results) {
    if (res.is_rigid) ++rigid;
    if (res.fano_count == 1) ++unique;
    if (res.contains_standard) ++standard_found;
    if (res.sing_match) ++sing_match;
  }

  if (o.common.json_out) {
    json per_trial = json::array();
    for (int tr = 0; tr < o.trials; ++tr) {
      const auto& res = results[tr];
      json row{{"seed", o.seed + static_cast<std::uint64_t>(tr)},
               {"fano_count", res.fano_count},
               {"contains_standard", res.contains_standard},
               {"rank", res.rank},
               {"nullity", res.nullity},
               {"is_rigid", res.is_rigid},
               {"sing_status", res.sing_estimated ? "estimated"
                                                  : "inconclusive"},
               {"sing_match", res.sing_match}};
      if (res.sing_estimated) row["sing_estimate"] = res.sing_estimate;
      per_trial.push_back(std::move(row));
    }
    std::cout << canonical_dump(
        json{{"params", params_to_json(params)},
             {"q", o.q},
             {"p", o.p},
             {"trials", o.trials},
             {"rigid_count", rigid},
             {"unique_plane_count", unique},
             {"standard_found_count", standard_found},
             {"sing_match_count", sing_match},
             {"per_trial", std::move(per_trial)}});
  } else {
    std::printf("trials            : %d  (q=%llu for enumeration, p=%llu for "
                "rank)\n",
                o.trials, (unsigned long long)o.q, (unsigned long long)o.p);
    std::printf("rigid             : %d/%d\n", rigid, o.trials);
    std::printf("standard plane    : %d/%d\n", standard_found, o.trials);
    std::printf("unique plane      : %d/%d\n", unique, o.trials);
    std::printf("sing-dim matches  : %d/%d\n", sing_match, o.trials);
  }
  return 0;
}

int cmd_replay(const std::vector<std::string>& paths, bool json_out) {
  bool all_valid = true;
  json report = json::array();
  for (const auto& path : paths) {
    VerifyReport rep = verify_certificate(path);
    all_valid = all_valid && rep.valid;
    if (json_out) {
      report.push_back(json{{"path", path},
                            {"valid", rep.valid},
                            {"mismatches", rep.mismatches}});
    } else {
      std::printf("%s: %s\n", path.c_str(), rep.valid ? "valid" : "INVALID");
      for (const auto& mm : rep.mismatches)
        std::printf("  mismatch at %s\n", mm.c_str());
    }
  }
  if (json_out) std::cout << canonical_dump(report);
  return all_valid ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact finite-field toolkit for linear subspaces on complete "
      "intersections"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fanotk::kToolkitVersion);

  CommonOpts inv_opts;
  CLI::App* inv = app.add_subcommand(
      "invariants", "closed-form invariants and dimension table");
  add_param_flags(inv, inv_opts);

  int scan_m_max = 10, scan_s_max = 4, scan_d_max = 6;
  bool scan_json = false;
  CLI::App* scan = app.add_subcommand(
      "lemma-scan", "grid search for delta_h <= 0 with t > 0");
  scan->add_option("--m-max", scan_m_max, "largest ambient dimension");
  scan->add_option("--s-max", scan_s_max, "largest codimension");
  scan->add_option("--d-max", scan_d_max, "largest degree");
  scan->add_flag("--json", scan_json, "emit JSON");

  CommonOpts det_opts;
  CLI::App* det = app.add_subcommand(
      "detcheck", "symbolic determinant of the leading square submatrix");
  add_param_flags(det, det_opts);

  int enum_m = 0, enum_k = 0;
  std::uint64_t enum_q = 0, enum_cap = 10'000'000;
  bool enum_count_only = false, enum_json = false;
  CLI::App* enu =
      app.add_subcommand("enumerate", "enumerate k-planes of P^m over F_q");
  enu->add_option("-m", enum_m, "ambient projective dimension")->required();
  enu->add_option("-k", enum_k, "plane dimension")->required();
  enu->add_option("--q", enum_q, "field size (prime)")->required();
  enu->add_flag("--count-only", enum_count_only, "print only the count");
  enu->add_option("--max-planes", enum_cap, "enumeration cap");
  enu->add_flag("--json", enum_json, "emit JSON");

  VerifyOpts ver_opts;
  CLI::App* ver = app.add_subcommand(
      "verify",
      "sample complete intersections through the standard plane and check "
      "rigidity, plane uniqueness, and the singular locus");
  add_param_flags(ver, ver_opts.common);
  ver->add_option("--q", ver_opts.q, "enumeration field (small prime)")
      ->required();
  ver->add_option("--p", ver_opts.p, "rank-certificate field (large prime)");
  ver->add_option("--trials", ver_opts.trials, "number of seeded trials")
      ->required();
  ver->add_option("--seed", ver_opts.seed, "base seed (trial t uses seed+t)")
      ->required();
  ver->add_option("--jobs", ver_opts.jobs, "worker threads");
  ver->add_option("--family-size", ver_opts.family_size,
                  "seeds per singular-locus family");
  ver->add_option("--sing-primes", ver_opts.sing_primes,
                  "primes for the singular-locus estimate");
  ver->add_option("--max-planes", ver_opts.max_planes, "enumeration cap");
  ver->add_option("--max-points", ver_opts.max_points, "point-count cap");
  ver->add_option("--out", ver_opts.out_dir,
                  "certificate output directory (default $FANOTK_OUT_DIR)");

  std::vector<std::string> replay_paths;
  bool replay_json = false;
  CLI::App* rep = app.add_subcommand(
      "replay", "re-derive certificates and compare payloads");
  rep->add_option("paths", replay_paths, "certificate files")->required();
  rep->add_flag("--json", replay_json, "emit JSON");

  try {
    app.parse(argc, argv);
    if (inv->parsed()) return cmd_invariants(inv_opts);
    if (scan->parsed())
      return cmd_lemma_scan(scan_m_max, scan_s_max, scan_d_max, scan_json);
    if (det->parsed()) return cmd_detcheck(det_opts);
    if (enu->parsed())
      return cmd_enumerate(enum_m, enum_k, enum_q, enum_count_only, enum_cap,
                           enum_json);
    if (ver->parsed()) return cmd_verify(ver_opts);
    if (rep->parsed()) return cmd_replay(replay_paths, replay_json);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const fanotk::ParamError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const fanotk::RegimeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRegime;
  } catch (const fanotk::CapError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCap;
  } catch (const fanotk::VerifyError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitVerify;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
