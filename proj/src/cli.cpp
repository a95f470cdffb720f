#include "tuplesieve/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "tuplesieve/arith.hpp"
#include "tuplesieve/asymptotics.hpp"
#include "tuplesieve/e2gaps.hpp"
#include "tuplesieve/empirics.hpp"
#include "tuplesieve/parallel.hpp"
#include "tuplesieve/tuples.hpp"
#include "tuplesieve/weights.hpp"

namespace tuplesieve::cli {

using nlohmann::json;

std::string sha256_hex(const std::string& payload) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(payload.data(), payload.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

namespace {

std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  return buf;
}

std::vector<int64_t> parse_tuple_list(const std::string& s) {
  std::vector<int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw CLI::ValidationError("tuple", "empty tuple list");
  return out;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.find('/') != std::string::npos || s.find('.') == std::string::npos) {
    if (q.set_str(s, 10) != 0)
      throw CLI::ValidationError("theta", "cannot parse rational: " + s);
    q.canonicalize();
  } else {
    q = Rational(std::stod(s));  // exact binary value of the double
  }
  return q;
}

uint64_t parse_count(double v) {
  if (v < 1 || v > 9e15) throw CLI::ValidationError("N", "count out of range");
  return static_cast<uint64_t>(std::llround(v));
}

json tuple_json(const Tuple& H) {
  json a = json::array();
  for (int64_t h : H.elements()) a.push_back(h);
  return a;
}

// a report skeleton every subcommand fills in
json make_report(const std::string& command, const json& params) {
  json rep;
  rep["command"] = command;
  rep["parameters"] = params;
  json hashed = {{"command", command}, {"parameters", params}};
  rep["content_hash"] = "sha256:" + sha256_hex(hashed.dump());
  rep["timestamp"] = timestamp_utc();
  return rep;
}

void emit(const json& rep, bool csv_mode, const std::string& csv_payload) {
  if (csv_mode && !csv_payload.empty())
    std::cout << csv_payload;
  else
    std::cout << rep.dump(2) << "\n";
}

PrimeTable make_table(uint64_t limit) { return PrimeTable(std::max<uint64_t>(limit, 100)); }

uint64_t table_limit_for_window(uint64_t hi) {
  uint64_t root = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(hi))));
  return std::max<uint64_t>(1'000'000, root + 64);
}

struct Band {
  double lo = 0, hi = 0;
  bool present = false;
  double finite_lo = 0, finite_hi = 0;
  bool finite_present = false;
};

Band lookup_band(const std::string& manifest_path, const std::string& theorem,
                 const Tuple& H) {
  Band band;
  if (manifest_path.empty()) return band;
  std::ifstream in(manifest_path);
  if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
  json m = json::parse(in);
  if (!m.contains(theorem)) return band;
  const auto& sect = m[theorem];
  if (!sect.contains(H.str())) return band;
  band.lo = sect[H.str()]["lo"].get<double>();
  band.hi = sect[H.str()]["hi"].get<double>();
  band.present = true;
  if (sect[H.str()].contains("finite_lo")) {
    band.finite_lo = sect[H.str()]["finite_lo"].get<double>();
    band.finite_hi = sect[H.str()]["finite_hi"].get<double>();
    band.finite_present = true;
  }
  return band;
}

json sieved_sum_json(const empirics::SievedSum& s, double r_exp) {
  json out;
  out["N"] = s.N;
  out["R"] = s.R;
  out["R_exp"] = r_exp;
  out["tuple"] = tuple_json(s.H);
  out["l1"] = s.l1;
  out["l2"] = s.l2;
  if (s.h0) out["h0"] = *s.h0;
  out["lhs"] = s.lhs;
  out["main_term"] = s.main_term;
  out["ratio"] = s.ratio;
  out["finite_main"] = s.finite_main;
  out["finite_ratio"] = s.finite_ratio;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"admissible-tuple sieve toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads (default: env or hardware)");

  bool csv_mode = false;
  app.add_flag("--csv", csv_mode, "CSV output where supported (default JSON)");

  // ---- tuples ----
  auto* tuples_cmd = app.add_subcommand("tuples", "admissibility and tuple search");
  auto* tuples_check = tuples_cmd->add_subcommand("check", "check one tuple");
  std::string check_list;
  tuples_check->add_option("tuple", check_list, "comma-separated elements")->required();
  auto* tuples_search = tuples_cmd->add_subcommand("search", "enumerate admissible tuples");
  int search_k = 0;
  int64_t search_hmax = 0;
  uint64_t search_max = 0;
  tuples_search->add_option("--k", search_k, "tuple size")->required();
  tuples_search->add_option("--h-max", search_hmax, "candidate ceiling")->required();
  tuples_search->add_option("--max-results", search_max, "truncate sorted output");

  // ---- series ----
  auto* series_cmd = app.add_subcommand("series", "singular series of a tuple");
  std::string series_tuple;
  double series_P = 1e6;
  bool series_star = false;
  series_cmd->add_option("--tuple", series_tuple)->required();
  series_cmd->add_option("--P", series_P, "truncation prime bound");
  series_cmd->add_flag("--star", series_star, "also compute the starred form (0 in H)");

  // ---- weights ----
  auto* weights_cmd = app.add_subcommand("weights", "sieve weight tables");
  auto* weights_dump = weights_cmd->add_subcommand("dump", "emit (d, lambda_d)");
  std::string wd_tuple;
  double wd_R = 50;
  int wd_l = 0;
  bool wd_exact = false;
  weights_dump->add_option("--tuple", wd_tuple)->required();
  weights_dump->add_option("--R", wd_R, "support cutoff");
  weights_dump->add_option("--l", wd_l, "polynomial weight index l");
  weights_dump->add_flag("--exact", wd_exact,
                         "exact rationals (l = 0 only; prefactor normalized to 1)");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "empirical main-term checks");
  std::string v_mode;
  verify_cmd->add_option("mode", v_mode, "thm5|thm6a|thm6b|thm7|varpi|gallagher|bv|e2err")
      ->required();
  std::string v_tuple = "0,2";
  double v_N = 1e7;
  double v_rexp = 0.2;
  int v_l1 = 0, v_l2 = 0;
  int64_t v_h0 = 0;
  bool v_h0_set = false;
  uint64_t v_q = 1;
  uint64_t v_Q = 30;
  int v_k = 2;
  int64_t v_h = 50;
  double v_P = 1e4;
  std::string v_manifest;
  verify_cmd->add_option("--tuple", v_tuple);
  verify_cmd->add_option("--N", v_N, "window start; sums over (N, 2N]");
  verify_cmd->add_option("--R-exp", v_rexp, "R = N^exp");
  auto* l1opt = verify_cmd->add_option("--l1", v_l1);
  auto* l2opt = verify_cmd->add_option("--l2", v_l2);
  auto* h0opt = verify_cmd->add_option("--h0", v_h0);
  verify_cmd->add_option("--q", v_q, "coprimality modulus (varpi)");
  verify_cmd->add_option("--Q", v_Q, "modulus ceiling (bv / e2err)");
  verify_cmd->add_option("--k", v_k, "subset size (gallagher)");
  verify_cmd->add_option("--h-max", v_h, "interval length (gallagher)");
  verify_cmd->add_option("--P", v_P, "singular-series truncation (gallagher)");
  verify_cmd->add_option("--manifest", v_manifest, "calibration bands (JSON)");

  // ---- matrix ----
  auto* matrix_cmd = app.add_subcommand("matrix", "exact bilinear-form matrices");
  int m_k = 6, m_L = 1;
  std::string m_kind = "prime";
  std::string m_theta;
  std::string m_b;
  matrix_cmd->add_option("--k", m_k)->required();
  matrix_cmd->add_option("--L", m_L)->required();
  matrix_cmd->add_option("--kind", m_kind, "prime|e2");
  matrix_cmd->add_option("--theta", m_theta, "rational, e.g. 1/2");
  matrix_cmd->add_option("--b", m_b, "integer vector, e.g. 1,4");

  // ---- e2 ----
  auto* e2_cmd = app.add_subcommand("e2", "products of two distinct primes");
  auto* e2_gaps = e2_cmd->add_subcommand("gaps", "gap statistics up to a limit");
  double e2_limit = 1e6;
  bool e2_squares = false;
  e2_gaps->add_option("--limit", e2_limit)->required();
  e2_gaps->add_flag("--include-squares", e2_squares, "count prime squares as members");

  // ---- identities ----
  auto* id_cmd = app.add_subcommand("identities", "exact-rational identity suite");
  uint64_t id_R = 60;
  uint64_t id_seed = 20050602;
  id_cmd->add_option("--R", id_R, "weight support cutoff (<= 60)");
  id_cmd->add_option("--seed", id_seed, "generator seed for random rational weights");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (threads > 0) set_thread_cap(threads);

  try {
    // ---------------- tuples ----------------
    if (tuples_check->parsed()) {
      Tuple H(parse_tuple_list(check_list));
      auto t = make_table(std::max<uint64_t>(1000, H.diameter() + 2));
      json params = {{"tuple", tuple_json(H)}};
      json rep = make_report("tuples check", params);
      rep["results"] = {{"admissible", is_admissible(H, t)},
                        {"k", H.k()},
                        {"diameter", H.diameter()},
                        {"delta", H.delta().get_str()},
                        {"beta", beta(H, t)}};
      emit(rep, false, "");
      return 0;
    }
    if (tuples_search->parsed()) {
      auto t = make_table(std::max<int64_t>(search_k + 1, 100));
      auto res = search_admissible(search_k, search_hmax, t,
                                   search_max ? std::optional<size_t>(search_max)
                                              : std::nullopt);
      json params = {{"k", search_k}, {"h_max", search_hmax}};
      json rep = make_report("tuples search", params);
      json list = json::array();
      for (const auto& H : res) list.push_back(tuple_json(H));
      rep["results"] = {{"count", res.size()}, {"tuples", list}};
      emit(rep, false, "");
      return 0;
    }

    // ---------------- series ----------------
    if (series_cmd->parsed()) {
      Tuple H(parse_tuple_list(series_tuple));
      uint64_t P = parse_count(series_P);
      auto t = make_table(P + 64);
      auto sv = singular_series(H, P, t);
      json params = {{"tuple", tuple_json(H)}, {"P", P}, {"star", series_star}};
      json rep = make_report("series", params);
      rep["results"] = {{"value", sv.value},
                        {"truncation_prime", sv.truncation_prime},
                        {"tail_bound", sv.tail_bound}};
      if (series_star)
        rep["results"]["star_value"] = singular_series_star(H, P, t);
      emit(rep, false, "");
      return 0;
    }

    // ---------------- weights ----------------
    if (weights_dump->parsed()) {
      Tuple H(parse_tuple_list(wd_tuple));
      auto t = make_table(std::max<uint64_t>(1'000'000, H.diameter() + 2));
      json params = {{"tuple", tuple_json(H)}, {"R", wd_R}, {"l", wd_l}, {"exact", wd_exact}};
      json rep = make_report("weights dump", params);
      std::ostringstream csv;
      json rows = json::array();
      if (wd_exact) {
        if (wd_l != 0)
          throw std::invalid_argument("weights dump --exact supports l = 0 only "
                                      "(higher l involves log factors)");
        // rational lambda for the l = 0 choice with unit prefactor:
        // y_r = mu^2(r), lambda = lambda_from_y(y)
        uint64_t lim = static_cast<uint64_t>(std::ceil(wd_R));
        auto plainf = weights::SieveFunctions::plain(H, t);
        weights::WeightVecQ y(lim);
        for (uint64_t r = 1; r < lim; ++r)
          if (t.is_squarefree(r)) y[r] = 1;
        auto lam = weights::lambda_from_y(y, plainf, t);
        csv << "d,numerator,denominator\n";
        for (uint64_t d = 1; d < lim; ++d) {
          if (!t.is_squarefree(d)) continue;
          csv << d << "," << lam[d].get_num().get_str() << ","
              << lam[d].get_den().get_str() << "\n";
          rows.push_back({{"d", d},
                          {"num", lam[d].get_num().get_str()},
                          {"den", lam[d].get_den().get_str()}});
        }
      } else {
        uint64_t P = std::min<uint64_t>(1'000'000, t.limit());
        double S = singular_series(H, P, t).value;
        auto lt = weights::build_lambda_table(H, wd_l, wd_R, t, S);
        csv << "d,lambda\n";
        for (uint64_t d = 1; d < lt.limit; ++d) {
          if (lt.lam[d] == 0.0) continue;
          csv << d << "," << std::setprecision(17) << lt.lam[d] << "\n";
          rows.push_back({{"d", d}, {"lambda", lt.lam[d]}});
        }
      }
      rep["results"] = {{"rows", rows}};
      emit(rep, csv_mode, csv.str());
      return 0;
    }

    // ---------------- verify ----------------
    if (verify_cmd->parsed()) {
      v_h0_set = h0opt->count() > 0;
      if (v_mode == "varpi") {
        uint64_t N = parse_count(v_N);
        auto t = make_table(table_limit_for_window(2 * N + 64));
        auto res = empirics::check_varpi_mean(N, t, v_q);
        json params = {{"N", N}, {"q", v_q}};
        json rep = make_report("verify varpi", params);
        rep["results"] = {{"lhs", res.lhs},
                          {"predicted", res.predicted},
                          {"relative_error", res.relative_error},
                          {"C0", res.c0}};
        emit(rep, false, "");
        return 0;
      }
      if (v_mode == "gallagher") {
        uint64_t P = parse_count(v_P);
        auto t = make_table(P + 64);
        auto res = empirics::gallagher_average(v_k, v_h, P, t);
        json params = {{"k", v_k}, {"h", v_h}, {"P", P}};
        json rep = make_report("verify gallagher", params);
        rep["results"] = {{"sum", res.sum}, {"predicted", res.predicted}, {"ratio", res.ratio}};
        emit(rep, false, "");
        return 0;
      }
      if (v_mode == "bv" || v_mode == "e2err") {
        uint64_t N = parse_count(v_N);
        auto t = make_table(table_limit_for_window(2 * N + 64));
        auto recs = (v_mode == "bv") ? empirics::bv_profile(N, v_Q, t)
                                     : empirics::e2_error_profile(N, v_Q, t);
        json params = {{"N", N}, {"Q", v_Q}};
        json rep = make_report("verify " + v_mode, params);
        rep["results"]["note"] = "x = N only; the sup over x <= N is not computed";
        json rows = json::array();
        std::ostringstream csv;
        csv << "q,max_abs_error,cumulative\n";
        for (const auto& r : recs) {
          rows.push_back({{"q", r.q}, {"max_abs", r.max_abs}, {"cumulative", r.cumulative}});
          csv << r.q << "," << r.max_abs << "," << r.cumulative << "\n";
        }
        rep["results"]["rows"] = rows;
        emit(rep, csv_mode, csv.str());
        return 0;
      }

      // theorem modes
      Tuple H(parse_tuple_list(v_tuple));
      uint64_t N = parse_count(v_N);
      double R = std::pow(static_cast<double>(N), v_rexp);
      if (v_mode == "thm6b") {
        if (!v_h0_set)
          throw CLI::ValidationError("h0", "thm6b needs --h0 outside the tuple");
        // the decomposition needs l >= 1; default the unset ones up
        if (l1opt->count() == 0) v_l1 = 1;
        if (l2opt->count() == 0) v_l2 = 1;
      }
      int64_t h0 = v_h0_set ? v_h0 : H.elements().front();
      auto t = make_table(table_limit_for_window(2 * N + std::llabs(h0) + 64));
      empirics::SievedSum s;
      if (v_mode == "thm5")
        s = empirics::verify_thm5(H, v_l1, v_l2, N, R, t);
      else if (v_mode == "thm6a")
        s = empirics::verify_thm6_part1(H, h0, v_l1, v_l2, N, R, t);
      else if (v_mode == "thm6b")
        s = empirics::verify_thm6_part2(H, h0, v_l1, v_l2, N, R, t);
      else if (v_mode == "thm7")
        s = empirics::verify_thm7(H, h0, v_l1, v_l2, N, R, t);
      else
        throw CLI::ValidationError("mode", "unknown verify mode: " + v_mode);
      json params = {{"mode", v_mode}, {"tuple", tuple_json(H)}, {"N", N},
                     {"R_exp", v_rexp}, {"l1", s.l1},          {"l2", s.l2}};
      if (s.h0) params["h0"] = *s.h0;
      json rep = make_report("verify " + v_mode, params);
      rep["results"] = sieved_sum_json(s, v_rexp);
      int exit_code = 0;
      Band band = lookup_band(v_manifest, v_mode, H);
      if (band.present) {
        bool pass = s.ratio >= band.lo && s.ratio <= band.hi;
        if (band.finite_present)
          pass = pass && s.finite_ratio >= band.finite_lo && s.finite_ratio <= band.finite_hi;
        rep["results"]["band"] = {{"lo", band.lo}, {"hi", band.hi}, {"pass", pass}};
        if (band.finite_present) {
          rep["results"]["band"]["finite_lo"] = band.finite_lo;
          rep["results"]["band"]["finite_hi"] = band.finite_hi;
        }
        if (!pass) exit_code = 2;
      }
      emit(rep, false, "");
      return exit_code;
    }

    // ---------------- matrix ----------------
    if (matrix_cmd->parsed()) {
      namespace asy = tuplesieve::asymptotics;
      asy::FormKind kind = (m_kind == "e2") ? asy::FormKind::e2 : asy::FormKind::prime;
      auto M = asy::build_matrix(m_k, m_L, kind);
      json params = {{"k", m_k}, {"L", m_L}, {"kind", m_kind}};
      json rep = make_report("matrix", params);
      json entries = json::array();
      for (int i = 0; i <= m_L; ++i) {
        json row = json::array();
        for (int j = 0; j <= m_L; ++j) row.push_back(M.at(i, j).str());
        entries.push_back(row);
      }
      rep["results"]["entries"] = entries;
      auto det = asy::determinant(M);
      rep["results"]["determinant"] = det.str();
      if (!det.is_zero()) {
        // also as (primitive integer polynomial) * scale
        BigInt lcm_den(1), gcd_num(0);
        for (const auto& c : det.coeffs()) {
          BigInt den = c.get_den();
          mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Rational> scaled;
        for (const auto& c : det.coeffs()) {
          Rational v = c * Rational(lcm_den);
          mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_num().get_mpz_t());
          scaled.push_back(v);
        }
        for (auto& v : scaled) v /= Rational(gcd_num);
        Rational scale = Rational(gcd_num) / Rational(lcm_den);
        rep["results"]["determinant_primitive"] = asy::RationalPoly(scaled).str();
        rep["results"]["determinant_scale"] = scale.get_str();
      }
      json roots = json::array();
      for (double r : asy::roots_by_bisection(det, 0.5, 1.0)) roots.push_back(r);
      rep["results"]["determinant_roots_in_(1/2,1]"] = roots;
      if (!m_theta.empty()) {
        Rational theta = parse_rational(m_theta);
        params["theta"] = m_theta;
        auto eig = asy::positive_eigen_exists(M, theta);
        rep["results"]["positive_eigenvalue"] = eig.has_positive;
        if (eig.has_positive) {
          json w = json::array();
          for (const auto& x : eig.witness) w.push_back(x.get_str());
          rep["results"]["witness"] = w;
        }
      }
      if (!m_b.empty()) {
        auto bl = parse_tuple_list(m_b);
        std::vector<Rational> b;
        for (int64_t x : bl) b.emplace_back(static_cast<long>(x));
        auto qf = asy::quad_form(M, b);
        rep["results"]["quad_form"] = qf.str();
        if (qf.degree() <= 2) {
          auto pos = asy::positivity_threshold(qf);
          json ivs = json::array();
          for (auto [lo, hi] : pos.intervals) ivs.push_back({{"lo", lo}, {"hi", hi}});
          rep["results"]["positive_on"] = ivs;
          json rts = json::array();
          for (double r : pos.roots_in_range) rts.push_back(r);
          rep["results"]["quad_form_roots_in_(1/2,1]"] = rts;
        } else {
          json rts = json::array();
          for (double r : asy::roots_by_bisection(qf, 0.5, 1.0)) rts.push_back(r);
          rep["results"]["quad_form_roots_in_(1/2,1]"] = rts;
        }
        if (!m_theta.empty()) {
          Rational theta = parse_rational(m_theta);
          Rational v = qf.eval(theta);
          rep["results"]["quad_form_at_theta"] = v.get_str();
          rep["results"]["quad_form_at_theta_positive"] = (v > 0);
        }
      }
      emit(rep, false, "");
      return 0;
    }

    // ---------------- e2 ----------------
    if (e2_gaps->parsed()) {
      uint64_t limit = parse_count(e2_limit);
      auto t = make_table(table_limit_for_window(limit + 64));
      auto stream = e2gaps::enumerate_e2(limit, t, e2_squares);
      auto stats = e2gaps::gap_stats(stream);
      json params = {{"limit", limit}, {"include_squares", e2_squares}};
      json rep = make_report("e2 gaps", params);
      rep["results"] = {{"count", stream.values.size()},
                        {"min_gap", stats.min_gap},
                        {"gaps_le_6", stats.count_le_6},
                        {"gaps_le_26", stats.count_le_26},
                        {"total_gaps", stats.total_gaps}};
      std::ostringstream csv;
      csv << "gap,count\n";
      json hist = json::object();
      for (auto [gap, count] : stats.histogram) {
        csv << gap << "," << count << "\n";
        hist[std::to_string(gap)] = count;
      }
      rep["results"]["histogram"] = hist;
      emit(rep, csv_mode, csv.str());
      return 0;
    }

    // ---------------- identities ----------------
    if (id_cmd->parsed()) {
      if (id_R > 60) throw std::invalid_argument("identities: R must be <= 60");
      auto t = make_table(1'000'000);
      auto checks = weights::run_identity_suite(t, id_R, id_seed);
      json params = {{"R", id_R}, {"seed", id_seed}};
      json rep = make_report("identities", params);
      json rows = json::array();
      bool all_ok = true;
      for (const auto& c : checks) {
        rows.push_back({{"name", c.name}, {"tuple", c.tuple}, {"ok", c.ok}, {"detail", c.detail}});
        std::cerr << (c.ok ? "[ ok ] " : "[FAIL] ") << c.name << "  " << c.tuple
                  << (c.ok ? "" : "  " + c.detail) << "\n";
        all_ok = all_ok && c.ok;
      }
      rep["results"] = {{"checks", rows}, {"all_ok", all_ok}};
      emit(rep, false, "");
      return all_ok ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cerr << "error: no subcommand\n";
  return 1;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args);
}

}  // namespace tuplesieve::cli
