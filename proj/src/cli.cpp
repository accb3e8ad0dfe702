#include "xx0/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "xx0/asymptotics.hpp"
#include "xx0/draw.hpp"
#include "xx0/xx0chain.hpp"

namespace xx0::cli {

namespace {

using nlohmann::json;

std::vector<long> parse_sites(const std::string& csv) {
  std::vector<long> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stol(cur));
  return out;
}

// Seeded distinct rational tuples with numerators/denominators up to 50.
struct RationalSource {
  std::mt19937 rng;
  explicit RationalSource(unsigned seed) : rng(seed) {}

  Scalar draw() {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
    long p = 0;
    while (p == 0) p = num(rng);
    return Scalar(Rational(p, den(rng)));
  }

  EvalPoint tuple(long n) {
    EvalPoint x;
    while (static_cast<long>(x.size()) < n) {
      Scalar v = draw();
      bool dup = false;
      for (const auto& e : x) dup = dup || (e == v);
      if (!dup) x.push_back(v);
    }
    return x;
  }
};

struct VerifyRow {
  std::string name;
  std::string params;
  bool ok = false;
  double ms = 0.0;
};

struct VerifyContext {
  unsigned seed = 0;
  bool small = false;
  std::vector<VerifyRow> rows;

  template <class Fn>
  void row(const std::string& name, const std::string& params, Fn&& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body();
    } catch (const Error&) {
      ok = false;
    }
    const auto stop = std::chrono::steady_clock::now();
    rows.push_back(
        {name, params, ok,
         std::chrono::duration<double, std::milli>(stop - start).count()});
  }
};

std::string fmt_params(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += " ";
    s += std::string(k) + "=" + std::to_string(v);
  }
  return s;
}

void verify_macmahon(VerifyContext& ctx) {
  const long top = ctx.small ? 3 : 4;
  for (long L = 0; L <= top; ++L)
    for (long N = 0; N <= top; ++N)
      for (long K = 0; K <= top; ++K)
        ctx.row("macmahon", fmt_params({{"L", L}, {"N", N}, {"K", K}}), [&] {
          QPoly brute;
          iter_plane_partitions(L, N, K, [&](const PlanePartition& pp) {
            brute += QPoly::q(pp.volume());
          });
          return brute == zq_product(L, N, K) &&
                 brute.eval_at_one() == macmahon_count(L, N, K);
        });
}

void verify_cauchy_binet(VerifyContext& ctx) {
  RationalSource src(ctx.seed + 1);
  const long topn = ctx.small ? 2 : 3, topl = ctx.small ? 2 : 3;
  for (long N = 1; N <= topn; ++N)
    for (long L = 0; L <= topl; ++L)
      for (long n = 0; n <= L; ++n)
        ctx.row("cauchy-binet", fmt_params({{"N", N}, {"L", L}, {"n", n}}), [&] {
          for (int rep = 0; rep < 5; ++rep) {
            CBSpec spec;
            spec.N = N;
            spec.L = L;
            spec.n = n;
            spec.x = src.tuple(N);
            spec.y = src.tuple(N);
            if (!(cb_pair_sum(spec) == cb_pair_det(spec))) return false;
          }
          return true;
        });
}

void verify_theorem1(VerifyContext& ctx) {
  RationalSource src(ctx.seed + 2);
  const long topn = ctx.small ? 3 : 4;
  for (long N = 1; N <= topn; ++N)
    for (long k = 0; k <= std::min(N, 2L); ++k)
      for (long L = 0; L <= 2; ++L)
        ctx.row("theorem1", fmt_params({{"N", N}, {"k", k}, {"L", L}}), [&] {
          // every k-subset of rows
          std::vector<long> i_set(static_cast<size_t>(k));
          std::function<bool(long, long)> sweep = [&](long pos, long next) {
            if (pos == k) {
              for (int rep = 0; rep < 2; ++rep) {
                CBSpec spec;
                spec.N = N;
                spec.L = L;
                spec.k = k;
                spec.i_set = i_set;
                spec.x = src.tuple(N);
                spec.y = src.tuple(N);
                if (!(cb_pair_sum(spec) == cb_pair_det(spec))) return false;
              }
              return true;
            }
            for (long i = next; i <= N; ++i) {
              i_set[static_cast<size_t>(pos)] = i;
              if (!sweep(pos + 1, i + 1)) return false;
            }
            return true;
          };
          return sweep(0, 1);
        });
}

void verify_claim1(VerifyContext& ctx) {
  const long topn = ctx.small ? 3 : 4;
  for (long N = 1; N <= topn; ++N)
    for (long k = 0; k <= std::min(N, 2L); ++k)
      for (long L = 0; L <= 2; ++L)
        ctx.row("claim1", fmt_params({{"N", N}, {"k", k}, {"L", L}}), [&] {
          std::vector<long> i_set(static_cast<size_t>(k));
          std::function<bool(long, long)> sweep = [&](long pos, long next) {
            if (pos == k) {
              const QPoly det = q_restricted_det(N, L, i_set);
              const QPoly sum =
                  cb_restricted_sum(q_powers_over_q_complement(N, i_set),
                                    q_powers(N), L)
                      .as_poly();
              return det == sum;
            }
            for (long i = next; i <= N; ++i) {
              i_set[static_cast<size_t>(pos)] = i;
              if (!sweep(pos + 1, i + 1)) return false;
            }
            return true;
          };
          return sweep(0, 1);
        });
}

void verify_theorem2(VerifyContext& ctx, long N, long k, long L, bool pinned) {
  if (pinned) {
    ctx.row("theorem2", fmt_params({{"N", N}, {"k", k}, {"L", L}}), [&] {
      boxed_gf_identity(N, k, L);
      return true;
    });
    return;
  }
  const long topn = ctx.small ? 3 : 4, topl = ctx.small ? 2 : 3;
  for (long n = 1; n <= topn; ++n)
    for (long kk = 0; kk <= std::min(n, 2L); ++kk)
      for (long ll = 0; ll <= topl; ++ll)
        ctx.row("theorem2", fmt_params({{"N", n}, {"k", kk}, {"L", ll}}), [&] {
          boxed_gf_identity(n, kk, ll);
          return true;
        });
}

void verify_theorem3(VerifyContext& ctx, long N, long L, long mcal, bool pinned) {
  if (pinned) {
    ctx.row("theorem3", fmt_params({{"N", N}, {"L", L}, {"Mcal", mcal}}), [&] {
      watermelon_det(N, L, mcal);
      gessel_viennot_count(N, L, mcal);
      return true;
    });
    return;
  }
  const long top = ctx.small ? 3 : 4;
  for (long n = 1; n <= top; ++n)
    for (long l = 0; l <= n; ++l)
      for (long mc = 0; mc <= top; ++mc)
        ctx.row("theorem3", fmt_params({{"N", n}, {"L", l}, {"Mcal", mc}}), [&] {
          watermelon_det(n, l, mc);
          gessel_viennot_count(n, l, mc);
          return true;
        });
}

void verify_theorem4(VerifyContext& ctx) {
  const long mcal = ctx.small ? 10 : 12, deg = 6;
  for (long N = 2; N <= 3; ++N)
    for (long L = 1; L < N; ++L)
      ctx.row("theorem4", fmt_params({{"N", N}, {"L", L}, {"Mcal", mcal}}), [&] {
        const long k = N - L;
        const QPoly series = normtrace_limit(N, L, k, deg);
        return series == watermelon_gf_dev(N, L, mcal, k).truncated(deg);
      });
}

void verify_prop3(VerifyContext& ctx) {
  const long top = ctx.small ? 2 : 3;
  for (long N = 1; N <= top; ++N)
    for (long mc = 0; mc <= top; ++mc)
      for (long n = 0; n <= mc; ++n)
        ctx.row("prop3", fmt_params({{"N", N}, {"Mcal", mc}, {"n", n}}), [&] {
          watermelon_gf(N, mc, n);  // identity asserted inside
          return true;
        });
}

void verify_prop4(VerifyContext& ctx) {
  const long top = ctx.small ? 2 : 3;
  for (long N = 1; N <= top; ++N)
    for (long L = 0; L <= N; ++L)
      for (long mc = 0; mc <= top; ++mc)
        for (long delta : {0L, N - L})
          ctx.row("prop4",
                  fmt_params({{"N", N}, {"L", L}, {"Mcal", mc}, {"delta", delta}}),
                  [&] {
                    watermelon_gf_dev(N, L, mc, delta);
                    return true;
                  });
}

void verify_walks(VerifyContext& ctx) {
  const long topm = ctx.small ? 4 : 5, topk = ctx.small ? 4 : 6;
  for (long N = 1; N <= 3; ++N)
    for (long M = std::max(N - 1, 1L); M <= topm; ++M) {
      if (N > M + 1) continue;
      ctx.row("walks", fmt_params({{"N", N}, {"M", M}, {"Kmax", topk}}), [&] {
        std::vector<std::vector<long>> cfgs;
        std::vector<long> cur;
        std::function<void(long)> rec = [&](long next) {
          if (static_cast<long>(cur.size()) == N) {
            cfgs.push_back(cur);
            return;
          }
          for (long s = next; s >= N - static_cast<long>(cur.size()) - 1; --s) {
            cur.push_back(s);
            rec(s - 1);
            cur.pop_back();
          }
        };
        rec(M);
        for (long K = 0; K <= topk; ++K)
          for (const auto& l : cfgs)
            for (const auto& j : cfgs)
              if (random_turns_count(l, j, K, M) !=
                  random_turns_count_det(l, j, K, M))
                return false;
        return true;
      });
    }
}

void verify_bottleneck(VerifyContext& ctx) {
  const long topm = ctx.small ? 4 : 5;
  for (long N = 1; N <= 2; ++N)
    for (long M = N; M <= topm; ++M)
      ctx.row("bottleneck", fmt_params({{"N", N}, {"M", M}}), [&] {
        std::vector<long> l, j;
        for (long s = N - 1; s >= 0; --s) l.push_back(s + (M + 1 - N));
        for (long s = N - 1; s >= 0; --s) j.push_back(s + (M + 1 - N) / 2);
        for (long K1 = 0; K1 <= 3; ++K1)
          for (long K2 = 0; K2 <= 3; ++K2)
            for (long m = 0; m <= M; ++m) {
              const BigInt glued = bottleneck_count(l, j, K1, K2, m, M);
              if (m == 0 && glued != random_turns_count(l, j, K1 + K2, M))
                return false;
            }
        return true;
      });
}

void verify_formfactor(VerifyContext& ctx) {
  const long topm = ctx.small ? 4 : 5;
  for (long N = 1; N <= 3; ++N)
    for (long M = N; M <= topm; ++M) {
      const ChainConfig cfg{M, N};
      for (long m = 0; m <= M; ++m)
        ctx.row("formfactor-proj", fmt_params({{"N", N}, {"M", M}, {"m", m}}),
                [&] {
                  const QPoly ff = projector_formfactor_q(cfg, m);
                  if (m > cfg.mcal()) return ff.is_zero();
                  return ff.eval_at_one() ==
                         macmahon_count(N, N, cfg.mcal() - m);
                });
      for (long n = 0; n <= N; ++n)
        ctx.row("formfactor-dw", fmt_params({{"N", N}, {"M", M}, {"n", n}}),
                [&] {
                  const QPoly ff = domainwall_formfactor_q(cfg, n);
                  return ff.eval_at_one() ==
                         macmahon_count(N - n, N, cfg.mcal());
                });
    }
}

void verify_amplitude(VerifyContext& ctx) {
  const long topm = ctx.small ? 4 : 6;
  for (long N = 1; N <= 3; ++N)
    for (long M = std::max(N, 2L); M <= topm; ++M)
      ctx.row("amplitude-triple", fmt_params({{"N", N}, {"M", M}}), [&] {
        BasisState j, l;
        for (long s = N - 1; s >= 0; --s) j.sites.push_back(s + M + 1 - N);
        for (long s = N - 1; s >= 0; --s) l.sites.push_back(s);
        for (double t : {0.1, 0.5, 1.0}) {
          const auto a = amplitude(j, l, t, M);
          const auto b = amplitude_spectral(j, l, t, M);
          const auto c = amplitude_series(j, l, t, M);
          if (std::abs(a.value - b.value) > 1e-9) return false;
          if (std::abs(a.value - c.value) > 1e-9) return false;
        }
        return true;
      });
}

int run_verify(const std::string& target, VerifyContext& ctx, long N, long L,
               long mcal, bool pinned, const std::string& format,
               std::ostream& out) {
  if (target == "macmahon" || target == "all") verify_macmahon(ctx);
  if (target == "cauchy-binet" || target == "all") verify_cauchy_binet(ctx);
  if (target == "theorem1" || target == "all") verify_theorem1(ctx);
  if (target == "claim1" || target == "all") verify_claim1(ctx);
  if (target == "theorem2" || target == "all")
    verify_theorem2(ctx, N, 0, mcal, pinned && target == "theorem2");
  if (target == "theorem3" || target == "all")
    verify_theorem3(ctx, N, L, mcal, pinned && target == "theorem3");
  if (target == "theorem4" || target == "all") verify_theorem4(ctx);
  if (target == "prop3" || target == "all") verify_prop3(ctx);
  if (target == "prop4" || target == "all") verify_prop4(ctx);
  if (target == "walks" || target == "all") verify_walks(ctx);
  if (target == "bottleneck" || target == "all") verify_bottleneck(ctx);
  if (target == "formfactor" || target == "all") verify_formfactor(ctx);
  if (target == "amplitude" || target == "all") verify_amplitude(ctx);
  if (ctx.rows.empty()) {
    out << "unknown verify target: " << target << "\n";
    return 2;
  }

  bool all_ok = true;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : ctx.rows) {
      arr.push_back({{"identity", r.name},
                     {"params", r.params},
                     {"status", r.ok ? "EXACT-MATCH" : "MISMATCH"},
                     {"time_ms", r.ms}});
      all_ok = all_ok && r.ok;
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const auto& r : ctx.rows) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-18s %-28s %-12s %8.2f ms", r.name.c_str(),
                    r.params.c_str(), r.ok ? "EXACT-MATCH" : "MISMATCH", r.ms);
      out << buf << "\n";
      all_ok = all_ok && r.ok;
    }
    out << (all_ok ? "all identities hold\n" : "IDENTITY MISMATCH\n");
  }
  return all_ok ? 0 : 3;
}

json amplitude_json(const char* cmd, const json& params, const Amplitude& a,
                    double ms) {
  return json{{"command", cmd},
              {"params", params},
              {"value", {{"re", a.value.real()}, {"im", a.value.imag()}}},
              {"abs_err", a.abs_err},
              {"wall_time_ms", ms}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact combinatorial identities and XX0-chain correlation "
               "functions with lattice-path rendering"};
  app.require_subcommand(1);

  std::string format = "text";
  unsigned seed = 0;
  int jobs = 1;
  long budget = 2'000'000;
  std::string out_dir = ".";
  app.add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed);
  app.add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  app.add_option("--budget", budget)->check(CLI::PositiveNumber);
  app.add_option("--out", out_dir);

  // zq / count
  long zl = 0, zn = 0, zk = 0;
  auto* zq_cmd = app.add_subcommand("zq", "boxed plane-partition generating function");
  zq_cmd->add_option("L", zl)->required();
  zq_cmd->add_option("N", zn)->required();
  zq_cmd->add_option("K", zk)->required();
  auto* count_cmd = app.add_subcommand("count", "boxed plane-partition count");
  count_cmd->add_option("L", zl)->required();
  count_cmd->add_option("N", zn)->required();
  count_cmd->add_option("K", zk)->required();

  // schur
  std::string lambda_csv = "0";
  long vars = 1;
  std::string mode = "qn";
  auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial specializations");
  schur_cmd->add_option("--lambda", lambda_csv)->required();
  schur_cmd->add_option("--vars", vars)->required();
  schur_cmd->add_option("--mode", mode)
      ->check(CLI::IsMember({"qn", "qn-over-q", "inv-qn", "count"}));

  // verify
  std::string target = "all";
  bool small = false;
  long vN = 3, vL = 2, vM = 3;
  auto* verify_cmd = app.add_subcommand("verify", "run identity batteries");
  verify_cmd->add_option("target", target);
  verify_cmd->add_flag("--small", small);
  auto* vno = verify_cmd->add_option("--N", vN);
  auto* vlo = verify_cmd->add_option("--L", vL);
  auto* vmo = verify_cmd->add_option("--M", vM);

  // watermelon
  long wN = 2, wL = 2, wMcal = 1, wDelta = 0;
  bool wBrute = false;
  auto* melon_cmd = app.add_subcommand("watermelon", "watermelon generating function");
  melon_cmd->add_option("--N", wN)->required();
  melon_cmd->add_option("--L", wL);
  melon_cmd->add_option("--Mcal", wMcal)->required();
  melon_cmd->add_option("--delta", wDelta);
  melon_cmd->add_flag("--brute", wBrute);
  bool wL_set = false;
  melon_cmd->callback([&] { wL_set = melon_cmd->count("--L") > 0; });

  // walks
  std::string l_csv, j_csv;
  long wk = 1, wm = 0, wK1 = -1, wK2 = -1, chainM = 4;
  auto* walks_cmd = app.add_subcommand("walks", "random-turns walker counts");
  walks_cmd->add_option("--l", l_csv)->required();
  walks_cmd->add_option("--j", j_csv)->required();
  walks_cmd->add_option("--K", wk);
  walks_cmd->add_option("--K1", wK1);
  walks_cmd->add_option("--K2", wK2);
  walks_cmd->add_option("--m", wm);
  walks_cmd->add_option("--M", chainM)->required();

  // amplitude
  double at = 0.5, at1 = 0.1, at2 = 0.1;
  long aM = 4, am = 0;
  auto* amp_cmd = app.add_subcommand("amplitude", "transition amplitude");
  amp_cmd->add_option("--j", j_csv)->required();
  amp_cmd->add_option("--l", l_csv)->required();
  amp_cmd->add_option("--t", at)->required();
  amp_cmd->add_option("--M", aM)->required();
  amp_cmd->add_option("--t1", at1);
  amp_cmd->add_option("--t2", at2);
  amp_cmd->add_option("--m", am);
  bool two_time = false;
  amp_cmd->add_flag("--two-time", two_time);

  // persistence / autocorr
  long pM = 4, pN = 2, pn = 0, pm = 0;
  double pt = 0.5, pt1 = 0.1, pt2 = 0.1;
  auto* pers_cmd = app.add_subcommand("persistence", "domain-wall persistence");
  pers_cmd->add_option("--M", pM)->required();
  pers_cmd->add_option("--N", pN)->required();
  pers_cmd->add_option("--n", pn)->required();
  pers_cmd->add_option("--t", pt)->required();
  auto* auto_cmd = app.add_subcommand("autocorr", "dynamical auto-correlation");
  auto_cmd->add_option("--M", pM)->required();
  auto_cmd->add_option("--N", pN)->required();
  auto_cmd->add_option("--n", pn)->required();
  auto_cmd->add_option("--m", pm)->required();
  auto_cmd->add_option("--t1", pt1)->required();
  auto_cmd->add_option("--t2", pt2)->required();

  // asymptotics
  std::string kind = "amplitude";
  AsymptoteParams ap;
  auto* asy_cmd = app.add_subcommand("asymptotics", "large-t decay report");
  asy_cmd->add_option("--kind", kind)
      ->check(CLI::IsMember({"amplitude", "persistence", "two-time", "autocorr"}));
  asy_cmd->add_option("--N", ap.N);
  asy_cmd->add_option("--M", ap.M);
  asy_cmd->add_option("--n", ap.n);
  asy_cmd->add_option("--m", ap.m);
  asy_cmd->add_option("--tmin", ap.t_min);
  asy_cmd->add_option("--tmax", ap.t_max);
  asy_cmd->add_option("--grid", ap.grid_points);

  // draw
  std::string family = "star", prefix = "nest";
  bool draw_all = false;
  long dN = 2, dMcal = 1, dK = 0, ddelta = 0, dn = 0, dL = -1, dindex = 0;
  std::string dlambda = "";
  long dM = 4, dsteps = 4;
  auto* draw_cmd = app.add_subcommand("draw", "render nests as SVG");
  draw_cmd->add_option("family", family)
      ->check(CLI::IsMember({"star", "conjstar", "watermelon", "walks"}));
  draw_cmd->add_option("--N", dN);
  draw_cmd->add_option("--Mcal", dMcal);
  draw_cmd->add_option("--k", dK);
  draw_cmd->add_option("--delta", ddelta);
  draw_cmd->add_option("--n", dn);
  draw_cmd->add_option("--L", dL);
  draw_cmd->add_option("--lambda", dlambda);
  draw_cmd->add_option("--index", dindex);
  draw_cmd->add_option("--M", dM);
  draw_cmd->add_option("--K", dsteps);
  draw_cmd->add_option("--l", l_csv);
  draw_cmd->add_option("--j", j_csv);
  draw_cmd->add_option("--prefix", prefix);
  draw_cmd->add_flag("--all", draw_all);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << "usage: see --help\n";
    return 2;
  }

  const auto t_start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t_start)
        .count();
  };

  try {
    if (*zq_cmd) {
      const QPoly z = zq_product(zl, zn, zk);
      out << (format == "json" ? z.json() : z.str()) << "\n";
      return 0;
    }
    if (*count_cmd) {
      const BigInt c = macmahon_count(zl, zn, zk);
      if (format == "json")
        out << json{{"command", "count"},
                    {"L", zl},
                    {"N", zn},
                    {"K", zk},
                    {"count", c.get_str()}}
                   .dump()
            << "\n";
      else
        out << c.get_str() << "\n";
      return 0;
    }
    if (*schur_cmd) {
      const Partition lam(parse_sites(lambda_csv));
      if (mode == "count") {
        const BigInt c = schur_tableau_oracle(lam, vars);
        if (format == "json")
          out << json{{"command", "schur"},
                      {"lambda", lam.parts},
                      {"vars", vars},
                      {"count", c.get_str()}}
                     .dump()
              << "\n";
        else
          out << c.get_str() << "\n";
        return 0;
      }
      PrincipalMode pm_mode = PrincipalMode::QN;
      if (mode == "qn-over-q") pm_mode = PrincipalMode::QN_OVER_Q;
      if (mode == "inv-qn") pm_mode = PrincipalMode::INV_QN;
      const QPoly val = principal_specialization(lam, vars, pm_mode);
      out << (format == "json" ? val.json() : val.str()) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      VerifyContext ctx;
      ctx.seed = seed;
      ctx.small = small;
      const bool pinned = vno->count() || vlo->count() || vmo->count();
      return run_verify(target, ctx, vN, vL, vM, pinned, format, out);
    }
    if (*melon_cmd) {
      if (!wL_set) wL = wN;
      QPoly gf;
      if (wBrute)
        gf = (wL == wN) ? watermelon_gf(wN, wMcal, 0)
                        : watermelon_gf_dev(wN, wL, wMcal, wDelta);
      else
        gf = watermelon_det(wN, wL, wMcal);
      if (format == "json")
        out << json{{"command", "watermelon"},
                    {"N", wN},
                    {"L", wL},
                    {"Mcal", wMcal},
                    {"gf", json::parse(gf.json())},
                    {"count", gf.eval_at_one().get_str()}}
                   .dump()
            << "\n";
      else
        out << gf.str() << "\n";
      return 0;
    }
    if (*walks_cmd) {
      const auto l = parse_sites(l_csv), j = parse_sites(j_csv);
      BigInt c;
      if (wK1 >= 0 && wK2 >= 0)
        c = bottleneck_count(l, j, wK1, wK2, wm, chainM);
      else
        c = random_turns_count(l, j, wk, chainM);
      if (format == "json")
        out << json{{"command", "walks"},
                    {"l", l},
                    {"j", j},
                    {"M", chainM},
                    {"count", c.get_str()}}
                   .dump()
            << "\n";
      else
        out << c.get_str() << "\n";
      return 0;
    }
    if (*amp_cmd) {
      BasisState js{parse_sites(j_csv)}, ls{parse_sites(l_csv)};
      const Amplitude a = two_time
                              ? two_time_amplitude(js, ls, at1, at2, am, aM)
                              : amplitude(js, ls, at, aM);
      json params{{"j", js.sites}, {"l", ls.sites}, {"M", aM}};
      if (two_time) {
        params["t1"] = at1;
        params["t2"] = at2;
        params["m"] = am;
      } else {
        params["t"] = at;
      }
      if (degenerate_geometry(aM)) params["degenerate_geometry"] = true;
      if (format == "json")
        out << amplitude_json("amplitude", params, a, elapsed_ms()).dump() << "\n";
      else
        out << a.value.real() << " (abs_err " << a.abs_err << ")\n";
      return 0;
    }
    if (*pers_cmd || *auto_cmd) {
      const ChainConfig cfg{pM, pN};
      SumOptions so{budget, jobs};
      const bool is_pers = static_cast<bool>(*pers_cmd);
      const double v = is_pers
                           ? persistence(cfg, pn, pt, so)
                           : autocorrelation(cfg, pn, pm, pt1, pt2, so);
      json params{{"M", pM}, {"N", pN}, {"n", pn}};
      if (is_pers)
        params["t"] = pt;
      else {
        params["m"] = pm;
        params["t1"] = pt1;
        params["t2"] = pt2;
      }
      if (degenerate_geometry(pM)) params["degenerate_geometry"] = true;
      if (format == "json")
        out << json{{"command", is_pers ? "persistence" : "autocorr"},
                    {"params", params},
                    {"value", v},
                    {"abs_err", 1e-12},
                    {"wall_time_ms", elapsed_ms()}}
                   .dump()
            << "\n";
      else
        out << v << "\n";
      return 0;
    }
    if (*asy_cmd) {
      ap.budget = budget;
      ap.jobs = jobs;
      AsymptoteKind k = AsymptoteKind::Amplitude;
      if (kind == "persistence") k = AsymptoteKind::Persistence;
      if (kind == "two-time") k = AsymptoteKind::TwoTime;
      if (kind == "autocorr") k = AsymptoteKind::Autocorr;
      const auto rep = leading_asymptote(k, ap);
      if (format == "json") {
        out << json{{"command", "asymptotics"},
                    {"kind", kind},
                    {"N", ap.N},
                    {"M", ap.M},
                    {"predicted_exponent", rep.predicted_exponent},
                    {"fitted_exponent", rep.fitted_exponent},
                    {"predicted_amplitude", rep.predicted_amplitude},
                    {"fitted_amplitude", rep.fitted_amplitude},
                    {"relative_amplitude_error", rep.relative_amplitude_error},
                    {"t_min", rep.t_min},
                    {"t_max", rep.t_max},
                    {"regime_ok", rep.regime_ok},
                    {"window_ok", rep.window_ok}}
                   .dump()
            << "\n";
      } else {
        out << "kind " << kind << "  N=" << ap.N << " M=" << ap.M << "\n"
            << "  predicted exponent " << rep.predicted_exponent
            << "  fitted " << rep.fitted_exponent << "\n"
            << "  predicted amplitude " << rep.predicted_amplitude
            << "  fitted " << rep.fitted_amplitude << "  rel.err "
            << rep.relative_amplitude_error << "\n"
            << "  window [" << rep.t_min << ", " << rep.t_max << "]"
            << (rep.regime_ok ? "" : "  (outside the 1 << N << M regime)")
            << (rep.window_ok ? "" : "  (window too small)") << "\n";
      }
      return 0;
    }
    if (*draw_cmd) {
      std::filesystem::create_directories(out_dir);
      std::vector<PathNest> nests;
      if (family == "star") {
        const Partition lam(parse_sites(dlambda.empty() ? "1" : dlambda));
        enumerate_stars(lam, dN, dK,
                        [&](const PathNest& n) { nests.push_back(n); });
        if (!draw_all && !nests.empty())
          nests = {nests[std::min<size_t>(nests.size() - 1, dindex)]};
      } else if (family == "conjstar") {
        const Partition lam(parse_sites(dlambda.empty() ? "1" : dlambda));
        enumerate_conj_stars(lam, dMcal, dN, dK,
                             [&](const PathNest& n) { nests.push_back(n); });
        if (!draw_all && !nests.empty())
          nests = {nests[std::min<size_t>(nests.size() - 1, dindex)]};
      } else if (family == "watermelon") {
        if (dL < 0) dL = dN;
        enumerate_watermelons(dN, dL, dMcal, dn, ddelta,
                              [&](const PathNest& n, long) { nests.push_back(n); });
        if (!draw_all && !nests.empty())
          nests = {nests[std::min<size_t>(nests.size() - 1, dindex)]};
      } else {  // walks
        const auto l = parse_sites(l_csv), j = parse_sites(j_csv);
        enumerate_random_turns_paths(
            l, j, dsteps, dM, [&](const PathNest& n) { nests.push_back(n); });
        if (!draw_all && !nests.empty())
          nests = {nests[std::min<size_t>(nests.size() - 1, dindex)]};
      }
      long written = 0;
      for (size_t i = 0; i < nests.size(); ++i) {
        SceneSpec scene;
        scene.nest = nests[i];
        const std::string path =
            out_dir + "/" + prefix + "_" + std::to_string(i) + ".svg";
        std::ofstream f(path);
        f << render_svg(scene);
        ++written;
      }
      if (format == "json")
        out << json{{"command", "draw"}, {"family", family}, {"files", written}}
                   .dump()
            << "\n";
      else
        out << written << " file(s) written to " << out_dir << "\n";
      return 0;
    }
  } catch (const IdentityMismatch& e) {
    err << "identity mismatch: " << e.what() << "\n";
    return 3;
  } catch (const LengthMismatch& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const NotStrict& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Collision& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const SizeMismatch& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const InvalidDeviation& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const ModeEnumerationTooLarge& e) {
    err << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace xx0::cli
