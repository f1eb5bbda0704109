#include "z4cb_cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "report.hpp"
#include "z4cb_cli/config.hpp"

namespace z4cb::cli {

namespace {

namespace fs = std::filesystem;

/// Flag values; unset options leave the config-file values alone.
struct Overrides {
  std::string config;
  std::optional<int> m;
  std::optional<std::string> polynomial;
  std::optional<std::string> preset;
  std::optional<int> e1;
  std::vector<int> chain;
  std::vector<std::string> gammas;
  std::optional<std::string> eta;
  std::optional<std::string> variant;
  std::optional<std::string> method;
  std::optional<std::size_t> sample;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<unsigned> workers;
  bool relax = false;
};

void add_config_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON run configuration");
  cmd->add_option("--m", o.m, "extension degree m");
  cmd->add_option("--polynomial", o.polynomial, "primitive binary polynomial, lowest degree first, or auto");
  cmd->add_option("--preset", o.preset, "kerdock | heng_yue_1 | heng_yue_2 | heng_yue_3");
  cmd->add_option("--e1", o.e1, "e_1 for the heng_yue_2/3 presets");
  cmd->add_option("--chain", o.chain, "divisor chain, e.g. 1,2,6")->delimiter(',');
  cmd->add_option("--gamma", o.gammas, "gamma_j exponents (or zero), comma separated")->delimiter(',');
  cmd->add_option("--eta", o.eta, "eta exponent or zero (f_prime variant)");
  cmd->add_option("--variant", o.variant, "f | f_prime");
  cmd->add_option("--method", o.method, "auto | walsh | rank | closed_rank");
  cmd->add_option("--sample", o.sample, "check k seeded random pairs and singles instead of all");
  cmd->add_option("--seed", o.seed, "sampling seed");
  cmd->add_option("--out-dir", o.out_dir, "output directory");
  cmd->add_option("--workers", o.workers, "worker threads (0 = hardware concurrency)");
}

void add_relax_flag(CLI::App* cmd, Overrides& o) {
  cmd->add_flag("--relax-coefficients", o.relax,
                "accept gammas with 1 + sum gamma_j^2 = 0 (negative-control runs; expect failures)");
}

RunConfig merge(const Overrides& o) {
  RunConfig cfg;
  if (!o.config.empty()) apply_json_file(cfg, o.config);
  if (o.m) cfg.m = *o.m;
  if (o.polynomial) cfg.polynomial = *o.polynomial;
  if (o.preset) cfg.preset = *o.preset;
  if (o.e1) cfg.e1 = *o.e1;
  if (!o.chain.empty()) cfg.chain = o.chain;
  if (!o.gammas.empty()) {
    cfg.gammas.clear();
    for (const auto& g : o.gammas) cfg.gammas.push_back(parse_gamma(g));
  }
  if (o.eta) cfg.eta = parse_eta(*o.eta);
  if (o.variant) cfg.variant = parse_variant(*o.variant);
  if (o.method) cfg.method = *o.method;
  if (o.sample) cfg.sample = *o.sample;
  if (o.seed) cfg.seed = *o.seed;
  if (o.out_dir) cfg.out_dir = *o.out_dir;
  if (o.workers) cfg.workers = *o.workers;
  return cfg;
}

/// Validated parameters shared by the family-based commands.
struct Setup {
  RunConfig cfg;
  BinaryPoly g;
  ChainParams params;
  Constraints constraints = Constraints::enforce;
};

/// Returns nullopt after printing the violations when the chain is invalid.
std::optional<Setup> prepare(const Overrides& o, std::ostream& err) {
  Setup s{merge(o), {}, {}, o.relax ? Constraints::relax_coefficients : Constraints::enforce};
  s.g = resolve_polynomial(s.cfg);
  s.params = resolve_chain(s.cfg);
  const BinaryField field(s.g);
  const auto v = validate_chain(s.params, field);
  for (const auto& w : v.warnings) err << "warning: " << w << '\n';
  bool rejected = false;
  for (const auto& x : v.violations) {
    if (s.constraints == Constraints::relax_coefficients && x.kind == ViolationKind::GammaSumZero) {
      err << "warning: not enforced: " << x.message << '\n';
      continue;
    }
    err << "invalid parameters: " << x.message << '\n';
    rejected = true;
  }
  if (rejected) return std::nullopt;
  return s;
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
  fs::create_directories(dir);
  const fs::path path = fs::path(dir) / name;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  return os;
}

std::string describe_chain(const ChainParams& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.chain.size(); ++i) s += (i ? "," : "") + std::to_string(p.chain[i]);
  return s + ")";
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

VerifyReport run_verification(const Setup& s, const Family* fam, VerifyMethod method, unsigned workers) {
  const PairBudget budget = resolve_budget(s.cfg);
  if (method == VerifyMethod::closed_rank)
    return verify_closed_rank(BinaryField(s.g), s.params, budget, workers, s.constraints);
  return verify_family(*fam, method, budget, workers);
}

int cmd_lift(const Overrides& o, std::ostream& out) {
  const RunConfig cfg = merge(o);
  const BinaryPoly g = resolve_polynomial(cfg);
  const Z4Poly f = hensel_lift(g);
  out << "m: " << g.degree() << '\n';
  out << "binary polynomial (lowest degree first): " << g.to_string() << '\n';
  out << "lifted polynomial over Z4 (lowest degree first): " << f.to_string() << '\n';
  return kOk;
}

int cmd_generate(const Overrides& o, const std::string& engine, bool timings, std::ostream& out,
                 std::ostream& err) {
  const auto t0 = Clock::now();
  auto setup = prepare(o, err);
  if (!setup) return kInvalid;
  const Setup& s = *setup;
  const unsigned workers = resolve_workers(s.cfg);
  const int m = s.params.m;

  const auto ring = GaloisRing::create(s.g);
  const Family fam = build_family(ring, s.params, s.constraints);
  const double t_family = ms_since(t0);

  const auto t1 = Clock::now();
  const VerifyMethod method = resolve_method(s.cfg, m);
  const VerifyReport vr = run_verification(s, &fam, method, workers);
  const double t_verify = ms_since(t1);

  const auto t2 = Clock::now();
  const Codebook cb = assemble(fam, vr.ok());
  ExactMagnitude imax;
  if (engine == "naive")
    imax = imax_naive(cb, workers);
  else if (engine == "structured")
    imax = imax_structured(fam, workers);
  else
    throw Error(ErrorKind::InvalidConfig, "engine must be structured or naive, got " + engine);
  const double t_imax = ms_since(t2);

  const OptimalityReport rep = optimality_verdict(cb, imax, engine);
  const Audit au = audit(cb);

  Json j;
  j["n"] = rep.family_size;
  j["N"] = rep.n_rows;
  j["K"] = rep.dim;
  j["imax_sq"] = rational_json(rep.imax_sq);
  j["bounds"] = bounds_json(rep.bounds);
  j["alphabet_size"] = au.alphabet_size();
  j["verdict"] = to_string(rep.verdict);
  j["method"] = engine;
  j["seed"] = s.cfg.seed;
  j["polynomial"] = polynomial_json(s.g);
  j["chain"] = chain_json(s.params);
  j["gammas"] = gammas_json(s.params);
  j["eta"] = element_json(s.params.eta);
  j["variant"] = to_string(s.params.variant);
  j["unit_norm"] = au.unit_norm;
  j["verification"] = verify_json(vr);
  if (timings) {
    j["timings_ms"] = Json{{"family", t_family}, {"verify", t_verify}, {"imax", t_imax}, {"total", ms_since(t0)}};
  }

  {
    auto csv = open_output(s.cfg.out_dir, "codebook.csv");
    write_codebook_csv(csv, cb);
  }
  {
    auto js = open_output(s.cfg.out_dir, "report.json");
    js << j.dump(2) << '\n';
  }

  out << "family: m=" << m << " chain " << describe_chain(s.params) << " variant " << to_string(s.params.variant)
      << ", n=" << rep.family_size << '\n';
  out << "verification (" << to_string(vr.method) << "): " << vr.singles_checked << " singles, " << vr.pairs_checked
      << " pairs, " << vr.failures.size() << " failures\n";
  out << "codebook: N=" << rep.n_rows << " K=" << rep.dim << " alphabet size " << au.alphabet_size() << '\n';
  out << "imax_sq = " << rep.imax_sq << " (" << engine << "), approximate imax = " << approx(std::sqrt(rep.imax_sq.to_double()))
      << '\n';
  if (rep.bounds.lev_complex_sq)
    out << "lev_complex_sq = " << *rep.bounds.lev_complex_sq
        << (rep.bounds.lev_complex_applicable ? "" : " (not applicable)") << '\n';
  out << "verdict: " << to_string(rep.verdict) << '\n';
  out << "wrote " << (fs::path(s.cfg.out_dir) / "codebook.csv").string() << " and "
      << (fs::path(s.cfg.out_dir) / "report.json").string() << '\n';

  if (!vr.ok() || rep.verdict != Verdict::optimal) return kVerificationFailed;
  return kOk;
}

int cmd_verify(const Overrides& o, std::ostream& out, std::ostream& err) {
  auto setup = prepare(o, err);
  if (!setup) return kInvalid;
  const Setup& s = *setup;
  const int m = s.params.m;
  const VerifyMethod method = resolve_method(s.cfg, m);
  const unsigned workers = resolve_workers(s.cfg);

  std::optional<Family> fam;
  if (method != VerifyMethod::closed_rank) fam = build_family(GaloisRing::create(s.g), s.params, s.constraints);
  const VerifyReport vr = run_verification(s, fam ? &*fam : nullptr, method, workers);

  Json j;
  j["m"] = m;
  j["polynomial"] = polynomial_json(s.g);
  j["chain"] = chain_json(s.params);
  j["gammas"] = gammas_json(s.params);
  j["eta"] = element_json(s.params.eta);
  j["variant"] = to_string(s.params.variant);
  j["seed"] = s.cfg.seed;
  j["verification"] = verify_json(vr);
  {
    auto js = open_output(s.cfg.out_dir, "verify.json");
    js << j.dump(2) << '\n';
  }

  out << "verification (" << to_string(vr.method) << ") m=" << m << " chain " << describe_chain(s.params) << ": "
      << vr.singles_checked << " singles, " << vr.pairs_checked << " pairs, " << vr.failures.size() << " failures\n";
  for (std::size_t i = 0; i < std::min<std::size_t>(vr.failures.size(), 10); ++i) {
    const auto& f = vr.failures[i];
    out << "  not bent: a=" << to_string(f.a) << (f.b.is_zero() ? "" : " b=" + to_string(f.b));
    if (f.rank >= 0) out << " rank " << f.rank;
    out << '\n';
  }
  out << (vr.ok() ? "all checked forms are generalized bent\n" : "verification FAILED\n");
  return vr.ok() ? kOk : kVerificationFailed;
}

int cmd_bounds(std::int64_t n, std::int64_t k, std::ostream& out) {
  if (k < 1 || n < k) throw Error(ErrorKind::InvalidParams, "bounds need N >= K >= 1");
  const Bounds b = bounds(n, k);
  out << "N = " << n << ", K = " << k << '\n';
  auto line = [&](const char* name, const std::optional<Rational>& v, std::optional<bool> applicable) {
    out << name << "_sq = ";
    if (!v) {
      out << "undefined\n";
      return;
    }
    out << *v << "  (approximate " << name << " = " << approx(std::sqrt(v->to_double())) << ")";
    if (applicable) out << (*applicable ? "  applicable" : "  not applicable");
    out << '\n';
  };
  line("welch", b.welch_sq, std::nullopt);
  line("lev_real", b.lev_real_sq, b.lev_real_applicable);
  line("lev_complex", b.lev_complex_sq, b.lev_complex_applicable);
  return kOk;
}

[[noreturn]] void bad_selector(const std::string& sel) {
  throw Error(ErrorKind::InvalidConfig, "form selector must be member:A, diff:A,B, alt:C,I or zero; got " + sel);
}

/// Parses member:A, diff:A,B, alt:C,I or zero.
QuadraticForm select_form(const RingPtr& ring, const ChainParams& p, const std::string& sel, std::string& label) {
  auto bad = [&] { bad_selector(sel); };
  const auto colon = sel.find(':');
  const std::string kind = sel.substr(0, colon);
  std::vector<std::uint64_t> nums;
  if (colon != std::string::npos) {
    std::string rest = sel.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) bad();
      nums.push_back(std::stoull(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  label = sel;
  if (kind == "zero" && nums.empty()) return QuadraticForm::zero(ring);
  if (kind == "member" && nums.size() == 1) return family_member(ring, p, ring->teich_power(nums[0]));
  if (kind == "diff" && nums.size() == 2) {
    if (nums[0] % ring->group_order() == nums[1] % ring->group_order()) bad();
    return subtract_forms(family_member(ring, p, ring->teich_power(nums[0])),
                          family_member(ring, p, ring->teich_power(nums[1])));
  }
  if (kind == "alt" && nums.size() == 2 && nums[1] < static_cast<std::uint64_t>(ring->degree()))
    return scale_form(Z4(2), trace_monomial_form(ring, ring->teich_power(nums[0]), (std::uint64_t{1} << nums[1]) + 1));
  bad_selector(sel);
}

int cmd_spectrum(const Overrides& o, const std::string& form_sel, std::ostream& out, std::ostream& err) {
  auto setup = prepare(o, err);
  if (!setup) return kInvalid;
  const Setup& s = *setup;
  const auto ring = GaloisRing::create(s.g);
  std::string label;
  const QuadraticForm q = select_form(ring, s.params, form_sel, label);
  const WalshSpectrum spec = walsh_spectrum(q);
  {
    auto csv = open_output(s.cfg.out_dir, "spectrum.csv");
    write_spectrum_csv(csv, spec);
  }
  std::int64_t lo = spec.values.front().norm();
  std::int64_t hi = lo;
  for (const auto& v : spec.values) {
    lo = std::min(lo, v.norm());
    hi = std::max(hi, v.norm());
  }
  const int r = rank(bilinear_matrix(q));
  out << "form " << label << " on " << ring->describe() << '\n';
  out << "|chi|^2 ranges over [" << lo << ", " << hi << "], 2^m = " << ring->size() << '\n';
  out << "rank " << r << ", generalized bent: " << (lo == hi && hi == static_cast<std::int64_t>(ring->size()) ? "yes" : "no")
      << '\n';
  int code = kOk;
  if (is_alternating(q)) {
    const RankDistributionCheck c = spectrum_distribution(spec, r);
    out << "alternating of rank " << r << ": expected 0 x" << c.expected_zero << ", +" << c.magnitude << " x"
        << c.expected_plus << ", -" << c.magnitude << " x" << c.expected_minus << "; observed 0 x" << c.observed_zero
        << ", +" << c.magnitude << " x" << c.observed_plus << ", -" << c.magnitude << " x" << c.observed_minus
        << ", other x" << c.observed_other << " -> " << (c.conforms ? "conforms" : "DOES NOT CONFORM") << '\n';
    if (!c.conforms) code = kVerificationFailed;
  } else {
    out << "not alternating; value distribution check does not apply\n";
  }
  out << "wrote " << (fs::path(s.cfg.out_dir) / "spectrum.csv").string() << '\n';
  return code;
}

int cmd_gray(const Overrides& o, std::optional<std::uint64_t> a_sel, std::ostream& out, std::ostream& err) {
  auto setup = prepare(o, err);
  if (!setup) return kInvalid;
  const Setup& s = *setup;
  const int m = s.params.m;
  if (m % 2 == 0) throw Error(ErrorKind::OddDimension, "the Gray image lives on m+1 coordinates; m must be odd");
  const auto ring = GaloisRing::create(s.g);

  std::vector<std::uint32_t> picks;
  if (a_sel) {
    picks.push_back(ring->teich_power(*a_sel).exponent());
  } else if (s.cfg.sample) {
    picks = select_checks(ring->group_order(), PairBudget::sampled(*s.cfg.sample, s.cfg.seed)).first;
  } else {
    for (std::uint32_t k = 0; k < ring->group_order(); ++k) picks.push_back(k);
  }

  auto csv = open_output(s.cfg.out_dir, "gray.csv");
  csv << "a_exponent,bent,max_abs_walsh\n";
  std::size_t bent = 0;
  for (std::uint32_t k : picks) {
    const BooleanFn f = gray(family_member(ring, s.params, TeichElement::power(k)));
    const IntSpectrum w = walsh_hadamard(f);
    std::int64_t mx = 0;
    for (auto v : w.values) mx = std::max(mx, v < 0 ? -v : v);
    const bool b = is_boolean_bent(f);
    bent += b ? 1 : 0;
    csv << k << ',' << (b ? 1 : 0) << ',' << mx << '\n';
  }
  out << "Gray images of " << (s.params.variant == Variant::f_prime ? "f'_a" : "f_a") << " on F_2^" << m
      << " x F_2: " << bent << "/" << picks.size() << " bent (|W| = 2^" << (m + 1) / 2 << " required)\n";
  out << "wrote " << (fs::path(s.cfg.out_dir) / "gray.csv").string() << '\n';
  return bent == picks.size() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Z4-valued quadratic form codebooks over GR(4,m)", "z4cb"};
  app.require_subcommand(1);

  Overrides lift_o;
  auto* lift = app.add_subcommand("lift", "print the chosen binary polynomial and its Z4 lift");
  lift->add_option("--m", lift_o.m, "extension degree m")->required();
  lift->add_option("--polynomial", lift_o.polynomial, "primitive binary polynomial, lowest degree first, or auto");

  Overrides gen_o;
  std::string engine = "structured";
  bool timings = false;
  auto* generate = app.add_subcommand("generate", "build, verify and assemble a codebook; writes codebook.csv and report.json");
  add_config_options(generate, gen_o);
  add_relax_flag(generate, gen_o);
  generate->add_option("--engine", engine, "structured | naive correlation engine");
  generate->add_flag("--timings", timings, "add wall-clock timings to report.json");

  Overrides ver_o;
  auto* verify = app.add_subcommand("verify", "check generalized bentness of members and differences");
  add_config_options(verify, ver_o);
  add_relax_flag(verify, ver_o);

  std::int64_t bn = 0;
  std::int64_t bk = 0;
  auto* bnd = app.add_subcommand("bounds", "exact Welch and Levenshtein bounds for an (N, K) codebook");
  bnd->add_option("N", bn, "number of codewords")->required();
  bnd->add_option("K", bk, "dimension")->required();

  Overrides spec_o;
  std::string form_sel = "member:0";
  auto* spectrum = app.add_subcommand("spectrum", "Walsh spectrum of one form; writes spectrum.csv");
  add_config_options(spectrum, spec_o);
  spectrum->add_option("--form", form_sel, "member:A | diff:A,B | alt:C,I | zero (exponents of xi)");

  Overrides gray_o;
  std::optional<std::uint64_t> gray_a;
  auto* gr = app.add_subcommand("gray", "Boolean bentness of Gray images; writes gray.csv");
  add_config_options(gr, gray_o);
  gr->add_option("--a", gray_a, "single member exponent (default: all, or --sample k)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*lift) return cmd_lift(lift_o, out);
    if (*generate) return cmd_generate(gen_o, engine, timings, out, err);
    if (*verify) return cmd_verify(ver_o, out, err);
    if (*bnd) return cmd_bounds(bn, bk, out);
    if (*spectrum) return cmd_spectrum(spec_o, form_sel, out, err);
    if (*gr) return cmd_gray(gray_o, gray_a, out, err);
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kInvalid;
}

}  // namespace z4cb::cli
