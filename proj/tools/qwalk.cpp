#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/freeprob.hpp"
#include "qwalk/gamma_group.hpp"
#include "qwalk/montecarlo.hpp"
#include "qwalk/threads.hpp"
#include "qwalk/transfer.hpp"
#include "qwalk/verify.hpp"

namespace {

using namespace qwalk;

struct Global {
  int threads = 0;
  bool csv = false;
  std::string out;
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(g.out);
    if (!f) throw std::runtime_error("cannot write " + g.out);
    f << text << "\n";
  }
}

PhaseMatrix resolve_q(const std::string& source, const AbelianGroup& X,
                      const AbelianGroup& Y, std::uint64_t seed) {
  if (source == "random") return generic_q(X, Y, seed);
  if (source == "ones") return ones_q(X, Y);
  return load_phase_matrix(source);
}

json magic_json(const MagicReport& m) {
  return {{"pass", m.pass},
          {"self_adjoint_defect", m.self_adjoint_defect},
          {"idempotent_defect", m.idempotent_defect},
          {"row_sum_defect", m.row_sum_defect},
          {"col_sum_defect", m.col_sum_defect}};
}

struct ModelOpts {
  std::string x, y, q = "random", side = "right";
  std::uint64_t seed = 1;
  bool dump = false;
};

int run_model(const Global& g, const ModelOpts& o) {
  const AbelianGroup X = parse_group(o.x);
  json params = {{"x", o.x}, {"q", o.q}, {"side", o.side}};
  json doc;
  bool pass = false;
  if (o.y.empty()) {
    const MagicModel U = fourier_model(X);
    const MagicReport m = check_magic(U);
    pass = m.pass;
    doc["model"] = {{"kind", "fourier"},
                    {"x", o.x},
                    {"n", U.n()},
                    {"block_dim", U.block_dim()}};
    doc["magic"] = magic_json(m);
    if (o.dump) doc["blocks"] = json::parse(model_to_json(U));
  } else {
    const AbelianGroup Y = parse_group(o.y);
    params["y"] = o.y;
    const PhaseMatrix Q = resolve_q(o.q, X, Y, o.seed);
    const DeformSide side =
        o.side == "left" ? DeformSide::left : DeformSide::right;
    const MagicModel W =
        deform(fourier_model(X), fourier_model(Y), Q, side);
    const MagicReport m = check_magic(W);
    pass = m.pass;
    doc["model"] = {{"kind", "deformed_fourier"},
                    {"x", o.x},
                    {"y", o.y},
                    {"side", o.side},
                    {"n", W.n()},
                    {"block_dim", W.block_dim()}};
    doc["magic"] = magic_json(m);
    if (side == DeformSide::right) {
      const WreathReport wr = verify_wreath_structure(W, X, Y);
      pass = pass && wr.pass;
      doc["wreath"] = {{"pass", wr.pass},
                       {"row_factor_defect", wr.row_factor_defect},
                       {"col_factor_defect", wr.col_factor_defect}};
    }
    if (o.dump) doc["blocks"] = json::parse(model_to_json(W));
  }
  doc["pass"] = pass;
  doc["manifest"] = make_manifest("model", params, {{"seed", o.seed}},
                                  current_max_threads(), g.out)
                        .to_json();
  emit(g, doc.dump(2));
  return pass ? 0 : 1;
}

struct MomentsOpts {
  std::string x, y, q = "random", method = "spectral";
  std::uint64_t seed = 1;
  int p = 2, r = 1, R = 2000;
};

int run_moments(const Global& g, const MomentsOpts& o) {
  const AbelianGroup X = parse_group(o.x);
  MagicModel model = fourier_model(X);
  json params = {{"x", o.x}, {"method", o.method}, {"p", o.p}};
  if (!o.y.empty()) {
    const AbelianGroup Y = parse_group(o.y);
    model = deform(model, fourier_model(Y),
                   resolve_q(o.q, X, Y, o.seed), DeformSide::right);
    params["y"] = o.y;
    params["q"] = o.q;
  }
  MomentReport rep;
  if (o.method == "spectral") {
    rep = haar_moment(model, o.p, HaarMethod::spectral);
  } else if (o.method == "cesaro") {
    HaarParams hp;
    hp.cesaro_R = o.R;
    rep = haar_moment(model, o.p, HaarMethod::cesaro, hp);
    params["R"] = o.R;
  } else if (o.method == "truncated") {
    Stopwatch sw;
    rep.method = "truncated";
    rep.value = truncated_moment(model, o.p, o.r);
    rep.params = {{"p", o.p}, {"r", o.r}};
    rep.time_ms = sw.elapsed_ms();
    params["r"] = o.r;
  } else {
    throw std::invalid_argument("unknown method " + o.method);
  }
  rep.seed = o.y.empty() || o.q != "random" ? 0 : o.seed;
  if (g.csv) {
    std::ostringstream os;
    os << MomentReport::csv_header() << "\n" << rep.csv_row();
    emit(g, os.str());
  } else {
    json doc = {{"report", rep.to_json()},
                {"manifest", make_manifest("moments", params, {{"seed", o.seed}},
                                           current_max_threads(), g.out)
                                 .to_json()}};
    emit(g, doc.dump(2));
  }
  return 0;
}

struct WalkOpts {
  std::string x, y, method = "multiset";
  int p = 2;
};

int run_walk(const Global& g, const WalkOpts& o) {
  const AbelianGroup X = parse_group(o.x);
  const AbelianGroup Y = parse_group(o.y);
  const WalkMethod wm =
      o.method == "group" ? WalkMethod::group : WalkMethod::multiset;
  Stopwatch sw;
  const WalkMoment w = walk_moment(X, Y, o.p, wm);
  const double ms = sw.elapsed_ms();
  if (g.csv) {
    MomentReport rep;
    rep.method = o.method;
    rep.params = {{"p", o.p}};
    rep.value = w.value();
    rep.time_ms = ms;
    std::ostringstream os;
    os << MomentReport::csv_header() << "\n" << rep.csv_row();
    emit(g, os.str());
  } else {
    json doc = {
        {"walk",
         {{"p", o.p},
          {"method", o.method},
          {"count", i128_to_string(w.count)},
          {"denominator", w.denominator},
          {"value", w.value()},
          {"time_ms", ms}}},
        {"manifest",
         make_manifest("walk",
                       {{"x", o.x}, {"y", o.y}, {"p", o.p}, {"method", o.method}},
                       json::object(), current_max_threads(), g.out)
             .to_json()}};
    emit(g, doc.dump(2));
  }
  return 0;
}

struct AsymptOpts {
  int alpha = 1, beta = 1, p = 2;
  std::string k = "2:4";
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    const int k = std::stoi(s);
    return {k, k};
  }
  return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

int run_asympt(const Global& g, const AsymptOpts& o) {
  const auto [klo, khi] = parse_range(o.k);
  if (klo < 1 || khi < klo) throw std::invalid_argument("bad K range " + o.k);
  const double limit = asymptotic_moment_predictor(o.alpha, o.beta, 1, o.p);
  json rows = json::array();
  std::ostringstream csv;
  csv << "K,p,c_p,c_p_rescaled,narayana_limit,quadrature_moment\n";
  for (int K = klo; K <= khi; ++K) {
    const AbelianGroup X(std::vector<int>{o.alpha * K});
    const AbelianGroup Y(std::vector<int>{o.beta * K});
    const WalkMoment w = walk_moment(X, Y, o.p, WalkMethod::multiset);
    const double cp = w.value();
    const double rescaled = cp / std::pow(static_cast<double>(K), o.p - 1);
    const double quad = asymptotic_law(o.alpha, o.beta, K).moment(o.p);
    rows.push_back({{"K", K},
                    {"p", o.p},
                    {"c_p", cp},
                    {"count", i128_to_string(w.count)},
                    {"denominator", w.denominator},
                    {"c_p_rescaled", rescaled},
                    {"narayana_limit", limit},
                    {"quadrature_moment", quad}});
    csv << K << "," << o.p << "," << cp << "," << rescaled << "," << limit
        << "," << quad << "\n";
  }
  if (g.csv) {
    emit(g, csv.str());
  } else {
    json doc = {
        {"asympt", rows},
        {"manifest",
         make_manifest(
             "asympt",
             {{"alpha", o.alpha}, {"beta", o.beta}, {"k", o.k}, {"p", o.p}},
             json::object(), current_max_threads(), g.out)
             .to_json()}};
    emit(g, doc.dump(2));
  }
  return 0;
}

struct McOpts {
  int m = 2, n = 2, p = 2, samples = 10000, bins = 40;
  std::uint64_t seed = 1;
  bool spectrum = false;
};

int run_mc(const Global& g, const McOpts& o) {
  if (o.spectrum) {
    const SpectrumReport r = mc_spectrum(o.m, o.n, o.samples, o.seed);
    if (g.csv) {
      std::ostringstream os;
      os << "bin_left,bin_right,density\n";
      for (const auto& b : r.histogram(o.bins))
        os << b.left << "," << b.right << "," << b.density << "\n";
      emit(g, os.str());
    } else {
      json hist = json::array();
      for (const auto& b : r.histogram(o.bins))
        hist.push_back({{"bin_left", b.left},
                        {"bin_right", b.right},
                        {"density", b.density}});
      json doc = {
          {"spectrum",
           {{"M", o.m},
            {"N", o.n},
            {"samples", o.samples},
            {"seed", o.seed},
            {"ks", r.ks},
            {"mean", r.mean},
            {"time_ms", r.time_ms},
            {"histogram", hist}}},
          {"manifest",
           make_manifest("mc",
                         {{"m", o.m},
                          {"n", o.n},
                          {"samples", o.samples},
                          {"spectrum", true},
                          {"bins", o.bins}},
                         {{"seed", o.seed}}, current_max_threads(), g.out)
               .to_json()}};
      emit(g, doc.dump(2));
    }
    return 0;
  }
  const MomentReport rep = mc_moment(o.m, o.n, o.p, o.samples, o.seed);
  if (g.csv) {
    std::ostringstream os;
    os << MomentReport::csv_header() << "\n" << rep.csv_row();
    emit(g, os.str());
  } else {
    json doc = {
        {"report", rep.to_json()},
        {"manifest",
         make_manifest("mc",
                       {{"m", o.m}, {"n", o.n}, {"p", o.p}, {"samples", o.samples}},
                       {{"seed", o.seed}}, current_max_threads(), g.out)
             .to_json()}};
    emit(g, doc.dump(2));
  }
  return 0;
}

int run_verify_cmd(const Global& g, const std::string& level) {
  const bool full = level == "full";
  const VerifyReport rep = run_verify(full);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (full) {
      std::ostringstream os;
      os.precision(1);
      os << std::fixed << c.time_ms;
      std::cout << " (" << os.str() << " ms)";
    }
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"time_ms", c.time_ms},
                      {"detail", c.detail}});
  }
  std::cout << (rep.all_pass() ? "all checks passed" : "FAILURES: ") << "";
  if (!rep.all_pass()) {
    for (const auto& c : rep.checks)
      if (!c.pass) std::cout << " " << c.name;
  }
  std::cout << " (" << rep.checks.size() - rep.failures() << "/"
            << rep.checks.size() << ")\n";
  if (!g.out.empty()) {
    json doc = {{"verify", {{"level", level}, {"checks", checks}}},
                {"pass", rep.all_pass()},
                {"manifest", make_manifest("verify", {{"level", level}},
                                           json::object(),
                                           current_max_threads(), g.out)
                                 .to_json()}};
    std::ofstream f(g.out);
    f << doc.dump(2) << "\n";
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed Fourier model laboratory"};
  app.require_subcommand(1);

  Global g;
  app.add_option("--threads", g.threads,
                 "worker threads (QWALK_THREADS, then all cores)");
  app.add_flag("--csv", g.csv, "table output instead of JSON");
  app.add_option("--out", g.out, "write the report to a file");

  ModelOpts mo;
  auto* model = app.add_subcommand("model", "build and check a matrix model");
  model->add_option("--x", mo.x, "group descriptor, e.g. Z2 or Z2xZ3")
      ->required();
  model->add_option("--y", mo.y, "second group; empty for a plain Fourier model");
  model->add_option("--q", mo.q, "Q source: random | ones | <json path>");
  model->add_option("--seed", mo.seed, "seed for --q random");
  model->add_option("--side", mo.side, "deformation side: right | left")
      ->check(CLI::IsMember({"right", "left"}));
  model->add_flag("--dump", mo.dump, "include blocks in the report");

  MomentsOpts so;
  auto* moments = app.add_subcommand("moments", "transfer-matrix moments");
  moments->add_option("--x", so.x)->required();
  moments->add_option("--y", so.y);
  moments->add_option("--q", so.q);
  moments->add_option("--seed", so.seed);
  moments->add_option("--p", so.p)->required();
  moments->add_option("--r", so.r, "power for --method truncated");
  moments->add_option("--R", so.R, "Cesaro truncation");
  moments->add_option("--method", so.method)
      ->check(CLI::IsMember({"spectral", "cesaro", "truncated"}));

  WalkOpts wo;
  auto* walk = app.add_subcommand("walk", "exact return counts on Gamma");
  walk->add_option("--x", wo.x)->required();
  walk->add_option("--y", wo.y)->required();
  walk->add_option("--p", wo.p)->required();
  walk->add_option("--method", wo.method)
      ->check(CLI::IsMember({"multiset", "group"}));

  AsymptOpts ao;
  auto* asympt = app.add_subcommand("asympt", "K sweep against the limit law");
  asympt->add_option("--alpha", ao.alpha)->required()->check(CLI::PositiveNumber);
  asympt->add_option("--beta", ao.beta)->required()->check(CLI::PositiveNumber);
  asympt->add_option("--k", ao.k, "K or Klo:Khi")->required();
  asympt->add_option("--p", ao.p)->required();

  McOpts co;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates and spectra");
  mc->add_option("--m", co.m)->required();
  mc->add_option("--n", co.n)->required();
  mc->add_option("--p", co.p);
  mc->add_option("--samples", co.samples);
  mc->add_option("--seed", co.seed);
  mc->add_flag("--spectrum", co.spectrum, "pooled eigenvalue spectrum of A/N");
  mc->add_option("--bins", co.bins);

  std::string level = "quick";
  auto* verify = app.add_subcommand("verify", "cross-oracle invariant suite");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

  // let --csv / --threads / --out appear after the subcommand name too
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    resolve_threads(g.threads);
    if (app.got_subcommand(model)) return run_model(g, mo);
    if (app.got_subcommand(moments)) return run_moments(g, so);
    if (app.got_subcommand(walk)) return run_walk(g, wo);
    if (app.got_subcommand(asympt)) return run_asympt(g, ao);
    if (app.got_subcommand(mc)) return run_mc(g, co);
    if (app.got_subcommand(verify)) return run_verify_cmd(g, level);
    return 2;
  } catch (const qwalk::CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
