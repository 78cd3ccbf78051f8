// Command-line front end: parameter sweeps over the closed-form metrics,
// slot-level simulation, and a self-validation suite.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mimojam/aoi_optimizer.hpp"
#include "mimojam/broadcast.hpp"
#include "mimojam/energy_buffer.hpp"
#include "mimojam/latency.hpp"
#include "mimojam/link_simulator.hpp"
#include "mimojam/outage.hpp"
#include "mimojam/service.hpp"
#include "mimojam/system_simulator.hpp"

using nlohmann::json;
using namespace mimojam;

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// A numeric flag value that is either a scalar or a start:step:stop sweep.
std::vector<double> expand_sweep(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw CLI::ValidationError("bad numeric value: " + tok);
    parts.push_back(v);
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3) throw CLI::ValidationError("sweep must be start:step:stop: " + text);
  const double start = parts[0], step = parts[1], stop = parts[2];
  if (step <= 0) throw CLI::ValidationError("sweep step must be > 0");
  if (stop < start) throw CLI::ValidationError("empty sweep range");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    const double v = start + i * step;
    if (v > stop + 1e-12 * std::max(1.0, std::abs(stop))) break;
    out.push_back(std::min(v, stop));
  }
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  json meta = json::object();
};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  return out + "\"";
}

void emit_table(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    json doc;
    doc["meta"] = t.meta;
    doc["rows"] = json::array();
    for (const auto& row : t.rows) {
      json obj = json::object();
      for (size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
      doc["rows"].push_back(obj);
    }
    os << doc.dump(2) << "\n";
    return;
  }
  for (size_t i = 0; i < t.header.size(); ++i)
    os << (i ? "," : "") << csv_quote(t.header[i]);
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_quote(row[i]);
    os << "\n";
  }
}

int write_output(const Table& t, const std::string& format, const std::string& path) {
  if (path.empty()) {
    emit_table(t, format, std::cout);
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  emit_table(t, format, f);
  return 0;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const std::map<std::string, Scheme> kSchemeNames = {
    {"miso", Scheme::Miso}, {"simo", Scheme::Simo}, {"alamouti", Scheme::Alamouti}};

std::string scheme_name(Scheme s) {
  for (const auto& [k, v] : kSchemeNames)
    if (v == s) return k;
  return "?";
}

struct CommonIo {
  std::string format = "csv";
  std::string output;
  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", output, "output file (default: stdout)");
  }
};

// at most one flag may carry a sweep; returns its index (or 0 if none swept)
size_t sweep_axis(const std::vector<std::vector<double>>& expanded) {
  size_t axis = 0;
  bool found = false;
  for (size_t i = 0; i < expanded.size(); ++i) {
    if (expanded[i].size() > 1) {
      if (found) throw CLI::ValidationError("only one flag may be swept at a time");
      axis = i;
      found = true;
    }
  }
  return axis;
}

double pick(const std::vector<double>& vals, size_t axis_idx, size_t my_idx, size_t step) {
  return vals[my_idx == axis_idx ? step : 0];
}

// ---------------------------------------------------------------- outage ---

int cmd_outage(Scheme scheme, int n_tx, int n_rx, const std::string& p_db,
               const std::string& pj_db, const std::string& rate, const CommonIo& io) {
  const std::vector<std::vector<double>> axes = {expand_sweep(p_db), expand_sweep(pj_db),
                                                 expand_sweep(rate)};
  const size_t axis = sweep_axis(axes);
  Table t;
  t.header = {"scheme", "n_t",        "n_r", "P_dB",       "PJ_dB",
              "R",      "p_out_jam", "p_out_nojam", "p_out_asymptotic"};
  const AntennaConfig ant{scheme, n_tx, n_rx};
  ant.validate();
  for (size_t s = 0; s < axes[axis].size(); ++s) {
    const double pdb = pick(axes[0], axis, 0, s);
    const double pjdb = pick(axes[1], axis, 1, s);
    const double r = pick(axes[2], axis, 2, s);
    const LinkBudget b{db_to_linear(pdb), db_to_linear(pjdb), r};
    std::string asym;
    if (b.power_jam >= b.power_tx)
      asym = num(asymptotic_outage(ant, b.power_jam / b.power_tx, r));
    t.rows.push_back({scheme_name(scheme), std::to_string(n_tx), std::to_string(n_rx), num(pdb),
                      num(pjdb), num(r), num(outage_with_jamming(ant, b)),
                      num(outage_without_jamming(ant, b.power_tx, r)), asym});
  }
  return write_output(t, io.format, io.output);
}

// ------------------------------------------------------- service-latency ---

int cmd_service_latency(Scheme scheme, int n_tx, int n_rx, const std::string& p_db,
                        const std::string& pj_db, const std::string& rate,
                        const std::string& pjam, const std::string& delta,
                        const std::string& lambda, const std::string& battery, int capacity,
                        const CommonIo& io) {
  const std::vector<std::vector<double>> axes = {expand_sweep(p_db), expand_sweep(pj_db),
                                                 expand_sweep(rate), expand_sweep(pjam),
                                                 expand_sweep(delta), expand_sweep(lambda)};
  const size_t axis = sweep_axis(axes);
  Table t;
  t.header = {"scheme", "n_t",    "n_r",   "P_dB",   "PJ_dB", "R",  "p_jam", "delta",
              "battery", "lambda", "mu",    "Qbar",   "D",     "AAoI", "note"};
  const AntennaConfig ant{scheme, n_tx, n_rx};
  ant.validate();
  std::vector<std::optional<int>> modes;
  if (battery == "infinite" || battery == "both") modes.push_back(std::nullopt);
  if (battery == "finite" || battery == "both") modes.push_back(capacity);
  for (size_t s = 0; s < axes[axis].size(); ++s) {
    const double pdb = pick(axes[0], axis, 0, s);
    const double pjdb = pick(axes[1], axis, 1, s);
    const double r = pick(axes[2], axis, 2, s);
    const double pj = pick(axes[3], axis, 3, s);
    const double del = pick(axes[4], axis, 4, s);
    const double lam = pick(axes[5], axis, 5, s);
    for (const auto& cap : modes) {
      const ServiceContext ctx{ant, {db_to_linear(pdb), db_to_linear(pjdb), r},
                               JammerEnergyModel{pj, del, cap}};
      const double mu = average_service_rate(ctx);
      std::vector<std::string> row = {scheme_name(scheme), std::to_string(n_tx),
                                      std::to_string(n_rx), num(pdb), num(pjdb), num(r),
                                      num(pj), num(del),
                                      cap ? "B=" + std::to_string(*cap) : "infinite", num(lam),
                                      num(mu)};
      if (lam < mu) {
        const auto rep = latency_report(lam, mu);
        row.insert(row.end(), {num(rep.queue_len), num(rep.delay_total), num(rep.aaoi), ""});
      } else {
        row.insert(row.end(), {"", "", "", "unstable"});
      }
      t.rows.push_back(std::move(row));
    }
  }
  return write_output(t, io.format, io.output);
}

// --------------------------------------------------------------- optimize ---

int cmd_optimize(Scheme scheme, int n_tx, int n_rx, const std::string& p_db,
                 const std::string& pj_db, const std::string& rate, const std::string& pjam,
                 const std::string& delta, std::optional<double> d_th,
                 std::optional<int> capacity, const CommonIo& io) {
  const std::vector<std::vector<double>> axes = {expand_sweep(p_db), expand_sweep(pj_db),
                                                 expand_sweep(rate), expand_sweep(pjam),
                                                 expand_sweep(delta)};
  const size_t axis = sweep_axis(axes);
  Table t;
  t.header = {"PJ_dB", "lambda_opt", "aaoi_opt", "delay_at_opt", "binding"};
  const AntennaConfig ant{scheme, n_tx, n_rx};
  ant.validate();
  for (size_t s = 0; s < axes[axis].size(); ++s) {
    const double pjdb = pick(axes[1], axis, 1, s);
    const ServiceContext ctx{ant,
                             {db_to_linear(pick(axes[0], axis, 0, s)), db_to_linear(pjdb),
                              pick(axes[2], axis, 2, s)},
                             JammerEnergyModel{pick(axes[3], axis, 3, s),
                                               pick(axes[4], axis, 4, s), capacity}};
    const double mu = average_service_rate(ctx);
    try {
      const auto res = d_th ? optimal_lambda_delay_constrained(mu, *d_th)
                            : optimal_lambda_unconstrained(mu);
      const char* binding = res.binding == Binding::Interior ? "interior"
                            : res.binding == Binding::DelayBound ? "delay"
                                                                 : "stability";
      t.rows.push_back({num(pjdb), num(res.lambda_opt), num(res.aaoi_opt), num(res.delay_at_opt),
                        binding});
    } catch (const std::domain_error&) {
      t.rows.push_back({num(pjdb), "", "", "", "infeasible"});
    }
  }
  return write_output(t, io.format, io.output);
}

// ------------------------------------------------------- stability-region ---

int cmd_stability_region(int n_rx, double p1_db, double p2_db, double pj_db, double gamma1,
                         double gamma2, double pjam, const CommonIo& io) {
  BroadcastConfig cfg{n_rx,  db_to_linear(p1_db), db_to_linear(p2_db), gamma1,
                      gamma2, db_to_linear(pj_db), pjam};
  cfg.validate();
  const auto region = stability_region(cfg);
  Table t;
  t.header = {"item", "lambda_1", "lambda_2"};
  t.rows.push_back({"p_1_single", num(region.p_1_single), ""});
  t.rows.push_back({"p_2_single", num(region.p_2_single), ""});
  t.rows.push_back({"p_1_both", num(region.p_1_both), ""});
  t.rows.push_back({"p_2_both", num(region.p_2_both), ""});
  t.rows.push_back({"degenerate", region.degenerate ? "true" : "false", ""});
  auto push_poly = [&t](const char* tag, const std::vector<std::pair<double, double>>& verts) {
    int i = 0;
    for (const auto& [x, y] : verts)
      t.rows.push_back({std::string(tag) + "_vertex_" + std::to_string(i++), num(x), num(y)});
  };
  push_poly("r1", region.region_1_vertices());
  push_poly("r2", region.region_2_vertices());
  push_poly("union", region.union_vertices());
  return write_output(t, io.format, io.output);
}

// ---------------------------------------------------------------- simulate ---

int cmd_simulate(Scheme scheme, int n_tx, int n_rx, double p_db, double pj_db, double rate,
                 double pjam, double delta, std::optional<int> capacity, double lambda,
                 std::uint64_t slots, int reps, std::uint64_t seed, const CommonIo& io) {
  SimulationParams params;
  params.antenna = {scheme, n_tx, n_rx};
  params.budget = {db_to_linear(p_db), db_to_linear(pj_db), rate};
  params.jammer = {pjam, delta, capacity};
  params.traffic = {lambda};
  Table t;
  t.header = {"rep",       "seed",          "slots",          "mu_hat",  "delay_hat",
              "aaoi_hat",  "qlen_hat",      "jam_fraction",   "empty_fraction", "unstable"};
  t.meta["base_seed"] = seed;
  auto push = [&t](const std::string& tag, const MetricsReport& r, bool with_seed) {
    t.rows.push_back({tag, with_seed ? std::to_string(r.seed) : "", std::to_string(r.n_slots),
                      num(r.mu_hat), num(r.delay_hat), num(r.aaoi_hat), num(r.qlen_hat),
                      num(r.jam_fraction), num(r.empty_fraction),
                      r.unstable_warning ? "yes" : ""});
  };
  if (reps <= 1) {
    push("0", run_slots(params, slots, seed), true);
  } else {
    const auto sum = run_replications(params, reps, slots, seed);
    for (size_t i = 0; i < sum.replications.size(); ++i)
      push(std::to_string(i), sum.replications[i], true);
    push("mean", sum.mean, false);
    push("stddev", sum.stddev, false);
  }
  return write_output(t, io.format, io.output);
}

// ---------------------------------------------------------------- validate ---

struct Check {
  std::string name;
  double want, got, tol;
  bool pass() const { return std::abs(want - got) <= tol; }
};

int cmd_validate(bool full) {
  const std::uint64_t draws = full ? 1000000 : 100000;
  const std::uint64_t slots = full ? 10000000 : 100000;
  const double k_sigma = full ? 4.0 : 5.0;
  const double rel = full ? 0.02 : 0.10;
  std::vector<Check> checks;

  const LinkBudget bud{100.0, 100.0, 1.0};
  std::uint64_t seed = 90001;
  for (const auto& cfg : {AntennaConfig{Scheme::Miso, 2, 1}, AntennaConfig{Scheme::Simo, 1, 2},
                          AntennaConfig{Scheme::Alamouti, 2, 2}}) {
    const double p = outage_with_jamming(cfg, bud);
    const auto est = estimate_outage(cfg, bud, draws, seed++);
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(draws));
    checks.push_back({"outage mc (" + scheme_name(cfg.scheme) + ")", p, est.p_hat, k_sigma * se});
  }

  const BroadcastConfig bc{2, 10.0, 10.0, 0.7, 0.5, 100.0, 0.6};
  for (bool both : {false, true}) {
    const double p = both ? success_prob_both(1, bc) : success_prob_single(1, bc);
    const auto est = estimate_broadcast_success(1, both, bc, draws, seed++);
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(draws));
    checks.push_back({std::string("broadcast mc (") + (both ? "both queues" : "single") + ")", p,
                      est.p_hat, k_sigma * se});
  }

  SimulationParams params;
  params.antenna = {Scheme::Simo, 1, 2};
  params.budget = bud;
  params.jammer = {0.3, 0.6, std::nullopt};
  params.traffic = {0.2};
  const double mu0 = average_service_rate({params.antenna, params.budget, params.jammer});
  const auto rep = latency_report(params.traffic.lambda, mu0);
  const auto sim = run_slots(params, slots, seed++);
  checks.push_back({"slot sim delay", rep.delay_total, sim.delay_hat, rel * rep.delay_total});
  checks.push_back({"slot sim aaoi", rep.aaoi, sim.aaoi_hat, rel * rep.aaoi});
  for (double p_jam : {0.3, 0.9}) {
    params.jammer.p_jam = p_jam;
    const double mu = average_service_rate({params.antenna, params.budget, params.jammer});
    const auto r = run_slots(params, slots, seed++);
    const double se = std::sqrt(mu * (1 - mu) / (0.9 * static_cast<double>(slots)));
    checks.push_back({"slot sim mu (p_jam=" + num(p_jam) + ")", mu, r.mu_hat, k_sigma * se});
  }
  params.jammer.p_jam = 0.7;
  const double pi0 = empty_probability_model(params.jammer);
  const auto r = run_slots(params, slots, seed++);
  // the buffer chain mixes slowly; the time-average error bar is well above
  // the iid binomial value
  checks.push_back({"battery empty fraction", pi0, r.empty_fraction, full ? 2e-3 : 2e-2});

  int failures = 0;
  std::printf("%-32s %12s %12s %10s  %s\n", "check", "model", "estimate", "tol", "result");
  for (const auto& c : checks) {
    const bool ok = c.pass();
    if (!ok) ++failures;
    std::printf("%-32s %12.6f %12.6f %10.2e  %s\n", c.name.c_str(), c.want, c.got, c.tol,
                ok ? "pass" : "FAIL");
  }
  if (failures) std::printf("%d check(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link metrics for a fading channel under an energy-harvesting jammer"};
  app.require_subcommand(1);

  // shared flag storage
  Scheme scheme = Scheme::Simo;
  int n_tx = 1, n_rx = 1, capacity = 2, reps = 1;
  std::string p_db = "20", pj_db = "20", rate = "1", pjam = "0.5", delta = "0.5", lambda = "0.2";
  std::string battery = "infinite";
  double d_th = 0.0, p1_db = 10.0, p2_db = 10.0, pj_db_fixed = 20.0, gamma1 = 0.5, gamma2 = 0.5;
  double pjam_fixed = 0.5, p_db_fixed = 20.0, rate_fixed = 1.0, delta_fixed = 0.5,
         lambda_fixed = 0.2;
  std::uint64_t slots = 1000000, seed = 1;
  bool full = false, quick = false, finite_battery = false;
  CommonIo io_outage, io_service, io_optimize, io_region, io_simulate;

  auto add_antenna = [&](CLI::App* cmd) {
    cmd->add_option("--scheme", scheme, "antenna scheme")
        ->transform(CLI::CheckedTransformer(kSchemeNames, CLI::ignore_case))
        ->required();
    cmd->add_option("--ntx", n_tx, "transmit antennas");
    cmd->add_option("--nrx", n_rx, "receive antennas");
  };

  auto* outage = app.add_subcommand("outage", "outage probability sweep");
  add_antenna(outage);
  outage->add_option("--p-db", p_db, "transmit power in dB (sweepable)");
  outage->add_option("--pj-db", pj_db, "jamming power in dB (sweepable)");
  outage->add_option("--rate", rate, "target rate in bits/slot (sweepable)");
  io_outage.attach(outage);

  auto* service = app.add_subcommand("service-latency", "service rate, delay, and age sweep");
  add_antenna(service);
  service->add_option("--p-db", p_db, "transmit power in dB (sweepable)");
  service->add_option("--pj-db", pj_db, "jamming power in dB (sweepable)");
  service->add_option("--rate", rate, "target rate (sweepable)");
  service->add_option("--pjam", pjam, "jamming probability (sweepable)");
  service->add_option("--delta", delta, "energy arrival rate (sweepable)");
  service->add_option("--lambda", lambda, "packet arrival rate (sweepable)");
  service->add_option("--battery", battery, "battery mode")
      ->check(CLI::IsMember({"infinite", "finite", "both"}));
  service->add_option("--capacity", capacity, "finite battery size");
  io_service.attach(service);

  auto* optimize = app.add_subcommand("optimize", "age-optimal arrival rate sweep");
  add_antenna(optimize);
  optimize->add_option("--p-db", p_db, "transmit power in dB (sweepable)");
  optimize->add_option("--pj-db", pj_db, "jamming power in dB (sweepable)");
  optimize->add_option("--rate", rate, "target rate (sweepable)");
  optimize->add_option("--pjam", pjam, "jamming probability (sweepable)");
  optimize->add_option("--delta", delta, "energy arrival rate (sweepable)");
  auto* dth_opt = optimize->add_option("--dth", d_th, "average-delay bound");
  optimize->add_flag("--finite-battery", finite_battery, "use a finite battery");
  optimize->add_option("--capacity", capacity, "finite battery size");
  io_optimize.attach(optimize);

  auto* region = app.add_subcommand("stability-region", "two-user stable-arrival region");
  region->add_option("--nrx", n_rx, "receive antennas")->required();
  region->add_option("--p1-db", p1_db, "user-1 power in dB");
  region->add_option("--p2-db", p2_db, "user-2 power in dB");
  region->add_option("--pj-db", pj_db_fixed, "jamming power in dB");
  region->add_option("--gamma1", gamma1, "user-1 SJINR threshold")->required();
  region->add_option("--gamma2", gamma2, "user-2 SJINR threshold")->required();
  region->add_option("--pjam", pjam_fixed, "jamming probability")->required();
  io_region.attach(region);

  auto* simulate = app.add_subcommand("simulate", "slot-level queue simulation");
  add_antenna(simulate);
  simulate->add_option("--p-db", p_db_fixed, "transmit power in dB");
  simulate->add_option("--pj-db", pj_db_fixed, "jamming power in dB");
  simulate->add_option("--rate", rate_fixed, "target rate");
  simulate->add_option("--pjam", pjam_fixed, "jamming probability")->required();
  simulate->add_option("--delta", delta_fixed, "energy arrival rate")->required();
  simulate->add_option("--lambda", lambda_fixed, "packet arrival rate")->required();
  simulate->add_flag("--finite-battery", finite_battery, "use a finite battery");
  simulate->add_option("--capacity", capacity, "finite battery size");
  simulate->add_option("--slots", slots, "slots per replication");
  simulate->add_option("--reps", reps, "replication count");
  simulate->add_option("--seed", seed, "base RNG seed");
  io_simulate.attach(simulate);

  auto* validate = app.add_subcommand("validate", "cross-check closed forms vs simulation");
  validate->add_flag("--quick", quick, "small sample sizes, wide gates");
  validate->add_flag("--full", full, "large sample sizes, tight gates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(outage))
      return cmd_outage(scheme, n_tx, n_rx, p_db, pj_db, rate, io_outage);
    if (app.got_subcommand(service))
      return cmd_service_latency(scheme, n_tx, n_rx, p_db, pj_db, rate, pjam, delta, lambda,
                                 battery, capacity, io_service);
    if (app.got_subcommand(optimize))
      return cmd_optimize(scheme, n_tx, n_rx, p_db, pj_db, rate, pjam, delta,
                          dth_opt->count() ? std::optional<double>(d_th) : std::nullopt,
                          finite_battery ? std::optional<int>(capacity) : std::nullopt,
                          io_optimize);
    if (app.got_subcommand(region))
      return cmd_stability_region(n_rx, p1_db, p2_db, pj_db_fixed, gamma1, gamma2, pjam_fixed,
                                  io_region);
    if (app.got_subcommand(simulate))
      return cmd_simulate(scheme, n_tx, n_rx, p_db_fixed, pj_db_fixed, rate_fixed, pjam_fixed,
                          delta_fixed, finite_battery ? std::optional<int>(capacity) : std::nullopt,
                          lambda_fixed, slots, reps, seed, io_simulate);
    if (app.got_subcommand(validate)) return cmd_validate(full && !quick);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
