#include "switchtrack/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "switchtrack/bounds.hpp"
#include "switchtrack/errors.hpp"
#include "switchtrack/harness.hpp"
#include "switchtrack/projection.hpp"
#include "switchtrack/simplex.hpp"

namespace switchtrack {
namespace {

using nlohmann::json;

constexpr double kEquivalenceTolerance = 1e-9;

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("SWITCHTRACK_LOG");
    std::string name = env ? env : "warn";
    if (name == "error") return LogLevel::error;
    if (name == "info") return LogLevel::info;
    if (name == "debug") return LogLevel::debug;
    return LogLevel::warn;
  }();
  return level;
}

void log_at(LogLevel level, const char* tag, const std::string& message) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::fprintf(stderr, "[%s] %s\n", tag, message.c_str());
}

void log_info(const std::string& message) { log_at(LogLevel::info, "info", message); }
void log_debug(const std::string& message) { log_at(LogLevel::debug, "debug", message); }

// JSON floats carry 12 significant digits: format, then reparse, so the
// dumped shortest-round-trip representation is stable across runs.
double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return std::strtod(buffer, nullptr);
}

json jnum(double x) {
  if (!std::isfinite(x)) return json();
  return json(round12(x));
}

json jarray(const std::vector<double>& values) {
  json arr = json::array();
  for (double v : values) arr.push_back(jnum(v));
  return arr;
}

// CSV floats carry 6 significant digits.
std::string csv6(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.6g", x);
  return buffer;
}

std::string svg2(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.2f", x);
  return buffer;
}

void emit_error(const std::string& message, int code) {
  json err;
  err["error"] = message;
  err["exit"] = code;
  std::fprintf(stderr, "%s\n", err.dump().c_str());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot open for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw ValidationError("short write: " + path);
}

json read_json_file(const std::string& path) { return json::parse(read_file(path)); }

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    write_file(out_path, content);
  }
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const char* what) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) {
        known = true;
        break;
      }
    if (!known)
      throw ValidationError(std::string(what) + ": unknown field '" + item.key() + "'");
  }
}

std::string get_string(const json& obj, const std::string& key) {
  const json& value = obj.at(key);
  if (!value.is_string())
    throw ValidationError("config field '" + key + "' must be a string");
  return value.get<std::string>();
}

double get_number(const json& obj, const std::string& key) {
  const json& value = obj.at(key);
  if (!value.is_number())
    throw ValidationError("config field '" + key + "' must be a number");
  return value.get<double>();
}

std::size_t get_index(const json& obj, const std::string& key) {
  const json& value = obj.at(key);
  if (value.is_number_unsigned()) return value.get<std::size_t>();
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0)
    return static_cast<std::size_t>(value.get<std::int64_t>());
  throw ValidationError("config field '" + key + "' must be a non-negative integer");
}

LearnerKind parse_learner(const std::string& name) {
  if (name == "ew") return LearnerKind::ew;
  if (name == "fixed_share") return LearnerKind::fixed_share;
  if (name == "share") return LearnerKind::share;
  if (name == "pods") return LearnerKind::pods;
  if (name == "specialists") return LearnerKind::specialists;
  if (name == "mpp_uniform") return LearnerKind::mpp_uniform;
  if (name == "mpp_power") return LearnerKind::mpp_power;
  if (name == "mpp_geometric") return LearnerKind::mpp_geometric;
  throw ValidationError("unknown learner '" + name + "'");
}

LossModel parse_model(const std::string& name) {
  if (name == "log") return LossModel::log_loss();
  if (name == "square") return LossModel::square_loss();
  if (name == "mix") return LossModel::mix_loss();
  throw ValidationError("unknown loss_model '" + name + "' (expected log, square, or mix)");
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_double(const std::string& cell, const std::string& where) {
  const char* begin = cell.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  while (end != nullptr && *end == ' ') ++end;
  if (end == begin || *end != '\0' || !std::isfinite(value))
    throw ValidationError(where + ": bad number '" + cell + "'");
  return value;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string loss_header(std::size_t n) {
  std::string header = "loss_1";
  for (std::size_t j = 2; j <= n; ++j) header += ",loss_" + std::to_string(j);
  return header;
}

std::vector<std::vector<double>> read_loss_csv(const std::string& path, std::size_t T,
                                               std::size_t n) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("losses csv: empty file: " + path);
  strip_cr(line);
  if (line != loss_header(n))
    throw ValidationError("losses csv: header must be " + loss_header(n));
  std::vector<std::vector<double>> losses;
  losses.reserve(T);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (line.empty()) continue;
    ++row;
    std::string where = "losses csv row " + std::to_string(row);
    std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != n)
      throw ValidationError(where + ": expected " + std::to_string(n) + " columns, found " +
                            std::to_string(cells.size()));
    std::vector<double> values(n);
    for (std::size_t j = 0; j < n; ++j) values[j] = parse_double(cells[j], where);
    losses.push_back(std::move(values));
  }
  if (losses.size() != T)
    throw ValidationError("losses csv: expected " + std::to_string(T) + " rows, found " +
                          std::to_string(losses.size()));
  return losses;
}

std::string render_loss_csv(const std::vector<std::vector<double>>& losses) {
  std::ostringstream out;
  if (!losses.empty()) out << loss_header(losses.front().size()) << '\n';
  for (const std::vector<double>& row : losses) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out << ',';
      out << csv6(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

std::string render_trial_csv(const ExperimentResult& result) {
  std::ostringstream out;
  out << "trial,learner_loss,comparator_loss,l1_update_cost,cumulative_regret\n";
  double cumulative = 0.0;
  for (std::size_t t = 0; t < result.per_trial.size(); ++t) {
    const TrialRecord& rec = result.per_trial[t];
    cumulative += rec.learner_loss - rec.comparator_loss;
    out << (t + 1) << ',' << csv6(rec.learner_loss) << ',' << csv6(rec.comparator_loss) << ','
        << csv6(rec.l1_update_cost) << ',' << csv6(cumulative) << '\n';
  }
  return out.str();
}

std::string render_bounds_csv(const std::vector<Figure1Row>& rows) {
  std::ostringstream out;
  out << "m,fixed_share,mpp_decay,mpp_uniform,specialists,pods\n";
  for (const Figure1Row& row : rows)
    out << row.m << ',' << csv6(row.fixed_share) << ',' << csv6(row.mpp_decay) << ','
        << csv6(row.mpp_uniform) << ',' << csv6(row.specialists) << ',' << csv6(row.pods)
        << '\n';
  return out.str();
}

std::string render_bounds_svg(const std::vector<Figure1Row>& rows) {
  struct Series {
    const char* name;
    const char* color;
    double Figure1Row::*value;
  };
  static constexpr Series kSeries[] = {
      {"fixed_share", "#7f7f7f", &Figure1Row::fixed_share},
      {"mpp_decay", "#1f77b4", &Figure1Row::mpp_decay},
      {"mpp_uniform", "#9467bd", &Figure1Row::mpp_uniform},
      {"specialists", "#2ca02c", &Figure1Row::specialists},
      {"pods", "#d62728", &Figure1Row::pods},
  };

  const double width = 840.0;
  const double height = 520.0;
  const double left = 70.0;
  const double right = width - 170.0;
  const double top = 20.0;
  const double bottom = height - 50.0;

  double x_lo = static_cast<double>(rows.front().m);
  double x_hi = static_cast<double>(rows.back().m);
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  double y_lo = std::numeric_limits<double>::infinity();
  double y_hi = -std::numeric_limits<double>::infinity();
  for (const Figure1Row& row : rows)
    for (const Series& s : kSeries) {
      y_lo = std::min(y_lo, row.*s.value);
      y_hi = std::max(y_hi, row.*s.value);
    }
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  auto x_of = [&](double m) { return left + (m - x_lo) / (x_hi - x_lo) * (right - left); };
  auto y_of = [&](double v) { return bottom - (v - y_lo) / (y_hi - y_lo) * (bottom - top); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"840\" height=\"520\" "
         "viewBox=\"0 0 840 520\">\n";
  svg << "<rect width=\"840\" height=\"520\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << svg2(left) << "\" y1=\"" << svg2(bottom) << "\" x2=\"" << svg2(right)
      << "\" y2=\"" << svg2(bottom) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << svg2(left) << "\" y1=\"" << svg2(top) << "\" x2=\"" << svg2(left)
      << "\" y2=\"" << svg2(bottom) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << svg2(left) << "\" y=\"" << svg2(bottom + 20.0)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << rows.front().m << "</text>\n";
  svg << "<text x=\"" << svg2(right) << "\" y=\"" << svg2(bottom + 20.0)
      << "\" font-size=\"12\" text-anchor=\"middle\">" << rows.back().m << "</text>\n";
  svg << "<text x=\"" << svg2((left + right) / 2.0) << "\" y=\"" << svg2(bottom + 36.0)
      << "\" font-size=\"12\" text-anchor=\"middle\">m</text>\n";
  svg << "<text x=\"" << svg2(left - 8.0) << "\" y=\"" << svg2(bottom)
      << "\" font-size=\"12\" text-anchor=\"end\">" << csv6(y_lo) << "</text>\n";
  svg << "<text x=\"" << svg2(left - 8.0) << "\" y=\"" << svg2(top + 10.0)
      << "\" font-size=\"12\" text-anchor=\"end\">" << csv6(y_hi) << "</text>\n";

  double legend_y = top + 10.0;
  for (const Series& s : kSeries) {
    svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const Figure1Row& row : rows) {
      if (!first) svg << ' ';
      first = false;
      svg << svg2(x_of(static_cast<double>(row.m))) << ',' << svg2(y_of(row.*s.value));
    }
    svg << "\"/>\n";
    svg << "<line x1=\"" << svg2(right + 12.0) << "\" y1=\"" << svg2(legend_y - 4.0)
        << "\" x2=\"" << svg2(right + 34.0) << "\" y2=\"" << svg2(legend_y - 4.0)
        << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << svg2(right + 40.0) << "\" y=\"" << svg2(legend_y)
        << "\" font-size=\"12\">" << s.name << "</text>\n";
    legend_y += 18.0;
  }
  svg << "</svg>\n";
  return svg.str();
}

struct GlobalOptions {
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::string out;
  bool full = false;
};

int cmd_project(const std::string& input_path, const GlobalOptions& global) {
  json input = read_json_file(input_path);
  if (!input.is_object()) throw ValidationError("project input must be a JSON object");
  require_keys(input, {"w", "beta"}, "project input");
  if (!input.contains("w") || !input.contains("beta"))
    throw ValidationError("project input needs fields 'w' and 'beta'");
  InteriorSimplexVector w(input.at("w").get<std::vector<double>>());
  LowerBounds beta(input.at("beta").get<std::vector<double>>());
  log_debug("project: n=" + std::to_string(w.size()));

  ProjectionResult result = project(w, beta);
  json out;
  out["p"] = jarray(result.p.values());
  out["bound_set"] = result.bound_set;
  out["lambda"] = jnum(result.lambda);
  out["threshold"] = jnum(result.threshold);
  emit(global.out, out.dump(2) + "\n");
  return 0;
}

struct BoundsArgs {
  std::size_t n = 500000;
  std::size_t k = 40;
  std::size_t T = 4000;
  double c = 1.0;
  std::size_t m_min = 2;
  std::size_t m_max = 41;
  std::string svg_path;
};

int cmd_bounds(const BoundsArgs& args, const GlobalOptions& global) {
  std::vector<Figure1Row> rows = figure1_table(args.n, args.k, args.T, args.c, args.m_min,
                                               args.m_max);
  log_info("bounds: " + std::to_string(rows.size()) + " rows, n=" + std::to_string(args.n) +
           " k=" + std::to_string(args.k) + " T=" + std::to_string(args.T));
  emit(global.out, render_bounds_csv(rows));
  if (!args.svg_path.empty()) write_file(args.svg_path, render_bounds_svg(rows));
  return 0;
}

int cmd_simulate(const std::string& config_path, const GlobalOptions& global) {
  json config = read_json_file(config_path);
  if (!config.is_object()) throw ValidationError("simulate config must be a JSON object");
  require_keys(config,
               {"learner", "n", "T", "k", "m", "loss_model", "noise", "tuning", "alpha",
                "theta", "gamma_exponent", "seed", "losses_csv", "export_losses_csv",
                "out_csv", "out_json"},
               "simulate config");
  for (const char* key : {"learner", "n", "T", "k", "m"})
    if (!config.contains(key))
      throw ValidationError(std::string("simulate config needs field '") + key + "'");

  std::string learner_name = get_string(config, "learner");
  LearnerSpec spec;
  spec.kind = parse_learner(learner_name);
  std::size_t n = get_index(config, "n");
  std::size_t T = get_index(config, "T");
  std::size_t k = get_index(config, "k");
  std::size_t m = get_index(config, "m");

  std::string model_name =
      config.contains("loss_model") ? get_string(config, "loss_model") : "mix";
  LossModel model = parse_model(model_name);
  double noise = config.contains("noise") ? get_number(config, "noise") : 0.0;
  spec.gamma_exponent =
      config.contains("gamma_exponent") ? get_number(config, "gamma_exponent") : 1.0;

  std::uint64_t seed = config.contains("seed") ? get_index(config, "seed") : 1;
  if (global.seed_given) seed = global.seed;

  std::string tuning = config.contains("tuning") ? get_string(config, "tuning") : "optimal";
  if (tuning == "optimal") {
    if (config.contains("alpha") || config.contains("theta"))
      throw ValidationError(
          "simulate config: alpha/theta are derived when tuning=optimal; use tuning=manual "
          "to set them");
    Tuning tuned = optimal_tuning(BoundInputs{n, std::max<std::size_t>(T, 2), k, m, model.c});
    spec.alpha = tuned.alpha;
    spec.theta = tuned.theta;
  } else if (tuning == "manual") {
    spec.alpha = config.contains("alpha") ? get_number(config, "alpha") : 0.0;
    spec.theta = config.contains("theta") ? get_number(config, "theta") : 0.0;
  } else {
    throw ValidationError("simulate config: tuning must be 'optimal' or 'manual'");
  }

  ComparatorSequence comparator = generate_comparator(n, T, k, m, seed);
  LossStream stream;
  bool imported = config.contains("losses_csv");
  if (imported) {
    if (model.kind != LossKind::mix_loss)
      throw ValidationError(
          "simulate config: losses_csv import works with loss_model=mix only (no prediction "
          "columns)");
    stream.losses = read_loss_csv(get_string(config, "losses_csv"), T, n);
  } else {
    stream = generate_losses(comparator, n, model, noise, seed + 1);
  }
  if (config.contains("export_losses_csv"))
    write_file(get_string(config, "export_losses_csv"), render_loss_csv(stream.losses));

  log_info("simulate: learner=" + learner_name + " n=" + std::to_string(n) +
           " T=" + std::to_string(T) + " k=" + std::to_string(k) + " m=" + std::to_string(m) +
           " seed=" + std::to_string(seed));
  ExperimentResult result = run_experiment(spec, stream, comparator, model);
  bool ok = result.cumulative_regret <= result.bound_value;

  json params;
  params["learner"] = learner_name;
  params["n"] = n;
  params["T"] = T;
  params["k"] = k;
  params["m"] = m;
  params["loss_model"] = model_name;
  params["noise"] = jnum(noise);
  params["tuning"] = tuning;
  params["alpha"] = jnum(spec.alpha);
  params["theta"] = jnum(spec.theta);
  params["gamma_exponent"] = jnum(spec.gamma_exponent);
  params["seed"] = seed;
  params["c"] = jnum(model.c);
  params["eta"] = jnum(model.eta);
  params["rng_algorithm"] = kRngAlgorithm;
  if (imported) params["losses_csv"] = get_string(config, "losses_csv");

  json summary;
  summary["params"] = params;
  summary["regret"] = jnum(result.cumulative_regret);
  summary["bound"] = jnum(result.bound_value);
  summary["ok"] = ok;
  if (global.full) {
    json per_trial = json::array();
    for (const TrialRecord& rec : result.per_trial)
      per_trial.push_back({{"learner_loss", jnum(rec.learner_loss)},
                           {"comparator_loss", jnum(rec.comparator_loss)},
                           {"l1_update_cost", jnum(rec.l1_update_cost)}});
    summary["per_trial"] = per_trial;
  }

  std::string out_json_path = global.out;
  if (out_json_path.empty() && config.contains("out_json"))
    out_json_path = get_string(config, "out_json");
  if (!out_json_path.empty()) write_file(out_json_path, summary.dump(2) + "\n");
  if (config.contains("out_csv"))
    write_file(get_string(config, "out_csv"), render_trial_csv(result));

  std::printf("regret=%.12g bound=%.12g ok=%s\n", result.cumulative_regret,
              result.bound_value, ok ? "true" : "false");
  std::fflush(stdout);
  return 0;
}

struct EquivalenceArgs {
  std::size_t n = 8;
  std::size_t T = 200;
  std::size_t pairs = 50;
  bool pairs_given = false;
  double alpha = 0.0;
  bool alpha_given = false;
  double theta = 0.0;
  bool theta_given = false;
  double eta = 0.0;
  bool eta_given = false;
};

int cmd_equivalence(const EquivalenceArgs& args, const GlobalOptions& global) {
  std::size_t pairs = args.pairs;
  if (!args.pairs_given && args.alpha_given && args.theta_given) pairs = 1;

  Rng rng(global.seed);
  EquivalenceDeviations max_dev;
  json pair_rows = json::array();
  for (std::size_t i = 0; i < pairs; ++i) {
    double alpha = args.alpha_given ? args.alpha : rng.uniform(0.05, 0.95);
    double theta = args.theta_given ? args.theta : rng.uniform(0.05, 0.95);
    double eta = args.eta_given ? args.eta : rng.uniform(0.5, 2.0);
    std::uint64_t pair_seed = global.seed + 1 + i;
    EquivalenceDeviations dev = run_equivalence_pair(args.n, args.T, alpha, theta, eta,
                                                     pair_seed);
    max_dev.share_mpp = std::max(max_dev.share_mpp, dev.share_mpp);
    max_dev.specialists_w = std::max(max_dev.specialists_w, dev.specialists_w);
    max_dev.specialists_v = std::max(max_dev.specialists_v, dev.specialists_v);
    max_dev.specialists_mass = std::max(max_dev.specialists_mass, dev.specialists_mass);
    log_debug("equivalence pair " + std::to_string(i) + ": worst=" + csv6(dev.worst()));
    if (global.full)
      pair_rows.push_back({{"alpha", jnum(alpha)},
                           {"theta", jnum(theta)},
                           {"eta", jnum(eta)},
                           {"seed", pair_seed},
                           {"worst", jnum(dev.worst())}});
  }
  bool ok = max_dev.worst() < kEquivalenceTolerance;

  json report;
  report["params"] = {{"n", args.n},
                      {"T", args.T},
                      {"pairs", pairs},
                      {"seed", global.seed},
                      {"rng_algorithm", kRngAlgorithm}};
  report["max_deviations"] = {{"share_mpp", jnum(max_dev.share_mpp)},
                              {"specialists_w", jnum(max_dev.specialists_w)},
                              {"specialists_v", jnum(max_dev.specialists_v)},
                              {"specialists_mass", jnum(max_dev.specialists_mass)}};
  report["worst"] = jnum(max_dev.worst());
  report["tolerance"] = jnum(kEquivalenceTolerance);
  report["ok"] = ok;
  if (global.full) report["pairs"] = pair_rows;
  emit(global.out, report.dump(2) + "\n");

  std::printf("worst_deviation=%.12g tolerance=%.3g ok=%s\n", max_dev.worst(),
              kEquivalenceTolerance, ok ? "true" : "false");
  std::fflush(stdout);
  return ok ? 0 : 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{
      "Expert tracking with long-term memory: lower-bounded simplex projection, "
      "regret-bound tables, synthetic-loss simulations, and equivalence checks"};
  app.name("switchtrack");
  app.require_subcommand(1);

  GlobalOptions global;
  auto* seed_opt = app.add_option("--seed", global.seed, "Random seed (overrides config seeds)");
  app.add_option("--out", global.out, "Primary output path (default: stdout or config value)");
  app.add_flag("--full", global.full, "Include per-trial / per-pair detail in JSON output");

  std::string project_input;
  auto* project_cmd =
      app.add_subcommand("project", "Relative-entropy projection onto a lower-bounded simplex");
  project_cmd->fallthrough();
  project_cmd->add_option("input", project_input, "JSON file with fields 'w' and 'beta'")
      ->required();

  BoundsArgs bounds_args;
  auto* bounds_cmd =
      app.add_subcommand("bounds", "Regret-bound table over the comparator pool size m");
  bounds_cmd->fallthrough();
  bounds_cmd->add_option("--n", bounds_args.n, "Number of experts");
  bounds_cmd->add_option("--k", bounds_args.k, "Comparator switches");
  bounds_cmd->add_option("--T", bounds_args.T, "Horizon");
  bounds_cmd->add_option("--c", bounds_args.c, "Loss realizability constant");
  bounds_cmd->add_option("--m-min", bounds_args.m_min, "Smallest pool size");
  bounds_cmd->add_option("--m-max", bounds_args.m_max, "Largest pool size");
  bounds_cmd->add_option("--svg", bounds_args.svg_path, "Also write an SVG line plot");

  std::string simulate_config;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Run one learner against a synthetic or imported loss stream");
  simulate_cmd->fallthrough();
  simulate_cmd->add_option("config", simulate_config, "JSON run configuration")->required();

  EquivalenceArgs eq_args;
  auto* eq_cmd = app.add_subcommand(
      "equivalence", "Check the sharing/mixture/specialists equivalences on random losses");
  eq_cmd->fallthrough();
  eq_cmd->add_option("--n", eq_args.n, "Number of experts");
  eq_cmd->add_option("--T", eq_args.T, "Trials per pair")->check(CLI::PositiveNumber);
  auto* pairs_opt = eq_cmd->add_option("--pairs", eq_args.pairs,
                                       "Number of random (alpha, theta, eta) draws")
                        ->check(CLI::PositiveNumber);
  auto* alpha_opt = eq_cmd->add_option("--alpha", eq_args.alpha, "Fix the switching rate alpha");
  auto* theta_opt = eq_cmd->add_option("--theta", eq_args.theta, "Fix the memory decay theta");
  auto* eta_opt = eq_cmd->add_option("--eta", eq_args.eta, "Fix the learning rate eta")
                      ->check(CLI::PositiveNumber);

  int status = 0;
  project_cmd->callback([&] { status = cmd_project(project_input, global); });
  bounds_cmd->callback([&] { status = cmd_bounds(bounds_args, global); });
  simulate_cmd->callback([&] {
    global.seed_given = seed_opt->count() > 0;
    status = cmd_simulate(simulate_config, global);
  });
  eq_cmd->callback([&] {
    eq_args.pairs_given = pairs_opt->count() > 0;
    eq_args.alpha_given = alpha_opt->count() > 0;
    eq_args.theta_given = theta_opt->count() > 0;
    eq_args.eta_given = eta_opt->count() > 0;
    status = cmd_equivalence(eq_args, global);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ValidationError& e) {
    emit_error(e.what(), 2);
    return 2;
  } catch (const json::exception& e) {
    emit_error(e.what(), 2);
    return 2;
  } catch (const NumericError& e) {
    emit_error(e.what(), 3);
    return 3;
  } catch (const std::exception& e) {
    emit_error(e.what(), 3);
    return 3;
  }
  return status;
}

}  // namespace switchtrack
