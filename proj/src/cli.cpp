#include "photonstat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "photonstat/absorption.hpp"
#include "photonstat/boundary.hpp"
#include "photonstat/csv.hpp"
#include "photonstat/mandel.hpp"
#include "photonstat/mc.hpp"
#include "photonstat/photometry.hpp"
#include "photonstat/thermal.hpp"

namespace photonstat {

namespace {

constexpr char kCountsHeader[] = "method,N1,N2,Nc,NA,NB,N1e,N2e,M";
constexpr char kIndexHeader[] = "index,probability";

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output path: " + path);
  }
  out << text;
  out.flush();
  if (!out) {
    throw std::runtime_error("write to output path failed: " + path);
  }
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open input path: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t newline = text.find('\n', start);
    if (newline == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, newline - start));
    start = newline + 1;
  }
  return lines;
}

double parse_double_field(const std::string& field, const char* what) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw std::invalid_argument(std::string("cannot parse ") + what + " value: '" +
                                field + "'");
  }
  return value;
}

std::optional<double> parse_optional_field(const std::string& field, const char* what) {
  if (field.empty()) {
    return std::nullopt;
  }
  return parse_double_field(field, what);
}

Theory parse_theory(const std::string& name) {
  return name == "old" ? Theory::Old : Theory::New;
}

// ---------------------------------------------------------------- dist

struct DistArgs {
  std::string kind;
  double mean_occupation = 0.0;
  std::uint64_t cell_filling = 0;
  std::uint64_t max_index = 16;
  double tol = 1e-12;
  std::string output = "-";
  bool has_mean = false;
  bool has_filling = false;
};

int run_dist(const DistArgs& args) {
  if (args.kind == "wk") {
    if (!args.has_filling) {
      throw std::invalid_argument("--kind wk requires --cell-filling");
    }
    if (args.has_mean) {
      throw std::invalid_argument("--kind wk takes --cell-filling, not --mean-occupation");
    }
  } else {
    if (!args.has_mean) {
      throw std::invalid_argument("--kind " + args.kind + " requires --mean-occupation");
    }
    if (args.has_filling) {
      throw std::invalid_argument("--kind " + args.kind +
                                  " takes --mean-occupation, not --cell-filling");
    }
  }

  std::string csv = std::string(kIndexHeader) + "\n";
  if (args.kind == "be") {
    const ThermalCellDistribution dist(args.mean_occupation);
    for (std::uint64_t i = 0; i <= args.max_index; ++i) {
      csv += std::to_string(i) + "," + format_double(dist.pmf(i)) + "\n";
    }
  } else if (args.kind == "wk") {
    for (std::uint64_t i = 0; i <= args.max_index; ++i) {
      csv += std::to_string(i) + "," + format_double(absorption_pmf(args.cell_filling, i)) + "\n";
    }
  } else {
    const ThermalCellDistribution dist(args.mean_occupation);
    for (std::uint64_t i = 0; i <= args.max_index; ++i) {
      csv += std::to_string(i) + "," +
             format_double(total_absorption_probability(dist, i, args.tol).value) + "\n";
    }
  }
  write_text(args.output, csv);
  return 0;
}

// ---------------------------------------------------------------- mandel

struct MandelArgs {
  std::string kind;
  double w = 0.0;
  double mean_w = 0.0;
  double p = 0.0;
  std::uint64_t atoms = 0;
  std::string table_path;
  std::uint64_t max_index = 16;
  std::string output = "-";
  bool has_w = false;
  bool has_mean_w = false;
  bool has_p = false;
  bool has_atoms = false;
  bool has_table = false;
};

TabulatedIntensity load_intensity_table(const std::string& path) {
  const std::vector<std::string> lines = split_lines(read_text(path));
  if (lines.empty() || lines[0] != "w,density") {
    throw std::invalid_argument("intensity table must start with the header 'w,density'");
  }
  std::vector<double> w;
  std::vector<double> density;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(lines[i]);
    if (fields.size() != 2) {
      throw std::invalid_argument("intensity table rows need exactly two fields (row " +
                                  std::to_string(i + 1) + ")");
    }
    w.push_back(parse_double_field(fields[0], "W"));
    density.push_back(parse_double_field(fields[1], "density"));
  }
  return TabulatedIntensity(std::move(w), std::move(density));
}

int run_mandel(const MandelArgs& args) {
  auto require_flag = [](bool present, const char* message) {
    if (!present) {
      throw std::invalid_argument(message);
    }
  };
  auto reject_flag = [&args](bool present, const char* flag) {
    if (present) {
      throw std::invalid_argument(std::string(flag) + " does not apply to --kind " + args.kind);
    }
  };

  std::string csv = std::string(kIndexHeader) + "\n";
  if (args.kind == "binomial") {
    require_flag(args.has_atoms, "--kind binomial requires --atoms");
    require_flag(args.has_p, "--kind binomial requires --p");
    reject_flag(args.has_w, "--w");
    reject_flag(args.has_mean_w, "--mean-w");
    reject_flag(args.has_table, "--table");
    const std::uint64_t last = std::min(args.max_index, args.atoms);
    for (std::uint64_t n = 0; n <= last; ++n) {
      csv += std::to_string(n) + "," + format_double(binomial_short_time(args.atoms, args.p, n)) + "\n";
    }
    write_text(args.output, csv);
    return 0;
  }

  IntegratedIntensityLaw law = DeterministicIntensity{};
  if (args.kind == "deterministic") {
    require_flag(args.has_w, "--kind deterministic requires --w");
    reject_flag(args.has_mean_w, "--mean-w");
    reject_flag(args.has_table, "--table");
    reject_flag(args.has_atoms, "--atoms");
    reject_flag(args.has_p, "--p");
    law = DeterministicIntensity{args.w};
  } else if (args.kind == "exponential") {
    require_flag(args.has_mean_w, "--kind exponential requires --mean-w");
    reject_flag(args.has_w, "--w");
    reject_flag(args.has_table, "--table");
    reject_flag(args.has_atoms, "--atoms");
    reject_flag(args.has_p, "--p");
    law = ExponentialIntensity{args.mean_w};
  } else {
    require_flag(args.has_table, "--kind tabulated requires --table");
    reject_flag(args.has_w, "--w");
    reject_flag(args.has_mean_w, "--mean-w");
    reject_flag(args.has_atoms, "--atoms");
    reject_flag(args.has_p, "--p");
    law = load_intensity_table(args.table_path);
  }

  for (std::uint64_t n = 0; n <= args.max_index; ++n) {
    csv += std::to_string(n) + "," + format_double(mandel_photocount_pmf(law, n)) + "\n";
  }
  write_text(args.output, csv);
  return 0;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  std::string input;
  std::string theory;
  double eta_x = 0.0;
  bool has_eta_x = false;
  std::string output = "-";
};

int run_estimate(const EstimateArgs& args) {
  const std::vector<std::string> lines = split_lines(read_text(args.input));
  if (lines.empty() || lines[0] != kCountsHeader) {
    throw std::invalid_argument(std::string("input header must be exactly '") +
                                kCountsHeader + "'");
  }
  const Theory theory = parse_theory(args.theory);
  ChopperModel chopper;
  if (args.has_eta_x) {
    chopper.eta_x = args.eta_x;
  }

  std::string csv = "method,theory,eta1,eta2,flags\n";
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(lines[i]);
    if (fields.size() != 9) {
      throw std::invalid_argument("count rows need exactly 9 fields (row " +
                                  std::to_string(i + 1) + ")");
    }
    PhotometryCounts counts;
    counts.n1 = parse_optional_field(fields[1], "N1");
    counts.n2 = parse_optional_field(fields[2], "N2");
    counts.nc = parse_optional_field(fields[3], "Nc");
    counts.na = parse_optional_field(fields[4], "NA");
    counts.nb = parse_optional_field(fields[5], "NB");
    counts.n1e = parse_optional_field(fields[6], "N1e");
    counts.n2e = parse_optional_field(fields[7], "N2e");
    counts.m = parse_optional_field(fields[8], "M");

    const std::string& method = fields[0];
    std::string eta1;
    std::string eta2;
    std::string flags;
    if (method == "two_channel") {
      const auto [first, second] = eta_two_channel(counts, theory);
      eta1 = format_double(first.eta);
      eta2 = format_double(second.eta);
      if (first.clamped || second.clamped) {
        flags = "clamped";
      }
    } else if (method == "pulse_height") {
      if (!counts.n1e || !counts.n2e) {
        throw std::invalid_argument("pulse_height rows need N1e and N2e");
      }
      const EfficiencyEstimate estimate = eta_pulse_height(*counts.n2e, *counts.n1e, theory);
      eta1 = format_double(estimate.eta);
      if (estimate.clamped) {
        flags = "clamped";
      }
    } else if (method == "chopper") {
      if (!counts.na || !counts.nb) {
        throw std::invalid_argument("chopper rows need NA and NB");
      }
      const EfficiencyEstimate estimate = eta_chopper(*counts.na, *counts.nb, theory, chopper);
      eta1 = format_double(estimate.eta);
      if (estimate.clamped) {
        flags = "clamped";
      }
    } else {
      throw std::invalid_argument("unknown method tag: '" + method + "'");
    }
    csv += method + "," + args.theory + "," + eta1 + "," + eta2 + "," + flags + "\n";
  }
  write_text(args.output, csv);
  return 0;
}

// ---------------------------------------------------------------- predict

struct PredictArgs {
  std::string theory;
  double pairs = 0.0;
  double eta1 = 0.0;
  double eta2 = 0.0;
  double eta_x = 0.0;
  bool has_eta2 = false;
  bool has_eta_x = false;
  std::string output = "-";
};

int run_predict(const PredictArgs& args) {
  const Theory theory = parse_theory(args.theory);
  const double eta2 = args.has_eta2 ? args.eta2 : args.eta1;
  ChopperModel chopper;
  if (args.has_eta_x) {
    chopper.eta_x = args.eta_x;
  }
  const PhotometryCounts counts = predict_counts(args.pairs, args.eta1, eta2, theory, chopper);
  const std::string m = format_double(*counts.m);

  std::string csv = std::string(kCountsHeader) + "\n";
  csv += "two_channel," + format_double(*counts.n1) + "," + format_double(*counts.n2) +
         "," + format_double(*counts.nc) + ",,,,," + m + "\n";
  csv += "pulse_height,,,,,," + format_double(*counts.n1e) + "," +
         format_double(*counts.n2e) + "," + m + "\n";
  csv += "chopper,,,," + format_double(*counts.na) + "," + format_double(*counts.nb) +
         ",,," + m + "\n";
  write_text(args.output, csv);
  return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string config;
  std::string output = "-";
};

std::uint64_t get_unsigned(const nlohmann::json& j, const char* key) {
  const auto& field = j.at(key);
  if (!field.is_number_unsigned()) {
    throw std::invalid_argument(std::string("config: ") + key +
                                " must be a nonnegative integer");
  }
  return field.get<std::uint64_t>();
}

double get_number(const nlohmann::json& j, const char* key) {
  const auto& field = j.at(key);
  if (!field.is_number()) {
    throw std::invalid_argument(std::string("config: ") + key + " must be a number");
  }
  return field.get<double>();
}

void require_allowed_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                          const std::string& where) {
  for (const auto& item : j.items()) {
    if (allowed.find(item.key()) == allowed.end()) {
      throw std::invalid_argument("config: key '" + item.key() + "' does not apply to " +
                                  where);
    }
  }
}

DetectorSpec parse_detector(const nlohmann::json& j, const std::string& which) {
  if (!j.is_object()) {
    throw std::invalid_argument("config: " + which + " must be an object");
  }
  require_allowed_keys(j, {"tau", "beta", "eta", "geometry", "discrimination"}, which);

  CathodeGeometry geometry = CathodeGeometry::ThinCathode;
  if (j.contains("geometry")) {
    const std::string name = j.at("geometry").get<std::string>();
    if (name == "thin_cathode") {
      geometry = CathodeGeometry::ThinCathode;
    } else if (name == "volume") {
      geometry = CathodeGeometry::Volume;
    } else {
      throw std::invalid_argument("config: unknown geometry '" + name + "'");
    }
  }
  Discrimination discrimination = Discrimination::Good;
  if (j.contains("discrimination")) {
    const std::string name = j.at("discrimination").get<std::string>();
    if (name == "good") {
      discrimination = Discrimination::Good;
    } else if (name == "bad") {
      discrimination = Discrimination::Bad;
    } else {
      throw std::invalid_argument("config: unknown discrimination '" + name + "'");
    }
  }

  if (j.contains("eta")) {
    if (j.contains("tau") || j.contains("beta")) {
      throw std::invalid_argument("config: " + which + " takes either eta or tau and beta");
    }
    return DetectorSpec::from_eta(get_number(j, "eta"), geometry, discrimination);
  }
  const double tau = j.contains("tau") ? get_number(j, "tau") : 1.0;
  const double beta = j.contains("beta") ? get_number(j, "beta") : 1.0;
  return DetectorSpec(tau, beta, geometry, discrimination);
}

SimConfig load_sim_config(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("config: top level must be an object");
  }
  if (!j.contains("seed")) {
    throw std::invalid_argument("config: seed is required and never defaulted");
  }
  if (!j.contains("experiment")) {
    throw std::invalid_argument("config: experiment is required");
  }
  if (!j.contains("trials")) {
    throw std::invalid_argument("config: trials is required");
  }

  try {
    SimConfig config;
    const std::string experiment = j.at("experiment").get<std::string>();
    if (experiment == "thermal_counting") {
      config.experiment = Experiment::ThermalCounting;
      require_allowed_keys(j,
                           {"seed", "trials", "experiment", "workers", "mean_occupation",
                            "detector1", "k_max"},
                           "experiment 'thermal_counting'");
      if (!j.contains("mean_occupation")) {
        throw std::invalid_argument("config: thermal_counting requires mean_occupation");
      }
      config.mean_occupation = get_number(j, "mean_occupation");
      if (j.contains("k_max")) {
        config.k_max = static_cast<std::uint32_t>(get_unsigned(j, "k_max"));
      }
    } else if (experiment == "two_channel_pairs") {
      config.experiment = Experiment::TwoChannelPairs;
      require_allowed_keys(
          j, {"seed", "trials", "experiment", "workers", "detector1", "detector2"},
          "experiment 'two_channel_pairs'");
      if (j.contains("detector2")) {
        config.detector2 = parse_detector(j.at("detector2"), "detector2");
      }
    } else if (experiment == "chopper_pairs") {
      config.experiment = Experiment::ChopperPairs;
      require_allowed_keys(
          j, {"seed", "trials", "experiment", "workers", "detector1", "eta_x"},
          "experiment 'chopper_pairs'");
      if (j.contains("eta_x")) {
        config.eta_x = get_number(j, "eta_x");
      }
    } else {
      throw std::invalid_argument("config: unknown experiment '" + experiment + "'");
    }

    config.seed = get_unsigned(j, "seed");
    config.trials = get_unsigned(j, "trials");
    if (config.trials == 0) {
      throw std::invalid_argument("config: trials must be at least 1");
    }
    if (j.contains("workers")) {
      const std::uint64_t workers = get_unsigned(j, "workers");
      if (workers == 0) {
        throw std::invalid_argument("config: workers must be at least 1");
      }
      config.workers = static_cast<std::uint32_t>(workers);
    }
    if (j.contains("detector1")) {
      config.detector1 = parse_detector(j.at("detector1"), "detector1");
    }
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

int run_simulate(const SimulateArgs& args) {
  const SimConfig config = load_sim_config(args.config);
  const EventTally tally = run_simulation(config);
  const std::vector<double> probs = expected_probabilities(config);

  const double trials = static_cast<double>(config.trials);
  std::string csv = "outcome,count,expected_probability,deviation_sigma\n";
  double max_deviation = 0.0;
  std::vector<std::string> flagged;
  bool failed = false;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double count = static_cast<double>(tally.counts()[i]);
    const double expected = probs[i] * trials;
    const double sigma = std::sqrt(trials * probs[i] * (1.0 - probs[i]));
    double deviation = 0.0;
    if (sigma > 0.0) {
      deviation = (count - expected) / sigma;
    } else if (count != expected) {
      deviation = std::numeric_limits<double>::infinity();
    }
    const double magnitude = std::abs(deviation);
    max_deviation = std::max(max_deviation, magnitude);
    if (magnitude > 3.0) {
      flagged.push_back(tally.labels()[i]);
    }
    if (magnitude > 4.0) {
      failed = true;
    }
    csv += tally.labels()[i] + "," + std::to_string(tally.counts()[i]) + "," +
           format_double(probs[i]) + "," + format_double(deviation) + "\n";
  }
  write_text(args.output, csv);

  std::cerr << "max deviation " << format_double(max_deviation) << " sigma over "
            << probs.size() << " outcomes\n";
  for (const std::string& name : flagged) {
    std::cerr << "flagged: " << name << " deviates beyond 3 sigma\n";
  }
  if (failed) {
    std::cerr << "error: simulation self-check failed, an outcome deviates beyond 4 sigma\n";
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------- reproduce-table2

int run_table2(const std::string& output) {
  std::string csv =
      "pmt_type,eta_old_one_channel_pct,eta_old_two_channel_pct,eta_sheet_pct,"
      "eta_new_pct\n";
  for (const Table2Row& row : reproduce_table2()) {
    csv += row.pmt_type + "," + format_fixed1(row.one_channel_pct) + "," +
           (row.two_channel_pct ? format_fixed1(*row.two_channel_pct) : std::string()) +
           "," + format_fixed1(row.sheet_pct) + "," + format_fixed1(row.remapped_pct) +
           "\n";
  }
  write_text(output, csv);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{
      "Photon-counting statistics toolkit: occupation and absorption "
      "distributions, semiclassical baselines, detector boundary models, "
      "absolute-photometry estimators, and seeded Monte Carlo experiments."};
  app.require_subcommand(1);

  DistArgs dist_args;
  auto* dist_cmd = app.add_subcommand("dist", "Tabulate a distribution as CSV");
  dist_cmd->add_option("--kind", dist_args.kind,
                       "be: cell occupation; wk: per-cell absorption; uk: thermally "
                       "averaged absorption")
      ->required()
      ->check(CLI::IsMember({"be", "wk", "uk"}));
  auto* dist_mean = dist_cmd->add_option("--mean-occupation", dist_args.mean_occupation,
                                         "Mean cell occupation (be, uk)");
  auto* dist_filling =
      dist_cmd->add_option("--cell-filling", dist_args.cell_filling, "Cell filling n (wk)");
  dist_cmd->add_option("--max-index", dist_args.max_index, "Last index to tabulate")
      ->capture_default_str();
  dist_cmd->add_option("--tol", dist_args.tol, "Certified truncation tolerance (uk)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  dist_cmd->add_option("--output", dist_args.output, "Output path, - for stdout")
      ->capture_default_str();

  MandelArgs mandel_args;
  auto* mandel_cmd =
      app.add_subcommand("mandel", "Tabulate a semiclassical photocount pmf as CSV");
  mandel_cmd->add_option("--kind", mandel_args.kind, "Integrated intensity law")
      ->required()
      ->check(CLI::IsMember({"deterministic", "exponential", "tabulated", "binomial"}));
  auto* mandel_w =
      mandel_cmd->add_option("--w", mandel_args.w, "Integrated intensity (deterministic)")
          ->check(CLI::NonNegativeNumber);
  auto* mandel_mean_w =
      mandel_cmd->add_option("--mean-w", mandel_args.mean_w, "Mean intensity (exponential)")
          ->check(CLI::NonNegativeNumber);
  auto* mandel_table = mandel_cmd
                           ->add_option("--table", mandel_args.table_path,
                                        "CSV density table 'w,density' (tabulated)")
                           ->check(CLI::ExistingFile);
  auto* mandel_atoms =
      mandel_cmd->add_option("--atoms", mandel_args.atoms, "Atom count (binomial)");
  auto* mandel_p =
      mandel_cmd->add_option("--p", mandel_args.p, "Per-atom firing probability (binomial)")
          ->check(CLI::Range(0.0, 1.0));
  mandel_cmd->add_option("--max-index", mandel_args.max_index, "Last count to tabulate")
      ->capture_default_str();
  mandel_cmd->add_option("--output", mandel_args.output, "Output path, - for stdout")
      ->capture_default_str();

  EstimateArgs estimate_args;
  auto* estimate_cmd = app.add_subcommand(
      "estimate", "Estimate quantum efficiencies from a CSV of method-tagged counts");
  estimate_cmd->add_option("--input", estimate_args.input, "Counts CSV")
      ->required()
      ->check(CLI::ExistingFile);
  estimate_cmd->add_option("--theory", estimate_args.theory, "Estimator family")
      ->required()
      ->check(CLI::IsMember({"old", "new"}));
  auto* estimate_eta_x =
      estimate_cmd->add_option("--eta-x", estimate_args.eta_x,
                               "Blending detector efficiency for chopper rows "
                               "(default: self-consistent)")
          ->check(CLI::Range(0.0, 1.0));
  estimate_cmd->add_option("--output", estimate_args.output, "Output path, - for stdout")
      ->capture_default_str();

  PredictArgs predict_args;
  auto* predict_cmd = app.add_subcommand(
      "predict", "Predict expected counts for M pairs in the counts CSV schema");
  predict_cmd->add_option("--theory", predict_args.theory, "Forward model family")
      ->required()
      ->check(CLI::IsMember({"old", "new"}));
  predict_cmd->add_option("--pairs", predict_args.pairs, "Emitted pair count M")
      ->required()
      ->check(CLI::NonNegativeNumber);
  predict_cmd->add_option("--eta1", predict_args.eta1, "Channel-1 efficiency")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  auto* predict_eta2 =
      predict_cmd->add_option("--eta2", predict_args.eta2, "Channel-2 efficiency (default: --eta1)")
          ->check(CLI::Range(0.0, 1.0));
  auto* predict_eta_x =
      predict_cmd->add_option("--eta-x", predict_args.eta_x,
                              "Blending detector efficiency (default: self-consistent)")
          ->check(CLI::Range(0.0, 1.0));
  predict_cmd->add_option("--output", predict_args.output, "Output path, - for stdout")
      ->capture_default_str();

  SimulateArgs simulate_args;
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Run a seeded Monte Carlo experiment from a JSON config");
  simulate_cmd->add_option("--config", simulate_args.config, "JSON run configuration")
      ->required()
      ->check(CLI::ExistingFile);
  simulate_cmd->add_option("--output", simulate_args.output, "Tally CSV path, - for stdout")
      ->capture_default_str();

  std::string table2_output = "-";
  auto* table2_cmd = app.add_subcommand(
      "reproduce-table2", "Emit the published calibration comparison table as CSV");
  table2_cmd->add_option("--output", table2_output, "Output path, - for stdout")
      ->capture_default_str();

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("photonstat");
    for (const std::string& arg : args) {
      argv.push_back(arg.c_str());
    }
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*dist_cmd) {
      dist_args.has_mean = dist_mean->count() > 0;
      dist_args.has_filling = dist_filling->count() > 0;
      return run_dist(dist_args);
    }
    if (*mandel_cmd) {
      mandel_args.has_w = mandel_w->count() > 0;
      mandel_args.has_mean_w = mandel_mean_w->count() > 0;
      mandel_args.has_table = mandel_table->count() > 0;
      mandel_args.has_atoms = mandel_atoms->count() > 0;
      mandel_args.has_p = mandel_p->count() > 0;
      return run_mandel(mandel_args);
    }
    if (*estimate_cmd) {
      estimate_args.has_eta_x = estimate_eta_x->count() > 0;
      return run_estimate(estimate_args);
    }
    if (*predict_cmd) {
      predict_args.has_eta2 = predict_eta2->count() > 0;
      predict_args.has_eta_x = predict_eta_x->count() > 0;
      return run_predict(predict_args);
    }
    if (*simulate_cmd) {
      return run_simulate(simulate_args);
    }
    if (*table2_cmd) {
      return run_table2(table2_output);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace photonstat
