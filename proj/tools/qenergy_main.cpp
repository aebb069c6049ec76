// qenergy: energy estimates for NISQ and FTQC workloads.
//
//   qenergy estimate <file> [--format table|machine] [--maintenance include|exclude|flag]
//   qenergy sweep <file> --param <path> --values <v1,v2,...>
//   qenergy profiles list
//   qenergy profiles show <key>
//   qenergy decoders show
//
// Exit codes: 0 success, 1 parse/validation error, 2 infeasible model,
// 3 I/O error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qenergy/catalog.hpp"
#include "qenergy/decoder_table.hpp"
#include "qenergy/error.hpp"
#include "qenergy/estimate.hpp"
#include "qenergy/report.hpp"
#include "qenergy/workload.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInvalid = 1, kInfeasible = 2, kIo = 3 };

struct CommonOptions {
  std::string format = "table";
  std::string maintenance = "flag";
  std::vector<std::string> profile_files;
  std::string decoder_table_file;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"table", "machine"}));
  cmd->add_option("--maintenance", opts.maintenance,
                  "Maintenance-energy accounting when gate energies already include cooling")
      ->check(CLI::IsMember({"include", "exclude", "flag"}));
  cmd->add_option("--profile-file", opts.profile_files, "Extra technology profile file(s)");
  cmd->add_option("--decoder-table", opts.decoder_table_file, "Decoder metrics table file");
}

qenergy::ProfileCatalog load_catalog(const CommonOptions& opts) {
  qenergy::ProfileCatalog catalog;
  for (const auto& path : opts.profile_files)
    catalog.add(qenergy::parse_profile(qenergy::read_text_file(path)));
  return catalog;
}

qenergy::DecoderTable load_decoders(const CommonOptions& opts) {
  if (opts.decoder_table_file.empty()) return qenergy::builtin_decoder_table();
  return qenergy::parse_decoder_table(qenergy::read_text_file(opts.decoder_table_file));
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  std::string item;
  const auto flush = [&] {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (!item.empty() || !out.empty())
        throw qenergy::ParseError("--values: empty list element");
      return;
    }
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw qenergy::ParseError("--values: '" + item + "' is not a number");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw qenergy::ParseError("--values: '" + item + "' is not a number");
    out.push_back(v);
  };
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (char c : text) {
    if (c == ',') {
      flush();
      item.clear();
    } else {
      item += c;
    }
  }
  flush();
  return out;
}

qenergy::EstimateOptions estimate_options(const CommonOptions& opts) {
  return qenergy::EstimateOptions{*qenergy::maintenance_mode_from_string(opts.maintenance)};
}

template <typename F>
int guarded(F&& body) {
  try {
    const std::string output = body();
    std::cout << output;
    return kOk;
  } catch (const qenergy::InfeasibleError& e) {
    std::cerr << "qenergy: infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const qenergy::IoError& e) {
    std::cerr << "qenergy: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const qenergy::Error& e) {
    std::cerr << "qenergy: invalid input: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy and power estimates for quantum workloads"};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string workload_path;

  auto* estimate_cmd = app.add_subcommand("estimate", "Estimate one workload");
  estimate_cmd->add_option("file", workload_path, "Workload file")->required();
  add_common_flags(estimate_cmd, opts);

  std::string param_path;
  std::string values_text;
  auto* sweep_cmd = app.add_subcommand("sweep", "Estimate a workload over values of one parameter");
  sweep_cmd->add_option("file", workload_path, "Workload file")->required();
  sweep_cmd->add_option("--param", param_path, "Dotted path of a numeric field")->required();
  sweep_cmd->add_option("--values", values_text, "Comma-separated values (may be empty)")
      ->required()
      ->expected(0, 1);
  add_common_flags(sweep_cmd, opts);

  std::string profile_key;
  auto* profiles_cmd = app.add_subcommand("profiles", "Technology profiles");
  profiles_cmd->require_subcommand(1);
  auto* profiles_list = profiles_cmd->add_subcommand("list", "List profile keys");
  auto* profiles_show = profiles_cmd->add_subcommand("show", "Print one profile");
  profiles_show->add_option("key", profile_key, "Profile key")->required();
  for (auto* cmd : {profiles_list, profiles_show})
    cmd->add_option("--profile-file", opts.profile_files, "Extra technology profile file(s)");

  auto* decoders_cmd = app.add_subcommand("decoders", "Decoder hardware table");
  decoders_cmd->require_subcommand(1);
  auto* decoders_show = decoders_cmd->add_subcommand("show", "Print the decoder table");
  decoders_show->add_option("--decoder-table", opts.decoder_table_file, "Decoder metrics table file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  if (*estimate_cmd) {
    return guarded([&] {
      const auto report = qenergy::run_estimate(workload_path, load_catalog(opts),
                                                load_decoders(opts), estimate_options(opts));
      return qenergy::render_report(report, *qenergy::report_format_from_string(opts.format));
    });
  }
  if (*sweep_cmd) {
    return guarded([&] {
      const auto values = parse_values(values_text);
      const auto spec = qenergy::load_workload(workload_path);
      const auto points = qenergy::run_sweep(spec, param_path, values, load_catalog(opts),
                                             load_decoders(opts), estimate_options(opts));
      return qenergy::render_sweep(points, *qenergy::report_format_from_string(opts.format));
    });
  }
  if (*profiles_list) {
    return guarded([&] {
      std::string out;
      const auto catalog = load_catalog(opts);
      for (const auto& [key, profile] : catalog.profiles()) {
        out += key;
        if (qenergy::is_builtin_profile_key(key)) out += " (builtin)";
        out += "\n";
      }
      return out;
    });
  }
  if (*profiles_show) {
    return guarded([&] { return qenergy::render_profile(load_catalog(opts).at(profile_key)); });
  }
  if (*decoders_show) {
    return guarded([&] { return qenergy::render_decoder_table(load_decoders(opts)); });
  }
  return kInvalid;
}
