// Command-line planner: validates instances, computes safety stock, exports
// the model in LP format, solves, and renders schedules and cost totals.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lotsizer/csv.hpp"
#include "lotsizer/io.hpp"
#include "lotsizer/mip.hpp"
#include "lotsizer/numfmt.hpp"
#include "lotsizer/report.hpp"
#include "lotsizer/safety_stock.hpp"
#include "lotsizer/solve.hpp"

namespace {

namespace fs = std::filesystem;
using namespace lotsizer;

// A recoverable misuse of the command line (missing input combination) that
// CLI11's declarative checks cannot express. Exits with the usage status.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InstanceArgs {
  RunConfig config;
  std::string data_dir;
  std::string price_fill = "fill";
  double z_value = 0;
  CLI::Option* z_option = nullptr;
};

void add_instance_options(CLI::App* cmd, InstanceArgs* args) {
  cmd->add_option("--data-dir", args->data_dir,
                  "directory holding parts.csv, demand.csv, prices.csv and "
                  "optionally safety_stock.csv");
  cmd->add_option("--parts", args->config.parts_path, "parts CSV");
  cmd->add_option("--demand", args->config.demand_path, "demand CSV");
  cmd->add_option("--prices", args->config.prices_path, "prices CSV");
  cmd->add_option("--safety-stock", args->config.safety_stock_path,
                  "safety stock CSV (computed from the parts table when omitted)");
  cmd->add_option("--service-level", args->config.service_level,
                  "cycle service level in (0,1)")
      ->capture_default_str();
  args->z_option = cmd->add_option(
      "--z", args->z_value,
      "normal quantile override (takes precedence over --service-level)");
  cmd->add_option("--price-fill", args->price_fill,
                  "fill: expand sparse prices forward then backward; strict: "
                  "refuse gaps")
      ->check(CLI::IsMember({"fill", "strict"}))
      ->capture_default_str();
}

RunConfig resolve_config(InstanceArgs& args) {
  RunConfig config = args.config;
  if (!args.data_dir.empty()) {
    const fs::path dir(args.data_dir);
    if (config.parts_path.empty()) config.parts_path = (dir / "parts.csv").string();
    if (config.demand_path.empty()) config.demand_path = (dir / "demand.csv").string();
    if (config.prices_path.empty()) config.prices_path = (dir / "prices.csv").string();
    if (config.safety_stock_path.empty()) {
      const fs::path ss = dir / "safety_stock.csv";
      if (fs::exists(ss)) config.safety_stock_path = ss.string();
    }
  }
  if (config.parts_path.empty() || config.demand_path.empty() ||
      config.prices_path.empty()) {
    throw UsageError(
        "missing input files: provide --parts, --demand and --prices, or "
        "--data-dir");
  }
  if (args.z_option != nullptr && args.z_option->count() > 0) {
    config.z_override = args.z_value;
  }
  config.price_fill = args.price_fill == "strict"
                          ? PriceFillMode::kStrict
                          : PriceFillMode::kForwardBackwardFill;
  return config;
}

int run_validate(InstanceArgs& args) {
  const PlanningInstance instance = load_instance_raw(resolve_config(args));
  const ValidationReport report = validate(instance);
  std::cout << report.to_string();
  return report.ok() ? 0 : 1;
}

int run_safety_stock(const std::string& parts_path, const std::string& demand_path,
                     int horizon, double service_level, bool has_z, double z_value,
                     const std::string& out) {
  const std::vector<PartSpec> parts = load_parts(parts_path);
  if (!demand_path.empty()) {
    load_demand(demand_path, static_cast<int>(parts.size()), &horizon);
  }
  if (horizon < 1) {
    throw UsageError("provide --horizon or --demand to set the horizon");
  }
  const ServicePolicy policy = has_z
                                   ? ServicePolicy::from_z(z_value)
                                   : ServicePolicy::from_service_level(service_level);
  const Grid grid = compute_safety_stock(parts, horizon, policy);
  std::ostringstream csv;
  csv << "part_id,period,ss\n";
  for (const PartSpec& part : parts) {
    for (int t = 1; t <= horizon; ++t) {
      csv << part.part_id << "," << t << "," << format_number(grid.at(part.part_id, t))
          << "\n";
    }
  }
  write_text_file(out, csv.str());
  std::cerr << "wrote " << out << " (z = " << format_number(policy.z_value) << ")\n";
  return 0;
}

int run_export_lp(InstanceArgs& args, const std::string& out, bool per_part_m) {
  const PlanningInstance instance = load_instance(resolve_config(args));
  BuildOptions options;
  options.per_part_big_m = per_part_m;
  const MipModel model = build_model(instance, options);
  export_lp_file(model, out);
  std::cerr << "wrote " << out << " (" << model.num_variables() << " variables, "
            << model.rows().size() << " rows)\n";
  return 0;
}

int run_solve(InstanceArgs& args, const std::string& semantics_str,
              const std::string& out) {
  const CostSemantics semantics = semantics_from_string(semantics_str);
  const PlanningInstance instance = load_instance(resolve_config(args));
  const OrderPlan plan = semantics == CostSemantics::kPairwiseAsWritten
                             ? solve_pairwise(instance)
                             : solve_consolidated(instance);
  const FeasibilityReport report = check_plan(instance, plan, semantics);
  if (!report.ok()) {
    std::cerr << "internal error: solver produced an infeasible plan\n"
              << report.to_string();
    return 1;
  }
  write_text_file(out, plan_to_csv(plan));
  std::cout << "semantics: " << to_string(semantics) << "\n"
            << "purchasing: " << format_fixed(report.cost.overall.purchasing, 2)
            << "\n"
            << "ordering: " << format_fixed(report.cost.overall.ordering, 2) << "\n"
            << "holding: " << format_fixed(report.cost.overall.holding, 2) << "\n"
            << "total: " << format_fixed(report.cost.overall.total(), 2) << "\n";
  std::cerr << "wrote " << out << " (" << plan.entries().size() << " assignments)\n";
  return 0;
}

int run_report(InstanceArgs& args, const std::string& plan_path,
               const std::string& semantics_str, const std::string& format,
               int part_id, const std::string& reference_path,
               const std::string& out_dir) {
  const CostSemantics semantics = semantics_from_string(semantics_str);
  const PlanningInstance instance = load_instance(resolve_config(args));
  const OrderPlan plan = read_plan_csv(plan_path);
  const FeasibilityReport feasibility = check_plan(instance, plan, semantics);
  if (!feasibility.ok()) {
    std::cerr << "plan is infeasible:\n" << feasibility.to_string();
    return 1;
  }
  std::optional<ReferenceTotals> reference;
  if (!reference_path.empty()) reference = read_reference_totals(reference_path);

  const bool csv = format == "csv";
  if (part_id > 0) {
    const PartReport report = render_part_report(instance, plan, part_id, semantics);
    std::cout << (csv ? part_report_to_csv(report) : part_report_to_text(report));
  } else {
    const TotalReport report =
        render_total_report(instance, plan, semantics, reference);
    std::cout << (csv ? total_report_to_csv(report) : total_report_to_text(report));
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    const TotalReport totals =
        render_total_report(instance, plan, semantics, reference);
    write_text_file((fs::path(out_dir) / (csv ? "totals.csv" : "totals.txt")).string(),
                    csv ? total_report_to_csv(totals) : total_report_to_text(totals));
    std::string parts_out;
    for (int i = 1; i <= instance.num_parts(); ++i) {
      const PartReport report = render_part_report(instance, plan, i, semantics);
      if (csv) {
        std::string body = part_report_to_csv(report);
        if (i > 1) body.erase(0, body.find('\n') + 1);  // keep one header
        parts_out += body;
      } else {
        if (i > 1) parts_out += "\n";
        parts_out += part_report_to_text(report);
      }
    }
    write_text_file((fs::path(out_dir) / (csv ? "parts.csv" : "parts.txt")).string(),
                    parts_out);
    std::cerr << "wrote reports to " << out_dir << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-item uncapacitated lot-sizing planner"};
  app.require_subcommand(1);

  InstanceArgs validate_args;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check an instance and print the report");
  add_instance_options(validate_cmd, &validate_args);

  std::string ss_parts, ss_demand, ss_out = "safety_stock.csv";
  int ss_horizon = 0;
  double ss_service_level = 0.95;
  double ss_z = 0;
  CLI::App* ss_cmd = app.add_subcommand(
      "safety-stock", "compute per-part safety stock and write the CSV");
  ss_cmd->add_option("--parts", ss_parts, "parts CSV")->required();
  ss_cmd->add_option("--demand", ss_demand, "demand CSV (sets the horizon)");
  ss_cmd->add_option("--horizon", ss_horizon, "number of periods");
  ss_cmd->add_option("--service-level", ss_service_level, "cycle service level")
      ->capture_default_str();
  CLI::Option* ss_z_option = ss_cmd->add_option("--z", ss_z, "normal quantile override");
  ss_cmd->add_option("--out", ss_out, "output CSV")->capture_default_str();

  InstanceArgs export_args;
  std::string export_out = "model.lp";
  bool per_part_m = false;
  CLI::App* export_cmd =
      app.add_subcommand("export-lp", "write the model in LP text format");
  add_instance_options(export_cmd, &export_args);
  export_cmd->add_option("--out", export_out, "output LP file")->capture_default_str();
  export_cmd->add_flag("--per-part-m", per_part_m,
                       "use per-part linking constants (tighter relaxation)");

  InstanceArgs solve_args;
  std::string solve_semantics = "pairwise";
  std::string solve_out = "plan.csv";
  CLI::App* solve_cmd = app.add_subcommand("solve", "compute an optimal plan");
  add_instance_options(solve_cmd, &solve_args);
  solve_cmd->add_option("--semantics", solve_semantics, "ordering cost semantics")
      ->check(CLI::IsMember({"pairwise", "consolidated"}))
      ->capture_default_str();
  solve_cmd->add_option("--out", solve_out, "output plan CSV")->capture_default_str();

  InstanceArgs report_args;
  std::string report_plan, report_semantics = "pairwise", report_format = "text";
  std::string report_reference, report_out_dir;
  int report_part = 0;
  CLI::App* report_cmd =
      app.add_subcommand("report", "render schedule and cost reports for a plan");
  add_instance_options(report_cmd, &report_args);
  report_cmd->add_option("--plan", report_plan, "plan CSV to report on")->required();
  report_cmd->add_option("--semantics", report_semantics, "ordering cost semantics")
      ->check(CLI::IsMember({"pairwise", "consolidated"}))
      ->capture_default_str();
  report_cmd->add_option("--format", report_format, "output format")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  report_cmd->add_option("--part", report_part,
                         "render the detailed schedule of one part");
  report_cmd->add_option("--reference", report_reference,
                         "reference totals CSV for a delta column");
  report_cmd->add_option("--out-dir", report_out_dir,
                         "also write totals and per-part reports here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(validate_args);
    if (ss_cmd->parsed()) {
      return run_safety_stock(ss_parts, ss_demand, ss_horizon, ss_service_level,
                              ss_z_option->count() > 0, ss_z, ss_out);
    }
    if (export_cmd->parsed()) return run_export_lp(export_args, export_out, per_part_m);
    if (solve_cmd->parsed()) return run_solve(solve_args, solve_semantics, solve_out);
    if (report_cmd->parsed()) {
      return run_report(report_args, report_plan, report_semantics, report_format,
                        report_part, report_reference, report_out_dir);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
