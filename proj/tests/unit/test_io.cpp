#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "lotsizer/csv.hpp"
#include "lotsizer/io.hpp"
#include "lotsizer/safety_stock.hpp"

using namespace lotsizer;
namespace fs = std::filesystem;

namespace {

const std::string kCaseStudyDir = std::string(LOTSIZER_DATA_DIR) + "/case_study";

RunConfig case_study_config() {
  RunConfig config;
  config.parts_path = kCaseStudyDir + "/parts.csv";
  config.demand_path = kCaseStudyDir + "/demand.csv";
  config.prices_path = kCaseStudyDir + "/prices.csv";
  config.safety_stock_path = kCaseStudyDir + "/safety_stock.csv";
  return config;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

TEST_CASE("case study loads, validates, and has the documented shape") {
  const PlanningInstance instance = load_instance(case_study_config());
  CHECK(instance.num_parts() == 22);
  CHECK(instance.horizon() == 12);
  CHECK(validate(instance).ok());

  // Sparse prices expand across each four-week block.
  CHECK(instance.price(3, 1) == 56.68);   // backward fill
  CHECK(instance.price(3, 5) == 56.68);   // forward fill
  CHECK(instance.price(3, 6) == 58.35);
  CHECK(instance.price(3, 12) == 60.02);
  CHECK(instance.price(11, 12) == 1.66);
}

TEST_CASE("strict price mode reports exactly the published gap count") {
  RunConfig config = case_study_config();
  config.price_fill = PriceFillMode::kStrict;
  CHECK_THROWS_WITH_AS(load_instance(config),
                       doctest::Contains("198 missing price cells"), DomainError);

  const std::vector<PartSpec> parts = load_parts(config.parts_path);
  int horizon = 0;
  const Grid demand =
      load_demand(config.demand_path, static_cast<int>(parts.size()), &horizon);
  const Grid sparse =
      load_prices_sparse(config.prices_path, static_cast<int>(parts.size()), horizon);
  CHECK(price_gaps(sparse).size() == 198);
}

TEST_CASE("computed safety stock is used when no file is given") {
  RunConfig config = case_study_config();
  config.safety_stock_path.clear();
  config.z_override = 1.645;
  const PlanningInstance instance = load_instance_raw(config);
  CHECK(instance.safety_stock().at(3, 1) == 17);
  CHECK(instance.safety_stock().at(1, 7) == 4);
  CHECK(instance.safety_stock().at(12, 2) == doctest::Approx(201.42).epsilon(1e-9));
  // Part 13 computes to 34.48, above the published 34.03.
  CHECK(instance.safety_stock().at(13, 5) == doctest::Approx(34.48).epsilon(1e-9));
}

TEST_CASE("duplicate demand cells name the offending line") {
  const fs::path dir = fresh_dir("lotsizer_io_dup");
  write(dir / "parts.csv",
        "part_id,lead_time,ordering_cost,holding_cost,sigma,uom\n"
        "1,1,1,1,0,unit\n");
  write(dir / "demand.csv",
        "part_id,period,demand\n"
        "1,1,5\n"
        "1,2,5\n"
        "1,2,6\n");
  write(dir / "prices.csv", "part_id,period,price\n1,1,10\n");

  RunConfig config;
  config.parts_path = (dir / "parts.csv").string();
  config.demand_path = (dir / "demand.csv").string();
  config.prices_path = (dir / "prices.csv").string();
  config.safety_stock_path.clear();

  try {
    load_instance_raw(config);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("duplicate demand cell") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("malformed inputs raise parse errors with locations") {
  const fs::path dir = fresh_dir("lotsizer_io_bad");
  SUBCASE("bad header") {
    write(dir / "parts.csv", "part,lead\n1,1\n");
    CHECK_THROWS_AS(load_parts((dir / "parts.csv").string()), ParseError);
  }
  SUBCASE("bad number") {
    write(dir / "parts.csv",
          "part_id,lead_time,ordering_cost,holding_cost,sigma,uom\n"
          "1,one,1,1,0,unit\n");
    CHECK_THROWS_AS(load_parts((dir / "parts.csv").string()), ParseError);
  }
  SUBCASE("bad uom") {
    write(dir / "parts.csv",
          "part_id,lead_time,ordering_cost,holding_cost,sigma,uom\n"
          "1,1,1,1,0,bushels\n");
    CHECK_THROWS_AS(load_parts((dir / "parts.csv").string()), ParseError);
  }
  SUBCASE("non-contiguous part ids") {
    write(dir / "parts.csv",
          "part_id,lead_time,ordering_cost,holding_cost,sigma,uom\n"
          "1,1,1,1,0,unit\n"
          "3,1,1,1,0,unit\n");
    CHECK_THROWS_AS(load_parts((dir / "parts.csv").string()), DomainError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_parts((dir / "absent.csv").string()), Error);
  }
  fs::remove_all(dir);
}

TEST_CASE("canonical export round-trips byte for byte") {
  const PlanningInstance first = load_instance(case_study_config());
  const fs::path dir = fresh_dir("lotsizer_io_roundtrip");

  write_text_file((dir / "parts.csv").string(), parts_to_csv(first.parts()));
  write_text_file((dir / "demand.csv").string(), demand_to_csv(first));
  write_text_file((dir / "prices.csv").string(), prices_to_csv(first));
  write_text_file((dir / "safety_stock.csv").string(), safety_stock_to_csv(first));

  RunConfig config;
  config.parts_path = (dir / "parts.csv").string();
  config.demand_path = (dir / "demand.csv").string();
  config.prices_path = (dir / "prices.csv").string();
  config.safety_stock_path = (dir / "safety_stock.csv").string();
  const PlanningInstance second = load_instance(config);

  CHECK(second.demand().raw == first.demand().raw);
  CHECK(second.demand().net == first.demand().net);
  CHECK(second.prices().price == first.prices().price);
  CHECK(second.safety_stock() == first.safety_stock());

  CHECK(parts_to_csv(second.parts()) == parts_to_csv(first.parts()));
  CHECK(demand_to_csv(second) == demand_to_csv(first));
  CHECK(prices_to_csv(second) == prices_to_csv(first));
  CHECK(safety_stock_to_csv(second) == safety_stock_to_csv(first));
  fs::remove_all(dir);
}

TEST_CASE("plans round-trip through their CSV form") {
  const PlanningInstance instance = load_instance(case_study_config());
  const OrderPlan plan = solve_pairwise(instance);
  const fs::path dir = fresh_dir("lotsizer_io_plan");
  write_text_file((dir / "plan.csv").string(), plan_to_csv(plan));
  const OrderPlan reread = read_plan_csv((dir / "plan.csv").string());
  CHECK(reread.entries() == plan.entries());
  CHECK(plan_to_csv(reread) == plan_to_csv(plan));
  fs::remove_all(dir);
}

TEST_CASE("reference totals parse with the grand-total row") {
  const ReferenceTotals totals =
      read_reference_totals(kCaseStudyDir + "/reference_totals.csv");
  CHECK(totals.per_part.size() == 22);
  CHECK(totals.per_part.at(3) == 36523.68);
  REQUIRE(totals.grand.has_value());
  CHECK(*totals.grand == 4423918.29);
}
