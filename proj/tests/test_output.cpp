#include "boxtrio/output.hpp"

#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

#include "boxtrio/perturbation.hpp"
#include "boxtrio/sweep.hpp"

using namespace boxtrio;

TEST_CASE("doubles are formatted with 17 significant digits and round-trip") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5) == "-2.5");
  CHECK(format_double(0.001) == "0.001");

  const double values[] = {1.0 / 3.0,
                           std::numbers::pi,
                           2.0 * (std::numbers::pi * std::numbers::pi - 6.0) /
                               (std::numbers::pi * std::numbers::pi),
                           1e-300,
                           6.0221407599999996e23,
                           -0.1};
  for (double v : values) {
    const std::string text = format_double(v);
    CHECK(std::stod(text) == v);  // lossless round-trip
    CHECK(text.find('E') == std::string::npos);  // lowercase exponent only
  }
  CHECK(format_double(1e-300).find('e') != std::string::npos);
}

TEST_CASE("spectrum CSV has the documented header and full precision") {
  const BlockSet set = build_block_set(14);
  SweepOptions opts;
  opts.lambdas = {0.5, 1.0};
  opts.keep_vectors = false;
  const SpectrumCurve curve = sweep_spectrum(set, opts);

  const std::string csv = spectrum_csv(curve, IrrepLabel::A1g, 2);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "lambda,E_1,E_2,scaled_1,scaled_2");

  std::string row;
  std::getline(lines, row);
  const std::string lambda_text = row.substr(0, row.find(','));
  CHECK(lambda_text == "0.5");

  int rows = 0;
  do {
    ++rows;
  } while (std::getline(lines, row));
  CHECK(rows == 2);

  // Requesting more levels than the block holds clamps to the block size.
  const std::string small = spectrum_csv(curve, IrrepLabel::A1u, 99);
  std::istringstream small_lines(small);
  std::getline(small_lines, header);
  CHECK(header == "lambda,E_1,scaled_1");

  // Byte determinism of the writer itself.
  CHECK(csv == spectrum_csv(curve, IrrepLabel::A1g, 2));
}

TEST_CASE("report serializers keep stable key order and full precision") {
  const BlockSet set = build_block_set(14);
  const SlopeReport report = check_first_order_slopes(set);

  const auto j = to_json(report);
  CHECK(j.dump() == to_json(report).dump());
  REQUIRE(j["rows"].size() == 12);
  const auto& first = j["rows"][0];
  auto it = first.begin();
  CHECK(it.key() == "level");

  // Values are serialized as strings so the JSON bytes match the CSV bytes.
  const std::string closed = first["closed_form"].get<std::string>();
  CHECK(std::stod(closed) ==
        doctest::Approx(2.0 * (std::numbers::pi * std::numbers::pi - 6.0) /
                        (std::numbers::pi * std::numbers::pi))
            .epsilon(1e-16));

  const std::string csv = to_csv(report);
  CHECK(csv.substr(0, csv.find('\n')) ==
        "level,irrep,energy_sum,e0,closed_form,computed,relative_error,ok");
  CHECK(csv.find(closed) != std::string::npos);
}

TEST_CASE("the command line binary honors the documented exit codes") {
  const char* cli = std::getenv("BOXTRIO_CLI");
  if (cli == nullptr) {
    MESSAGE("BOXTRIO_CLI not set; skipping the subprocess checks");
    return;
  }
  const std::string base(cli);
  auto run = [&](const std::string& args) {
    const std::string cmd = base + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  };

  CHECK(run("pt --cutoff 14") == 0);
  CHECK(run("pt --cutoff 3") == 0);
  // Usage errors: bad flag, bad irrep, geometric grid from zero.
  CHECK(run("pt --no-such-flag") == 1);
  CHECK(run("basis --irreps B7x") == 1);
  CHECK(run("spectrum --lmin 0 --spacing geometric --out-dir .") == 1);
  CHECK(run("dump-block --cutoff 14") == 1);
  CHECK(run("") == 1);
  // Numerical failure: the negative control contaminates the integral table.
  CHECK(run("pt --test-perturb-integrals 1e-6") == 2);
  CHECK(run("verify --cutoff 14 --lambda 1 --qmax 8 "
            "--test-perturb-integrals 1e-6") == 2);
}
