#include "boxtrio/output.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>

namespace boxtrio {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string spectrum_csv(const SpectrumCurve& curve, IrrepLabel irrep,
                         int max_levels) {
  const Eigen::MatrixXd& e = curve.of(irrep);
  const Eigen::MatrixXd scaled = curve.scaled(irrep);
  const int k = std::min<int>(max_levels, e.rows());
  std::string out = "lambda";
  for (int i = 1; i <= k; ++i) out += ",E_" + std::to_string(i);
  for (int i = 1; i <= k; ++i) out += ",scaled_" + std::to_string(i);
  out += "\n";
  for (int j = 0; j < curve.points(); ++j) {
    out += format_double(curve.lambdas[j]);
    for (int i = 0; i < k; ++i) out += "," + format_double(e(i, j));
    for (int i = 0; i < k; ++i) out += "," + format_double(scaled(i, j));
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const AvoidedCrossing& c) {
  nlohmann::ordered_json j;
  j["irrep"] = to_string(c.irrep);
  j["lower_level"] = c.lower_level + 1;  // 1-based, matching CSV column names
  j["upper_level"] = c.lower_level + 2;
  j["lambda_c"] = format_double(c.lambda_c);
  j["min_gap"] = format_double(c.min_gap);
  j["cutoff"] = c.cutoff;
  return j;
}

nlohmann::ordered_json to_json(const SlopeReport& r) {
  nlohmann::ordered_json j;
  j["tolerance"] = format_double(r.tolerance);
  j["all_ok"] = r.all_ok;
  j["rows"] = nlohmann::ordered_json::array();
  for (const SlopeCheckRow& row : r.rows) {
    nlohmann::ordered_json item;
    item["level"] = row.ref.name;
    item["irrep"] = to_string(row.ref.irrep);
    item["energy_sum"] = row.ref.energy_sum;
    item["e0"] = format_double(std::numbers::pi * std::numbers::pi / 4.0 *
                               static_cast<double>(row.ref.energy_sum));
    item["closed_form"] = format_double(row.ref.slope);
    item["computed"] = format_double(row.computed);
    item["relative_error"] = format_double(row.relative_error);
    item["ok"] = row.ok;
    j["rows"].push_back(std::move(item));
  }
  return j;
}

std::string to_csv(const SlopeReport& r) {
  std::string out =
      "level,irrep,energy_sum,e0,closed_form,computed,relative_error,ok\n";
  constexpr double quarter_pi2 = std::numbers::pi * std::numbers::pi / 4.0;
  for (const SlopeCheckRow& row : r.rows) {
    const double e0 = quarter_pi2 * static_cast<double>(row.ref.energy_sum);
    out += row.ref.name + "," + to_string(row.ref.irrep) + "," +
           std::to_string(row.ref.energy_sum) + "," + format_double(e0) + "," +
           format_double(row.ref.slope) + "," + format_double(row.computed) +
           "," + format_double(row.relative_error) + "," +
           (row.ok ? "true" : "false") + "\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const oracle::OracleReport& r) {
  nlohmann::ordered_json j;
  j["all_passed"] = r.all_passed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const oracle::OracleCheck& c : r.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["measured"] = format_double(c.measured);
    item["tolerance"] = format_double(c.tolerance);
    if (!c.details.is_null()) item["details"] = c.details;
    j["checks"].push_back(std::move(item));
  }
  return j;
}

nlohmann::ordered_json to_json(const Salc& s) {
  nlohmann::ordered_json j;
  j["irrep"] = to_string(s.irrep);
  j["row"] = s.row;
  j["copy"] = s.copy;
  j["multiplet"] = {s.multiplet.n1, s.multiplet.n2, s.multiplet.n3};
  j["energy_sum"] = s.energy_sum;
  j["coefficients"] = nlohmann::ordered_json::array();
  for (const auto& [t, c] : s.coeffs) {
    nlohmann::ordered_json term;
    term["state"] = {t.n1, t.n2, t.n3};
    term["value"] = format_double(c);
    j["coefficients"].push_back(std::move(term));
  }
  return j;
}

nlohmann::ordered_json to_json(const HamiltonianBlock& b) {
  nlohmann::ordered_json j;
  j["irrep"] = to_string(b.irrep);
  j["row"] = b.row;
  j["cutoff"] = b.cutoff;
  j["dimension"] = b.dimension();
  j["basis"] = nlohmann::ordered_json::array();
  for (const Salc& s : b.basis) j["basis"].push_back(to_json(s));
  auto vec_to_json = [](const auto& make, int n) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) arr.push_back(make(i));
    return arr;
  };
  j["h0_diagonal"] = vec_to_json(
      [&](int i) { return format_double(b.h0_diagonal[i]); }, b.dimension());
  j["coupling"] = vec_to_json(
      [&](int i) {
        return vec_to_json(
            [&](int k) { return format_double(b.coupling(i, k)); },
            b.dimension());
      },
      b.dimension());
  return j;
}

nlohmann::ordered_json to_json(const AsymptoteReport& r) {
  nlohmann::ordered_json j;
  j["cutoff"] = r.cutoff;
  j["tail_start"] = format_double(r.tail_start);
  j["reference_lines"] = nlohmann::ordered_json::array();
  for (double v : scaled_reference_lines())
    j["reference_lines"].push_back(format_double(v));
  j["scaled_tails"] = nlohmann::ordered_json::array();
  for (const TailCheck& t : r.tails) {
    nlohmann::ordered_json item;
    item["irrep"] = to_string(t.irrep);
    item["level"] = t.level + 1;
    item["monotone_nonincreasing"] = t.monotone_nonincreasing;
    j["scaled_tails"].push_back(std::move(item));
  }
  j["pairs"] = nlohmann::ordered_json::array();
  for (const PairConvergence& p : r.pairs) {
    nlohmann::ordered_json item;
    item["name"] = p.name;
    item["limit"] = format_double(p.limit);
    item["gap_shrinks_monotonically"] = p.gap_shrinks_monotonically;
    item["above_limit_at_end"] = p.above_limit_at_end;
    item["final_scaled"] = {format_double(p.final_first),
                            format_double(p.final_second)};
    item["final_gap"] = format_double(p.final_gap);
    j["pairs"].push_back(std::move(item));
  }
  j["all_ok"] = r.all_ok;
  return j;
}

nlohmann::ordered_json to_json(const AssociationReport& r) {
  nlohmann::ordered_json j;
  j["target"] = to_string(r.target);
  j["reference"] = to_string(r.reference);
  j["reference_level"] = r.reference_level + 1;
  j["before_level"] = r.before_level + 1;
  j["after_level"] = r.after_level + 1;
  j["flipped"] = r.flipped;
  if (r.flip_lambda)
    j["flip_lambda"] = format_double(*r.flip_lambda);
  else
    j["flip_lambda"] = nullptr;
  return j;
}

}  // namespace boxtrio
