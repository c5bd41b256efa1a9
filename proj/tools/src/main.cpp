#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stabcoh/bmodule.hpp"
#include "stabcoh/characters.hpp"
#include "stabcoh/diag_algebra.hpp"
#include "stabcoh/json_io.hpp"
#include "stabcoh/macdonald.hpp"
#include "stabcoh/oracle.hpp"
#include "stabcoh/stable.hpp"
#include "stabcoh/symplectic.hpp"

namespace {

using namespace stabcoh;

NumericalPartition parse_partition(const std::string& text, const char* flag) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || value <= 0)
      throw CLI::ValidationError(flag, "parts must be positive integers: '" + item + "'");
    parts.push_back(value);
  }
  if (parts.empty()) throw CLI::ValidationError(flag, "expected a nonempty comma-separated list");
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1])
      throw CLI::ValidationError(flag, "parts must be nonincreasing: '" + text + "'");
  return NumericalPartition(parts);
}

std::string csv_cell(const Json& value) {
  std::string text;
  if (value.is_string())
    text = value.get<std::string>();
  else if (value.is_null())
    text = "";
  else
    text = value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string partition_cell(const Json& array) {
  std::string text = "(";
  for (std::size_t i = 0; i < array.size(); ++i) {
    if (i) text += ',';
    text += array[i].dump();
  }
  text += ')';
  return csv_cell(Json(text));
}

void emit_csv(const Json& j, std::ostream& out) {
  if (j.contains("table")) {
    out << "lambda";
    for (const auto& mu : j["classes"]) out << ',' << partition_cell(mu);
    out << '\n';
    for (std::size_t r = 0; r < j["table"].size(); ++r) {
      out << partition_cell(j["labels"][r]);
      for (const auto& v : j["table"][r]) out << ',' << csv_cell(v);
      out << '\n';
    }
    return;
  }
  if (j.contains("bigraded_coefficients")) {
    out << "degree,weight,value\n";
    for (const auto& t : j["bigraded_coefficients"])
      out << t[0] << ',' << t[1] << ',' << csv_cell(t[2]) << '\n';
    return;
  }
  if (j.contains("coefficients")) {
    out << "degree,value\n";
    for (const auto& p : j["coefficients"]) out << p[0] << ',' << csv_cell(p[1]) << '\n';
    return;
  }
  if (j.contains("rows")) {
    out << "lambda,f_lambda,sp_dim\n";
    for (const auto& row : j["rows"])
      out << partition_cell(row["lambda"]) << ',' << csv_cell(row["f_lambda"]) << ','
          << csv_cell(row["sp_dim"]) << '\n';
    out << "decomposition_total," << csv_cell(j["decomposition_total"]) << '\n';
    out << "expected," << csv_cell(j["expected"]) << '\n';
    out << "pass," << csv_cell(j["pass"]) << '\n';
    return;
  }
  if (j.contains("betti")) {
    out << "n,value\n";
    for (std::size_t n = 0; n < j["betti"].size(); ++n)
      out << n << ',' << csv_cell(j["betti"][n]) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && key == "per_s") {
      for (const auto& row : value)
        out << "per_s." << row["s"] << ',' << csv_cell(row["pass"]) << '\n';
      continue;
    }
    if (value.is_object() || value.is_array()) {
      out << key << ',' << csv_cell(Json(value.dump())) << '\n';
      continue;
    }
    out << key << ',' << csv_cell(value) << '\n';
  }
}

int emit(const Json& j, const std::string& format, int code) {
  if (format == "csv")
    emit_csv(j, std::cout);
  else
    std::cout << j.dump(2) << '\n';
  return code;
}

Json series_fields(const LaurentWindow& w, const char* context) {
  return series_to_json(w, context);
}

StableModel load_model(const std::string& spec_text, int max_degree) {
  if (spec_text == "default") return StableModel::free_polynomial(std::max(64, max_degree));
  if (spec_text == "unit") return StableModel::unit();
  std::ifstream in(spec_text);
  if (!in) throw std::invalid_argument("cannot open model file: " + spec_text);
  nlohmann::json parsed = nlohmann::json::parse(in);
  return StableModel::from_series(series_from_json(parsed));
}

struct Options {
  std::string format = "json";
  int s = 1;
  int g = 1;
  int max_degree = 20;
  int max_s = 3;
  int weight_cap = -1;
  std::string lambda_text;
  std::string trace_text;
  std::string variant_text = "a";
  std::string c_variant_text = "c";
  std::string policy_text = "ivanov";
  std::string convention_text = "aggregate";
  std::string model_text = "default";
  bool invariant = false;
  bool hodge = false;
};

int run_char_table(const Options& opt) {
  CharacterTable table(opt.s);
  Json j;
  j["subcommand"] = "char-table";
  j["s"] = opt.s;
  Json labels = Json::array();
  Json sizes = Json::array();
  for (const auto& mu : table.labels()) {
    labels.push_back(partition_to_json(mu));
    sizes.push_back(int_to_json(class_data(mu).class_size));
  }
  j["labels"] = labels;
  j["classes"] = labels;
  j["class_sizes"] = std::move(sizes);
  Json rows = Json::array();
  for (std::size_t r = 0; r < table.labels().size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < table.labels().size(); ++c)
      row.push_back(int_to_json(table.value(static_cast<int>(r), static_cast<int>(c))));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return emit(j, opt.format, 0);
}

int run_a_series(const Options& opt) {
  auto variant = parse_variant(opt.variant_text);
  if (!variant) throw CLI::ValidationError("--variant", "unknown variant: " + opt.variant_text);
  Json j;
  j["subcommand"] = "a-series";
  j["s"] = opt.s;
  j["variant"] = variant_name(*variant);
  LaurentWindow series;
  if (!opt.trace_text.empty()) {
    NumericalPartition mu = parse_partition(opt.trace_text, "--trace");
    j["mode"] = "trace";
    j["trace_class"] = partition_to_json(mu);
    series = graded_trace(mu, *variant, opt.s, opt.max_degree);
  } else if (opt.invariant) {
    j["mode"] = "invariant";
    series = invariant_series(*variant, opt.s, opt.max_degree);
  } else {
    j["mode"] = "hilbert";
    series = variant_hilbert_series(*variant, opt.s, opt.max_degree);
  }
  j.update(series_fields(series, "a-series"));
  return emit(j, opt.format, 0);
}

int run_b_series(const Options& opt) {
  NumericalPartition lambda = parse_partition(opt.lambda_text, "--lambda");
  LaurentWindow series = b_lambda_series(lambda, opt.max_degree);
  Json j;
  j["subcommand"] = "b-series";
  j["lambda"] = partition_to_json(lambda);
  j.update(series_fields(series, "b-series"));
  if (opt.hodge) {
    Json hodge = Json::array();
    for (const auto& [deg, value] : series.nonzero_coefficients()) {
      (void)value;
      hodge.push_back(Json::array({deg, hodge_type(lambda, deg).first}));
    }
    j["hodge"] = std::move(hodge);
  }
  return emit(j, opt.format, 0);
}

int run_sp_dim(const Options& opt) {
  NumericalPartition lambda = parse_partition(opt.lambda_text, "--lambda");
  Json j;
  j["subcommand"] = "sp-dim";
  j["g"] = opt.g;
  j["lambda"] = partition_to_json(lambda);
  j["dimension"] = int_to_json(sp_irrep_dimension(opt.g, lambda));
  return emit(j, opt.format, 0);
}

int run_schur_weyl(const Options& opt) {
  SchurWeylReport report = schur_weyl_check(opt.g, opt.s);
  Json j;
  j["subcommand"] = "schur-weyl-check";
  j["g"] = report.g;
  j["s"] = report.s;
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r;
    r["lambda"] = partition_to_json(row.lambda);
    r["f_lambda"] = int_to_json(row.f_lambda);
    r["sp_dim"] = int_to_json(row.sp_dim);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["decomposition_total"] = int_to_json(report.decomposition_total);
  j["expected"] = int_to_json(report.expected);
  j["pass"] = report.pass;
  return emit(j, opt.format, report.pass ? 0 : 1);
}

int run_stable(const Options& opt, bool g_supplied) {
  StableModel model = load_model(opt.model_text, opt.max_degree);
  Json j;
  j["subcommand"] = "stable";
  NumericalPartition lambda;
  if (!opt.lambda_text.empty()) lambda = parse_partition(opt.lambda_text, "--lambda");
  j["lambda"] = partition_to_json(lambda);
  auto policy = parse_n_policy(opt.policy_text);
  if (!policy) throw CLI::ValidationError("--policy", "unknown policy: " + opt.policy_text);
  j["policy"] = n_policy_name(*policy);
  if (g_supplied) {
    j["g"] = opt.g;
    j["stable_cutoff"] = stable_cutoff_twisted(*policy, opt.g, lambda);
  } else {
    j["stable_cutoff"] = nullptr;
  }
  j["base_model"] = model.label();
  LaurentWindow series = lambda.size() > 0 ? twisted_series(lambda, model, opt.max_degree)
                                           : model.base.truncated(opt.max_degree);
  j.update(series_fields(series, "stable"));
  return emit(j, opt.format, 0);
}

int run_c_series(const Options& opt) {
  auto variant = parse_c_variant(opt.c_variant_text);
  if (!variant) throw CLI::ValidationError("--variant", "unknown variant: " + opt.c_variant_text);
  Json j;
  j["subcommand"] = "c-series";
  j["variant"] = c_variant_name(*variant);
  if (opt.weight_cap >= 0) {
    j["weight_cap"] = opt.weight_cap;
    BigradedSeries big = c_series_bigraded(*variant, opt.max_degree, opt.weight_cap);
    j.update(series_fields(big.weight_at_most(opt.weight_cap), "c-series"));
    Json triples = Json::array();
    for (const auto& [deg, weight, value] : big.nonzero())
      triples.push_back(Json::array({deg, weight, int_to_json(require_integral(value, "c-series"))}));
    j["bigraded_coefficients"] = std::move(triples);
  } else {
    j.update(series_fields(c_series(*variant, opt.max_degree), "c-series"));
  }
  return emit(j, opt.format, 0);
}

int run_abel_jacobi(const Options& opt) {
  auto convention = parse_aj_convention(opt.convention_text);
  if (!convention)
    throw CLI::ValidationError("--convention", "unknown convention: " + opt.convention_text);
  StableModel model = load_model(opt.model_text, opt.max_degree);
  AjReport report = abel_jacobi_check(opt.max_s, model, opt.max_degree, *convention);
  Json j;
  j["subcommand"] = "abel-jacobi-check";
  j["convention"] = aj_convention_name(report.convention);
  j["max_s"] = report.s_max;
  j["max_degree"] = report.max_deg;
  j["base_model"] = model.label();
  j["verified_max_degree"] = report.verified_max_degree;
  j["pass"] = report.pass;
  j["first_mismatch"] = report.first_mismatch ? Json(*report.first_mismatch) : Json(nullptr);
  Json per_s = Json::array();
  for (const auto& row : report.per_s) {
    Json r;
    r["s"] = row.s;
    r["pass"] = row.pass;
    r["first_mismatch"] = row.first_mismatch ? Json(*row.first_mismatch) : Json(nullptr);
    per_s.push_back(std::move(r));
  }
  j["per_s"] = std::move(per_s);
  j["diagnosis"] = report.diagnosis.empty() ? Json(nullptr) : Json(report.diagnosis);
  return emit(j, opt.format, report.pass ? 0 : 1);
}

int run_macdonald(const Options& opt) {
  BettiTable table = sym_product_betti(opt.g, opt.s);
  Json j;
  j["subcommand"] = "macdonald";
  j["g"] = table.g;
  j["s"] = table.s;
  Json betti = Json::array();
  for (const auto& b : table.betti) betti.push_back(int_to_json(b));
  j["betti"] = std::move(betti);
  return emit(j, opt.format, 0);
}

int run_oracle_check(const Options& opt) {
  CrossValidateReport report = cross_validate(opt.s, -opt.s, opt.max_degree);
  Json j;
  j["subcommand"] = "oracle-check";
  j["s"] = report.s;
  j["min_degree"] = report.min_degree;
  j["max_degree"] = report.max_degree;
  j["pieces_checked"] = report.pieces_checked;
  j["pass"] = report.pass;
  j["first_failure"] = report.pass ? Json(nullptr) : Json(report.first_failure);
  return emit(j, opt.format, report.pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stable-cohomology series calculator for surface mapping class groups"};
  app.require_subcommand(1);

  Options opt;
  auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  CLI::App* char_table = app.add_subcommand("char-table", "Symmetric group character table");
  char_table->add_option("--s", opt.s, "Symmetric group degree")->required()->check(CLI::Range(1, 16));
  add_format(char_table);

  CLI::App* a_series = app.add_subcommand("a-series", "Diagonal algebra Hilbert/invariant/trace series");
  a_series->add_option("--s", opt.s, "Number of points")->required()->check(CLI::Range(1, kGroundSizeCap));
  a_series->add_option("--variant", opt.variant_text, "atilde|a|aprime|adoubleprime")->capture_default_str();
  a_series->add_option("--max-degree", opt.max_degree, "Top degree of the window")->check(CLI::Range(0, 512));
  a_series->add_flag("--invariant", opt.invariant, "Emit the symmetric-invariant series");
  a_series->add_option("--trace", opt.trace_text, "Cycle type: graded trace of that class");
  add_format(a_series);

  CLI::App* b_series = app.add_subcommand("b-series", "Twisted-coefficient module Hilbert series");
  b_series->add_option("--lambda", opt.lambda_text, "Partition, e.g. 2,1,1")->required();
  b_series->add_option("--max-degree", opt.max_degree, "Top degree of the window")->check(CLI::Range(0, 512));
  b_series->add_flag("--hodge", opt.hodge, "Attach the Hodge type of each nonzero degree");
  add_format(b_series);

  CLI::App* sp_dim = app.add_subcommand("sp-dim", "Symplectic irreducible dimension");
  sp_dim->add_option("--g", opt.g, "Genus")->required()->check(CLI::Range(1, 64));
  sp_dim->add_option("--lambda", opt.lambda_text, "Highest weight partition")->required();
  add_format(sp_dim);

  CLI::App* schur_weyl = app.add_subcommand("schur-weyl-check", "Multiplicity-one dimension identity");
  schur_weyl->add_option("--g", opt.g, "Genus")->required()->check(CLI::Range(1, 64));
  schur_weyl->add_option("--s", opt.s, "Tensor slots")->required()->check(CLI::Range(1, 16));
  add_format(schur_weyl);

  CLI::App* stable = app.add_subcommand("stable", "Stable twisted cohomology series");
  stable->add_option("--lambda", opt.lambda_text, "Coefficient partition (omit for the base series)");
  CLI::Option* stable_g = stable->add_option("--g", opt.g, "Genus for the stability cutoff")->check(CLI::Range(2, 1 << 20));
  stable->add_option("--policy", opt.policy_text, "ivanov|harer85|harer93-upper")->capture_default_str();
  stable->add_option("--model", opt.model_text, "default|unit|FILE (base series)")->capture_default_str();
  stable->add_option("--max-degree", opt.max_degree, "Top degree of the window")->check(CLI::Range(0, 512));
  add_format(stable);

  CLI::App* c_series_cmd = app.add_subcommand("c-series", "Stable decorated invariant algebra series");
  c_series_cmd->add_option("--variant", opt.c_variant_text, "c|cprime")->capture_default_str();
  c_series_cmd->add_option("--max-degree", opt.max_degree, "Top degree of the window")->check(CLI::Range(0, 256));
  c_series_cmd->add_option("--weight-cap", opt.weight_cap, "Restrict to point-weight <= cap and emit the bigraded table");
  add_format(c_series_cmd);

  CLI::App* abel_jacobi = app.add_subcommand("abel-jacobi-check", "Exterior-power series identity");
  abel_jacobi->add_option("--max-s", opt.max_s, "Largest exterior power")->check(CLI::Range(0, kGroundSizeCap - 1));
  abel_jacobi->add_option("--max-degree", opt.max_degree, "Top degree of the window")->check(CLI::Range(0, 256));
  abel_jacobi->add_option("--convention", opt.convention_text, "aggregate|weight-matched")->capture_default_str();
  abel_jacobi->add_option("--model", opt.model_text, "default|unit|FILE (base series)")->capture_default_str();
  add_format(abel_jacobi);

  CLI::App* macdonald = app.add_subcommand("macdonald", "Betti numbers of the symmetric product");
  macdonald->add_option("--g", opt.g, "Genus")->required()->check(CLI::Range(1, 4));
  macdonald->add_option("--s", opt.s, "Symmetric power")->required()->check(CLI::Range(1, 6));
  add_format(macdonald);

  CLI::App* oracle = app.add_subcommand("oracle-check", "Explicit-construction cross validation");
  oracle->add_option("--s", opt.s, "Number of points")->required()->check(CLI::Range(1, kOracleGroundCap));
  oracle->add_option("--max-degree", opt.max_degree, "Top cohomological degree")->check(CLI::Range(-kOracleGroundCap, 64));
  add_format(oracle);

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
    if (char_table->parsed()) return run_char_table(opt);
    if (a_series->parsed()) return run_a_series(opt);
    if (b_series->parsed()) return run_b_series(opt);
    if (sp_dim->parsed()) return run_sp_dim(opt);
    if (schur_weyl->parsed()) return run_schur_weyl(opt);
    if (stable->parsed()) return run_stable(opt, stable_g->count() > 0);
    if (c_series_cmd->parsed()) return run_c_series(opt);
    if (abel_jacobi->parsed()) return run_abel_jacobi(opt);
    if (macdonald->parsed()) return run_macdonald(opt);
    if (oracle->parsed()) return run_oracle_check(opt);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
