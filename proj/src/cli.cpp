#include "utimage/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "utimage/jsonio.hpp"

namespace utimage {

namespace {

struct CommonOpts {
  std::string poly_text;
  std::string poly_file;
  std::string field_spec = "q";
  std::size_t declared_degree = 0;
  bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_poly = true) {
  auto* poly = cmd->add_option("--poly", opts.poly_text, "polynomial expression");
  auto* file = cmd->add_option("--poly-file", opts.poly_file, "file holding the expression");
  if (needs_poly) {
    poly->excludes(file);
  }
  cmd->add_option("--field", opts.field_spec, "coefficient field: 'q' or 'gf:<p>'");
  cmd->add_option("--degree", opts.declared_degree,
                  "declared degree (required only for expressions that cancel to 0)");
  cmd->add_flag("--pretty", opts.pretty, "indent the JSON output");
}

MultilinearPoly load_poly(const CommonOpts& opts) {
  FieldDescriptor field = FieldDescriptor::parse(opts.field_spec);
  std::string text = opts.poly_text;
  if (!opts.poly_file.empty()) {
    std::ifstream in(opts.poly_file);
    if (!in) fail(Errc::ParseError, "cannot read polynomial file '" + opts.poly_file + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  if (text.empty()) fail(Errc::ParseError, "no polynomial given (use --poly or --poly-file)");
  return MultilinearPoly::parse(text, field, opts.declared_degree);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot read file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("bad JSON in '") + path + "': " + e.what());
  }
  return j;
}

void emit(std::ostream& out, const Json& j, bool pretty) {
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"images of multilinear polynomials on upper triangular matrices"};
  app.require_subcommand(1);

  CommonOpts classify_opts, witness_opts, span_opts, oracle_opts, decompose_opts, eval_opts;
  std::size_t classify_n = 0, witness_n = 0, span_n = 0, oracle_n = 0;
  std::string witness_target, eval_inputs;
  std::uint64_t span_budget = kDefaultScanBudget;
  std::uint64_t oracle_budget = kDefaultOracleBudget;
  std::uint64_t oracle_samples = 1000, oracle_seed = 0;
  std::string oracle_mode = "exhaustive";
  unsigned span_threads = 0, oracle_threads = 0;

  auto* classify_cmd = app.add_subcommand("classify", "decide the image of p on UT_n");
  add_common(classify_cmd, classify_opts);
  classify_cmd->add_option("--n", classify_n, "matrix dimension")->required();

  auto* witness_cmd = app.add_subcommand("witness", "construct inputs evaluating to a target");
  add_common(witness_cmd, witness_opts);
  witness_cmd->add_option("--n", witness_n, "matrix dimension")->required();
  witness_cmd->add_option("--target", witness_target, "path to the target matrix JSON")->required();

  auto* span_cmd = app.add_subcommand("span", "linear span of the image via unit tuples");
  add_common(span_cmd, span_opts);
  span_cmd->add_option("--n", span_n, "matrix dimension")->required();
  span_cmd->add_option("--budget", span_budget, "tuple enumeration budget");
  span_cmd->add_option("--threads", span_threads, "worker threads (0 = auto)");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force image over a prime field");
  add_common(oracle_cmd, oracle_opts);
  oracle_cmd->add_option("--n", oracle_n, "matrix dimension")->required();
  oracle_cmd->add_option("--mode", oracle_mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  oracle_cmd->add_option("--samples", oracle_samples, "evaluations in sample mode");
  oracle_cmd->add_option("--seed", oracle_seed, "sampling seed");
  oracle_cmd->add_option("--budget", oracle_budget, "tuple enumeration budget");
  oracle_cmd->add_option("--threads", oracle_threads, "worker threads (0 = auto)");

  auto* decompose_cmd = app.add_subcommand("decompose", "nine-coefficient form of a proper quartic");
  add_common(decompose_cmd, decompose_opts);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate p on matrices");
  add_common(eval_cmd, eval_opts);
  eval_cmd->add_option("--inputs", eval_inputs, "path to a JSON array of matrices")->required();

  bool pretty = false;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (classify_cmd->parsed()) {
      pretty = classify_opts.pretty;
      MultilinearPoly p = load_poly(classify_opts);
      ClassificationResult result = classify_image(p, classify_n);
      emit(out, classification_to_json(p, classify_n, result), pretty);
    } else if (witness_cmd->parsed()) {
      pretty = witness_opts.pretty;
      MultilinearPoly p = load_poly(witness_opts);
      UTMatrix target = matrix_from_json(load_json_file(witness_target), p.field());
      ClassificationResult result = classify_image(p, witness_n);
      WitnessTuple tuple = realize_target(p, witness_n, result, target);
      emit(out, witness_to_json(tuple), pretty);
    } else if (span_cmd->parsed()) {
      pretty = span_opts.pretty;
      MultilinearPoly p = load_poly(span_opts);
      emit(out, span_to_json(span_image(p, span_n, span_budget, span_threads)), pretty);
    } else if (oracle_cmd->parsed()) {
      pretty = oracle_opts.pretty;
      MultilinearPoly p = load_poly(oracle_opts);
      if (oracle_mode == "sample") {
        ContainmentReport report = sample_containment(p, oracle_n, oracle_samples, oracle_seed);
        Json j = containment_report_to_json(report);
        j["mode"] = "sample";
        j["equals_classification"] = "n/a";
        emit(out, j, pretty);
      } else if (p.degree() <= 3) {
        CompareReport report = compare_with_classification(p, oracle_n, oracle_budget, oracle_threads);
        Json j = compare_report_to_json(report, p.field(), oracle_n);
        j["mode"] = "exhaustive";
        emit(out, j, pretty);
      } else {
        // Degree 4 over a prime field cannot be classified; report the raw
        // image only.
        OracleImage image = exhaustive_image(p, oracle_n, oracle_budget, oracle_threads);
        Json j{{"mode", "exhaustive"},
               {"image_size", image.count},
               {"equals_classification", "n/a"},
               {"outside_classified_range", true}};
        emit(out, j, pretty);
      }
    } else if (decompose_cmd->parsed()) {
      pretty = decompose_opts.pretty;
      MultilinearPoly p = load_poly(decompose_opts);
      emit(out, decomposition_to_json(decompose_proper(p)), pretty);
    } else if (eval_cmd->parsed()) {
      pretty = eval_opts.pretty;
      MultilinearPoly p = load_poly(eval_opts);
      Json inputs_json = load_json_file(eval_inputs);
      if (!inputs_json.is_array()) fail(Errc::ParseError, "--inputs must hold a JSON array");
      std::vector<UTMatrix> inputs;
      for (const Json& j : inputs_json) inputs.push_back(matrix_from_json(j, p.field()));
      emit(out, Json{{"result", matrix_to_json(p.evaluate(inputs))}}, pretty);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help() << '\n';
      return 0;
    }
    emit(out, Json{{"error", "ParseError"}, {"detail", e.what()}}, pretty);
    return 2;
  } catch (const DomainError& e) {
    emit(out, Json{{"error", errc_name(e.code())}, {"detail", e.what()}}, pretty);
    return 2;
  } catch (const InternalError& e) {
    emit(out, Json{{"error", internal_errc_name(e.code())}, {"detail", e.what()}}, pretty);
    return 1;
  } catch (const std::exception& e) {
    emit(out, Json{{"error", "InternalError"}, {"detail", e.what()}}, pretty);
    return 1;
  }
}

}  // namespace utimage
