// Batch front end: JSON in, JSON out, one subcommand per invocation.
//
// Exit codes: 0 success, 1 invalid input, 2 inconclusive (retry budget
// exhausted; rerun with a fresh --seed), 3 internal failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hstrata/harness.hpp"
#include "hstrata/json_io.hpp"

namespace {

using hstrata::Error;
using hstrata::Json;

struct CommonOpts {
  std::string field = "Q";
  uint64_t seed = 0;
  std::string input;
  std::string output = "-";
  int max_retries = 32;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input) {
  cmd->add_option("--field", opts.field, "Coefficient field: Q or Fp:<p>");
  cmd->add_option("--seed", opts.seed, "Seed for randomized steps");
  auto* in = cmd->add_option("--input", opts.input, "Input path, '-' for stdin, or inline JSON");
  if (needs_input) in->required();
  cmd->add_option("--output", opts.output, "Output path, '-' for stdout");
  cmd->add_option("--max-retries", opts.max_retries, "Sample-point draw budget");
}

std::string read_input(const std::string& spec) {
  if (spec == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) return spec;
  std::ifstream in(spec, std::ios::binary);
  if (!in) throw Error(Error::Code::InvalidInput, "cannot open input: " + spec);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& spec, const Json& doc) {
  const std::string text = doc.dump() + "\n";
  if (spec == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  const std::string tmp = spec + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Error::Code::InvalidInput, "cannot open output: " + spec);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
  }
  if (std::rename(tmp.c_str(), spec.c_str()) != 0)
    throw Error(Error::Code::InvalidInput, "cannot move output into place: " + spec);
}

hstrata::FieldSpec parse_field(const std::string& text) { return hstrata::FieldSpec::parse(text); }

hstrata::SplitConfig split_config(const CommonOpts& opts) {
  hstrata::SplitConfig cfg;
  cfg.seed = opts.seed;
  cfg.max_retries = opts.max_retries;
  return cfg;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Error::Code::Inconclusive: return 2;
    case Error::Code::Internal: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hitchin-base and torus-cover calculator"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string suite_name;

  auto* cmd_charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a Higgs field");
  add_common(cmd_charpoly, opts, true);
  auto* cmd_split = app.add_subcommand("split", "Total splitting into linear factors");
  add_common(cmd_split, opts, true);
  auto* cmd_profile = app.add_subcommand("profile", "Linear part and residual degree");
  add_common(cmd_profile, opts, true);
  auto* cmd_product = app.add_subcommand("product", "Product of Hitchin-base points");
  add_common(cmd_product, opts, true);
  auto* cmd_invariant = app.add_subcommand("invariant", "Group invariance check");
  add_common(cmd_invariant, opts, true);
  auto* cmd_orbits = app.add_subcommand("orbits", "Orbit factorization of a split point");
  add_common(cmd_orbits, opts, true);
  auto* cmd_descend = app.add_subcommand("descend", "Spectral datum of a transitive orbit");
  add_common(cmd_descend, opts, true);
  auto* cmd_image_check = app.add_subcommand("image-check", "Hitchin-image membership");
  add_common(cmd_image_check, opts, true);
  auto* cmd_image_sample = app.add_subcommand("image-sample", "Seeded sample from the image");
  add_common(cmd_image_sample, opts, true);
  auto* cmd_torus_fix = app.add_subcommand("torus-fix", "Fixed-locus table of a torus action");
  add_common(cmd_torus_fix, opts, true);
  auto* cmd_connecting = app.add_subcommand("connecting", "Connecting-group series");
  add_common(cmd_connecting, opts, true);
  auto* cmd_classify = app.add_subcommand("classify", "Cover classification");
  add_common(cmd_classify, opts, true);
  auto* cmd_suite = app.add_subcommand("suite", "Run a registered property suite");
  cmd_suite->add_option("name", suite_name, "Suite name")->required();
  add_common(cmd_suite, opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    const hstrata::FieldSpec field = parse_field(opts.field);
    Json out;

    if (cmd_charpoly->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const hstrata::HiggsField theta = hstrata::higgs_from_json(in, field);
      out = hstrata::hitchin_to_json(hstrata::char_poly(theta));
    } else if (cmd_split->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const hstrata::HitchinPoint s = hstrata::hitchin_from_json(in, field);
      const hstrata::SplitResult res = hstrata::total_split(s, split_config(opts));
      out = hstrata::split_result_to_json(res);
      if (res.verdict == hstrata::SplitVerdict::Inconclusive) {
        write_output(opts.output, out);
        return 2;
      }
    } else if (cmd_profile->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const hstrata::HitchinPoint s = hstrata::hitchin_from_json(in, field);
      out = hstrata::split_profile_to_json(hstrata::split_profile(s, split_config(opts)));
    } else if (cmd_product->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      if (!in.contains("a") || !in.contains("b"))
        throw Error(Error::Code::InvalidInput, "bad input: product needs keys \"a\" and \"b\"");
      const bool proj = in.at("a").contains("s0") || in.at("b").contains("s0");
      if (proj) {
        const auto a = hstrata::proj_from_json(in.at("a"), field);
        const auto b = hstrata::proj_from_json(in.at("b"), field);
        out = hstrata::proj_to_json(hstrata::proj_product(a, b));
      } else {
        const auto a = hstrata::hitchin_from_json(in.at("a"), field);
        const auto b = hstrata::hitchin_from_json(in.at("b"), field);
        out = hstrata::hitchin_to_json(hstrata::hb_product(a, b));
      }
    } else if (cmd_invariant->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const auto G = hstrata::group_from_json(hstrata::Json(in.at("group")), field);
      const auto s = hstrata::hitchin_from_json(in.at("point"), field);
      out["invariant"] = hstrata::is_invariant(s, G);
    } else if (cmd_orbits->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const auto G = hstrata::group_from_json(Json(in.at("group")), field);
      const auto s = hstrata::hitchin_from_json(in.at("point"), field);
      out = hstrata::orbits_to_json(hstrata::orbit_factorization(s, G, split_config(opts)));
    } else if (cmd_descend->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const auto G = hstrata::group_from_json(Json(in.at("group")), field);
      const auto s = hstrata::hitchin_from_json(in.at("point"), field);
      out = hstrata::spectral_datum_to_json(hstrata::descend(s, G, split_config(opts)));
    } else if (cmd_image_check->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const auto G = hstrata::group_from_json(Json(in.at("group")), field);
      const auto s = hstrata::hitchin_from_json(in.at("point"), field);
      out["image"] = hstrata::image_check(s, G, split_config(opts));
    } else if (cmd_image_sample->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const auto G = hstrata::group_from_json(Json(in.at("group")), field);
      if (!in.contains("r") || !in.at("r").is_number_integer())
        throw Error(Error::Code::InvalidInput, "bad input: image-sample needs integer \"r\"");
      const int r = in.at("r").get<int>();
      const auto s = hstrata::image_sample(G, r, opts.seed);
      out["group"] = hstrata::group_to_json(G);
      out["point"] = hstrata::hitchin_to_json(s);
    } else if (cmd_torus_fix->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const auto action = hstrata::torus_action_from_json(in);
      Json table = Json::array();
      for (int i = 0; i < action.size(); ++i) {
        Json row = hstrata::fixed_locus_to_json(
            hstrata::fixed_locus(action.element(i), action.convention()));
        row["element"] = i;
        table.push_back(std::move(row));
      }
      out["table"] = std::move(table);
    } else if (cmd_connecting->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const auto action = hstrata::torus_action_from_json(in);
      out = hstrata::connecting_series_to_json(hstrata::connecting_series(action));
    } else if (cmd_classify->parsed()) {
      const Json in = hstrata::parse_json(read_input(opts.input));
      const auto action = hstrata::torus_action_from_json(in);
      out = hstrata::classification_to_json(
          hstrata::classify_cover(action, field.characteristic()));
    } else if (cmd_suite->parsed()) {
      hstrata::GenConfig cfg;
      cfg.seed = opts.seed;
      cfg.field = field;
      const hstrata::SuiteReport rep = hstrata::run_suite(suite_name, cfg);
      out["suite"] = rep.suite;
      out["cases"] = rep.cases;
      Json failures = Json::array();
      for (const auto& f : rep.failures) {
        Json fj;
        fj["case"] = f.case_index;
        fj["seed"] = f.seed;
        fj["detail"] = f.detail;
        failures.push_back(std::move(fj));
      }
      out["failures"] = std::move(failures);
      out["millis"] = rep.millis;
    }

    write_output(opts.output, out);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: bad input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
