#include "relweyl/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "relweyl/characters.hpp"
#include "relweyl/coinvariants.hpp"
#include "relweyl/error.hpp"
#include "relweyl/theorems.hpp"

namespace relweyl {

namespace {

using nlohmann::ordered_json;

struct JSpec {
  bool all = false;
  std::vector<int> subset;  // 0-based
};

// "1,3" (1-based), "" or "none" for the empty set, "all" for every subset.
JSpec parse_J(const std::string& spec, bool allow_all) {
  JSpec out;
  if (spec == "all") {
    if (!allow_all) throw UsageError("--J all is only meaningful for verify");
    out.all = true;
    return out;
  }
  if (spec.empty() || spec == "none") return out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("--J: cannot parse index '" + item + "'");
    }
    if (pos != item.size() || v < 1)
      throw UsageError("--J: indices are 1-based positive integers, got '" + item + "'");
    out.subset.push_back(v - 1);
  }
  std::sort(out.subset.begin(), out.subset.end());
  out.subset.erase(std::unique(out.subset.begin(), out.subset.end()), out.subset.end());
  return out;
}

std::vector<std::int64_t> parse_primes(const std::string& spec) {
  std::vector<std::int64_t> out;
  if (spec.empty()) return out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("--primes: cannot parse '" + item + "'");
    }
    if (pos != item.size() || v < 2) throw UsageError("--primes: expected integers >= 2");
    out.push_back(v);
  }
  return out;
}

Int env_max_order() {
  if (const char* env = std::getenv("RELWEYL_MAX_ORDER")) {
    const std::string s(env);
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(s, &pos);
      if (pos == s.size()) return Int(v);
    } catch (const std::exception&) {
    }
    throw UsageError("RELWEYL_MAX_ORDER is not a nonnegative integer: " + s);
  }
  return Int(kDefaultMaxOrder);
}

ordered_json roots_json(const RootSystem& rs) {
  ordered_json j;
  j["type"] = rs.type().to_string();
  j["rank"] = rs.rank();
  j["num_positive"] = rs.num_positive();
  j["weyl_order"] = rs.weyl_order().str();
  j["cartan_matrix"] = rs.cartan_matrix();
  j["symmetrizer"] = rs.symmetrizer();
  ordered_json pos = ordered_json::array();
  for (const Root& r : rs.positive_roots()) {
    ordered_json e;
    e["coords"] = r;
    e["height"] = height(r);
    pos.push_back(std::move(e));
  }
  j["positive_roots"] = pos;
  return j;
}

ordered_json weyl_json(const RootSystem& rs, const WeylGroup& W) {
  ordered_json j;
  j["type"] = rs.type().to_string();
  j["order"] = W.order();
  j["longest_length"] = W.elements().back().length;
  ordered_json hist = ordered_json::array();
  for (const Int& c : W.length_histogram()) hist.push_back(c.str());
  j["length_histogram"] = hist;
  j["degrees"] = fundamental_degrees(rs, W.length_histogram());
  return j;
}

ordered_json relative_json(const RootSystem& rs, const WeylGroup& W, const RelativeWeylGroup& rwg) {
  ordered_json j;
  j["type"] = rs.type().to_string();
  ordered_json jj = ordered_json::array();
  for (int x : rwg.J()) jj.push_back(x + 1);
  j["J"] = jj;
  j["parabolic_order"] = rwg.parabolic_order().str();
  j["normalizer_order"] = rwg.normalizer_order().str();
  j["relative_order"] = rwg.order();
  ordered_json gens = ordered_json::array();
  for (std::size_t g : rwg.generator_indices()) {
    const auto& w = rwg.elements()[g];
    std::string txt;
    for (std::size_t i = 0; i < w.word.size(); ++i) {
      if (i) txt += " ";
      txt += std::to_string(static_cast<int>(w.word[i]) + 1);
    }
    gens.push_back(txt.empty() ? "e" : txt);
  }
  j["generators"] = gens;
  ordered_json classes = ordered_json::array();
  for (const auto& cls : rwg.conjugacy_classes()) {
    const auto& rep = rwg.elements()[cls[0]];
    ordered_json c;
    std::string txt;
    for (std::size_t i = 0; i < rep.word.size(); ++i) {
      if (i) txt += " ";
      txt += std::to_string(static_cast<int>(rep.word[i]) + 1);
    }
    c["representative"] = txt.empty() ? "e" : txt;
    c["size"] = cls.size();
    c["length_in_W"] = rep.length;
    c["word_length"] = rwg.word_length(cls[0]);
    classes.push_back(std::move(c));
  }
  j["conjugacy_classes"] = classes;

  const SemidirectReport sd = verify_semidirect(rs, W, rwg);
  ordered_json sj;
  sj["intersection_trivial"] = sd.intersection_trivial;
  sj["product_covers"] = sd.product_covers;
  sj["parabolic_normal"] = sd.parabolic_normal;
  if (!sd.witness.empty()) sj["witness"] = sd.witness;
  j["semidirect"] = sj;

  const ReflectionReport refl = reflection_classification(rwg);
  ordered_json rj;
  rj["fixed_space_dim"] = refl.fixed_space_dim;
  rj["codims"] = refl.codims;
  rj["reflections_generate"] = refl.reflections_generate;
  rj["note"] = refl.label;
  j["reflection_classification"] = rj;
  return j;
}

ordered_json epsilon_json(const RelativeWeylGroup& rwg, const EpsilonCharacter& eps) {
  ordered_json j;
  j["type"] = rwg.root_system().type().to_string();
  ordered_json jj = ordered_json::array();
  for (int x : rwg.J()) jj.push_back(x + 1);
  j["J"] = jj;
  j["top_exponent"] = eps.top_exponent();
  j["relative_order"] = rwg.order();
  ordered_json classes = ordered_json::array();
  for (std::size_t c = 0; c < rwg.conjugacy_classes().size(); ++c) {
    const auto& cls = rwg.conjugacy_classes()[c];
    const auto& rep = rwg.elements()[cls[0]];
    ordered_json e;
    std::string txt;
    for (std::size_t i = 0; i < rep.word.size(); ++i) {
      if (i) txt += " ";
      txt += std::to_string(static_cast<int>(rep.word[i]) + 1);
    }
    e["representative"] = txt.empty() ? "e" : txt;
    e["size"] = cls.size();
    e["epsilon"] = rat_to_string(eps.value_of_class(c));
    classes.push_back(std::move(e));
  }
  j["classes"] = classes;
  return j;
}

std::string key_value_tsv(const ordered_json& j) {
  std::string out = "key\tvalue\n";
  for (const auto& [k, v] : j.items())
    out += k + "\t" + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

std::string pretty_block(const ordered_json& j) {
  return j.dump(2) + "\n";
}

int write_output(const std::string& text, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    err << "error: cannot open output file " << out_path << "\n";
    return 4;
  }
  f << text;
  if (!f.good()) {
    err << "error: failed writing output file " << out_path << "\n";
    return 4;
  }
  return 0;
}

struct Options {
  std::string type;
  std::string J = "";
  std::string primes = "2,3,5,7";
  std::string claims;
  std::string output = "pretty";
  std::string out_path;
  unsigned threads = 0;
  std::uint64_t max_order_flag = 0;  // 0 = use env/default

  Int max_order() const { return max_order_flag ? Int(max_order_flag) : env_max_order(); }
};

int cmd_roots(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSystem rs(CartanType::parse(o.type));
  const ordered_json j = roots_json(rs);
  std::string text;
  if (o.output == "json") {
    text = j.dump(2) + "\n";
  } else if (o.output == "tsv") {
    text = "index\theight\tcoords\n";
    for (std::size_t i = 0; i < rs.num_positive(); ++i) {
      const Root& r = rs.positive_roots()[i];
      std::string coords;
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (k) coords += ",";
        coords += std::to_string(r[k]);
      }
      text += std::to_string(i) + "\t" + std::to_string(height(r)) + "\t" + coords + "\n";
    }
  } else {
    text = pretty_block(j);
  }
  return write_output(text, o.out_path, out, err);
}

int cmd_weyl(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSystem rs(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.max_order());
  const ordered_json j = weyl_json(rs, W);
  const std::string text = o.output == "tsv" ? key_value_tsv(j)
                           : o.output == "json" ? j.dump(2) + "\n"
                                                : pretty_block(j);
  return write_output(text, o.out_path, out, err);
}

int cmd_relative(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSystem rs(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.max_order());
  const JSpec spec = parse_J(o.J, false);
  const RelativeWeylGroup rwg = RelativeWeylGroup::build(rs, W, spec.subset);
  const ordered_json j = relative_json(rs, W, rwg);
  const std::string text = o.output == "tsv" ? key_value_tsv(j)
                           : o.output == "json" ? j.dump(2) + "\n"
                                                : pretty_block(j);
  return write_output(text, o.out_path, out, err);
}

int cmd_characters(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSystem rs(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.max_order());
  const JSpec spec = parse_J(o.J, false);
  const ParabolicSubgroup WL = parabolic_subgroup(rs, spec.subset);
  const RelativeWeylGroup rwg = RelativeWeylGroup::build(rs, W, spec.subset);
  const MolienEngine eng(rs, W);
  const EpsilonCharacter eps = EpsilonCharacter::build(eng, WL, rwg);
  const GradedCharacter gc = GradedCharacter::build(eng, WL, rwg);
  const std::string text =
      o.output == "json" ? characters_to_json(gc, eps) : characters_to_tsv(gc, eps);
  return write_output(text, o.out_path, out, err);
}

int cmd_epsilon(const Options& o, std::ostream& out, std::ostream& err) {
  const RootSystem rs(CartanType::parse(o.type));
  const WeylGroup W = WeylGroup::enumerate(rs, o.max_order());
  const JSpec spec = parse_J(o.J, false);
  const ParabolicSubgroup WL = parabolic_subgroup(rs, spec.subset);
  const RelativeWeylGroup rwg = RelativeWeylGroup::build(rs, W, spec.subset);
  const MolienEngine eng(rs, W);
  const EpsilonCharacter eps = EpsilonCharacter::build(eng, WL, rwg);
  const ordered_json j = epsilon_json(rwg, eps);
  std::string text;
  if (o.output == "tsv") {
    text = "representative\tsize\tepsilon\n";
    for (const auto& c : j["classes"])
      text += c["representative"].get<std::string>() + "\t" + c["size"].dump() + "\t" +
              c["epsilon"].get<std::string>() + "\n";
  } else if (o.output == "json") {
    text = j.dump(2) + "\n";
  } else {
    text = pretty_block(j);
  }
  return write_output(text, o.out_path, out, err);
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  cfg.max_order = o.max_order();
  cfg.threads = o.threads;
  cfg.primes = parse_primes(o.primes);
  if (!o.type.empty()) cfg.types = {CartanType::parse(o.type).to_string()};
  const JSpec spec = parse_J(o.J.empty() ? "all" : o.J, true);
  if (!spec.all) cfg.subsets = std::vector<std::vector<int>>{spec.subset};
  if (!o.claims.empty()) {
    std::stringstream ss(o.claims);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.claims.push_back(item);
  }
  const auto reports = run_suite(cfg);
  std::string text;
  if (o.output == "json") {
    text = reports_to_jsonl(reports);
  } else if (o.output == "tsv") {
    text = reports_to_tsv(reports);
  } else {
    text = reports_to_pretty(reports);
  }
  const int io = write_output(text, o.out_path, out, err);
  if (io != 0) return io;
  return all_pass(reports) ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"relweyl: exact root systems, relative Weyl groups and the graded characters of "
               "H*(G/P), with a machine-checked verification suite"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool type_required, bool with_J) {
    auto* t = sub->add_option("--type", o.type, "Cartan type, e.g. A3, b2, G2");
    if (type_required) t->required();
    if (with_J)
      sub->add_option("--J", o.J,
                      "parabolic subset: 1-based comma-separated simple root indices, "
                      "'none' for the empty set" +
                          std::string(sub->get_name() == "verify" ? ", 'all' for every subset"
                                                                  : ""));
    sub->add_option("--output", o.output, "output format")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));
    sub->add_option("--out", o.out_path, "write output to a file instead of stdout");
    sub->add_option("--max-order", o.max_order_flag,
                    "enumeration bound override (default: RELWEYL_MAX_ORDER or 1000000)");
  };

  auto* roots = app.add_subcommand("roots", "positive roots, Cartan matrix, symmetrizer");
  add_common(roots, true, false);
  auto* weyl = app.add_subcommand("weyl", "Weyl group order, length histogram, degrees");
  add_common(weyl, true, false);
  auto* relative = app.add_subcommand("relative", "relative Weyl group W(L) and its structure");
  add_common(relative, true, true);
  auto* characters =
      app.add_subcommand("characters", "graded character table of W(L) on H*(G/P)");
  add_common(characters, true, true);
  auto* epsilon = app.add_subcommand("epsilon", "top-degree character eps_U on W(L)");
  add_common(epsilon, true, true);
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, false, true);
  verify->add_option("--primes", o.primes, "primes for the mod-p faithfulness checks");
  verify->add_option("--claims", o.claims, "comma-separated claim ids to run (default: all)");
  verify->add_option("--threads", o.threads, "1 = sequential, otherwise one worker per type");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (roots->parsed()) return cmd_roots(o, out, err);
    if (weyl->parsed()) return cmd_weyl(o, out, err);
    if (relative->parsed()) return cmd_relative(o, out, err);
    if (characters->parsed()) return cmd_characters(o, out, err);
    if (epsilon->parsed()) return cmd_epsilon(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
  } catch (const UnsupportedType& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace relweyl
