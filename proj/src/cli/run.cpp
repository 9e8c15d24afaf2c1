#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include "tropcm/cli.hpp"
#include "tropcm/fan.hpp"
#include "tropcm/generic.hpp"
#include "tropcm/groebner.hpp"
#include "tropcm/lab.hpp"
#include "tropcm/parse.hpp"
#include "tropcm/quasival.hpp"

namespace tropcm {

namespace {

struct RunConfig {
  std::string field;
  std::uint64_t seed = 42;
  std::int64_t bound = 100;
  std::int64_t maxdeg = 4;
  std::size_t samples = 50;
  std::size_t samples_per_cone = 3;
  unsigned powmax = 3;
  std::string cache_dir;
  unsigned jobs = 1;
  std::string output;

  nlohmann::json to_json() const {
    return {{"field", field.empty() ? nlohmann::json(nullptr) : nlohmann::json(field)},
            {"seed", seed},
            {"bound", bound},
            {"maxdeg", maxdeg},
            {"samples", samples},
            {"samples_per_cone", samples_per_cone},
            {"powmax", powmax},
            {"cache_dir", cache_dir.empty() ? nlohmann::json(nullptr) : nlohmann::json(cache_dir)},
            {"jobs", jobs}};
  }
};

void emit(const nlohmann::json& j, const RunConfig& cfg, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output);
  if (!file) throw std::runtime_error("cannot write '" + cfg.output + "'");
  file << text;
}

std::optional<Field> field_of(const RunConfig& cfg) {
  if (cfg.field.empty()) return std::nullopt;
  return Field::parse(cfg.field);
}

Ideal load(const std::string& path, const RunConfig& cfg) { return load_ideal_file(path, field_of(cfg)); }

WeightVector parse_weight(const std::string& text, const Ideal& ideal) {
  WeightVector w = WeightVector::parse(text);
  if (w.size() != ideal.num_vars()) {
    throw std::invalid_argument("weight vector has " + std::to_string(w.size()) + " entries, ring has " +
                                std::to_string(ideal.num_vars()) + " variables");
  }
  return w;
}

std::string render_report(const nlohmann::json& report) {
  std::ostringstream out;
  out << "run " << report.value("run_id", "?") << "  field " << report.value("field", "?") << "  seed "
      << report.value("seed", nlohmann::json(nullptr)).dump() << '\n';
  if (report.contains("instance")) {
    const auto& inst = report["instance"];
    out << "instance:";
    const auto gens = inst.value("generators", nlohmann::json::array());
    for (const auto& g : gens) out << "  " << g.get<std::string>();
    out << '\n';
  }
  std::map<std::string, std::size_t> tally;
  const auto claims = report.value("claims", nlohmann::json::array());
  for (const auto& c : claims) {
    const std::string verdict = c.value("verdict", "?");
    ++tally[verdict];
    out << "[" << verdict << "] " << c.value("claim", "?");
    const auto params = c.value("params", nlohmann::json::object());
    for (const auto& [k, v] : params.items()) out << ' ' << k << '=' << v.dump();
    if (c.contains("evidence") && c["evidence"].contains("witness")) out << "  witness " << c["evidence"]["witness"].dump();
    if (c.contains("evidence") && c["evidence"].contains("reason")) out << "  (" << c["evidence"]["reason"].get<std::string>() << ")";
    out << '\n';
  }
  out << "summary:";
  for (const auto& [verdict, count] : tally) out << ' ' << verdict << '=' << count;
  out << '\n';
  return out.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic tropical initial ideals and their verification", "tropcm"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--field", cfg.field, "Coefficient field: Q, Fp or Fp:<p> (overrides the file)");
  app.add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--bound", cfg.bound, "Entry bound for random coordinate changes")->capture_default_str();
  app.add_option("--maxdeg", cfg.maxdeg, "Degree bound for value tables")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Random elements per check")->capture_default_str();
  app.add_option("--samples-per-cone", cfg.samples_per_cone, "Interior samples per cone")->capture_default_str();
  app.add_option("--powmax", cfg.powmax, "Largest power tried by the radicality spot check")->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for persisted Groebner bases");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Output path");

  std::string file;
  std::string weight;
  std::string weight_u;
  std::string subset;
  std::string order_name = "grevlex";
  std::string claim = "all";
  std::size_t index = 0;
  std::size_t codim = 0;
  bool degree_kind = false;
  std::vector<std::string> elements;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis");
  gb->add_option("file", file, ".ideal file")->required();
  gb->add_option("--order", order_name, "grevlex, lex or weight (needs -w)")->capture_default_str();
  gb->add_option("-w,--weight", weight, "Weight vector, e.g. 1/2,0,3");

  auto* initial = app.add_subcommand("initial", "Initial ideal in_w(I)");
  initial->add_option("file", file, ".ideal file")->required();
  initial->add_option("-w,--weight", weight, "Weight vector")->required();

  auto* trop = app.add_subcommand("trop-member", "Is w in Trop(I)?");
  trop->add_option("file", file, ".ideal file")->required();
  trop->add_option("-w,--weight", weight, "Weight vector")->required();

  auto* generic = app.add_subcommand("generic", "Seeded generic change of coordinates with audit");
  generic->add_option("file", file, ".ideal file")->required();

  auto* fan = app.add_subcommand("fan", "Cones of one stratum of the generic fan");
  fan->add_option("file", file, ".ideal file")->required();
  fan->add_option("--codim", codim, "Stratum codimension")->capture_default_str();

  auto* quasival = app.add_subcommand("quasival", "Value table of a quasivaluation");
  quasival->add_option("file", file, ".ideal file")->required();
  quasival->add_option("-w,--weight", weight, "Weight quasivaluation v_w");
  quasival->add_option("--A", subset, "Adic order ord_A, e.g. 1,3");
  quasival->add_flag("--degree", degree_kind, "Degree quasivaluation");
  quasival->add_option("--element", elements, "Element to evaluate (repeatable); default: standard monomials");

  auto* verify = app.add_subcommand("verify", "Run theorem checks on one instance");
  verify->add_option("file", file, ".ideal file")->required();
  verify->add_option("--claim", claim, "all or a claim key")->capture_default_str();
  verify->add_option("--A", subset, "Subset A, 1-based, comma-separated");
  verify->add_option("-w,--weight", weight, "Weight vector w");
  verify->add_option("-u", weight_u, "Second weight vector u (prop-oplus)");
  verify->add_option("--i", index, "Element i of A (lem-iterated), 1-based");

  auto* audit = app.add_subcommand("audit-cm", "Fan-coincidence audit on the maximal cones");
  audit->add_option("file", file, ".ideal file")->required();

  auto* prime = app.add_subcommand("prime-check", "Primeness certificate");
  prime->add_option("file", file, ".ideal file")->required();

  auto* report = app.add_subcommand("report", "Render a JSON run report as text");
  report->add_option("file", file, "Report JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (!cfg.cache_dir.empty()) GbCache::instance().set_directory(cfg.cache_dir);
    if (cfg.jobs == 0) cfg.jobs = 1;

    if (*report) {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open report '" + file + "'");
      const auto j = nlohmann::json::parse(in);
      out << render_report(j);
      bool any_fail = false;
      const auto claims = j.value("claims", nlohmann::json::array());
      for (const auto& c : claims) any_fail = any_fail || c.value("verdict", "") == "fail";
      return any_fail ? 1 : 0;
    }

    const Ideal ideal = load(file, cfg);

    if (*gb) {
      MonomialOrder order = MonomialOrder::grevlex();
      if (order_name == "lex") {
        order = MonomialOrder::lex();
      } else if (order_name == "weight") {
        if (weight.empty()) throw std::invalid_argument("--order weight needs -w");
        order = MonomialOrder::weighted(parse_weight(weight, ideal));
      } else if (order_name != "grevlex") {
        throw std::invalid_argument("unknown order '" + order_name + "'");
      }
      emit(buchberger_reduced(ideal, order).to_json(), cfg, out);
      return 0;
    }
    if (*initial) {
      const WeightVector w = parse_weight(weight, ideal);
      auto j = canonical_basis(initial_ideal(w, ideal)).to_json();
      j["w"] = w.to_string();
      emit(j, cfg, out);
      return 0;
    }
    if (*trop) {
      const WeightVector w = parse_weight(weight, ideal);
      const auto mono = contains_monomial(initial_ideal(w, ideal));
      nlohmann::json j = {{"w", w.to_string()}, {"member", !mono.has_value()}};
      j["witness"] = mono ? nlohmann::json(mono->to_string(*ideal.ring())) : nlohmann::json(nullptr);
      emit(j, cfg, out);
      return 0;
    }
    if (*generic) {
      const auto inst = make_generic(ideal, cfg.seed, cfg.bound, 0, cfg.jobs);
      nlohmann::json j = {{"change", inst.change.to_json()}, {"audit", inst.audit.to_json()}, {"reseeds", inst.reseeds}};
      if (!cfg.output.empty()) {
        save_ideal_file(cfg.output, inst.ideal,
                        {"generic coordinates: seed " + std::to_string(inst.change.seed()) + ", bound " +
                         std::to_string(cfg.bound) + ", reseeds " + std::to_string(inst.reseeds)});
        j["output"] = cfg.output;
      } else {
        j["ideal"] = format_ideal(inst.ideal);
      }
      out << j.dump(2) << '\n';
      return 0;
    }
    if (*fan) {
      const auto d = krull_dimension(ideal);
      FanReport rep = fan_report(ideal, static_cast<std::size_t>(d), codim, cfg.seed, cfg.jobs);
      for (auto& c : rep.cones) c.prime_verdict = to_string(primeness_check(initial_ideal(c.sample_w, ideal)).verdict);
      emit(rep.to_json(), cfg, out);
      return 0;
    }
    if (*quasival) {
      const AlgebraPtr algebra = make_algebra(ideal);
      const int kinds = (weight.empty() ? 0 : 1) + (subset.empty() ? 0 : 1) + (degree_kind ? 1 : 0);
      if (kinds != 1) throw std::invalid_argument("give exactly one of -w, --A, --degree");
      std::optional<Quasivaluation> v;
      MonomialOrder order = MonomialOrder::grevlex();
      if (!weight.empty()) {
        const WeightVector w = parse_weight(weight, ideal);
        v = Quasivaluation::weight(algebra, w);
        order = MonomialOrder::weighted(w);
      } else if (!subset.empty()) {
        v = Quasivaluation::adic(algebra, IndexSet::parse(subset, ideal.num_vars()));
      } else {
        v = Quasivaluation::degree(algebra);
      }
      std::vector<Polynomial> polys;
      for (std::size_t k = 0; k < elements.size(); ++k) polys.push_back(parse_polynomial(elements[k], ideal.ring(), k + 1));
      if (polys.empty()) {
        for (std::int64_t deg = 0; deg <= cfg.maxdeg; ++deg) {
          for (const auto& m : standard_basis_slice(*algebra, order, deg)) {
            polys.push_back(Polynomial::monomial(ideal.ring(), m, ideal.ring()->field().one()));
          }
        }
      }
      emit(value_table(*v, polys), cfg, out);
      return 0;
    }
    if (*prime) {
      emit(primeness_check(ideal).to_json(), cfg, out);
      return 0;
    }
    if (*verify || *audit) {
      SuiteConfig suite;
      suite.seed = cfg.seed;
      suite.maxdeg = cfg.maxdeg;
      suite.samples = cfg.samples;
      suite.samples_per_cone = cfg.samples_per_cone;
      suite.powmax = cfg.powmax;
      suite.jobs = cfg.jobs;
      if (!subset.empty()) suite.a = IndexSet::parse(subset, ideal.num_vars());
      if (!weight.empty()) suite.w = parse_weight(weight, ideal);
      if (!weight_u.empty()) suite.u = parse_weight(weight_u, ideal);
      if (index > 0) suite.i = index - 1;
      const auto reports = run_claims(ideal, *audit ? std::string("cm-fan") : claim, suite);
      auto config = cfg.to_json();
      config["claim"] = *audit ? std::string("cm-fan") : claim;
      emit(run_report(ideal, reports, config), cfg, out);
      return exit_status(reports);
    }
  } catch (const ParseError& e) {
    err << "tropcm: " << file << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "tropcm: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace tropcm
