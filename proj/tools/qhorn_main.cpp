// qhorn: Horn sets, Mumford cone inequalities and their oracles for acyclic quivers.
//
// Exit codes: 0 success (or "member"), 1 "not a member" / oracle disagreement,
// 2 input error, 3 computational limit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qhorn/cone.hpp"
#include "qhorn/errors.hpp"
#include "qhorn/euler.hpp"
#include "qhorn/horn.hpp"
#include "qhorn/littlewood_richardson.hpp"
#include "qhorn/rank_oracle.hpp"
#include "qhorn/sweep.hpp"

namespace {

using namespace qhorn;

struct EngineFlags {
  std::uint64_t cap = kDefaultEnumerationCap;
  bool no_memo = false;
  unsigned parallel = 0;

  HornOptions options() const {
    HornOptions o;
    o.cap = cap;
    o.memoize = !no_memo;
    o.threads = parallel == 0 ? 1 : parallel;
    return o;
  }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
  cmd->add_option("--cap", flags.cap, "Maximum number of subfamilies enumerated per family");
  cmd->add_option("--parallel", flags.parallel, "Worker threads for the top-level scan");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SigmaVector parse_sigma(const Quiver& q, const std::string& text) {
  SigmaVector sigma{std::vector<Rational>(q.vertex_count(), Rational(0))};
  std::vector<char> seen(q.vertex_count(), 0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("sigma entry '" + item + "' must look like vertex=value");
    auto x = q.index_of(item.substr(0, eq));
    if (seen[x]) throw InputError("vertex '" + q.name(x) + "' given twice in --sigma");
    seen[x] = 1;
    sigma.values[x] = parse_rational(item.substr(eq + 1));
  }
  return sigma;
}

std::string flag(bool b) { return b ? "1" : "0"; }

int run_horn(const std::string& file, bool essential, const EngineFlags& flags) {
  auto input = load_quiver_file(file);
  HornEngine engine(input.quiver, flags.options());
  for (const auto& m : engine.horn_families(input.family)) {
    if (essential && m.eul != 0) continue;
    std::cout << "K\t" << format_subfamily(input.quiver, m.sub) << "\teul=" << m.eul << '\n';
  }
  return 0;
}

int run_inequalities(const std::string& file, bool essential, bool prune, const EngineFlags& flags) {
  auto input = load_quiver_file(file);
  HornEngine engine(input.quiver, flags.options());
  auto system = cone_inequalities(engine, input.family, essential);
  if (prune) system = prune_redundant(system);
  std::cout << format_equality_line() << '\n';
  for (const auto& ineq : system.inequalities) std::cout << format_inequality_line(input.quiver, ineq) << '\n';
  return 0;
}

int run_check(const std::string& file, const std::string& weights, const EngineFlags& flags) {
  auto input = load_quiver_file(file);
  auto w = parse_weight_file(input.quiver, input.family, read_file(weights));
  DominantWeight lambda(input.family, std::move(w));
  HornEngine engine(input.quiver, flags.options());
  auto result = cone_membership(engine, input.family, lambda);
  if (result.member) {
    std::cout << "MEMBER\n";
    return 0;
  }
  if (!result.trace_zero) {
    std::cout << "NOT_MEMBER\ttrace " << lambda.weight().total().str() << " != 0\n";
  } else {
    std::cout << "NOT_MEMBER\tviolated\t" << format_subfamily(input.quiver, *result.violated) << "\tvalue="
              << result.violation.str() << '\n';
  }
  return 1;
}

int run_sigma(const std::string& file, const EngineFlags& flags) {
  auto input = load_quiver_file(file);
  HornEngine engine(input.quiver, flags.options());
  auto system = sigma_inequalities(engine, input.family);
  std::cout << format_sigma_equality_line(input.quiver, system) << '\n';
  for (const auto& alpha : system.alphas) std::cout << format_sigma_line(input.quiver, alpha) << '\n';
  return 0;
}

int run_sigma_check(const std::string& file, const std::string& sigma_text, const EngineFlags& flags) {
  auto input = load_quiver_file(file);
  auto sigma = parse_sigma(input.quiver, sigma_text);
  HornEngine engine(input.quiver, flags.options());
  const bool member = sigma_contains(engine, input.family, sigma);
  std::cout << (member ? "MEMBER" : "NOT_MEMBER") << '\n';
  return member ? 0 : 1;
}

int run_classify(const std::string& file, const std::string& literal, const EngineFlags& flags) {
  auto input = load_quiver_file(file);
  auto sub = parse_subfamily(input.quiver, literal);
  require_subfamily(input.family, sub);
  HornEngine engine(input.quiver, flags.options());
  auto c = classify_element(engine, input.family, sub);
  std::cout << "K\t" << format_subfamily(input.quiver, sub) << "\teul=" << c.eul << "\tadmissible=" << flag(c.admissible)
            << "\tcovering=" << flag(c.covering) << "\tressayre=" << flag(c.ressayre)
            << "\thorn_element=" << flag(c.horn_element) << '\n';
  return 0;
}

OracleConfig make_config(int trials, std::uint64_t seed, std::uint64_t prime) {
  OracleConfig config;
  config.trials = trials;
  config.seed = seed;
  config.field = PrimeField(prime);
  return config;
}

int run_oracle(const std::string& file, const std::string& literal, const OracleConfig& config) {
  auto input = load_quiver_file(file);
  auto sub = parse_subfamily(input.quiver, literal);
  auto parts = subquotient(input.family, sub);
  auto r = ext_min(input.quiver, parts.sub, parts.quot, config);
  std::cout << "K\t" << format_subfamily(input.quiver, sub) << "\trows=" << r.rows << "\tcols=" << r.cols
            << "\trank=" << r.rank << "\text_min=" << r.ext_min << "\thom_min=" << r.hom_min << "\teul=" << r.eul
            << "\tdet_nonzero=";
  if (r.eul == 0)
    std::cout << flag(det_P_nonzero(input.quiver, parts.sub, parts.quot, config));
  else
    std::cout << "na";
  std::cout << '\n';
  return 0;
}

int run_selftest(const std::string& file, const std::string& sweep, const std::string& mode_name,
                 const HarnessBounds& bounds, const OracleConfig& config, const EngineFlags& flags) {
  const auto mode = parse_harness_mode(mode_name);
  if (file.empty() == sweep.empty()) throw InputError("selftest needs either a quiver file or --sweep V,A,N");
  if (!file.empty()) {
    auto input = load_quiver_file(file);
    HornEngine engine(input.quiver, flags.options());
    auto report = theorem_harness(engine, input.family, mode, bounds, config);
    for (const auto& line : report.lines) std::cout << line << '\n';
    std::cout << report.summary() << '\n';
    return report.all_agree() ? 0 : 1;
  }
  const auto b = parse_sweep_bounds(sweep);
  std::size_t agreements = 0;
  std::size_t total = 0;
  for (const auto& q : enumerate_quivers(b.max_vertices, b.max_arrows)) {
    HornEngine engine(q, flags.options());
    auto dim_list = mode == HarnessMode::theo2
                        ? std::vector<DimensionVector>{DimensionVector(std::vector<int>(q.vertex_count(), 0))}
                        : enumerate_dimension_vectors(q.vertex_count(), b.max_dim);
    for (const auto& dims : dim_list) {
      auto report = theorem_harness(engine, LabeledFamily::canonical(dims), mode, bounds, config);
      std::cout << "CASE arrows=" << describe_arrows(q) << " vertices=" << q.vertex_count();
      if (mode != HarnessMode::theo2) std::cout << " dims=" << describe_dims(dims);
      std::cout << ' ' << report.summary() << '\n';
      for (const auto& line : report.lines)
        if (line.ends_with("agree=0")) std::cout << "  " << line << '\n';
      agreements += report.agreements;
      total += report.total;
    }
  }
  std::cout << "AGREEMENTS " << agreements << '/' << total << '\n';
  return agreements == total ? 0 : 1;
}

int run_lr(const std::string& lam, const std::string& mu, const std::string& nu) {
  auto l = parse_partition(lam);
  auto m = parse_partition(mu);
  if (!nu.empty()) {
    auto n = parse_partition(nu);
    std::cout << "c\t" << format_partition(l) << '\t' << format_partition(m) << '\t' << format_partition(n) << '\t'
              << lr_coefficient(l, m, n) << '\n';
    return 0;
  }
  for (const auto& [n, c] : lr_expand(l, m)) std::cout << "nu=" << format_partition(n) << "\tc=" << c << '\n';
  return 0;
}

int run_star_check(int n, int s, const std::vector<std::string>& lams, const std::string& mu) {
  if (n < 1) throw InputError("--n must be positive");
  if (static_cast<int>(lams.size()) != s)
    throw InputError("--lam must be given exactly --s = " + std::to_string(s) + " times");
  std::vector<Partition> lambdas;
  for (const auto& l : lams) lambdas.push_back(parse_partition(l));
  auto m = parse_partition(mu);
  auto r = star_cone_check(n, lambdas, m);
  std::cout << "lr=" << r.multiplicity << "\tcone=" << flag(r.cone_member) << "\tagree=" << flag(r.agree()) << '\n';
  return r.agree() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Horn sets and Mumford cone inequalities for acyclic quivers"};
  app.require_subcommand(1);

  std::string file;
  std::string literal;
  std::string weights;
  std::string sigma_text;
  std::string sweep;
  std::string mode = "theo1";
  bool essential = false;
  bool prune = false;
  EngineFlags flags;
  int trials = 5;
  std::uint64_t seed = 0;
  std::uint64_t prime = kDefaultPrime;
  HarnessBounds bounds;
  std::string lam, mu, nu;
  std::vector<std::string> lams;
  int n = 0, s = 0;

  auto* horn = app.add_subcommand("horn", "List Horn subfamilies with eul values");
  horn->add_option("file", file, "Quiver file")->required();
  horn->add_flag("--essential", essential, "Only members with eul = 0");
  horn->add_flag("--no-memo", flags.no_memo, "Disable the Horn table cache");
  add_engine_flags(horn, flags);

  auto* ineq = app.add_subcommand("inequalities", "Equality and inequality records of the cone");
  ineq->add_option("file", file, "Quiver file")->required();
  ineq->add_flag("--essential", essential, "Only eul = 0 subfamilies");
  ineq->add_flag("--prune", prune, "Remove redundant inequalities by exact LP");
  add_engine_flags(ineq, flags);

  auto* check = app.add_subcommand("check", "Cone membership of a dominant weight (exit 0/1)");
  check->add_option("file", file, "Quiver file")->required();
  check->add_option("--weights", weights, "Weight file")->required();
  add_engine_flags(check, flags);

  auto* sigma = app.add_subcommand("sigma", "Inequalities of the semi-invariant subcone");
  sigma->add_option("file", file, "Quiver file")->required();
  add_engine_flags(sigma, flags);

  auto* sigma_check = app.add_subcommand("sigma-check", "Membership in the semi-invariant subcone (exit 0/1)");
  sigma_check->add_option("file", file, "Quiver file")->required();
  sigma_check->add_option("--sigma", sigma_text, "e.g. x=1,y=-1")->required();
  add_engine_flags(sigma_check, flags);

  auto* classify = app.add_subcommand("classify", "Covering / Ressayre / Horn element report for H(K)");
  classify->add_option("file", file, "Quiver file")->required();
  classify->add_option("--K", literal, "Subfamily literal, e.g. \"x:1;y:2\"")->required();
  add_engine_flags(classify, flags);

  auto* oracle = app.add_subcommand("oracle", "Randomized rank report for delta on (K, J/K)");
  oracle->add_option("file", file, "Quiver file")->required();
  oracle->add_option("--K", literal, "Subfamily literal")->required();
  oracle->add_option("--trials", trials)->check(CLI::PositiveNumber);
  oracle->add_option("--seed", seed)->required();
  oracle->add_option("--prime", prime);

  auto* selftest = app.add_subcommand("selftest", "Recursion versus rank-oracle agreement report");
  selftest->add_option("file", file, "Quiver file");
  selftest->add_option("--sweep", sweep, "Exhaustive sweep bounds V,A,N (vertices, arrows, max dim)");
  selftest->add_option("--seed", seed)->required();
  selftest->add_option("--mode", mode, "theo1 | theo2 | theo3");
  selftest->add_option("--trials", trials)->check(CLI::PositiveNumber);
  selftest->add_option("--prime", prime);
  selftest->add_option("--pairs", bounds.pairs, "theo2: number of random pairs");
  selftest->add_option("--max-label", bounds.max_label, "theo2: labels drawn from 1..N");
  add_engine_flags(selftest, flags);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
  lr->add_option("--lam", lam)->required();
  lr->add_option("--mu", mu)->required();
  lr->add_option("--nu", nu);

  auto* star = app.add_subcommand("star-check", "LR positivity versus star-quiver cone membership");
  star->add_option("--n", n)->required();
  star->add_option("--s", s)->required();
  star->add_option("--lam", lams, "Repeat once per source vertex")->required();
  star->add_option("--mu", mu)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ERROR 2: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*horn) return run_horn(file, essential, flags);
    if (*ineq) return run_inequalities(file, essential, prune, flags);
    if (*check) return run_check(file, weights, flags);
    if (*sigma) return run_sigma(file, flags);
    if (*sigma_check) return run_sigma_check(file, sigma_text, flags);
    if (*classify) return run_classify(file, literal, flags);
    if (*oracle) return run_oracle(file, literal, make_config(trials, seed, prime));
    if (*selftest) return run_selftest(file, sweep, mode, bounds, make_config(trials, seed, prime), flags);
    if (*lr) return run_lr(lam, mu, nu);
    if (*star) return run_star_check(n, s, lams, mu);
  } catch (const InputError& e) {
    std::cerr << "ERROR 2: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "ERROR 3: " << e.what() << '\n';
    return 3;
  } catch (const ArithmeticOverflow& e) {
    std::cerr << "ERROR 3: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "ERROR 3: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
