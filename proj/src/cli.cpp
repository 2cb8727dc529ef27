#include "psl2mu/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "psl2mu/catalog.hpp"
#include "psl2mu/errors.hpp"
#include "psl2mu/group_io.hpp"
#include "psl2mu/lie_orders.hpp"
#include "psl2mu/mu_stats.hpp"
#include "psl2mu/proof_audit.hpp"
#include "psl2mu/psl2.hpp"

namespace psl2mu {

namespace {

struct RunConfig {
  std::uint64_t cap = kDefaultEnumerationCap;
  std::string format = "json";
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string tsv_cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit_reports(const std::vector<AuditReport>& reports, const RunConfig& config, std::ostream& out) {
  if (config.format == "json") {
    out << to_json(reports).dump(2) << "\n";
    return;
  }
  out << "check\tverdict\tinputs\tlhs\trhs\n";
  for (const auto& r : reports) {
    out << r.check << "\t" << to_string(r.verdict) << "\t" << r.inputs.dump() << "\t" << tsv_cell(r.lhs) << "\t"
        << tsv_cell(r.rhs) << "\n";
  }
}

int status_of(const std::vector<AuditReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const AuditReport& r) { return r.ok(); }) ? exit_ok
                                                                                                  : exit_check_failed;
}

// "a..b" or a single number.
std::vector<std::uint64_t> parse_q_spec(const std::string& text) {
  const auto parse = [&](const std::string& s) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || s.front() == '-') throw UsageError("not a field size: '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) return {parse(text)};
  const auto lo = parse(text.substr(0, dots));
  const auto hi = parse(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range " + text);
  std::vector<std::uint64_t> out;
  for (auto q = std::max<std::uint64_t>(lo, 4); q <= hi; ++q) {
    if (prime_power(q)) out.push_back(q);
  }
  if (out.empty()) throw UsageError("no prime power q >= 4 in " + text);
  return out;
}

std::vector<std::uint64_t> q0_range(std::uint64_t q0_max) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= q0_max; ++q) {
    if (prime_power(q)) out.push_back(q);
  }
  if (out.empty()) throw UsageError("--q0-max must be at least 2");
  return out;
}

int cmd_mu(const std::string& path, const RunConfig& config, std::ostream& out) {
  const PermGroup g = load_group(path, config.cap);
  const MuProfile profile = mu_profile(g);
  const BigInt recovered = order_from_mu(value_set(profile));
  if (config.format == "json") {
    Json primes = Json::array();
    Json mu = Json::object();
    Json decomposition = Json::array();
    for (const auto& [r, v] : profile) {
      primes.push_back(r);
      mu[std::to_string(r)] = to_json_value(v);
      const auto d = mu_decomposition(g, r);
      decomposition.push_back({{"prime", r}, {"t", to_json_value(d.t)}, {"sylow_order", to_json_value(d.sylow_order)}});
    }
    const Json doc{{"order", to_json_value(g.order())},
                   {"primes", primes},
                   {"mu", mu},
                   {"decomposition", decomposition},
                   {"order_from_mu", to_json_value(recovered)},
                   {"round_trip", recovered == g.order()}};
    out << doc.dump(2) << "\n";
  } else {
    out << "order\t" << g.order() << "\n";
    out << "order_from_mu\t" << recovered << "\n";
    out << "prime\tmu\tt\tsylow_order\n";
    for (const auto& [r, v] : profile) {
      const auto d = mu_decomposition(g, r);
      out << r << "\t" << to_string(v) << "\t" << d.t << "\t" << d.sylow_order << "\n";
    }
  }
  return recovered == g.order() ? exit_ok : exit_check_failed;
}

int cmd_psl2(const std::vector<std::string>& specs, bool brute, const RunConfig& config, std::ostream& out) {
  std::vector<std::uint64_t> qs;
  for (const auto& s : specs) {
    for (auto q : parse_q_spec(s)) qs.push_back(q);
  }
  Json doc = Json::array();
  std::vector<AuditReport> reports;
  for (auto q : qs) {
    split_prime_power(q);
    Json entry{{"q", q},
               {"order", to_json_value(psl2_order(q))},
               {"census", census_to_json(element_order_census_analytic(q))},
               {"mu", profile_to_json(mu_profile_analytic(q))}};
    if (brute) {
      reports.push_back(brute_vs_analytic(q, config.cap));
      entry["brute"] = reports.back().to_json();
    }
    doc.push_back(std::move(entry));
  }
  if (config.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << "q\torder\tmu\tbrute\n";
    for (std::size_t i = 0; i < qs.size(); ++i) {
      std::string mu;
      for (const auto& [r, v] : mu_profile_analytic(qs[i])) {
        mu += (mu.empty() ? "" : " ") + std::to_string(r) + ":" + to_string(v);
      }
      out << qs[i] << "\t" << psl2_order(qs[i]) << "\t" << mu << "\t"
          << (brute ? to_string(reports[i].verdict) : std::string("-")) << "\n";
    }
  }
  return status_of(reports);
}

int cmd_lie_order(const std::string& family_tag, std::uint64_t q0, unsigned n, const RunConfig& config,
                  std::ostream& out) {
  LieType type;
  try {
    type = parse_lie_type(family_tag);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (is_classical(type) && n == 0) throw UsageError("family " + family_tag + " needs --n");
  const LieFamily family(type, is_classical(type) ? n : 0);
  const auto factorization = factorize_order(family, q0);
  const auto check = verify_order_closed_form(family, q0);
  if (config.format == "json") {
    Json doc = factorization.to_json();
    doc["closed_form"] = check.to_json();
    out << doc.dump(2) << "\n";
  } else {
    out << "family\t" << family.name() << "\nq0\t" << q0 << "\nd\t" << factorization.d << "\nh\t" << factorization.h
        << "\norder\t" << factorization.order() << "\nclosed_form\t" << to_string(check.verdict) << "\n";
    out << "m\tphi_m\te\n";
    for (const auto& [m, e] : factorization.exponents) {
      out << m << "\t" << cyclotomic_value(m, q0) << "\t" << e << "\n";
    }
  }
  return check.ok() ? exit_ok : exit_check_failed;
}

int cmd_identify(const std::vector<std::string>& texts, const RunConfig& config, std::ostream& out) {
  std::vector<Rational> values;
  for (const auto& t : texts) {
    try {
      values.push_back(parse_rational(t));
    } catch (const std::exception& e) {
      throw UsageError("not a rational: '" + t + "'");
    }
  }
  std::sort(values.begin(), values.end());
  const auto qs = identify_psl2(values);
  if (config.format == "json") {
    out << Json{{"values", texts}, {"q", qs}}.dump(2) << "\n";
  } else if (qs.empty()) {
    out << "none\n";
  } else {
    for (std::size_t i = 0; i < qs.size(); ++i) out << (i ? "\t" : "") << qs[i];
    out << "\n";
  }
  return exit_ok;
}

struct AuditSelection {
  bool all = false;
  std::string subcase;
  std::string family;
  std::string lemma;
  std::string check;
  unsigned n_max = 200;
  std::uint64_t q0_max = 9;
};

LieType subcase_family(const std::string& id, bool& with_odd_orthogonal) {
  static const std::map<std::string, LieType> table{
      {"4.1", LieType::linear},   {"4.2", LieType::unitary},     {"4.3", LieType::symplectic},
      {"4.4", LieType::orthogonal_plus}, {"4.5", LieType::orthogonal_minus}, {"4.6", LieType::suzuki},
      {"4.7", LieType::triality}, {"4.8", LieType::g2},         {"4.9", LieType::ree_g2},
      {"4.10", LieType::f4},      {"4.11", LieType::ree_f4},     {"4.12", LieType::e6},
      {"4.13", LieType::twisted_e6}, {"4.14", LieType::e7},      {"4.15", LieType::e8},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw UsageError("unknown subcase " + id + "; expected 4.1 to 4.15");
  with_odd_orthogonal = id == "4.3";
  return it->second;
}

int cmd_audit(const AuditSelection& sel, const RunConfig& config, std::ostream& out) {
  const int chosen = sel.all + !sel.subcase.empty() + !sel.family.empty() + !sel.lemma.empty() + !sel.check.empty();
  if (chosen != 1) throw UsageError("choose exactly one of --all, --subcase, --family, --lemma, --check");
  AuditOptions options;
  options.n_max = sel.n_max;
  options.q0s = q0_range(sel.q0_max);
  options.cap = config.cap;
  std::vector<AuditReport> reports;
  if (sel.all) {
    reports = run_all_audits(options);
  } else if (!sel.subcase.empty() || !sel.family.empty()) {
    std::vector<LieType> types;
    if (!sel.subcase.empty()) {
      bool odd = false;
      types.push_back(subcase_family(sel.subcase, odd));
      if (odd) types.push_back(LieType::orthogonal_odd);
    } else {
      try {
        types.push_back(parse_lie_type(sel.family));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    for (auto t : types) {
      for (auto& r : family_audit(t, options.q0s)) reports.push_back(std::move(r));
    }
    if (types.front() == LieType::orthogonal_minus) reports.push_back(omega_minus_followup());
    sort_reports(reports);
  } else if (!sel.lemma.empty()) {
    if (sel.lemma != "2.11") throw UsageError("unknown lemma " + sel.lemma + "; expected 2.11");
    if (sel.n_max < 6) throw UsageError("--n-max must be at least 6");
    reports.push_back(factorial_inequality_sweep(sel.n_max));
  } else {
    for (auto& r : run_all_audits(options)) {
      if (r.check == sel.check) reports.push_back(std::move(r));
    }
    if (reports.empty()) throw UsageError("unknown check " + sel.check);
  }
  emit_reports(reports, config, out);
  return status_of(reports);
}

int cmd_catalog(const RunConfig& config, std::ostream& out) {
  const auto catalog = builtin_catalog(config.cap);
  if (config.format == "json") {
    Json doc = Json::array();
    for (const auto& e : catalog) {
      doc.push_back({{"name", e.name}, {"degree", e.group.degree()}, {"order", to_json_value(e.group.order())}});
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "name\tdegree\torder\n";
    for (const auto& e : catalog) out << e.name << "\t" << e.group.degree() << "\t" << e.group.order() << "\n";
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proportions of r-singular elements and the PSL(2, q) characterization audit", "psl2mu"};
  app.require_subcommand(1);
  RunConfig config;
  app.add_option("--cap", config.cap, "Largest group order that may be enumerated")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();

  std::string group_path;
  auto* mu = app.add_subcommand("mu", "mu_r for every prime of a group read from a file");
  mu->add_option("file", group_path, "Group file: 'degree n' then one cycle-notation generator per line")->required();

  std::vector<std::string> q_specs;
  bool brute = false;
  auto* psl2 = app.add_subcommand("psl2", "Closed-form census and mu profile of PSL(2, q)");
  psl2->add_option("q", q_specs, "Field sizes or ranges a..b")->required();
  psl2->add_flag("--brute", brute, "Also enumerate the group and compare");

  std::string family_tag;
  std::uint64_t q0 = 0;
  unsigned rank = 0;
  auto* lie = app.add_subcommand("lie-order", "Cyclotomic factorization of a Lie-type order");
  lie->add_option("family", family_tag, "PSL, PSU, PSp, POmega, POmega+, POmega-, 2B2, 3D4, G2, 2G2, F4, 2F4, E6, 2E6, E7, E8")
      ->required();
  lie->add_option("q0", q0, "Field size")->required();
  lie->add_option("--n", rank, "Rank parameter of a classical family");

  std::vector<std::string> values;
  auto* identify = app.add_subcommand("identify", "Every q whose mu value set equals the given values");
  identify->add_option("values", values, "Rationals such as 1/4")->required();

  AuditSelection sel;
  auto* audit = app.add_subcommand("audit", "Replay the proof's arithmetic");
  audit->add_flag("--all", sel.all, "Every audit");
  audit->add_option("--subcase", sel.subcase, "Lie-type subcase 4.1 to 4.15");
  audit->add_option("--family", sel.family, "Lie family tag");
  audit->add_option("--lemma", sel.lemma, "2.11: the factorial inequality");
  audit->add_option("--check", sel.check, "Every report with this check id");
  audit->add_option("--n-max", sel.n_max, "Upper n for the factorial inequality")->capture_default_str();
  audit->add_option("--q0-max", sel.q0_max, "Largest q0 in order comparisons")->capture_default_str();

  app.add_subcommand("catalog", "List the built-in groups");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_bad_input;
  }

  try {
    if (mu->parsed()) return cmd_mu(group_path, config, out);
    if (psl2->parsed()) return cmd_psl2(q_specs, brute, config, out);
    if (lie->parsed()) return cmd_lie_order(family_tag, q0, rank, config, out);
    if (identify->parsed()) return cmd_identify(values, config, out);
    if (audit->parsed()) return cmd_audit(sel, config, out);
    return cmd_catalog(config, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_cap_exceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
}

}  // namespace psl2mu
