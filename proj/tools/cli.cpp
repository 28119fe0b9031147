#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "satk/error.hpp"
#include "satk/json_io.hpp"
#include "satk/lattice_oracle.hpp"
#include "satk/monoid.hpp"
#include "satk/satake.hpp"
#include "satk/schubert.hpp"

namespace satk::cli {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError("parse", path + ": " + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

Int parse_int(const std::string& s) {
  std::size_t start = s.find_first_not_of(' ');
  std::size_t end = s.find_last_not_of(' ');
  if (start == std::string::npos) throw DomainError("parse", "empty integer");
  const std::string_view v(s.data() + start, end - start + 1);
  Int x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw DomainError("parse", "not an integer: '" + s + "'");
  return x;
}

/// "1,-1" or "@file.json" holding an integer array.
Coweight parse_coweight(const std::string& text) {
  if (text.starts_with('@')) return coweight_from_json(read_json_file(text.substr(1)));
  IntVector v;
  for (const auto& part : split(text, ',')) v.push_back(parse_int(part));
  if (v.empty()) throw DomainError("parse", "empty coweight");
  return Coweight(std::move(v));
}

/// "1,0;0,0" or "@file.json" holding an array of integer arrays.
std::vector<Coweight> parse_coweight_list(const std::string& text) {
  std::vector<Coweight> out;
  if (text.starts_with('@')) {
    const json j = read_json_file(text.substr(1));
    if (!j.is_array()) throw DomainError("parse", "coweight list must be a JSON array");
    for (const auto& c : j) out.push_back(coweight_from_json(c));
    return out;
  }
  for (const auto& part : split(text, ';'))
    if (!part.empty()) out.push_back(parse_coweight(part));
  return out;
}

/// "1,0" (a basis element), "1,0:2;0,0:1" (coefficients), or "@file.json"
/// holding element JSON.
template <class Tag>
ModPSum<Tag> parse_element(const std::string& text, std::uint32_t p) {
  if (text.starts_with('@')) {
    ModPSum<Tag> x = element_from_json<Tag>(read_json_file(text.substr(1)));
    x.check_modulus(ModPSum<Tag>(p));
    return x;
  }
  ModPSum<Tag> x(p);
  for (const auto& term : split(text, ';')) {
    if (term.empty()) continue;
    const auto colon = term.find(':');
    const Int coeff = colon == std::string::npos ? 1 : parse_int(term.substr(colon + 1));
    x.add_term(parse_coweight(term.substr(0, colon)), coeff);
  }
  return x;
}

json coweight_array(const std::vector<Coweight>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(to_json(c));
  return arr;
}

struct GroupOptions {
  std::string group;
  std::string datum_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--group", group, "Group label: GL2, SL3, PGL3, Sp4, T1, SC:G2, AD:B3, ...");
    cmd->add_option("--datum", datum_file, "Root datum JSON file");
  }

  std::shared_ptr<const RootDatum> load() const {
    if (!group.empty() && !datum_file.empty()) throw CLI::ValidationError("use only one of --group and --datum");
    if (!datum_file.empty())
      return std::make_shared<const RootDatum>(root_datum_from_json(read_json_file(datum_file)));
    if (group.empty()) throw CLI::RequiredError("--group or --datum");
    return std::make_shared<const RootDatum>(parse_group(group));
  }
};

void print(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void check_element(const SatakeAlgebra& a, const K0Element& x) { a.validate(x); }

/// Re-keys each term under its dominant representative (tau_mu = tau_{w mu}).
HeckeElement to_tau_basis(const SatakeAlgebra& a, const HeckeElement& raw) {
  HeckeElement f = raw.zero_like();
  for (const auto& [key, c] : raw.terms()) f += a.tau(key, raw.modulus()).scaled(c);
  return f;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"satk: mod p Satake combinatorics"};
  app.require_subcommand(1);

  GroupOptions g;
  std::string mu_text, lambda_text, nu_text, lhs_text, rhs_text, set_text, x_text, cone_text = "dominant";
  Int p = 0;
  bool inverse = false, close = false;
  std::size_t n = 0;
  std::uint32_t q = 0;
  Int max_entry = 0;
  unsigned threads = 0;
  OracleLimits limits;

  // Operation bodies; each prints its JSON result and returns an exit code.
  std::function<int()> action;

  auto* group_cmd = app.add_subcommand("group", "Emit the root datum and derived data");
  g.attach(group_cmd);
  group_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      json j = to_json(*d);
      json pos_roots = json::array(), pos_coroots = json::array();
      for (const auto& r : d->positive_roots()) pos_roots.push_back(r);
      for (const auto& r : d->positive_coroots()) pos_coroots.push_back(r);
      j["positive_roots"] = std::move(pos_roots);
      j["positive_coroots"] = std::move(pos_coroots);
      j["weyl_order"] = d->weyl_group().size();
      j["w0_word"] = d->longest_element().word;
      print(out, j);
      return kOk;
    };
  });

  auto* strata_cmd = app.add_subcommand("strata", "Dominant coweights lambda <= mu");
  g.attach(strata_cmd);
  strata_cmd->add_option("--mu", mu_text, "Dominant coweight, e.g. 1,-1")->required();
  strata_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      const auto report = closure_report(*d, parse_coweight(mu_text));
      std::vector<Coweight> strata;
      for (const auto& s : report.strata) strata.push_back(s.lambda);
      print(out, {{"mu", to_json(report.mu)}, {"strata", coweight_array(strata)}});
      return kOk;
    };
  });

  auto* dim_cmd = app.add_subcommand("dim", "dim Gr_mu = 2<rho, mu>");
  g.attach(dim_cmd);
  dim_cmd->add_option("--mu", mu_text, "Dominant coweight")->required();
  dim_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      const Coweight mu = parse_coweight(mu_text);
      print(out, {{"mu", to_json(mu)}, {"dim", dim_orbit(*d, mu)}});
      return kOk;
    };
  });

  auto* report_cmd = app.add_subcommand("report", "Stratification report of Gr_{<=mu}");
  g.attach(report_cmd);
  report_cmd->add_option("--mu", mu_text, "Dominant coweight")->required();
  report_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      const Coweight mu = parse_coweight(mu_text);
      json j = to_json(closure_report(*d, mu));
      j["codim_at_least_two"] = codim_at_least_two(*d, mu);
      print(out, j);
      return kOk;
    };
  });

  auto* k0_cmd = app.add_subcommand("k0", "Grothendieck ring operations");
  k0_cmd->require_subcommand(1);
  auto* k0_mul_cmd = k0_cmd->add_subcommand("mul", "Product of K_0 classes");
  g.attach(k0_mul_cmd);
  k0_mul_cmd->add_option("--p", p, "Prime modulus")->required();
  k0_mul_cmd->add_option("--lhs", lhs_text, "Element: 1,0 | 1,0:2;0,0:1 | @file.json")->required();
  k0_mul_cmd->add_option("--rhs", rhs_text, "Element")->required();
  k0_mul_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      const SatakeAlgebra a(d);
      const auto prime = checked_prime(p);
      const auto x = parse_element<K0Tag>(lhs_text, prime), y = parse_element<K0Tag>(rhs_text, prime);
      check_element(a, x);
      check_element(a, y);
      const K0Element product = k0_mul(x, y);
      json j = to_json(product);
      j["h_dim"] = h_dim(product);
      print(out, j);
      return kOk;
    };
  });

  auto* hecke_cmd = app.add_subcommand("hecke", "Spherical Hecke algebra operations");
  hecke_cmd->require_subcommand(1);
  auto* hecke_mul_cmd = hecke_cmd->add_subcommand("mul", "Convolution product in the tau basis");
  g.attach(hecke_mul_cmd);
  hecke_mul_cmd->add_option("--p", p, "Prime modulus")->required();
  hecke_mul_cmd->add_option("--lhs", lhs_text, "Element: 1,0 | 1,0:2;0,0:1 | @file.json")->required();
  hecke_mul_cmd->add_option("--rhs", rhs_text, "Element")->required();
  hecke_mul_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      const SatakeAlgebra a(d);
      const auto prime = checked_prime(p);
      const auto f = to_tau_basis(a, parse_element<HeckeTag>(lhs_text, prime));
      const auto h = to_tau_basis(a, parse_element<HeckeTag>(rhs_text, prime));
      const HeckeElement product = a.hecke_mul(f, h);
      if (!(product == a.hecke_mul_via_k0(f, h)))
        throw DomainError("internal", "transport paths disagree");
      print(out, to_json(product));
      return kOk;
    };
  });

  auto add_element_cmd = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    g.attach(cmd);
    cmd->add_option("--p", p, "Prime modulus")->required();
    cmd->add_option("--mu", mu_text, "Element: coweight, weighted terms, or @file.json")->required();
    return cmd;
  };

  auto* satake_cmd = add_element_cmd("satake", "Satake transform S of a Hecke element");
  satake_cmd->callback([&] {
    action = [&] {
      const SatakeAlgebra a(g.load());
      const auto prime = checked_prime(p);
      print(out, to_json(a.satake_transform(to_tau_basis(a, parse_element<HeckeTag>(mu_text, prime)))));
      return kOk;
    };
  });

  auto* satake_inv_cmd = add_element_cmd("satake-inv", "Inverse Satake transform of an anti-dominant element");
  satake_inv_cmd->callback([&] {
    action = [&] {
      const SatakeAlgebra a(g.load());
      const auto m = parse_element<AntiDomTag>(mu_text, checked_prime(p));
      a.validate(m);
      print(out, to_json(a.satake_inverse(m)));
      return kOk;
    };
  });

  auto* tmap_cmd = add_element_cmd("tmap", "T: K_0 (x) F_p -> H_G, or its inverse");
  tmap_cmd->add_flag("--inverse", inverse, "Apply T^{-1} to a Hecke element");
  tmap_cmd->callback([&] {
    action = [&] {
      const SatakeAlgebra a(g.load());
      const auto prime = checked_prime(p);
      if (inverse) {
        const auto f = parse_element<HeckeTag>(mu_text, prime);
        a.validate(f);
        print(out, to_json(a.t_map_inverse(f)));
      } else {
        const auto x = parse_element<K0Tag>(mu_text, prime);
        a.validate(x);
        print(out, to_json(a.t_map(x)));
      }
      return kOk;
    };
  });

  auto* mobius_cmd = app.add_subcommand("mobius", "Moebius function of the dominance order on a cone");
  g.attach(mobius_cmd);
  mobius_cmd->add_option("--nu", nu_text, "Lower coweight")->required();
  mobius_cmd->add_option("--lambda", lambda_text, "Upper coweight")->required();
  mobius_cmd->add_option("--cone", cone_text, "dominant | anti-dominant")
      ->check(CLI::IsMember({"dominant", "anti-dominant"}));
  mobius_cmd->callback([&] {
    action = [&] {
      const SatakeAlgebra a(g.load());
      const Coweight nu = parse_coweight(nu_text), lambda = parse_coweight(lambda_text);
      const Cone cone = cone_text == "dominant" ? Cone::kDominant : Cone::kAntiDominant;
      print(out, {{"nu", to_json(nu)}, {"lambda", to_json(lambda)}, {"cone", cone_text},
                  {"mobius", a.mobius(nu, lambda, cone)}});
      return kOk;
    };
  });

  auto* ext1_cmd = app.add_subcommand("ext1", "Is Ext^1(IC_mu, IC_lambda) known to vanish?");
  g.attach(ext1_cmd);
  ext1_cmd->add_option("--mu", mu_text, "Dominant coweight")->required();
  ext1_cmd->add_option("--lambda", lambda_text, "Dominant coweight")->required();
  ext1_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      const Coweight mu = parse_coweight(mu_text), lambda = parse_coweight(lambda_text);
      const Ext1Verdict v = ext1_verdict(*d, mu, lambda);
      print(out, {{"mu", to_json(mu)}, {"lambda", to_json(lambda)}, {"case", to_string(v)},
                  {"vanishing_guaranteed", v != Ext1Verdict::kNotGuaranteed}});
      return kOk;
    };
  });

  auto* monoid_cmd = app.add_subcommand("monoid", "Monoid X_*(T)^+ structure");
  monoid_cmd->require_subcommand(1);
  auto* is_group_cmd = monoid_cmd->add_subcommand("is-group", "Whether the monoid is a group");
  g.attach(is_group_cmd);
  is_group_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      print(out, {{"group", d->label()}, {"is_group", monoid_is_group(*d)}});
      return kOk;
    };
  });
  auto* repr_cmd = monoid_cmd->add_subcommand("repr", "Matrix of multiplication on a truncation F_p[S]");
  g.attach(repr_cmd);
  repr_cmd->add_option("--set", set_text, "Downward-closed set: 2,0;1,1 or @file.json")->required();
  repr_cmd->add_option("--x", x_text, "K_0 element acting")->required();
  repr_cmd->add_option("--p", p, "Prime modulus")->required();
  repr_cmd->add_flag("--close", close, "Replace the set by its downward closure");
  repr_cmd->callback([&] {
    action = [&] {
      const auto d = g.load();
      std::vector<Coweight> set = parse_coweight_list(set_text);
      if (close) set = downward_closure(*d, set);
      const auto x = parse_element<K0Tag>(x_text, checked_prime(p));
      print(out, to_json(truncated_regular_representation(*d, set, x)));
      return kOk;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "GL_n lattice-counting oracle");
  oracle_cmd->require_subcommand(1);
  auto* verify_cmd = oracle_cmd->add_subcommand("verify", "Compare lattice counts with the Satake product");
  verify_cmd->add_option("--n", n, "GL_n rank")->required();
  verify_cmd->add_option("--q", q, "Field order (prime power); p is its characteristic")->required();
  verify_cmd->add_option("--max-entry", max_entry, "Entries of mu, lambda range over [0, max-entry]")->required();
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
  verify_cmd->add_option("--max-q", limits.max_q, "Cap on q");
  verify_cmd->add_option("--max-depth", limits.max_depth, "Cap on lattice depth");
  verify_cmd->callback([&] {
    action = [&] {
      const OracleReport report = verify_oracle(n, q, max_entry, limits, threads);
      print(out, to_json(report));
      return report.all_match() ? kOk : kDomainError;
    };
  });

  auto error_object = [&](const std::string& kind, const std::string& message) {
    err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_object("usage", e.what());
    return kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const CLI::Error& e) {
    error_object("usage", e.what());
    return kUsageError;
  } catch (const DomainError& e) {
    error_object(e.kind(), e.what());
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    error_object("invalid-argument", e.what());
    return kDomainError;
  } catch (const std::exception& e) {
    error_object("internal", e.what());
    return kDomainError;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace satk::cli
