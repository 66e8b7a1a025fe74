// Copyright 2026 The espwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// espwalk: quantum walks on normal Cayley graphs of extraspecial 2-groups.
//
// Exit codes: 0 ok, 2 input error, 3 closed-form/oracle disagreement.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "espwalk/espwalk.hpp"

namespace {

using namespace espwalk;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagree = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t max_oracle_order() {
  if (const char* env = std::getenv("ESPWALK_MAX_ORDER")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("ESPWALK_MAX_ORDER is not a number");
    }
  }
  return 512;
}

void require_oracle_size(const ExtraspecialGroup& G) {
  if (G.order() > max_oracle_order())
    throw InputError("group order " + std::to_string(G.order()) + " exceeds the oracle cap " +
                     std::to_string(max_oracle_order()) + " (ESPWALK_MAX_ORDER)");
}

std::vector<GF2Vector> parse_class_list(const std::string& text) {
  std::vector<GF2Vector> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(GF2Vector::parse(tok));
  }
  return out;
}

std::string set_string(const std::set<std::int64_t>& s) {
  std::string out = "{";
  bool first = true;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    out += (first ? "" : ",") + std::to_string(*it);
    first = false;
  }
  return out + "}";
}

std::string time_string(const DyadicTime& t) {
  const auto n = t.normalized();
  std::string s = n.numerator == 1 ? "pi" : std::to_string(n.numerator) + "pi";
  if (n.exponent > 0) s += "/" + std::to_string(std::int64_t{1} << n.exponent);
  return s;
}

void print_confirmation(std::ostream& os, const Confirmation& conf) {
  os << "oracle: " << (conf.agree() ? "agrees with closed form" : "DISAGREES with closed form") << "\n";
  for (const auto& c : conf.checks) {
    os << "  " << std::left << std::setw(30) << c.name;
    if (c.time) os << std::setw(10) << time_string(*c.time);
    else os << std::setw(10) << "-";
    os << (c.agree() ? "ok  " : "FAIL") << "  expected=" << c.expected << " oracle=" << c.observed;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
}

void print_analysis(std::ostream& os, const ConnectionSet& c, const ExtraspecialGroup& G, const Confirmation* conf) {
  const auto spectrum_summary = spectrum(c);
  const auto phi = phi_sets(c);
  const auto pst = pst_decision(c);
  const auto fr = fr_classify(c);
  const auto mix = mixing_check(2, c.n);
  os << "group: extraspecial 2-group of order " << G.order() << " (" << to_string(G.iso_type()) << ", n=" << c.n
     << ")\n";
  os << "connection: C={";
  for (std::size_t i = 0; i < c.classes.size(); ++i) os << (i ? "," : "") << c.classes[i];
  os << "} " << (c.include_z ? "z in S" : "z not in S") << "  l=" << c.ell() << " degree=" << c.degree()
     << (pst.connected ? " connected" : " disconnected") << "\n";
  os << "spectrum:";
  for (const auto& [theta, m] : spectrum_summary.multiplicities) os << " " << theta << "^" << m;
  os << "\n";
  os << "phi+: " << set_string(phi.plus) << "  phi-: " << set_string(phi.minus)
     << (phi.disjoint ? "  (disjoint: 1 and z strongly cospectral)" : "  (overlap: not strongly cospectral)") << "\n";
  if (pst.admits) {
    os << "PST: yes, minimum time " << time_string(pst.min_time()) << " (odd multiples only), d_or_c=" << pst.d_or_c
       << "\n";
  } else {
    os << "PST: no";
    if (pst.failure)
      os << ", y=" << GF2Vector(c.dimension(), pst.failure->y) << " has nu2(l-e_y)=" << pst.failure->gap.to_string()
         << " < " << pst.failure->required.to_string();
    os << "\n";
  }
  os << "FR: " << to_string(fr.kind) << "  alpha=" << fr.alpha.to_string() << " t=" << fr.threshold.to_string()
     << " g=" << fr.g;
  if (fr.h) os << " h=" << *fr.h;
  if (fr.fr_min_time) os << "  first FR at " << time_string(*fr.fr_min_time);
  if (fr.balanced_time) os << "  balanced FR at " << time_string(*fr.balanced_time);
  os << "\n";
  os << "uniform mixing: impossible (nonlinear character support " << mix.min_support << " < sqrt(" << mix.order
     << ") = " << std::setprecision(4) << mix.bound << ")\n";
  if (conf) print_confirmation(os, *conf);
}

json with_schema(json body) {
  json j = {{"schema", kSchemaVersion}};
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

// --- analyze ------------------------------------------------------------------------

struct AnalyzeArgs {
  int n = 0;
  std::string iso = "plus";
  std::string classes;
  bool include_z = false;
  std::string file;
  double tol = kVerdictTol;
  bool json_out = false;
  bool verify = false;
  bool no_strict = false;
  std::vector<std::string> extra_times;
};

int cmd_analyze(const AnalyzeArgs& a) {
  ConnectionSet c;
  if (!a.file.empty()) {
    c = load_connection_file(a.file);
  } else {
    if (a.n < 1) throw InputError("--n is required without --file");
    c = ConnectionSet(a.n, parse_class_list(a.classes), a.include_z);
  }
  if (const auto v = validate(c, !a.no_strict); !v.valid) throw InputError("invalid connection set: " + v.explain());
  const ExtraspecialGroup G(c.n, parse_iso_type(a.iso));
  std::optional<Confirmation> conf;
  if (a.verify) {
    require_oracle_size(G);
    ConfirmOptions opt;
    opt.tol = a.tol;
    for (const auto& t : a.extra_times) opt.extra_times.push_back(DyadicTime::parse(t));
    conf = confirm(c, G, opt);
  }
  if (a.json_out) {
    auto body = analysis_json(c, conf ? &*conf : nullptr);
    body["iso_type"] = to_string(G.iso_type());
    std::cout << with_schema(body).dump(2) << "\n";
  } else {
    print_analysis(std::cout, c, G, conf ? &*conf : nullptr);
  }
  if (conf && !conf->agree()) {
    for (const auto* d : conf->disagreements())
      std::cerr << "disagreement: " << d->name << " expected " << d->expected << " oracle " << d->observed << " ("
                << d->detail << ")\n";
    return kExitDisagree;
  }
  return kExitOk;
}

// --- search -------------------------------------------------------------------------

struct SearchArgs {
  int n = 1;
  std::size_t verify_sample = 0;
  std::uint64_t seed = 1;
  std::string iso = "plus";
  bool json_out = false;
};

int cmd_search(const SearchArgs& a) {
  if (a.n < 1 || a.n > 2) throw InputError("search supports --n 1 or 2");
  const auto s = search(a.n, a.verify_sample, a.seed, parse_iso_type(a.iso));
  if (a.json_out) {
    json counts = json::object(), exemplars = json::object();
    for (std::size_t k = 0; k < 4; ++k) {
      counts[kSearchClassNames[k]] = s.counts[k];
      exemplars[kSearchClassNames[k]] = s.exemplars[k] ? to_json(*s.exemplars[k]) : json(nullptr);
    }
    json verified = json::array();
    for (const auto& v : s.verified)
      verified.push_back({{"connection", to_json(v.connection)}, {"agree", v.agree}, {"disagreements", v.disagreements}});
    std::cout << with_schema({{"n", s.n},
                              {"iso_type", a.iso},
                              {"seed", s.seed},
                              {"total_valid", s.total_valid},
                              {"counts", counts},
                              {"exemplars", exemplars},
                              {"verified", verified}})
                     .dump(2)
              << "\n";
  } else {
    std::cout << "n=" << s.n << ": " << s.total_valid << " valid connection sets\n";
    for (std::size_t k = 0; k < 4; ++k) {
      std::cout << "  " << std::left << std::setw(28) << kSearchClassNames[k] << std::setw(8) << s.counts[k];
      if (s.exemplars[k]) {
        std::cout << "e.g. C={";
        const auto& c = *s.exemplars[k];
        for (std::size_t i = 0; i < c.classes.size(); ++i) std::cout << (i ? "," : "") << c.classes[i];
        std::cout << "}" << (c.include_z ? " +z" : "");
      }
      std::cout << "\n";
    }
    if (!s.verified.empty()) {
      std::size_t ok = 0;
      for (const auto& v : s.verified) ok += v.agree;
      std::cout << "oracle sample (seed " << s.seed << "): " << ok << "/" << s.verified.size() << " agree\n";
    }
  }
  return s.all_verified() ? kExitOk : kExitDisagree;
}

// --- spread -------------------------------------------------------------------------

struct SpreadArgs {
  int n = 0;
  int k = 0;
  std::string file;
  std::size_t take = 0;
  std::string members;
  std::string iso = "plus";
  bool verify = false;
  bool json_out = false;
  double tol = kVerdictTol;
};

int cmd_spread(const SpreadArgs& a) {
  PartialSpread source;
  if (!a.file.empty()) {
    source = load_spread_file(a.file);
  } else {
    if (a.n < 1) throw InputError("--n is required without --file");
    if (a.k != 0 && a.k != a.n) throw InputError("the built-in regular spread has k = n; use --file for other k");
    source = regular_spread(a.n);
  }
  PartialSpread chosen{source.ambient, {}};
  if (!a.members.empty()) {
    std::stringstream ss(a.members);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t i = 0;
      try {
        i = std::stoul(tok);
      } catch (const std::exception&) {
        throw InputError("--members: '" + tok + "' is not an index");
      }
      if (i >= source.size()) throw InputError("--members: index " + tok + " out of range");
      chosen.members.push_back(source.members[i]);
    }
  } else {
    chosen = a.take ? source.take(a.take) : source;
  }
  if (chosen.members.empty()) throw InputError("no spread members selected");
  const std::size_t k = chosen.members.front().dim();
  if (!validate_spread(chosen, k)) throw InputError("selected subspaces are not a partial spread");
  const auto c = spread_connection(chosen);
  if (const auto v = validate(c, true); !v.valid) throw InputError("spread points: " + v.explain());
  const ExtraspecialGroup G(c.n, parse_iso_type(a.iso));
  const auto pred = spread_predict(static_cast<std::int64_t>(chosen.size()), static_cast<int>(k), c.n);
  const auto pst = pst_decision(c);
  const auto fr = fr_classify(c);
  // Spread prediction is sufficient only; compare with the exact criteria.
  const bool consistent = (!pred.pst_time || (pst.admits && *pred.pst_time == pst.min_time())) &&
                          (!pred.balanced_fr || fr.kind == FrCase::ProperFr);
  std::optional<Confirmation> conf;
  if (a.verify) {
    require_oracle_size(G);
    ConfirmOptions opt;
    opt.tol = a.tol;
    conf = confirm(c, G, opt);
  }
  if (a.json_out) {
    json prediction = {{"pst_time", to_json(pred.pst_time)},
                       {"balanced_fr", pred.balanced_fr},
                       {"no_claim", pred.no_claim()}};
    std::cout << with_schema({{"spread", {{"ambient", chosen.ambient}, {"k", k}, {"N", chosen.size()},
                                          {"members", format_spread(chosen)}}},
                              {"prediction", prediction},
                              {"prediction_consistent", consistent},
                              {"analysis", analysis_json(c, conf ? &*conf : nullptr)}})
                     .dump(2)
              << "\n";
  } else {
    std::cout << "partial " << k << "-spread in F_2^" << chosen.ambient << " with N=" << chosen.size()
              << " members, l=" << c.ell() << "\n";
    std::cout << format_spread(chosen);
    std::cout << "spread prediction: ";
    if (pred.no_claim()) std::cout << "no claim";
    if (pred.pst_time) std::cout << "PST at " << time_string(*pred.pst_time);
    if (pred.balanced_fr) std::cout << ", balanced FR";
    std::cout << (consistent ? "  (consistent with exact criteria)" : "  (INCONSISTENT with exact criteria)") << "\n";
    print_analysis(std::cout, c, G, conf ? &*conf : nullptr);
  }
  if (!consistent || (conf && !conf->agree())) return kExitDisagree;
  return kExitOk;
}

// --- verify -------------------------------------------------------------------------

struct VerifyArgs {
  std::string level = "quick";
  std::uint64_t seed = 20240601;
  bool json_out = false;
  bool inject_fault = false;
};

/// pst_decision with its valuation comparison made strict; exercises the harness.
PstReport faulty_pst_decision(const ConnectionSet& c) {
  auto r = pst_decision(c);
  const auto table = e_y_table(c);
  const auto t = pst_threshold(c);
  r.admits = true;
  for (std::uint64_t y = 1; y < table.size(); ++y)
    if (!(nu2(c.ell() - table[y]) > t)) r.admits = false;
  return r;
}

int cmd_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  if (a.level == "quick") opt.level = VerifyLevel::Quick;
  else if (a.level == "full") opt.level = VerifyLevel::Full;
  else throw InputError("--level must be quick or full");
  opt.seed = a.seed;
  if (a.inject_fault) opt.pst_decider = faulty_pst_decision;
  const auto report = run_verification(opt);
  if (a.json_out) {
    json groups = json::array();
    for (const auto& g : report.groups)
      groups.push_back({{"group", g.name}, {"cases", g.cases}, {"passed", g.passed()}, {"failures", g.failures}});
    std::cout << with_schema({{"level", a.level}, {"passed", report.passed()}, {"groups", groups}}).dump(2) << "\n";
  } else {
    for (const auto& g : report.groups) {
      std::cout << (g.passed() ? "PASS " : "FAIL ") << std::left << std::setw(30) << g.name << g.cases << " cases\n";
      for (const auto& f : g.failures) std::cout << "     " << f << "\n";
    }
  }
  if (!report.passed()) {
    for (const auto& g : report.groups)
      if (!g.passed()) std::cerr << "failed: " << g.name << "\n";
    return kExitDisagree;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum walks on normal Cayley graphs of extraspecial 2-groups"};
  app.require_subcommand(1);

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Analyze one connection set");
  analyze->add_option("--n", an.n, "Group parameter: |G| = 2^(2n+1)");
  analyze->add_option("--iso-type", an.iso, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  analyze->add_option("--classes", an.classes, "Class representatives, comma-separated bit-strings");
  analyze->add_flag("--include-z", an.include_z, "Put the central involution in S");
  analyze->add_option("--file", an.file, "Connection-set JSON file");
  analyze->add_option("--tol", an.tol, "Oracle verdict tolerance");
  analyze->add_flag("--json", an.json_out, "Emit JSON");
  analyze->add_flag("--verify", an.verify, "Confirm with the numeric oracle");
  analyze->add_flag("--no-strict", an.no_strict, "Accept non-generating connection sets");
  analyze->add_option("--extra-time", an.extra_times, "Extra oracle time p/2^m (meaning p*pi/2^m)");

  SearchArgs se;
  auto* srch = app.add_subcommand("search", "Classify every connection set for n = 1 or 2");
  srch->add_option("--n", se.n)->required();
  srch->add_option("--verify-sample", se.verify_sample, "Oracle-check this many sets");
  srch->add_option("--seed", se.seed);
  srch->add_option("--iso-type", se.iso)->check(CLI::IsMember({"plus", "minus"}));
  srch->add_flag("--json", se.json_out);

  SpreadArgs sp;
  auto* spr = app.add_subcommand("spread", "Build a connection set from a partial spread");
  spr->add_option("--n", sp.n, "Use the regular spread of F_2^(2n)");
  spr->add_option("--k", sp.k, "Member dimension (must equal n for the regular spread)");
  spr->add_option("--file", sp.file, "Spread file");
  spr->add_option("--take", sp.take, "Use the first N members");
  spr->add_option("--members", sp.members, "Comma-separated member indices");
  spr->add_option("--iso-type", sp.iso)->check(CLI::IsMember({"plus", "minus"}));
  spr->add_option("--tol", sp.tol);
  spr->add_flag("--verify", sp.verify);
  spr->add_flag("--json", sp.json_out);

  VerifyArgs ve;
  auto* ver = app.add_subcommand("verify", "Run the self-verification suite");
  ver->add_option("--level", ve.level, "quick or full");
  ver->add_option("--seed", ve.seed);
  ver->add_flag("--json", ve.json_out);
  ver->add_flag("--inject-fault", ve.inject_fault, "Use a deliberately broken PST decision");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(an);
    if (*srch) return cmd_search(se);
    if (*spr) return cmd_spread(sp);
    if (*ver) return cmd_verify(ve);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConfigurationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitDisagree;
  }
  return kExitOk;
}
