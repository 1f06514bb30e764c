#pragma once

// Command-line front end. Exit codes: 0 success / verification passed,
// 1 verification failed (report on stdout), 2 invalid input or usage error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sympbrsk/sympbrsk.hpp"

namespace sympbrsk::cli {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;

struct Options {
  std::vector<int> v;
  std::vector<int> w;
  int d = 0;
  std::string format = "json";
  unsigned jobs = 1;
  bool all_chains = false;
  int max_size = 4;
  std::optional<int> max_degree;
  int m = 0;
  std::string monomial;
  std::string tableau;
  bool inverse = false;
  std::string kind = "all";
  std::string what;
};

namespace detail {

inline int resolved_d(const Options& o) {
  if (o.v.empty()) throw InvalidInput("--v is required");
  const int d = o.d > 0 ? o.d : static_cast<int>(o.v.size());
  return d;
}

inline IndexSet parse_v(const Options& o) { return IndexSet::from_unsorted(o.v, 2 * resolved_d(o)); }

inline IndexSet parse_w(const Options& o) {
  if (o.w.empty()) throw InvalidInput("--w is required");
  return IndexSet::from_unsorted(o.w, 2 * resolved_d(o));
}

inline DominationMode mode(const Options& o) {
  return o.all_chains ? DominationMode::AllChains : DominationMode::MaximalChains;
}

inline int degree_bound(const Options& o, int fallback) { return o.max_degree.value_or(fallback); }

inline void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

inline int cmd_grid(const Options& o, std::ostream& out) {
  const IndexSet v = parse_v(o);
  const int d = half_ambient(v);
  json j{{"v", to_json(v)}, {"d", d}};
  auto add = [&](GridKind k) { j[grid_name(k)] = cells_to_json(grid_cells(v, k)); };
  if (o.kind == "all") {
    const Grids g = build_grids(v, d);
    j["R"] = cells_to_json(g.R);
    j["N"] = cells_to_json(g.N);
    j["Ntilde"] = cells_to_json(g.NTilde);
    j["N_folded"] = cells_to_json(g.NFolded);
  } else if (o.kind == "R") {
    add(GridKind::R);
  } else if (o.kind == "N") {
    add(GridKind::N);
  } else if (o.kind == "Ntilde") {
    add(GridKind::NTilde);
  } else if (o.kind == "N_folded") {
    add(GridKind::NFolded);
  } else {
    throw InvalidInput("unknown grid kind " + o.kind);
  }
  emit(out, j);
  return kExitOk;
}

inline Monomial read_ntilde_monomial(const Options& o) {
  if (o.monomial.empty()) throw InvalidInput("--monomial is required");
  const IndexSet v = parse_v(o);
  Monomial u = monomial_from_json(parse_json(o.monomial), &v);
  require_in_grid(u, GridKind::NTilde);
  return u;
}

inline int cmd_brsk(const Options& o, std::ostream& out) {
  if (o.inverse) {
    if (o.tableau.empty()) throw InvalidInput("--tableau is required with --inverse");
    const IndexSet v = parse_v(o);
    emit(out, to_json(brsk_inverse(tableau_pair_from_json(parse_json(o.tableau)), v)));
    return kExitOk;
  }
  emit(out, to_json(brsk(read_ntilde_monomial(o))));
  return kExitOk;
}

inline int cmd_pitilde(const Options& o, std::ostream& out) {
  emit(out, to_json(pi_tilde(read_ntilde_monomial(o))));
  return kExitOk;
}

inline int cmd_eta(const Options& o, std::ostream& out) {
  if (o.tableau.empty()) throw InvalidInput("--tableau is required");
  const IndexSet v = parse_v(o);
  emit(out, to_json(eta(tableau_from_json(parse_json(o.tableau), half_ambient(v)), v)));
  return kExitOk;
}

inline int cmd_hilbert(const Options& o, std::ostream& out) {
  const IndexSet v = parse_v(o);
  const IndexSet w = parse_w(o);
  const HilbertTable t = hilbert_function(w, v, degree_bound(o, 3), mode(o));
  if (o.format == "csv") {
    for (std::size_t m = 0; m < t.counts.size(); ++m) out << m << ',' << t.counts[m] << '\n';
  } else {
    emit(out, json{{"v", to_json(t.v)}, {"w", to_json(t.w)}, {"counts", t.counts}});
  }
  return kExitOk;
}

inline int cmd_enumerate(const Options& o, std::ostream& out) {
  const IndexSet v = parse_v(o);
  if (o.what == "S") {
    for (const auto& u : enumerate_S_w_v(parse_w(o), v, o.m, mode(o))) emit(out, to_json(u));
  } else if (o.what == "SM") {
    for (const auto& t : enumerate_SM_w_v(parse_w(o), v, o.m)) emit(out, to_json(t));
  } else if (o.what == "SMvv") {
    for (const auto& t : enumerate_SM_vv(v, degree_bound(o, 2))) emit(out, to_json(t));
  } else if (o.what == "Ntilde") {
    const auto cells = grid_cells(v, GridKind::NTilde);
    for (int k = 0; k <= o.max_size; ++k)
      for_each_multiset(std::span<const Cell>(cells), k,
                        [&](const std::vector<Cell>& cs) { emit(out, to_json(Monomial(v, cs))); });
  } else {
    throw InvalidInput("unknown enumeration " + o.what);
  }
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const IndexSet v = parse_v(o);
  VerificationReport r;
  if (o.what == "main") {
    r = verify_main_theorem(v, o.max_size, o.jobs);
  } else if (o.what == "roundtrip") {
    r = verify_roundtrip(v, o.max_size, o.jobs);
  } else if (o.what == "eta") {
    r = verify_eta_bijection(v, degree_bound(o, 2), o.jobs);
  } else if (o.what == "counting") {
    r = verify_counting(v, parse_w(o), degree_bound(o, 3), mode(o), o.jobs);
  } else {
    throw InvalidInput("unknown verification " + o.what);
  }
  emit(out, to_json(r));
  err << r.harness << ": " << r.instances_checked << " instances, "
      << r.mismatches.size() << " mismatches, "
      << std::chrono::duration<double>(r.elapsed).count() << " s\n";
  return r.pass ? kExitOk : kExitFailed;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bounded RSK, the peeling map and Hilbert-function counts for symplectic Schubert varieties",
               "sympbrsk"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--v", o.v, "point v as a comma list, e.g. 1,3")->delimiter(',');
  app.add_option("--w", o.w, "Schubert index w as a comma list")->delimiter(',');
  app.add_option("--d", o.d, "half ambient size (defaults to |v|)");
  app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--all-chains", o.all_chains, "check domination on every chain, not only maximal ones");
  app.add_option("--max-size", o.max_size, "largest monomial size")->check(CLI::NonNegativeNumber);
  app.add_option("--max-degree,--max-m", o.max_degree, "largest degree")->check(CLI::NonNegativeNumber);

  auto* grid = app.add_subcommand("grid", "cell grids of v");
  grid->add_option("--kind", o.kind, "all, R, N, Ntilde or N_folded");
  auto* brsk_cmd = app.add_subcommand("brsk", "bounded RSK of a monomial over Ntilde");
  brsk_cmd->add_option("--monomial", o.monomial, "cell list [[r,c],...] or monomial object");
  brsk_cmd->add_option("--tableau", o.tableau, "{\"P\":..,\"Q\":..} for --inverse");
  brsk_cmd->add_flag("--inverse", o.inverse, "invert a tableau pair");
  auto* pit = app.add_subcommand("pitilde", "iterated peeling of a monomial over Ntilde");
  pit->add_option("--monomial", o.monomial, "cell list [[r,c],...] or monomial object");
  auto* eta_cmd = app.add_subcommand("eta", "map a tableau in SM^{v,v} to a folded monomial");
  eta_cmd->add_option("--tableau", o.tableau, "{\"pairs\":[{\"top\":..,\"bot\":..},..]}");
  auto* hil = app.add_subcommand("hilbert", "Hilbert function |S_w^v(m)| for m = 0..max");
  (void)hil;
  auto* en = app.add_subcommand("enumerate", "stream a family as newline-delimited JSON");
  en->add_option("what", o.what, "S, SM, SMvv or Ntilde")->required();
  en->add_option("--m", o.m, "degree")->check(CLI::NonNegativeNumber);
  auto* ver = app.add_subcommand("verify", "run an exhaustive verification harness");
  ver->add_option("what", o.what, "main, roundtrip, eta or counting")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitInvalid;
  }

  try {
    if (grid->parsed()) return detail::cmd_grid(o, out);
    if (brsk_cmd->parsed()) return detail::cmd_brsk(o, out);
    if (pit->parsed()) return detail::cmd_pitilde(o, out);
    if (eta_cmd->parsed()) return detail::cmd_eta(o, out);
    if (hil->parsed()) return detail::cmd_hilbert(o, out);
    if (en->parsed()) return detail::cmd_enumerate(o, out);
    if (ver->parsed()) return detail::cmd_verify(o, out, err);
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const NotInvertible& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitInvalid;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sympbrsk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sympbrsk::cli
