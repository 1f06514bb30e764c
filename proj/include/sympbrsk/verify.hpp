#pragma once

// Exhaustive verification harnesses. Failures are data: every broken
// instance becomes a Mismatch carrying the input and both sides.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sympbrsk/bridge.hpp"
#include "sympbrsk/brsk.hpp"
#include "sympbrsk/multiset.hpp"
#include "sympbrsk/parallel.hpp"
#include "sympbrsk/peel.hpp"
#include "sympbrsk/serialize.hpp"

namespace sympbrsk {

struct Mismatch {
  std::string what;
  json input;
  json expected;
  json actual;
};

struct VerificationReport {
  std::string harness;
  json parameters;
  std::uint64_t instances_checked = 0;
  std::uint64_t instances_expected = 0;
  std::vector<Mismatch> mismatches;
  json details = json::object();
  std::chrono::nanoseconds elapsed{0};
  bool pass = false;
};

/// Report as JSON. Elapsed time is left out so reports are reproducible.
inline json to_json(const VerificationReport& r) {
  json mism = json::array();
  for (const auto& m : r.mismatches)
    mism.push_back(json{{"what", m.what}, {"input", m.input}, {"expected", m.expected},
                        {"actual", m.actual}});
  return json{{"harness", r.harness},
              {"parameters", r.parameters},
              {"instances_checked", r.instances_checked},
              {"instances_expected", r.instances_expected},
              {"pass", r.pass},
              {"details", r.details},
              {"mismatches", mism}};
}

namespace detail {

class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() { report_.elapsed = std::chrono::steady_clock::now() - start_; }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

inline void finalize(VerificationReport& r) {
  r.pass = r.mismatches.empty() && r.instances_checked == r.instances_expected;
}

inline void require_d_subset(const IndexSet& v, const char* who) {
  if (static_cast<int>(v.size()) != half_ambient(v))
    throw InvalidInput(std::string(who) + ": v must be a d-subset of [2d]");
}

template <class T>
std::vector<T> sorted_copy(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

// Per-row comparison of the peel trace against brsk. Empty when they agree.
inline std::optional<std::string> main_theorem_defect(const Monomial& u) {
  const PeelTrace trace = pi_tilde(u);
  const NotchedTableauPair t = brsk(u);
  if (auto defect = tableau_pair_defect(t); !defect.empty()) return "brsk output: " + defect;
  if (trace.steps.size() != t.rows())
    return "peel count " + std::to_string(trace.steps.size()) + " != tableau rows " +
           std::to_string(t.rows());
  std::size_t peeled = 0;
  for (std::size_t r = 0; r < trace.steps.size(); ++r) {
    const auto& step = trace.steps[r];
    std::vector<int> rows, cols;
    for (Cell c : step.distinguished) {
      rows.push_back(c.row);
      cols.push_back(c.col);
    }
    if (sorted_copy(rows) != sorted_copy(t.Q[r]))
      return "row " + std::to_string(r + 1) + ": distinguished rows differ from Q";
    if (sorted_copy(cols) != sorted_copy(t.P[r]))
      return "row " + std::to_string(r + 1) + ": distinguished columns differ from P";
    if (difference_size(step.w, u.v()) != static_cast<int>(step.distinguished.size()))
      return "step " + std::to_string(r) + " is not degree preserving";
    if (!leq(u.v(), step.w) || step.w == u.v())
      return "step " + std::to_string(r) + " word is not strictly above v";
    peeled += step.distinguished.size();
  }
  if (peeled != static_cast<std::size_t>(u.degree())) return "peeled cell count != |U|";
  if (rows_to_standard_monomial(t, u.v()) != trace.words())
    return "standard monomial read from brsk differs from pi_tilde words";
  return std::nullopt;
}

inline std::vector<Monomial> ntilde_corpus(const IndexSet& v, int nmax) {
  const auto cells = grid_cells(v, GridKind::NTilde);
  std::vector<Monomial> corpus;
  for (auto& cs : multisets_up_to(std::span<const Cell>(cells), nmax))
    corpus.emplace_back(v, std::move(cs));
  return corpus;
}

}  // namespace detail

/// pi_tilde(U) and brsk(U) agree row by row for every multiset U over
/// Ntilde^v of size <= nmax.
inline VerificationReport verify_main_theorem(const IndexSet& v, int nmax, unsigned jobs = 1) {
  detail::require_d_subset(v, "verify_main_theorem");
  if (nmax < 0) throw InvalidInput("verify_main_theorem: negative size bound");
  VerificationReport r;
  {
    detail::ReportTimer timer(r);
    r.harness = "main";
    r.parameters = json{{"v", to_json(v)}, {"d", half_ambient(v)}, {"max_size", nmax}};
    const auto corpus = detail::ntilde_corpus(v, nmax);
    r.instances_expected =
        multiset_count_up_to(grid_cells(v, GridKind::NTilde).size(), static_cast<std::uint64_t>(nmax));
    auto results = parallel_map<std::optional<Mismatch>>(
        std::span<const Monomial>(corpus), jobs, [](const Monomial& u) -> std::optional<Mismatch> {
          std::optional<std::string> defect;
          try {
            defect = detail::main_theorem_defect(u);
          } catch (const std::exception& e) {
            defect = std::string("exception: ") + e.what();
          }
          if (!defect) return std::nullopt;
          json expected, actual;
          try {
            expected = to_json(pi_tilde(u));
            actual = to_json(brsk(u));
          } catch (const std::exception&) {
          }
          return Mismatch{*defect, to_json(u), expected, actual};
        });
    r.instances_checked = corpus.size();
    for (auto& m : results)
      if (m) r.mismatches.push_back(std::move(*m));
    detail::finalize(r);
  }
  return r;
}

/// brsk_inverse(brsk(U)) == U on the same corpus.
inline VerificationReport verify_roundtrip(const IndexSet& v, int nmax, unsigned jobs = 1) {
  detail::require_d_subset(v, "verify_roundtrip");
  if (nmax < 0) throw InvalidInput("verify_roundtrip: negative size bound");
  VerificationReport r;
  {
    detail::ReportTimer timer(r);
    r.harness = "roundtrip";
    r.parameters = json{{"v", to_json(v)}, {"d", half_ambient(v)}, {"max_size", nmax}};
    const auto corpus = detail::ntilde_corpus(v, nmax);
    r.instances_expected =
        multiset_count_up_to(grid_cells(v, GridKind::NTilde).size(), static_cast<std::uint64_t>(nmax));
    auto results = parallel_map<std::optional<Mismatch>>(
        std::span<const Monomial>(corpus), jobs, [&v](const Monomial& u) -> std::optional<Mismatch> {
          const NotchedTableauPair t = brsk(u);
          try {
            Monomial back = brsk_inverse(t, v);
            if (back == u) return std::nullopt;
            return Mismatch{"round trip changed the monomial", to_json(u), to_json(u), to_json(back)};
          } catch (const std::exception& e) {
            return Mismatch{std::string("exception: ") + e.what(), to_json(u), to_json(u), to_json(t)};
          }
        });
    r.instances_checked = corpus.size();
    for (auto& m : results)
      if (m) r.mismatches.push_back(std::move(*m));
    detail::finalize(r);
  }
  return r;
}

/// eta is injective and degree preserving on SM^{v,v} up to maxdeg, every
/// intermediate monomial is special, and the image has as many elements of
/// each degree as there are N_folded multisets of that size.
inline VerificationReport verify_eta_bijection(const IndexSet& v, int maxdeg, unsigned jobs = 1) {
  const int d = half_ambient(v);
  require_I_d(v, d, "verify_eta_bijection");
  if (maxdeg < 0) throw InvalidInput("verify_eta_bijection: negative degree bound");
  VerificationReport r;
  {
    detail::ReportTimer timer(r);
    r.harness = "eta";
    r.parameters = json{{"v", to_json(v)}, {"d", d}, {"max_degree", maxdeg}};
    const auto tableaux = enumerate_SM_vv(v, maxdeg);
    const std::size_t folded_cells = grid_cells(v, GridKind::NFolded).size();
    r.instances_expected = multiset_count_up_to(folded_cells, static_cast<std::uint64_t>(maxdeg));

    struct Outcome {
      std::optional<Monomial> image;
      std::optional<Mismatch> failure;
    };
    auto outcomes = parallel_map<Outcome>(
        std::span<const StandardTableau>(tableaux), jobs, [&v](const StandardTableau& t) -> Outcome {
          try {
            const Monomial u = unfolded_eta(t, v);
            const auto sp = is_special(u);
            if (!sp.special)
              return {std::nullopt,
                      Mismatch{"intermediate monomial is not special", to_json(t),
                               json{{"special", true}}, to_json(u)}};
            Monomial image = fold_g(u);
            const int deg = tableau_degree(t, v).doubled / 2;
            if (image.degree() != deg)
              return {std::nullopt, Mismatch{"eta is not degree preserving", to_json(t), deg,
                                             to_json(image)}};
            require_in_grid(image, GridKind::NFolded);
            return {std::move(image), std::nullopt};
          } catch (const std::exception& e) {
            return {std::nullopt, Mismatch{std::string("exception: ") + e.what(), to_json(t),
                                           nullptr, nullptr}};
          }
        });

    std::map<Monomial, std::size_t> first_preimage;
    std::vector<std::uint64_t> per_degree(maxdeg + 1, 0);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      auto& o = outcomes[i];
      if (o.failure) {
        r.mismatches.push_back(std::move(*o.failure));
        continue;
      }
      auto [it, inserted] = first_preimage.emplace(*o.image, i);
      if (!inserted) {
        r.mismatches.push_back(Mismatch{"eta is not injective", to_json(tableaux[i]),
                                        to_json(tableaux[it->second]), to_json(*o.image)});
        continue;
      }
      ++per_degree[o.image->degree()];
    }
    json expected_counts = json::array();
    json image_counts = json::array();
    for (int m = 0; m <= maxdeg; ++m) {
      const std::uint64_t want = multiset_coefficient(folded_cells, m);
      expected_counts.push_back(want);
      image_counts.push_back(per_degree[m]);
      if (per_degree[m] != want)
        r.mismatches.push_back(Mismatch{"image cardinality differs in degree " + std::to_string(m),
                                        json{{"degree", m}}, want, per_degree[m]});
    }
    r.details = json{{"image_per_degree", image_counts}, {"folded_multisets_per_degree", expected_counts}};
    r.instances_checked = tableaux.size();
    detail::finalize(r);
  }
  return r;
}

/// |SM_w^v(m)| == |S_w^v(m)| for m = 0..mmax.
inline VerificationReport verify_counting(const IndexSet& v, const IndexSet& w, int mmax,
                                          DominationMode mode = DominationMode::MaximalChains,
                                          unsigned jobs = 1) {
  detail::require_v_leq_w(w, v, "verify_counting");
  if (mmax < 0) throw InvalidInput("verify_counting: negative degree bound");
  VerificationReport r;
  {
    detail::ReportTimer timer(r);
    r.harness = "counting";
    r.parameters = json{{"v", to_json(v)}, {"w", to_json(w)}, {"d", half_ambient(v)},
                        {"max_degree", mmax},
                        {"domination", mode == DominationMode::AllChains ? "all-chains" : "maximal-chains"}};
    const auto cells = grid_cells(v, GridKind::R);
    const auto corpus = multisets_up_to(std::span<const Cell>(cells), mmax);
    r.instances_expected = multiset_count_up_to(cells.size(), static_cast<std::uint64_t>(mmax));
    auto dominated = parallel_map<char>(
        std::span<const std::vector<Cell>>(corpus), jobs,
        [&](const std::vector<Cell>& cs) -> char { return dominates_monomial(w, Monomial(v, cs), mode); });
    std::vector<std::uint64_t> s_counts(mmax + 1, 0);
    for (std::size_t i = 0; i < corpus.size(); ++i)
      if (dominated[i]) ++s_counts[corpus[i].size()];
    r.instances_checked = corpus.size();

    json s_json = json::array(), sm_json = json::array();
    for (int m = 0; m <= mmax; ++m) {
      const std::uint64_t sm = enumerate_SM_w_v(w, v, m).size();
      s_json.push_back(s_counts[m]);
      sm_json.push_back(sm);
      if (sm != s_counts[m])
        r.mismatches.push_back(Mismatch{"|SM_w^v(m)| != |S_w^v(m)|", json{{"m", m}}, s_counts[m], sm});
    }
    r.details = json{{"S", s_json}, {"SM", sm_json}};
    detail::finalize(r);
  }
  return r;
}

}  // namespace sympbrsk
