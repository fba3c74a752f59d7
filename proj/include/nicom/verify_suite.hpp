#ifndef NICOM_VERIFY_SUITE_HPP
#define NICOM_VERIFY_SUITE_HPP

// End-to-end checks of every moment identity across engines, and the
// registry of identities that have recurrence certificates.

#include "nicom/bigint.hpp"
#include "nicom/closed_forms.hpp"
#include "nicom/fib_lucas.hpp"
#include "nicom/moment_sums.hpp"
#include "nicom/qratio.hpp"
#include "nicom/recurrence_prover.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nicom {

enum class ClaimId { lemma2, lemma3, lemma4, theorem1, theorem6, case4l, nicomachus, fact_identities };

enum class Engine { brute, recursive, closed };

inline std::string claim_name(ClaimId c) {
  switch (c) {
    case ClaimId::lemma2: return "lemma2";
    case ClaimId::lemma3: return "lemma3";
    case ClaimId::lemma4: return "lemma4";
    case ClaimId::theorem1: return "theorem1";
    case ClaimId::theorem6: return "theorem6";
    case ClaimId::case4l: return "case4l";
    case ClaimId::nicomachus: return "nicomachus";
    case ClaimId::fact_identities: return "fact-identities";
  }
  return "unknown";
}

inline const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> claims{ClaimId::lemma2,   ClaimId::lemma3,   ClaimId::lemma4,
                                           ClaimId::theorem1, ClaimId::theorem6, ClaimId::case4l,
                                           ClaimId::nicomachus, ClaimId::fact_identities};
  return claims;
}

inline std::optional<ClaimId> parse_claim(std::string_view name) {
  for (ClaimId c : all_claims())
    if (claim_name(c) == name) return c;
  return std::nullopt;
}

inline std::string engine_name(Engine e) {
  switch (e) {
    case Engine::brute: return "brute";
    case Engine::recursive: return "recursive";
    case Engine::closed: return "closed";
  }
  return "unknown";
}

inline std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "brute") return Engine::brute;
  if (name == "rec" || name == "recursive") return Engine::recursive;
  if (name == "closed") return Engine::closed;
  return std::nullopt;
}

/// One exact comparison at one index.
struct Comparison {
  std::int64_t index;
  Engine engine;
  std::string label;  // which side of a multi-part claim, e.g. "A" or "A'"
  std::string lhs;
  std::string rhs;
  bool equal;
};

struct Failure {
  std::int64_t index;
  std::string lhs;
  std::string rhs;
};

struct ClaimReport {
  ClaimId claim;
  std::int64_t lo = 1;
  std::int64_t hi = 1;
  std::vector<Engine> engines;
  std::vector<Comparison> comparisons;
  std::vector<std::int64_t> skipped;  // indices an engine could not reach
  std::optional<std::vector<Certificate>> certificates;

  std::vector<Failure> failures() const {
    std::vector<Failure> out;
    for (const auto& c : comparisons)
      if (!c.equal) out.push_back({c.index, c.lhs, c.rhs});
    return out;
  }

  bool pass() const {
    const bool compared_ok =
        std::all_of(comparisons.begin(), comparisons.end(), [](const Comparison& c) { return c.equal; });
    const bool certs_ok =
        !certificates || std::all_of(certificates->begin(), certificates->end(),
                                     [](const Certificate& c) { return c.certified(); });
    return compared_ok && certs_ok;
  }
};

struct VerifyOptions {
  bool deep = false;     // extend theorem1 / case4l to l <= 100
  bool certify = false;  // attach recurrence certificates when registered
};

class Suite;

/// A registered recurrence certificate: which sequences to compare in which root set.
struct ProofEntry {
  ClaimId claim;
  std::string name;
  RootSetSpec spec;
  std::function<BigInt(Suite&, std::int64_t)> lhs;
  std::function<BigInt(Suite&, std::int64_t)> rhs;
};

/// How a claim is checked at a single index with a single engine.
struct ClaimEntry {
  ClaimId claim;
  std::int64_t first_index;
  std::int64_t deep_max;  // 0 when --deep does not apply
  std::vector<Engine> supported;
  std::vector<Engine> defaults;
  std::function<void(Suite&, std::int64_t, Engine, std::vector<Comparison>&)> check;
};

const std::vector<ClaimEntry>& claim_registry();
const std::vector<ProofEntry>& proof_registry();

/// Owns the moment memo and brute-force guard shared by all checks.
class Suite {
 public:
  explicit Suite(std::uint64_t guard = kDefaultBruteGuard) : guard_(guard) {}

  MomentTable& table() { return table_; }
  std::uint64_t guard() const { return guard_; }

  FirstThirdMoments moments(std::int64_t K, Engine e) {
    switch (e) {
      case Engine::brute: return brute_moments(K, guard_);
      case Engine::recursive: return recursive_moments(K, table_);
      case Engine::closed: return closed_moments(K);
    }
    throw std::invalid_argument("unknown engine");
  }

  ClaimReport verify(ClaimId claim, std::int64_t k_max, std::vector<Engine> engines = {},
                     VerifyOptions options = {});

  std::vector<Certificate> prove(ClaimId claim, std::optional<std::size_t> extra_window = {});

 private:
  MomentTable table_;
  std::uint64_t guard_;
};

namespace detail {

inline Comparison compare(std::int64_t index, Engine e, std::string label, const BigInt& lhs,
                          const BigInt& rhs) {
  return {index, e, std::move(label), lhs.str(), rhs.str(), lhs == rhs};
}

inline Comparison compare(std::int64_t index, Engine e, std::string label, const Rational& lhs,
                          const Rational& rhs) {
  return {index, e, std::move(label), to_fraction_string(lhs), to_fraction_string(rhs), lhs == rhs};
}

inline BigInt engine_a(Suite& s, std::int64_t K, unsigned power, Engine e) {
  if (e == Engine::brute) return a_brute({K, power, 0}, s.guard());
  return a_recursive({K, power, 0}, s.table());
}

inline BigInt engine_a_prime(Suite& s, std::int64_t K, unsigned power, Engine e) {
  if (e == Engine::brute) return a_prime_brute(K, power, s.guard());
  return a_prime(K, power, s.table());
}

}  // namespace detail

inline const std::vector<ClaimEntry>& claim_registry() {
  using E = Engine;
  static const std::vector<ClaimEntry> registry{
      {ClaimId::lemma2, 1, 0, {E::brute, E::recursive}, {E::recursive},
       [](Suite& s, std::int64_t k, Engine e, std::vector<Comparison>& out) {
         out.push_back(detail::compare(k, e, "A", detail::engine_a(s, k, 1, e), lemma2_a(k)));
         out.push_back(
             detail::compare(k, e, "A'", detail::engine_a_prime(s, k, 1, e), lemma2_a_prime(k)));
       }},
      {ClaimId::lemma3, 1, 0, {E::brute, E::recursive}, {E::recursive},
       [](Suite& s, std::int64_t k, Engine e, std::vector<Comparison>& out) {
         out.push_back(detail::compare(k, e, "A3", detail::engine_a(s, k, 3, e), lemma3_a3(k)));
       }},
      {ClaimId::lemma4, 1, 0, {E::brute, E::recursive}, {E::recursive},
       [](Suite& s, std::int64_t k, Engine e, std::vector<Comparison>& out) {
         out.push_back(
             detail::compare(k, e, "A'3", detail::engine_a_prime(s, k, 3, e), lemma4_a_prime3(k)));
       }},
      {ClaimId::theorem1, 3, 403, {E::brute, E::recursive, E::closed}, {E::recursive, E::closed},
       [](Suite& s, std::int64_t K, Engine e, std::vector<Comparison>& out) {
         out.push_back(detail::compare(K, e, "Qdiff", q_diff_from(s.moments(K, e)), theorem1_rhs(K)));
       }},
      {ClaimId::theorem6, 1, 0, {E::brute, E::recursive, E::closed}, {E::closed},
       [](Suite& s, std::int64_t k, Engine e, std::vector<Comparison>& out) {
         BigInt a, ap;
         if (e == E::closed) {
           a = lemma2_a(2 * k);
           ap = lemma2_a_prime(2 * k);
         } else {
           a = detail::engine_a(s, 2 * k, 1, e);
           ap = detail::engine_a_prime(s, 2 * k, 1, e);
         }
         out.push_back(detail::compare(k, e, "LCM", lcm(a, ap), theorem6_rhs(k)));
       }},
      {ClaimId::case4l, 1, 100, {E::brute, E::recursive, E::closed}, {E::recursive, E::closed},
       [](Suite& s, std::int64_t l, Engine e, std::vector<Comparison>& out) {
         const IdentitySides sides = case4l_sides(l, s.moments(4 * l, e));
         out.push_back(detail::compare(l, e, "sides", sides.lhs, sides.rhs));
       }},
      {ClaimId::nicomachus, 1, 0, {E::brute}, {E::brute},
       [](Suite&, std::int64_t m, Engine e, std::vector<Comparison>& out) {
         BigInt cubes = 0, firsts = 0;
         for (std::int64_t n = 1; n <= m; ++n) {
           const BigInt b = n;
           cubes += b * b * b;
           firsts += b;
         }
         out.push_back(detail::compare(m, e, "cubes", cubes, firsts * firsts));
       }},
      {ClaimId::fact_identities, 3, 0, {E::closed}, {E::closed},
       [](Suite&, std::int64_t n, Engine e, std::vector<Comparison>& out) {
         const FibMinusOneFactors f = fib_minus_one_factors(n);
         out.push_back(detail::compare(n, e, "F-1", fib(n) - 1, f.fibonacci * f.lucas));
       }},
  };
  return registry;
}

inline const ClaimEntry& claim_entry(ClaimId claim) {
  for (const auto& e : claim_registry())
    if (e.claim == claim) return e;
  throw std::invalid_argument("unregistered claim " + claim_name(claim));
}

inline const std::vector<ProofEntry>& proof_registry() {
  static const std::vector<ProofEntry> registry = [] {
    // Root sets: {+-phi^l : |l| <= 2} for the first moments in K; the
    // parity subsequences of third moments live in {phi^(2l) : |l| <= 4};
    // the Q-difference classes mod 4 in {phi^(4l) : |l| <= 10}.
    const RootSetSpec lemma2_spec{RootShape::signed_phi_powers, 2};
    const RootSetSpec parity_spec{RootShape::even_phi_powers, 4};
    const RootSetSpec class_spec{RootShape::phi4_powers, 10};
    std::vector<ProofEntry> r;
    r.push_back({ClaimId::lemma2, "lemma2/A", lemma2_spec,
                 [](Suite& s, std::int64_t k) { return a_recursive({k, 1, 0}, s.table()); },
                 [](Suite&, std::int64_t k) { return lemma2_a(k); }});
    r.push_back({ClaimId::lemma2, "lemma2/A'", lemma2_spec,
                 [](Suite& s, std::int64_t k) { return a_prime(k, 1, s.table()); },
                 [](Suite&, std::int64_t k) { return lemma2_a_prime(k); }});
    // Parity classes K = 2k + shift, shift in {0, -1}, as sequences in k.
    for (std::int64_t shift : {0, -1}) {
      const std::string cls = shift == 0 ? "K=2k" : "K=2k-1";
      r.push_back({ClaimId::lemma3, "lemma3/" + cls, parity_spec,
                   [shift](Suite& s, std::int64_t k) { return a_recursive({2 * k + shift, 3, 0}, s.table()); },
                   [shift](Suite&, std::int64_t k) { return lemma3_a3(2 * k + shift); }});
    }
    for (std::int64_t shift : {0, -1}) {
      const std::string cls = shift == 0 ? "K=2k" : "K=2k-1";
      r.push_back({ClaimId::lemma4, "lemma4/" + cls, parity_spec,
                   [shift](Suite& s, std::int64_t k) { return a_prime(2 * k + shift, 3, s.table()); },
                   [shift](Suite&, std::int64_t k) { return lemma4_a_prime3(2 * k + shift); }});
    }
    // Residue classes K = 4l + r, as sequences in l, moments from the recursion.
    for (std::int64_t res = 0; res < 4; ++res) {
      auto sides = [res](Suite& s, std::int64_t l) {
        const std::int64_t K = 4 * l + res;
        return theorem1_reduced_sides(K, recursive_moments(K, s.table()));
      };
      r.push_back({ClaimId::theorem1, "theorem1/K=4l+" + std::to_string(res), class_spec,
                   [sides](Suite& s, std::int64_t l) { return sides(s, l).lhs; },
                   [sides](Suite& s, std::int64_t l) { return sides(s, l).rhs; }});
    }
    r.push_back({ClaimId::case4l, "case4l", class_spec,
                 [](Suite& s, std::int64_t l) { return case4l_sides(l, s.table()).lhs; },
                 [](Suite& s, std::int64_t l) { return case4l_sides(l, s.table()).rhs; }});
    return r;
  }();
  return registry;
}

inline bool has_proof(ClaimId claim) {
  const auto& r = proof_registry();
  return std::any_of(r.begin(), r.end(), [&](const ProofEntry& e) { return e.claim == claim; });
}

inline std::vector<Certificate> Suite::prove(ClaimId claim, std::optional<std::size_t> extra_window) {
  std::vector<Certificate> out;
  for (const ProofEntry& entry : proof_registry()) {
    if (entry.claim != claim) continue;
    const std::size_t window = extra_window.value_or(2 * cardinality(entry.spec));
    out.push_back(certify_identity(
        entry.name, [&](std::int64_t i) { return entry.lhs(*this, i); },
        [&](std::int64_t i) { return entry.rhs(*this, i); }, entry.spec, window));
  }
  if (out.empty()) {
    throw std::invalid_argument("no recurrence certificate registered for claim " + claim_name(claim));
  }
  return out;
}

inline ClaimReport Suite::verify(ClaimId claim, std::int64_t k_max, std::vector<Engine> engines,
                                 VerifyOptions options) {
  const ClaimEntry& entry = claim_entry(claim);
  ClaimReport report;
  report.claim = claim;
  report.lo = entry.first_index;
  report.hi = options.deep && entry.deep_max > 0 ? std::max(k_max, entry.deep_max) : k_max;
  if (report.hi < report.lo) {
    throw std::invalid_argument(claim_name(claim) + ": index range must reach " +
                                std::to_string(report.lo) + ", got " + std::to_string(report.hi));
  }

  // For the lemmas the closed form is the right-hand side, so "closed" adds
  // nothing to compare; drop it and fall back to the defaults if it was alone.
  std::vector<Engine> lhs_engines;
  for (Engine e : engines) {
    const bool supported =
        std::find(entry.supported.begin(), entry.supported.end(), e) != entry.supported.end();
    const bool rhs_only = e == Engine::closed &&
                          (claim == ClaimId::lemma2 || claim == ClaimId::lemma3 || claim == ClaimId::lemma4);
    if (!supported && !rhs_only) {
      throw std::invalid_argument("engine " + engine_name(e) + " does not apply to claim " +
                                  claim_name(claim));
    }
    if (supported && std::find(lhs_engines.begin(), lhs_engines.end(), e) == lhs_engines.end())
      lhs_engines.push_back(e);
  }
  if (lhs_engines.empty()) lhs_engines = entry.defaults;
  report.engines = lhs_engines;

  for (std::int64_t i = report.lo; i <= report.hi; ++i) {
    for (Engine e : lhs_engines) {
      try {
        entry.check(*this, i, e, report.comparisons);
      } catch (const BruteForceGuardError&) {
        if (report.skipped.empty() || report.skipped.back() != i) report.skipped.push_back(i);
      }
    }
  }
  if (options.certify && has_proof(claim)) report.certificates = prove(claim);
  return report;
}

/// One-shot wrappers over a fresh Suite.
inline ClaimReport verify_claim(ClaimId claim, std::int64_t k_max, std::vector<Engine> engines = {},
                                VerifyOptions options = {}, std::uint64_t guard = kDefaultBruteGuard) {
  Suite suite(guard);
  return suite.verify(claim, k_max, std::move(engines), options);
}

inline std::vector<Certificate> prove_claim(ClaimId claim, std::optional<std::size_t> extra_window = {}) {
  Suite suite;
  return suite.prove(claim, extra_window);
}

}  // namespace nicom

#endif  // NICOM_VERIFY_SUITE_HPP
