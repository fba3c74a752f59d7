#include "cli.hpp"

#include "nicom/nicom.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace nicom::cli {
namespace {

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormats{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Engine engine_from(const std::string& name) {
  if (auto e = parse_engine(name)) return *e;
  throw UsageError("unknown engine '" + name + "' (expected brute, rec or closed)");
}

std::vector<Engine> engines_from(const std::vector<std::string>& names) {
  std::vector<Engine> out;
  for (const auto& n : names) out.push_back(engine_from(n));
  return out;
}

ClaimId claim_from(const std::string& name) {
  if (auto c = parse_claim(name)) return *c;
  std::string known;
  for (ClaimId c : all_claims()) known += (known.empty() ? "" : ", ") + claim_name(c);
  throw UsageError("unknown claim '" + name + "' (expected one of " + known + ")");
}

struct ComputeArgs {
  std::string sum = "A";
  std::int64_t k = 0;
  unsigned s = 1;
  unsigned j = 0;
  std::string engine = "rec";
  Format format = Format::text;
};

struct Computed {
  std::string value;
  std::optional<BigInt> integer;
};

Computed compute_value(const ComputeArgs& a, Suite& suite) {
  const Engine engine = engine_from(a.engine);
  if (a.sum == "Qdiff") {
    if (a.k <= 2) throw UsageError("Qdiff needs --k >= 3");
    return {to_fraction_string(q_diff_from(suite.moments(a.k, engine))), std::nullopt};
  }
  if (a.k < 1) throw UsageError("--k must be >= 1");
  const bool prime = a.sum == "Aprime";
  if (prime && a.j != 0) throw UsageError("--j applies only to --sum A");
  BigInt v;
  switch (engine) {
    case Engine::brute:
      v = prime ? a_prime_brute(a.k, a.s, suite.guard()) : a_brute({a.k, a.s, a.j}, suite.guard());
      break;
    case Engine::recursive:
      v = prime ? a_prime(a.k, a.s, suite.table()) : a_recursive({a.k, a.s, a.j}, suite.table());
      break;
    case Engine::closed:
      if (a.j != 0 || (a.s != 1 && a.s != 3)) {
        throw UsageError("closed forms exist only for s in {1, 3} with j = 0");
      }
      if (prime) {
        v = a.s == 1 ? lemma2_a_prime(a.k) : lemma4_a_prime3(a.k);
      } else {
        v = a.s == 1 ? lemma2_a(a.k) : lemma3_a3(a.k);
      }
      break;
  }
  return {v.str(), v};
}

int cmd_compute(const ComputeArgs& a, Suite& suite, std::ostream& out) {
  const Computed c = compute_value(a, suite);
  switch (a.format) {
    case Format::text:
      out << c.value << '\n';
      break;
    case Format::json: {
      Json j;
      j["sum"] = a.sum;
      j["k"] = a.k;
      j["s"] = a.s;
      j["j"] = a.j;
      j["engine"] = engine_name(engine_from(a.engine));
      j["value"] = c.value;
      out << dump(j) << '\n';
      break;
    }
    case Format::csv:
      out << "sum,k,s,j,engine,value\n"
          << a.sum << ',' << a.k << ',' << a.s << ',' << a.j << ','
          << engine_name(engine_from(a.engine)) << ',' << c.value << '\n';
      break;
  }
  return kOk;
}

struct VerifyArgs {
  std::string claim;
  std::int64_t kmax = 0;
  std::vector<std::string> engines;
  bool deep = false;
  bool certify = false;
  Format format = Format::text;
};

int cmd_verify(const VerifyArgs& a, Suite& suite, std::ostream& out) {
  const ClaimReport r =
      suite.verify(claim_from(a.claim), a.kmax, engines_from(a.engines), {a.deep, a.certify});
  switch (a.format) {
    case Format::json:
      out << dump(to_json(r)) << '\n';
      break;
    case Format::csv:
      out << to_csv(r);
      break;
    case Format::text: {
      std::string engines;
      for (Engine e : r.engines) engines += (engines.empty() ? "" : ",") + engine_name(e);
      out << claim_name(r.claim) << " [" << r.lo << ".." << r.hi << "] engines " << engines << ": "
          << (r.pass() ? "pass" : "fail") << " (" << r.comparisons.size() << " comparisons)\n";
      for (const Failure& f : r.failures()) {
        out << "  index " << f.index << ": " << f.lhs << " != " << f.rhs << '\n';
      }
      if (!r.skipped.empty()) {
        out << "  skipped (beyond brute-force guard " << suite.guard() << "):";
        for (auto i : r.skipped) out << ' ' << i;
        out << '\n';
      }
      if (r.certificates) {
        for (const auto& c : *r.certificates) {
          out << "  certificate " << c.claim << ": " << (c.certified() ? "certified" : "refuted") << '\n';
        }
      }
      break;
    }
  }
  return r.pass() ? kOk : kVerificationFailed;
}

struct ProveArgs {
  std::string claim;
  std::optional<std::size_t> window;
  Format format = Format::text;
};

int cmd_prove(const ProveArgs& a, Suite& suite, std::ostream& out) {
  const ClaimId claim = claim_from(a.claim);
  if (!has_proof(claim)) throw UsageError("no recurrence certificate registered for " + a.claim);
  const std::vector<Certificate> certs = suite.prove(claim, a.window);
  bool all = true;
  for (const auto& c : certs) all = all && c.certified();
  switch (a.format) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& c : certs) arr.push_back(to_json(c));
      out << dump(arr) << '\n';
      break;
    }
    case Format::csv:
      out << "claim,shape,bound,degree,terms_checked,window,verdict,refuted_at\n";
      for (const auto& c : certs) {
        out << c.claim << ',' << shape_name(c.spec.shape) << ',' << c.spec.bound << ',' << c.degree
            << ',' << c.terms_agreed << ',' << c.window << ','
            << (c.certified() ? "certified" : "refuted") << ','
            << (c.refuted_at ? std::to_string(*c.refuted_at) : "") << '\n';
      }
      break;
    case Format::text:
      for (const auto& c : certs) {
        out << c.claim << ": " << (c.certified() ? "certified" : "refuted") << " ("
            << shape_name(c.spec.shape) << " B=" << c.spec.bound << ", d=" << c.degree
            << ", agreed " << c.terms_agreed << ", window " << c.window << ")";
        if (c.refuted_at) out << " at index " << *c.refuted_at << ": " << c.reason;
        out << '\n';
      }
      break;
  }
  return all ? kOk : kVerificationFailed;
}

struct BenchArgs {
  std::string sum = "A";
  std::int64_t k = 0;
  unsigned s = 1;
  std::string engine = "rec";
  bool cross_check = false;
  Format format = Format::text;
};

struct Digest {
  std::size_t digits;
  std::string leading;
  std::string trailing;
};

Digest digest_of(const BigInt& v) {
  const std::string d = abs(v).str();
  const std::size_t n = std::min<std::size_t>(12, d.size());
  return {d.size(), d.substr(0, n), d.substr(d.size() - n)};
}

int cmd_bench(const BenchArgs& a, Suite& suite, std::ostream& out) {
  if (a.sum != "A" && a.sum != "Aprime") throw UsageError("bench supports --sum A or Aprime");
  ComputeArgs c{a.sum, a.k, a.s, 0, a.engine, Format::text};
  const auto start = std::chrono::steady_clock::now();
  const Computed result = compute_value(c, suite);
  const auto stop = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  const Digest d = digest_of(*result.integer);

  std::optional<bool> agrees;
  std::string reference;
  if (a.cross_check) {
    // Brute force when it is in range, otherwise the other fast engine.
    const Engine engine = engine_from(a.engine);
    ComputeArgs other = c;
    const bool brute_ok = engine != Engine::brute && fib(a.k) - 1 <= suite.guard();
    if (brute_ok) {
      other.engine = "brute";
    } else {
      other.engine = engine == Engine::recursive ? "closed" : "rec";
    }
    reference = engine_name(engine_from(other.engine));
    agrees = compute_value(other, suite).value == result.value;
  }

  switch (a.format) {
    case Format::json: {
      Json j;
      j["sum"] = a.sum;
      j["k"] = a.k;
      j["s"] = a.s;
      j["engine"] = engine_name(engine_from(a.engine));
      j["milliseconds"] = ms;
      j["digits"] = d.digits;
      j["leading"] = d.leading;
      j["trailing"] = d.trailing;
      j["cross_check"] = agrees ? Json{{"reference", reference}, {"agrees", *agrees}} : Json(nullptr);
      out << dump(j) << '\n';
      break;
    }
    case Format::csv:
      out << "sum,k,s,engine,milliseconds,digits,leading,trailing\n"
          << a.sum << ',' << a.k << ',' << a.s << ',' << engine_name(engine_from(a.engine)) << ','
          << ms << ',' << d.digits << ',' << d.leading << ',' << d.trailing << '\n';
      break;
    case Format::text:
      out << a.sum << "(k=" << a.k << ", s=" << a.s << ") via " << engine_name(engine_from(a.engine))
          << ": " << d.digits << " digits, " << d.leading << "..." << d.trailing << ", " << ms
          << " ms\n";
      if (agrees) out << "cross-check against " << reference << ": " << (*agrees ? "agrees" : "DIFFERS") << '\n';
      break;
  }
  return agrees.value_or(true) ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Golden-ratio Beatty moment sums and their Fibonacci/Lucas identities", "nicom"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate A(k,s,j), A'(k,s) or the Q-difference");
  c->add_option("--sum", compute.sum, "A, Aprime or Qdiff")->check(CLI::IsMember({"A", "Aprime", "Qdiff"}));
  c->add_option("--k", compute.k, "Fibonacci index")->required();
  c->add_option("--s", compute.s, "floor power");
  c->add_option("--j", compute.j, "plain power (A only)");
  c->add_option("--engine", compute.engine, "brute, rec or closed");
  c->add_option("--format", compute.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a claim index by index across engines");
  v->add_option("--claim", verify.claim, "claim id")->required();
  v->add_option("--kmax", verify.kmax, "last index to check")->required();
  v->add_option("--engines", verify.engines, "comma-separated engines")->delimiter(',');
  v->add_flag("--deep", verify.deep, "extend theorem1/case4l to l <= 100");
  v->add_flag("--certify", verify.certify, "attach recurrence certificates");
  v->add_option("--format", verify.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  ProveArgs prove;
  std::size_t window = 0;
  auto* p = app.add_subcommand("prove", "Certify a claim by finite agreement plus annihilation");
  p->add_option("--claim", prove.claim, "claim id")->required();
  auto* window_opt = p->add_option("--window", window, "extra annihilation terms (default 2d)")
                         ->check(CLI::PositiveNumber);
  p->add_option("--format", prove.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time one engine far beyond brute-force range");
  b->add_option("--k", bench.k, "Fibonacci index")->required();
  b->add_option("--s", bench.s, "floor power")->required();
  b->add_option("--sum", bench.sum, "A or Aprime")->check(CLI::IsMember({"A", "Aprime"}));
  b->add_option("--engine", bench.engine, "rec, closed or brute");
  b->add_flag("--cross-check", bench.cross_check, "compare against a second engine");
  b->add_option("--format", bench.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (*window_opt) prove.window = window;

  try {
    Suite suite(brute_guard_from_env());
    int code = kOk;
    if (*c) code = cmd_compute(compute, suite, out);
    if (*v) code = cmd_verify(verify, suite, out);
    if (*p) code = cmd_prove(prove, suite, out);
    if (*b) code = cmd_bench(bench, suite, out);
    out.flush();
    return code;
  } catch (const BruteForceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace nicom::cli
