#include "bts/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>

#include "bts/assembly.hpp"
#include "bts/gluing.hpp"
#include "bts/knotfile.hpp"
#include "bts/orbitdata.hpp"

namespace bts::cli {

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

Site parse_site(const std::string& s) {
  if (s == "first" || s == "self") return Site::First;
  if (s == "second" || s == "partner") return Site::Second;
  throw CLI::ValidationError("site", "expected first, second, self or partner, got '" + s + "'");
}

const auto kSiteCheck = CLI::IsMember({"first", "second", "self", "partner"});

struct IndexArgs {
  Int m = 0;
  Int n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("M", m, "first index")->required();
    cmd->add_option("N", n, "second index")->required();
  }
  BTSIndex index() const { return BTSIndex::make(m, n); }
};

struct ComplexArgs {
  std::string knot_file;
  bool closed = false;
  bool complement = false;
  std::vector<std::string> twists;

  void attach(CLI::App* cmd, bool with_closed) {
    cmd->add_option("--knot", knot_file, "knot presentation file")->required();
    if (with_closed) {
      auto* c = cmd->add_flag("--closed", closed, "the five-piece complex of S^4");
      auto* x = cmd->add_flag("--complement", complement, "the complement of K^{m,n} (default)");
      c->excludes(x);
    }
    cmd->add_option("--gluck", twists, "Gluck twist sites applied in order to the closed complex")
        ->check(kSiteCheck)
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  }

  PieceComplex build(const BTSIndex& idx) const {
    const Knot knot = parse_knot_file(knot_file);
    if (twists.empty() && !closed) return build_complement_complex(knot, idx);
    if (complement) throw CLI::ValidationError("--complement", "cannot be combined with --gluck");
    PieceComplex c = build_closed_complex(knot, idx);
    for (const std::string& s : twists) c = apply_gluck(c, parse_site(s));
    return c;
  }
};

std::string describe(const PieceComplex& c, const BTSIndex& idx) {
  std::string s = to_string(c.label) + " " + c.knot_name + " " + to_string(idx);
  for (Site site : c.twin.history) s += " twist=" + to_string(site);
  return s;
}

void cmd_twin(const IndexArgs& a, std::ostream& out) {
  const BTSIndex idx = a.index();
  const BTSIndex partner = twin_partner(idx);
  out << to_string(idx) << " | partner " << to_string(partner) << '\n';
}

void cmd_gluck(const IndexArgs& a, const std::string& along, std::ostream& out) {
  const BTSIndex idx = a.index();
  const TwinState after = gluck_rewrite(TwinState::of(idx), parse_site(along));
  out << to_string(idx) << " -> " << to_string(after.first) << '\n';
}

void cmd_reduce(const IndexArgs& a, const std::string& strategy, std::ostream& out) {
  const ReductionStrategy s =
      strategy == "least" ? ReductionStrategy::LeastAbsoluteResidue : ReductionStrategy::NonNegativeResidue;
  const ReductionTrace t = reduce_to_base(a.index(), s);
  out << "start " << to_string(t.start) << '\n';
  for (const ReductionStep& step : t.steps) out << to_string(step.move) << ' ' << to_string(step.result) << '\n';
  out << "terminal " << to_string(t.terminal) << " after " << t.steps.size() << " moves\n";
}

int cmd_verify(Int max, std::ostream& out) {
  if (max < 1) throw DomainError(ErrorCode::NonPositiveN, "--max must be at least 1");
  struct Row {
    const char* name;
    bool ProofKitCheck::*field;
    std::size_t fail = 0;
  };
  std::vector<Row> rows = {
      {"det g = 1", &ProofKitCheck::det_g},
      {"g~ = lambda' u", &ProofKitCheck::g_tilde},
      {"mu = u^-1 w", &ProofKitCheck::mu},
      {"mu' = g v^-1", &ProofKitCheck::mu_prime},
      {"g~ [[1,1],[0,1]] = mu'", &ProofKitCheck::factorization},
      {"v lambda w = 1", &ProofKitCheck::v_lambda_w},
  };
  std::size_t pairs = 0;
  for (Int m = -max; m <= max; ++m) {
    for (Int n = 1; n <= max; ++n) {
      if (m == 0 || std::gcd(m, n) != 1) continue;
      ++pairs;
      const ProofKitCheck check = check_proof_kit(proof_kit(BTSIndex::make(m, n)));
      for (Row& r : rows) r.fail += check.*(r.field) ? 0 : 1;
    }
  }
  std::size_t width = 0;
  for (const Row& r : rows) width = std::max(width, std::string(r.name).size());
  bool ok = true;
  for (const Row& r : rows) {
    out << r.name << std::string(width + 2 - std::string(r.name).size(), ' ') << (r.fail == 0 ? "pass" : "FAIL")
        << ' ' << (pairs - r.fail) << '/' << pairs << '\n';
    ok = ok && r.fail == 0;
  }
  if (ok) {
    out << "all identities hold (" << pairs << " pairs)\n";
    return 0;
  }
  out << "identities fail\n";
  return kExitDomain;
}

void cmd_pi1(const ComplexArgs& a, const IndexArgs& i, bool simplified, std::ostream& out) {
  const BTSIndex idx = i.index();
  const PieceComplex c = a.build(idx);
  const GroupPresentation p = vankampen_pi1(c);
  out << "pi1 " << describe(c, idx) << '\n' << format_presentation(simplified ? simplify(p) : p);
}

void cmd_h1(const ComplexArgs& a, const IndexArgs& i, std::ostream& out) {
  out << "H1 = " << to_string(h1(a.build(i.index()))) << '\n';
}

void cmd_classify(const IndexArgs& a, bool nontrivial, std::ostream& out) {
  const ClassificationReport r = classify(a.index(), nontrivial);
  out << "knot " << to_string(r.knot) << '\n';
  if (r.twisted) out << "twisted " << to_string(*r.twisted) << '\n';
  out << "verdict "
      << (r.verdict == Verdict::InequivalentHomeomorphicComplements ? "inequivalent, homeomorphic complements"
                                                                     : "indeterminate")
      << '\n';
  out << "reason " << r.reason << '\n';
}

void cmd_certify(const ComplexArgs& a, const IndexArgs& i, int kmax, std::size_t max_gens, std::ostream& out) {
  const BTSIndex idx = i.index();
  const PieceComplex c = a.build(idx);
  const std::size_t gens = simplify(vankampen_pi1(c)).generator_count();
  if (gens > max_gens) {
    throw DomainError(ErrorCode::DegreeTooLarge, std::to_string(gens) + " generators after simplification exceed the cap of " +
                                                     std::to_string(max_gens));
  }
  const CertificateReport r = sphere_certificate(c, kmax);
  out << "certify " << describe(c, idx) << '\n';
  out << "H1 = " << to_string(r.homology) << '\n';
  out << "generators " << r.simplified_generators << '\n';
  for (std::size_t k = 0; k < r.hom_counts.size(); ++k) out << "homs S" << (k + 1) << ' ' << r.hom_counts[k] << '\n';
  out << "certificate " << (r.passed() ? "pass" : "fail") << " (H1 trivial: " << (r.h1_trivial ? "yes" : "no")
      << ", only trivial homs up to S" << r.kmax << ": " << (r.homs_trivial ? "yes" : "no")
      << "; pi1 itself is not decided)\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"branched twist spin calculator", "bts"};
  app.require_subcommand(1);

  IndexArgs idx;
  ComplexArgs cx;
  std::string along = "partner";
  std::string strategy = "nonneg";
  Int max = 40;
  bool nontrivial = false;
  bool simplified = false;
  int kmax = 4;
  std::size_t max_gens = 3;

  auto* twin = app.add_subcommand("twin", "twin partner of K^{m,n}");
  idx.attach(twin);

  auto* gluck = app.add_subcommand("gluck", "index after a Gluck twist along a twin member");
  gluck->add_option("--along", along, "partner or self")->check(CLI::IsMember({"partner", "self"}));
  idx.attach(gluck);

  auto* reduce = app.add_subcommand("reduce", "Euclidean reduction to a twist spin");
  reduce->add_option("--strategy", strategy, "nonneg or least")->check(CLI::IsMember({"nonneg", "least"}));
  idx.attach(reduce);

  auto* verify = app.add_subcommand("verify-matrices", "sweep the gluing-matrix identities");
  verify->add_option("--max", max, "bound on |m| and n");

  auto* pi1 = app.add_subcommand("pi1", "van Kampen presentation of a complex");
  cx.attach(pi1, true);
  pi1->add_flag("--simplify", simplified, "apply Tietze eliminations");
  idx.attach(pi1);

  auto* h1c = app.add_subcommand("h1", "first homology of a complex");
  cx.attach(h1c, true);
  idx.attach(h1c);

  auto* cls = app.add_subcommand("classify", "inequivalence verdict for K^{m,n} and its twist");
  cls->add_flag("--nontrivial", nontrivial, "assert that K^{m,n} is nontrivial");
  idx.attach(cls);

  auto* certify = app.add_subcommand("certify", "H1 and finite-quotient evidence for a closed or twisted complex");
  cx.attach(certify, false);
  certify->add_option("--kmax", kmax, "largest symmetric degree")->check(CLI::Range(1, kMaxSymmetricDegree));
  certify->add_option("--max-gens", max_gens, "generator cap after simplification");
  idx.attach(certify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*twin) cmd_twin(idx, out);
    if (*gluck) cmd_gluck(idx, along, out);
    if (*reduce) cmd_reduce(idx, strategy, out);
    if (*verify) return cmd_verify(max, out);
    if (*pi1) cmd_pi1(cx, idx, simplified, out);
    if (*h1c) cmd_h1(cx, idx, out);
    if (*cls) cmd_classify(idx, nontrivial, out);
    if (*certify) {
      // the certificate speaks about closed manifolds only
      ComplexArgs closed = cx;
      closed.closed = true;
      cmd_certify(closed, idx, kmax, max_gens, out);
    }
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " at line " << e.line();
    err << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}

}  // namespace bts::cli
