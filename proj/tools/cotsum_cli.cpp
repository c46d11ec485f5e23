#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cotsum/error.hpp"
#include "cotsum/identities.hpp"
#include "cotsum/json_io.hpp"
#include "cotsum/sums.hpp"
#include "cotsum/sweep.hpp"

using namespace cotsum;

namespace {

struct Globals {
  std::string format = "text";
  int digits = 60;
  std::uint64_t conductor_cap = kDefaultConductorCap;
  std::string out;

  ExactOptions exact() const {
    ExactOptions o;
    o.conductor_cap = conductor_cap;
    return o;
  }
  PrecisionContext precision() const { return PrecisionContext::make(digits); }
};

struct Command {
  CLI::App* app;
  std::string name;
  std::function<OutputDocument()> run;
};

// Decimal points and imaginary units mark a shift as numeric input.
bool is_numeric_literal(const std::string& text) {
  return text.find_first_of(".eEi") != std::string::npos;
}

BigInt parse_integer(const std::string& text) {
  const BigRational q = parse_rational(text);
  require(is_integer(q), ErrorKind::InvalidArgument, "expected an integer, got '" + text + "'");
  return q.get_num();
}

PoleConvention parse_poles(const std::string& text) {
  if (text == "skip") return PoleConvention::Skip;
  if (text == "regularized") return PoleConvention::Regularized;
  fail(ErrorKind::InvalidArgument, "poles must be skip or regularized");
}

OutputDocument single(std::string command, ResultItem item, VerificationMode mode = VerificationMode::Exact) {
  OutputDocument doc;
  doc.command = std::move(command);
  doc.items.push_back(std::move(item));
  doc.mode = mode;
  return doc;
}

OutputDocument report_doc(std::string command, VerificationReport r) {
  const VerificationMode mode = r.mode;
  return single(std::move(command), std::move(r), mode);
}

nlohmann::json echo_inputs(const CLI::App* app) {
  nlohmann::json inputs = nlohmann::json::object();
  for (const CLI::Option* o : app->get_options()) {
    if (o->count() == 0 || o->get_name() == "--help") continue;
    const auto& lnames = o->get_lnames();
    const std::string key = lnames.empty() ? o->get_name() : lnames.front();
    std::string joined;
    for (const auto& v : o->results()) joined += (joined.empty() ? "" : ",") + v;
    inputs[key] = joined;
  }
  return inputs;
}

// ---- text rendering ----------------------------------------------------------

std::string render_value(const ReportValue& v, int digits) {
  if (const auto* e = std::get_if<ExactValue>(&v)) return e->to_string();
  const auto& z = std::get<Complex>(v);
  std::string im = z.im.to_string(digits);
  const bool negative = !im.empty() && im.front() == '-';
  if (negative) im.erase(0, 1);
  return z.re.to_string(digits) + (negative ? " - " : " + ") + im + "*i";
}

void render_report(std::ostream& os, const VerificationReport& r, int digits, const std::string& indent) {
  const int d = r.digits > 0 ? r.digits : digits;
  os << indent << r.identity << ": " << (r.pass ? "PASS" : "FAIL") << " (" << to_string(r.mode) << ")";
  if (!r.parameters.empty()) os << " " << r.parameters.dump();
  os << "\n";
  if (r.lhs) os << indent << "  lhs = " << render_value(*r.lhs, d) << "\n";
  if (r.rhs) os << indent << "  rhs = " << render_value(*r.rhs, d) << "\n";
  if (r.residual && r.mode == VerificationMode::Numeric) {
    os << indent << "  |residual| = " << abs(std::get<Complex>(*r.residual)).to_string(5);
    if (r.tolerance) os << " < " << *r.tolerance << " required";
    os << "\n";
  }
  if (!r.checks.empty()) {
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
    os << indent << "  checks: " << passed << "/" << r.checks.size() << " passed\n";
    for (const auto& c : r.checks)
      if (!c.pass) render_report(os, c, digits, indent + "    ");
  }
  for (const auto& n : r.notes) os << indent << "  note: " << n << "\n";
}

std::string render_text(const OutputDocument& doc) {
  std::ostringstream os;
  for (const auto& item : doc.items) {
    if (const auto* r = std::get_if<VerificationReport>(&item)) {
      render_report(os, *r, doc.digits, "");
      continue;
    }
    if (const auto* e = std::get_if<ExactValue>(&item)) {
      os << e->to_string() << "\n";
      continue;
    }
    os << render_value(std::get<Complex>(item), doc.digits) << "\n";
  }
  return os.str();
}

bool all_pass(const OutputDocument& doc) {
  for (const auto& item : doc.items)
    if (const auto* r = std::get_if<VerificationReport>(&item); r && !r->pass) return false;
  return true;
}

// ---- command tree ---------------------------------------------------------------

class Cli {
 public:
  Cli() : app_("Dedekind cotangent sums: exact evaluation and identity verification", "cotsum") {
    app_.fallthrough();
    app_.require_subcommand(1);
    app_.add_option("--format", g_.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app_.add_option("--digits", g_.digits, "Decimal digits for numeric work")->check(CLI::Range(5, 100000));
    app_.add_option("--conductor-cap", g_.conductor_cap, "Largest cyclotomic conductor for exact mode");
    app_.add_option("--out", g_.out, "Write the output to this file instead of stdout");
    add_sum_commands();
    add_verify_commands();
    add_sweep_command();
    add_table_command();
  }

  int main(int argc, char** argv) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::Success& e) {
      return app_.exit(e);
    } catch (const CLI::ParseError& e) {
      app_.exit(e);
      return 2;
    }
    for (auto& cmd : commands_) {
      if (!cmd.app->parsed()) continue;
      try {
        OutputDocument doc = cmd.run();
        doc.command = cmd.name;
        doc.inputs = echo_inputs(cmd.app);
        doc.digits = g_.digits;
        const std::string text = g_.format == "json" ? dump(to_json(doc)) : render_text(doc);
        if (g_.out.empty()) {
          std::cout << text;
        } else {
          std::ofstream f(g_.out, std::ios::binary);
          if (!f) {
            std::cerr << "cannot open " << g_.out << " for writing\n";
            return 2;
          }
          f << text;
        }
        return all_pass(doc) ? 0 : 1;
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    std::cerr << "no command given\n";
    return 2;
  }

 private:
  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, std::function<OutputDocument()> run,
                 const std::string& full_name) {
    CLI::App* sub = parent->add_subcommand(name, help);
    commands_.push_back({sub, full_name, std::move(run)});
    return sub;
  }

  void add_sum_commands() {
    CLI::App* sum = app_.add_subcommand("sum", "Evaluate a sum");
    sum->require_subcommand(1);

    {
      auto* s = leaf(sum, "classical", "Classical Dedekind sum s(a, b)", [this] {
        ClassicalMethod method = ClassicalMethod::Fast;
        if (classical_method_ == "direct") method = ClassicalMethod::Direct;
        if (classical_method_ == "cotangent") method = ClassicalMethod::Cotangent;
        return single("", ExactValue(classical_dedekind_sum(parse_integer(big_a_), parse_integer(big_b_), method, g_.exact())));
      }, "sum classical");
      s->add_option("--a", big_a_)->required();
      s->add_option("--b", big_b_)->required();
      s->add_option("--method", classical_method_)->check(CLI::IsMember({"direct", "cotangent", "fast"}));
    }
    {
      auto* s = leaf(sum, "cotangent", "Dedekind cotangent sum", [this] { return run_cotangent(); }, "sum cotangent");
      s->add_option("--a0", a0_)->required();
      s->add_option("--a", list_a_)->required()->delimiter(',');
      s->add_option("--m0", m0_);
      s->add_option("--m", list_m_)->delimiter(',');
      s->add_option("--z0", z0_);
      s->add_option("--z", list_z_)->delimiter(',');
      s->add_flag("--numeric", numeric_, "Evaluate numerically at --digits");
      s->add_option("--poles", poles_, "Treatment of singular summands")->check(CLI::IsMember({"skip", "regularized"}));
    }
    {
      auto* s = leaf(sum, "zagier", "Higher-dimensional Dedekind sum s(a0; a)", [this] {
        return single("", ExactValue(zagier_sum(a0_, list_a_, g_.exact())));
      }, "sum zagier");
      s->add_option("--a0", a0_)->required();
      s->add_option("--a", list_a_)->required()->delimiter(',');
    }
    {
      auto* s = leaf(sum, "bernoulli", "Dedekind Bernoulli sum s_{m,n}(a; b, c)", [this] {
        return single("", ExactValue(dedekind_bernoulli_sum(m_, n_, a_, b_, c_)));
      }, "sum bernoulli");
      s->add_option("--m", m_)->required();
      s->add_option("--n", n_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
      s->add_option("--c", c_)->required();
    }
    {
      auto* s = leaf(sum, "rademacher", "Dedekind-Rademacher sum s(a, b; x, y)", [this] {
        return single("", ExactValue(dedekind_rademacher_sum(a_, b_, parse_rational(x_), parse_rational(y_))));
      }, "sum rademacher");
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
      s->add_option("--x", x_);
      s->add_option("--y", y_);
    }
    {
      auto* s = leaf(sum, "generalized-rademacher", "Generalized Dedekind-Rademacher sum", [this] {
        return single("", ExactValue(generalized_dr_sum(m_, n_, a_, b_, c_, parse_rational(x_), parse_rational(y_),
                                                        parse_rational(zr_))));
      }, "sum generalized-rademacher");
      s->add_option("--m", m_)->required();
      s->add_option("--n", n_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
      s->add_option("--c", c_)->required();
      s->add_option("--x", x_);
      s->add_option("--y", y_);
      s->add_option("--z", zr_);
    }
    {
      auto* s = leaf(sum, "dieter", "Cotangent sum c(a, b, c; x, y, z)", [this] {
        return single("", dieter_cotangent_sum(a_, b_, c_, parse_rational(x_), parse_rational(y_), parse_rational(zr_),
                                               g_.exact()));
      }, "sum dieter");
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
      s->add_option("--c", c_)->required();
      s->add_option("--x", x_);
      s->add_option("--y", y_);
      s->add_option("--z", zr_);
    }
    {
      auto* s = leaf(sum, "berndt", "Berndt's modified Dedekind sums", [this] {
        const auto kind = parse_berndt_kind(kind_);
        require(kind.has_value(), ErrorKind::InvalidArgument, "unknown kind '" + kind_ + "'");
        std::optional<std::int64_t> alpha, beta;
        if (alpha_opt_->count() > 0) alpha = alpha_;
        if (beta_opt_->count() > 0) beta = beta_;
        return single("", berndt_sum(*kind, a_, b_, alpha, beta, g_.exact()));
      }, "sum berndt");
      s->add_option("--kind", kind_, "s_alpha_beta, S, s1, s2, s3, s4 or s5")->required();
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
      alpha_opt_ = s->add_option("--alpha", alpha_);
      beta_opt_ = s->add_option("--beta", beta_);
    }
    {
      auto* s = leaf(sum, "apostol", "Apostol sum sum_k (k/b) B_n(ka/b)", [this] {
        return single("", ExactValue(apostol_sum(n_, a_, b_)));
      }, "sum apostol");
      s->add_option("--n", n_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
    }
    {
      auto* s = leaf(sum, "planepartition", "sum_k B_m(k/a) ((kb/a))", [this] {
        return single("", ExactValue(plane_partition_sum(m_, a_, b_)));
      }, "sum planepartition");
      s->add_option("--m", m_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
    }
  }

  OutputDocument run_cotangent() {
    CotSumSpec spec;
    spec.a0 = a0_;
    spec.a = list_a_;
    spec.m0 = m0_;
    spec.m = list_m_.empty() ? std::vector<unsigned>(list_a_.size(), 0) : list_m_;
    bool numeric = numeric_ || is_numeric_literal(z0_);
    spec.z0 = parse_shift(z0_);
    for (const auto& s : list_z_) {
      numeric = numeric || is_numeric_literal(s);
      spec.z.push_back(parse_shift(s));
    }
    const PoleConvention poles = parse_poles(poles_);
    if (numeric) {
      const PrecisionContext ctx = g_.precision();
      NumericSum sum = dedekind_cotangent_sum_numeric(spec, ctx, poles);
      return single("", sum.value, VerificationMode::Numeric);
    }
    ExactOptions options = g_.exact();
    options.poles = poles;
    return single("", dedekind_cotangent_sum(spec, options));
  }

  void add_verify_commands() {
    CLI::App* verify = app_.add_subcommand("verify", "Verify an identity for given parameters");
    verify->require_subcommand(1);

    {
      auto* s = leaf(verify, "dedekind", "s(a,b) + s(b,a) = -1/4 + (a/b + 1/ab + b/a)/12", [this] {
        return report_doc("", verify_dedekind_reciprocity(parse_integer(big_a_), parse_integer(big_b_)));
      }, "verify dedekind");
      s->add_option("--a", big_a_)->required();
      s->add_option("--b", big_b_)->required();
    }
    {
      auto* s = leaf(verify, "main", "Reciprocity law for Dedekind cotangent sums", [this] {
        std::vector<ShiftValue> z;
        for (const auto& t : list_z_) z.push_back(parse_shift(t));
        if (z.empty()) z.resize(list_a_.size());
        return report_doc("", verify_main_reciprocity(list_a_, list_m_.empty() ? std::vector<unsigned>(list_a_.size(), 0)
                                                                                : list_m_,
                                                      z, g_.exact(), g_.precision()));
      }, "verify main");
      s->add_option("--a", list_a_)->required()->delimiter(',');
      s->add_option("--m", list_m_)->delimiter(',');
      s->add_option("--z", list_z_)->required()->delimiter(',');
    }
    {
      auto* s = leaf(verify, "threeterm", "Three-term reciprocity with the phi closed form", [this] {
        require(list_a_.size() == 3 && list_m_.size() == 3, ErrorKind::InvalidArgument, "--a and --m take 3 values");
        return report_doc("", verify_three_term_reciprocity(list_a_[0], list_a_[1], list_a_[2], list_m_[0], list_m_[1],
                                                            list_m_[2], g_.exact()));
      }, "verify threeterm");
      s->add_option("--a", list_a_)->required()->delimiter(',');
      s->add_option("--m", list_m_)->required()->delimiter(',');
    }
    {
      auto* s = leaf(verify, "dieter", "Dieter's reciprocity law for cotangent sums", [this] {
        return report_doc("", verify_dieter_reciprocity(a_, b_, c_, parse_rational(x_), parse_rational(y_),
                                                        parse_rational(zr_), g_.exact()));
      }, "verify dieter");
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
      s->add_option("--c", c_)->required();
      s->add_option("--x", x_);
      s->add_option("--y", y_);
      s->add_option("--z", zr_);
    }
    {
      auto* s = leaf(verify, "zagier", "Zagier's reciprocity law: sum = 1 - h", [this] {
        return report_doc("", verify_zagier_reciprocity(list_a_, g_.exact()));
      }, "verify zagier");
      s->add_option("--a", list_a_)->required()->delimiter(',');
    }
    {
      auto* s = leaf(verify, "apocot", "Dedekind Bernoulli sums as cotangent sums", [this] {
        return report_doc("", verify_bernoulli_cotangent(m_, n_, a_, b_, c_, g_.exact()));
      }, "verify apocot");
      s->add_option("--m", m_)->required();
      s->add_option("--n", n_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
      s->add_option("--c", c_)->required();
    }
    {
      auto* s = leaf(verify, "planepartition", "Bernoulli-sawtooth sum in cotangent form", [this] {
        return report_doc("", verify_plane_partition(m_, a_, b_, g_.exact()));
      }, "verify planepartition");
      s->add_option("--m", m_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
    }
    {
      auto* s = leaf(verify, "fourier", "Discrete Fourier series of B_m", [this] {
        return report_doc("", verify_fourier_lemma(m_, p_));
      }, "verify fourier");
      s->add_option("--m", m_)->required();
      s->add_option("--p", p_)->required();
    }
    {
      auto* s = leaf(verify, "sawtooth-fourier", "Discrete Fourier series of the sawtooth", [this] {
        return report_doc("", verify_sawtooth_fourier(p_));
      }, "verify sawtooth-fourier");
      s->add_option("--p", p_)->required();
    }
    {
      auto* s = leaf(verify, "pk-classical", "Petersson-Knopp identity for s(a, b)", [this] {
        return report_doc("", verify_petersson_knopp_classical(pk_n_, a_, b_));
      }, "verify pk-classical");
      s->add_option("--n", pk_n_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--b", b_)->required();
    }
    {
      auto* s = leaf(verify, "pk-cotangent", "Petersson-Knopp identity for cotangent sums", [this] {
        ExactOptions options = g_.exact();
        options.poles = parse_poles(pk_poles_);
        return report_doc("", verify_pk_cotangent(pk_n_, a0_, list_a_, m0_,
                                                  list_m_.empty() ? std::vector<unsigned>(list_a_.size(), 0) : list_m_,
                                                  options));
      }, "verify pk-cotangent");
      s->add_option("--n", pk_n_)->required();
      s->add_option("--a0", a0_)->required();
      s->add_option("--a", list_a_)->required()->delimiter(',');
      s->add_option("--m0", m0_);
      s->add_option("--m", list_m_)->delimiter(',');
      s->add_option("--poles", pk_poles_, "Treatment of singular summands (default regularized)")
          ->check(CLI::IsMember({"skip", "regularized"}));
    }
    {
      auto* s = leaf(verify, "pk-generic", "Petersson-Knopp identity for a weight family", [this] {
        const WeightFamily family = family_ == "bernoulli" ? bernoulli_family(list_m_) : cotangent_family(list_m_);
        return report_doc("", verify_pk_generic(family, pk_n_, a_, list_b_));
      }, "verify pk-generic");
      s->add_option("--family", family_)->required()->check(CLI::IsMember({"bernoulli", "cotangent"}));
      s->add_option("--orders", list_m_, "Order of each member")->required()->delimiter(',');
      s->add_option("--n", pk_n_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--a-list", list_b_)->required()->delimiter(',');
    }
    {
      auto* s = leaf(verify, "pk-zagier", "Petersson-Knopp identity for Zagier's sums", [this] {
        return report_doc("", verify_pk_zagier(pk_n_, list_a_, g_.exact()));
      }, "verify pk-zagier");
      s->add_option("--n", pk_n_)->required();
      s->add_option("--a", list_a_, "a0,a1,...,ad")->required()->delimiter(',');
    }
    {
      auto* s = leaf(verify, "distribution", "Distribution relations of one family member", [this] {
        const FamilyMember f{family_ == "bernoulli" ? MemberKind::Bernoulli : MemberKind::Cotangent, m_};
        return report_doc("", verify_distribution_relation(f, a_, parse_rational(x_), b_opt_->count() ? b_ : 2,
                                                           list_b_.empty() ? std::vector<std::int64_t>{1} : list_b_));
      }, "verify distribution");
      s->add_option("--family", family_)->required()->check(CLI::IsMember({"bernoulli", "cotangent"}));
      s->add_option("--order", m_)->required();
      s->add_option("--a", a_)->required();
      s->add_option("--x", x_);
      b_opt_ = s->add_option("--b", b_);
      s->add_option("--a-list", list_b_)->delimiter(',');
    }
    {
      auto* s = leaf(verify, "coth", "sum_k coth pi(ik/a + z) = a coth(pi a z), numerically", [this] {
        const ShiftValue z = parse_shift(z_complex_);
        const PrecisionContext ctx = g_.precision();
        return report_doc("", coth_distribution_check(a_, z.to_complex(ctx.working_bits()), ctx));
      }, "verify coth");
      s->add_option("--a", a_)->required();
      s->add_option("--z", z_complex_, "complex point such as 0.4+0.1i")->required();
    }
  }

  void add_sweep_command() {
    CLI::App* sweep = app_.add_subcommand("sweep", "Randomized property sweeps");
    sweep->require_subcommand(1);
    auto* s = leaf(sweep, "verify", "Run a verifier on random admissible parameters", [this] {
      SweepOptions options;
      options.seed = seed_;
      options.count = count_;
      options.max_a = max_a_;
      options.exact = g_.exact();
      options.precision = g_.precision();
      return report_doc("", sweep_report(run_sweep(identity_, options), options));
    }, "sweep verify");
    std::string names;
    for (const auto& n : sweep_identities()) names += (names.empty() ? "" : ", ") + n;
    s->add_option("identity", identity_, "One of: " + names)->required();
    s->add_option("--seed", seed_);
    s->add_option("--count", count_);
    s->add_option("--max-a", max_a_, "Bound on the moduli (default depends on the identity)");
  }

  void add_table_command() {
    CLI::App* table = app_.add_subcommand("table", "Tables of constants");
    table->require_subcommand(1);
    auto* s = leaf(table, "bernoulli", "Bernoulli numbers B_0..B_K", [this] {
      OutputDocument doc;
      doc.is_list = true;
      for (unsigned k = 0; k <= max_k_; ++k) doc.items.emplace_back(ExactValue(bernoulli_number(k)));
      return doc;
    }, "table bernoulli");
    s->add_option("--max-k", max_k_)->required();
  }

  CLI::App app_;
  Globals g_;
  std::vector<Command> commands_;

  std::string big_a_, big_b_, classical_method_ = "fast";
  std::int64_t a0_ = 1, a_ = 1, b_ = 1, c_ = 1, p_ = 1, pk_n_ = 1, max_a_ = 0;
  unsigned m0_ = 0, m_ = 0, n_ = 0, max_k_ = 0;
  std::vector<std::int64_t> list_a_, list_b_;
  std::vector<unsigned> list_m_;
  std::vector<std::string> list_z_;
  std::string z0_ = "0", x_ = "0", y_ = "0", zr_ = "0", z_complex_, kind_, family_, identity_;
  std::string poles_ = "skip", pk_poles_ = "regularized";
  bool numeric_ = false;
  std::uint64_t seed_ = 1;
  std::size_t count_ = 100;
  std::int64_t alpha_ = 0, beta_ = 0;
  CLI::Option* alpha_opt_ = nullptr;
  CLI::Option* beta_opt_ = nullptr;
  CLI::Option* b_opt_ = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  return cli.main(argc, argv);
}
