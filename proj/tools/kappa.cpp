// Command-line driver: runs the verification suites of the kappa-Poincare
// engine and evaluates expressions in a small algebra mini-language.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "kappa/duality.hpp"
#include "kappa/indrep.hpp"
#include "kappa/kalgebra.hpp"
#include "kappa/kgroup.hpp"
#include "kappa/kminkowski.hpp"

namespace {

using namespace kappa;

struct Config {
  int twice_j = 0;
  bool spin_given = false;
  int max_degree = 3;
  bool max_degree_given = false;
  int samples = 50;
  unsigned long seed = 42;
  int order = 4;
  std::string format = "text";
  bool no_timing = false;
  std::string corrupt;  // nonempty enables the negative-control variants
};

Report run_rep_closure(const Config& cfg) {
  Report rep;
  rep.suite = "rep-closure";
  rep.seed = cfg.seed;
  std::vector<int> spins = cfg.spin_given ? std::vector<int>{cfg.twice_j}
                                          : std::vector<int>{0, 1, 2};
  for (int tj : spins) {
    Report one = closure_suite(tj, !cfg.corrupt.empty());
    for (const auto& c : one.checks) rep.checks.push_back(c);
  }
  return rep;
}

Report run_classical_limit(const Config& cfg) {
  Report rep = classical_limit_suite(cfg.order);
  indrep_classical_checks(rep, cfg.order);
  bool regular = true;
  bool ok = coeff_classical_limit(deformed_mass_sq() - coeff_m() * coeff_m(), cfg.order,
                                  &regular)
                .is_zero() &&
            regular;
  rep.add("deformed-mass-classical-limit", ok);
  return rep;
}

const std::vector<std::pair<std::string, std::function<Report(const Config&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<Report(const Config&)>>> s = {
      {"group-hopf",
       [](const Config& c) {
         return kgroup_verify(c.max_degree, c.samples, c.seed, !c.corrupt.empty());
       }},
      {"algebra-jacobi",
       [](const Config& c) { return jacobi_suite(c.corrupt.empty() ? -1 : +1); }},
      {"algebra-hopf",
       [](const Config& c) { return kalgebra_hopf_verify(c.max_degree, c.samples, c.seed); }},
      {"duality",
       [](const Config& c) {
         return duality_consistency_suite(c.max_degree, c.samples, c.seed, !c.corrupt.empty());
       }},
      {"rep-closure", run_rep_closure},
      {"momentum-shell", [](const Config&) { return momentum_shell_suite(); }},
      {"classical-limit", run_classical_limit},
      {"mink-star",
       [](const Config& c) {
         // star associativity is specified at degree 4; keep that strength
         // unless the user lowers it explicitly
         int d = c.max_degree_given ? c.max_degree : 4;
         return mink_star_suite(d, c.samples, c.seed);
       }},
      {"antirep",
       [](const Config& c) { return antirep_suite(c.max_degree, c.corrupt.empty() ? -1 : +1); }},
      {"leibniz", [](const Config& c) { return leibniz_suite(c.samples, c.seed); }},
      {"kg", [](const Config& c) { return kg_suite(c.order, c.samples, c.seed); }},
      {"extract-compare", [](const Config&) { return extract_compare_suite(); }},
  };
  return s;
}

int run_verify(const std::string& which, const Config& cfg) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Report> reports;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (which != "all" && which != name) continue;
    found = true;
    Report rep = fn(cfg);
    rep.seed = cfg.seed;
    reports.push_back(std::move(rep));
  }
  if (!found) {
    std::cerr << "error: unknown suite '" << which << "' (try --list)\n";
    return 2;
  }
  long elapsed =
      cfg.no_timing
          ? 0
          : std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();

  bool all_pass = true;
  int n_checks = 0, n_failed = 0;
  for (const auto& r : reports) {
    all_pass = all_pass && r.passed();
    n_checks += (int)r.checks.size();
    for (const auto& c : r.checks)
      if (!c.pass) ++n_failed;
  }

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["config"] = {{"command", "verify"},
                   {"suite", which},
                   {"spin", cfg.twice_j == 0 ? "0" : cfg.twice_j == 1 ? "1/2" : "1"},
                   {"max_degree", cfg.max_degree},
                   {"samples", cfg.samples},
                   {"seed", cfg.seed},
                   {"order", cfg.order},
                   {"no_timing", cfg.no_timing},
                   {"corrupt", !cfg.corrupt.empty()}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : reports)
      for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["suite"] = r.suite;
        jc["name"] = c.name;
        jc["status"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty()) jc["residual"] = c.detail;
        j["checks"].push_back(jc);
      }
    j["elapsed_ms"] = elapsed;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) std::cout << r.text();
    std::cout << (all_pass ? "ALL OK" : "FAILURES") << ": " << n_checks << " checks, "
              << n_failed << " failed";
    if (!cfg.no_timing) std::cout << ", " << elapsed << " ms";
    std::cout << "\n";
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Expression evaluator
// ---------------------------------------------------------------------------

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")") {}
  explicit EvalError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Value {
  enum Kind { SCALAR, GROUP, ALG, SYMBOL, GROUP_TENSOR, ALG_TENSOR };
  Kind kind = SCALAR;
  Coefficient sc = coeff_zero();
  AlgebraElement el;
  XPoly xp{4};
  TensorElement te;

  static const char* kind_name(Kind k) {
    switch (k) {
      case SCALAR: return "scalar";
      case GROUP: return "group element";
      case ALG: return "algebra element";
      case SYMBOL: return "Minkowski symbol";
      case GROUP_TENSOR: return "group tensor";
      case ALG_TENSOR: return "algebra tensor";
    }
    return "?";
  }
};

class Evaluator {
 public:
  Evaluator() : dual_(false) {}

  std::string eval(const std::string& src) {
    src_ = src;
    pos_ = 0;
    Value v = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) throw EvalError("unexpected trailing input", pos_);
    return render(v);
  }

 private:
  const KGroup& G() const { return dual_.group(); }
  const KAlgebra& K() const { return dual_.algebra(); }

  // --- lexer -------------------------------------------------------------
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw EvalError(std::string("expected '") + c + "'", pos_);
  }
  bool peek_is(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw EvalError("expected identifier", pos_);
    return src_.substr(start, pos_ - start);
  }
  long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) ++pos_;
    if (start == pos_) throw EvalError("expected integer", pos_);
    return std::stol(src_.substr(start, pos_ - start));
  }

  // --- grammar: expr := term (('+'|'-') term)*, term := factor (('*'|'/') factor)*
  Value parse_expr() {
    Value v = parse_term();
    for (;;) {
      if (eat('+')) v = add(v, parse_term(), +1);
      else if (eat('-')) v = add(v, parse_term(), -1);
      else return v;
    }
  }

  Value parse_term() {
    Value v = parse_factor();
    for (;;) {
      if (eat('*')) v = mul(v, parse_factor());
      else if (eat('/')) v = div(v, parse_factor());
      else return v;
    }
  }

  Value parse_factor() {
    skip_ws();
    if (pos_ >= src_.size()) throw EvalError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = parse_expr();
      expect(')');
      return v;
    }
    if (c == '-') {
      ++pos_;
      Value zero;  // scalar 0
      return add(zero, parse_factor(), -1);
    }
    if (std::isdigit((unsigned char)c)) {
      Value v;
      v.sc = coeff_rat(integer());
      return v;
    }
    size_t id_pos = pos_;
    std::string name = ident();
    return named(name, id_pos);
  }

  std::pair<long, long> bracket_pair() {
    expect('[');
    long a = integer();
    expect(',');
    long b = integer();
    expect(']');
    return {a, b};
  }
  long bracket_one() {
    expect('[');
    long a = integer();
    expect(']');
    return {a};
  }

  Value named(const std::string& name, size_t pos) {
    Value v;
    if (name == "i") {
      v.sc = coeff_i();
      return v;
    }
    if (name == "k") {
      v.sc = coeff_kappa();
      return v;
    }
    if (name == "m") {
      v.sc = coeff_m();
      return v;
    }
    if (name == "A") {
      v.kind = Value::ALG;
      v.el = ae_gen(K().a());
      return v;
    }
    if (name == "L") {
      auto [a, b] = bracket_pair();
      check_index(a, pos), check_index(b, pos);
      v.kind = Value::GROUP;
      v.el = ae_gen(G().L((int)a, (int)b));
      return v;
    }
    if (name == "v") {
      long a = bracket_one();
      check_index(a, pos);
      v.kind = Value::GROUP;
      v.el = ae_gen(G().v((int)a));
      return v;
    }
    if (name == "M") {
      auto [a, b] = bracket_pair();
      check_index(a, pos), check_index(b, pos);
      auto [id, s] = kalgebra_detail::m_gen(K(), (int)a, (int)b);
      if (s == 0) throw EvalError("M[" + std::to_string(a) + "," + std::to_string(b) + "] vanishes", pos);
      v.kind = Value::ALG;
      v.el = ae_word({id}, coeff_rat(s));
      return v;
    }
    if (name == "P") {
      long a = bracket_one();
      check_index(a, pos);
      v.kind = Value::ALG;
      v.el = ae_gen(K().p((int)a));
      return v;
    }
    if (name == "x") {
      long a = bracket_one();
      check_index(a, pos);
      v.kind = Value::SYMBOL;
      v.xp = xp_var((int)a);
      return v;
    }
    if (name == "comm") return form_comm();
    if (name == "pair") return form_pair();
    if (name == "delta") return form_delta();
    if (name == "S") return form_antipode();
    if (name == "eps") return form_counit();
    if (name == "hat") return form_hat();
    if (name == "dd0" || name == "box") {
      expect('(');
      Value f = parse_expr();
      expect(')');
      require(f, Value::SYMBOL, name);
      f.xp = name == "dd0" ? deformed_d0(f.xp) : deformed_box(f.xp);
      return f;
    }
    if (name == "ddi") {
      expect('(');
      long i = integer();
      if (i < 1 || i > 3) throw EvalError("ddi: spatial index must be 1..3", pos);
      expect(',');
      Value f = parse_expr();
      expect(')');
      require(f, Value::SYMBOL, "ddi");
      f.xp = deformed_di(f.xp, (int)i);
      return f;
    }
    throw EvalError("unknown name '" + name + "'", pos);
  }

  static void check_index(long a, size_t pos) {
    if (a < 0 || a > 3) throw EvalError("index must be 0..3", pos);
  }
  static void require(const Value& v, Value::Kind k, const std::string& where) {
    if (v.kind != k)
      throw EvalError(where + ": expected " + std::string(Value::kind_name(k)) + ", got " +
                      Value::kind_name(v.kind));
  }

  // --- forms -------------------------------------------------------------
  Value form_comm() {
    expect('(');
    Value a = parse_expr();
    expect(',');
    Value b = parse_expr();
    expect(')');
    if (a.kind != b.kind)
      throw EvalError(std::string("comm: mixed kinds ") + Value::kind_name(a.kind) + " and " +
                      Value::kind_name(b.kind));
    if (a.kind == Value::GROUP || a.kind == Value::ALG) {
      const HopfPresentation& P = a.kind == Value::GROUP ? G().P : K().P;
      Value r;
      r.kind = a.kind;
      r.el = ae_sub(P.multiply(a.el, b.el), P.multiply(b.el, a.el));
      return r;
    }
    if (a.kind == Value::SYMBOL) {
      Value r;
      r.kind = Value::SYMBOL;
      r.xp = star_multiply(a.xp, b.xp) - star_multiply(b.xp, a.xp);
      return r;
    }
    throw EvalError("comm: scalars commute");
  }

  Value form_pair() {
    expect('(');
    Value x = parse_expr();
    expect(',');
    Value f = parse_expr();
    expect(')');
    require(x, Value::ALG, "pair (first argument)");
    require(f, Value::GROUP, "pair (second argument)");
    Value r;
    r.sc = dual_.pair(x.el, f.el, true);
    return r;
  }

  Value form_delta() {
    expect('(');
    Value a = parse_expr();
    expect(')');
    Value r;
    if (a.kind == Value::GROUP) {
      r.kind = Value::GROUP_TENSOR;
      r.te = G().P.coproduct(a.el);
    } else if (a.kind == Value::ALG) {
      r.kind = Value::ALG_TENSOR;
      r.te = K().P.coproduct(a.el);
    } else {
      throw EvalError(std::string("delta: expected a group or algebra element, got ") +
                      Value::kind_name(a.kind));
    }
    return r;
  }

  Value form_antipode() {
    expect('(');
    Value a = parse_expr();
    expect(')');
    if (a.kind == Value::GROUP) a.el = G().P.antipode(a.el);
    else if (a.kind == Value::ALG) a.el = K().P.antipode(a.el);
    else
      throw EvalError(std::string("S: expected a group or algebra element, got ") +
                      Value::kind_name(a.kind));
    return a;
  }

  Value form_counit() {
    expect('(');
    Value a = parse_expr();
    expect(')');
    Value r;
    if (a.kind == Value::GROUP) r.sc = G().P.counit(a.el);
    else if (a.kind == Value::ALG) r.sc = K().P.counit(a.el);
    else
      throw EvalError(std::string("eps: expected a group or algebra element, got ") +
                      Value::kind_name(a.kind));
    return r;
  }

  Value form_hat() {
    expect('(');
    Value x = parse_expr();
    expect(',');
    Value f = parse_expr();
    expect(')');
    require(x, Value::ALG, "hat (first argument)");
    require(f, Value::SYMBOL, "hat (second argument)");
    Value r;
    r.kind = Value::SYMBOL;
    r.xp = XPoly(4);
    for (const auto& [w, c] : x.el) r.xp += hat_.apply_word(w, f.xp) * xp_const(c);
    return r;
  }

  // --- arithmetic --------------------------------------------------------
  static Value promote(const Value& v, Value::Kind k) {
    if (v.kind == k) return v;
    if (v.kind != Value::SCALAR)
      throw EvalError(std::string("cannot combine ") + Value::kind_name(v.kind) + " with " +
                      Value::kind_name(k));
    Value r;
    r.kind = k;
    if (k == Value::GROUP || k == Value::ALG) r.el = {{Word{}, v.sc}};
    else if (k == Value::SYMBOL) r.xp = xp_const(v.sc);
    else
      throw EvalError("cannot combine a scalar with a tensor");
    return r;
  }

  Value add(const Value& a0, const Value& b0, int sign) {
    Value::Kind k = a0.kind == Value::SCALAR ? b0.kind : a0.kind;
    Value a = promote(a0, k), b = promote(b0, k);
    Value r = a;
    Coefficient s = coeff_rat(sign);
    switch (k) {
      case Value::SCALAR: r.sc = a.sc + s * b.sc; break;
      case Value::GROUP:
      case Value::ALG:
        r.el = sign > 0 ? ae_add(a.el, b.el) : ae_sub(a.el, b.el);
        break;
      case Value::SYMBOL: r.xp = sign > 0 ? a.xp + b.xp : a.xp - b.xp; break;
      default: throw EvalError("'+' is not defined on tensors");
    }
    return r;
  }

  Value mul(const Value& a, const Value& b) {
    if (a.kind == Value::SCALAR && b.kind == Value::SCALAR) {
      Value r;
      r.sc = a.sc * b.sc;
      return r;
    }
    if (a.kind == Value::SCALAR || b.kind == Value::SCALAR) {
      const Value& sc = a.kind == Value::SCALAR ? a : b;
      Value r = a.kind == Value::SCALAR ? b : a;
      switch (r.kind) {
        case Value::GROUP:
        case Value::ALG: {
          AlgebraElement scaled;
          for (const auto& [w, c] : r.el) ae_add_term(scaled, w, c * sc.sc);
          r.el = scaled;
          break;
        }
        case Value::SYMBOL: r.xp = r.xp * xp_const(sc.sc); break;
        default: throw EvalError("'*' is not defined on tensors");
      }
      return r;
    }
    if (a.kind != b.kind)
      throw EvalError(std::string("cannot multiply ") + Value::kind_name(a.kind) + " by " +
                      Value::kind_name(b.kind));
    Value r = a;
    switch (a.kind) {
      case Value::GROUP: r.el = G().P.multiply(a.el, b.el); break;
      case Value::ALG: r.el = K().P.multiply(a.el, b.el); break;
      case Value::SYMBOL: r.xp = star_multiply(a.xp, b.xp); break;
      default: throw EvalError("'*' is not defined on tensors");
    }
    return r;
  }

  Value div(const Value& a, const Value& b) {
    if (b.kind != Value::SCALAR) throw EvalError("'/' needs a scalar divisor");
    if (b.sc.is_zero()) throw EvalError("division by zero");
    Value inv;
    inv.sc = b.sc.inv();
    return mul(a, inv);
  }

  // --- rendering ---------------------------------------------------------
  std::string render(const Value& v) {
    switch (v.kind) {
      case Value::SCALAR: return v.sc.str();
      case Value::GROUP: return G().P.elem_str(G().P.normal_form(v.el));
      case Value::ALG: return K().P.elem_str(K().P.normal_form(v.el));
      case Value::SYMBOL: return v.xp.str({"x0", "x1", "x2", "x3"});
      case Value::GROUP_TENSOR: return G().P.tensor_str(G().P.te_normalize(v.te));
      case Value::ALG_TENSOR: return K().P.tensor_str(K().P.te_normalize(v.te));
    }
    return "?";
  }

  DualityPairing dual_;  // owns the group and algebra instances
  HatOps hat_;
  std::string src_;
  size_t pos_ = 0;
};

int run_eval(const std::string& expr) {
  try {
    Evaluator ev;
    std::cout << ev.eval(expr) << "\n";
    return 0;
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for the kappa-Poincare group/algebra duality,\n"
               "its induced representation, and the kappa-Minkowski calculus"};
  app.require_subcommand(0, 1);

  Config cfg;
  bool list = false;
  app.add_flag("--list", list, "List the available suites and exit");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite (or 'all')");
  std::string which = "all";
  verify->add_option("suite", which, "Suite name or 'all'");
  std::string spin = "0";
  auto* spin_opt =
      verify->add_option("--spin", spin, "Spin of the induced representation (0, 1/2 or 1)")
          ->check(CLI::IsMember({"0", "1/2", "1"}));
  auto* md_opt = verify->add_option("--max-degree", cfg.max_degree,
                                    "Maximum word/monomial degree for randomized checks");
  verify->add_option("--samples", cfg.samples, "Number of random samples per randomized check");
  verify->add_option("--seed", cfg.seed, "PRNG seed (echoed in the report)");
  verify->add_option("--order", cfg.order, "Laurent truncation order for limit suites");
  verify->add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--no-timing", cfg.no_timing,
                   "Pin elapsed_ms to 0 for byte-identical reports");
  verify->add_option("--corrupt", cfg.corrupt, "Run the documented negative-control variants")
      ->group("");  // hidden

  CLI::App* evalc = app.add_subcommand("eval", "Evaluate an expression in the mini-language");
  std::string expr;
  evalc->add_option("expr", expr, "Expression, e.g. \"pair(P[1], v[1]*v[0])\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list) {
    for (const auto& [name, fn] : suites()) std::cout << name << "\n";
    std::cout << "all\n";
    return 0;
  }
  if (verify->parsed()) {
    cfg.spin_given = spin_opt->count() > 0;
    cfg.max_degree_given = md_opt->count() > 0;
    cfg.twice_j = spin == "0" ? 0 : spin == "1/2" ? 1 : 2;
    try {
      return run_verify(which, cfg);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  if (evalc->parsed()) return run_eval(expr);
  std::cout << app.help();
  return 2;
}
