#include "pcclosure/commands.hpp"

#include <json.hpp>

#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "pcclosure/parse.hpp"
#include "pcclosure/regbasis.hpp"
#include "pcclosure/seqfile.hpp"

namespace pcc {

namespace {

using nlohmann::json;

struct Options {
  bool json_mode = false;
  Int horizon = 30;
  int max_degree = 32;
};

json j_int(const Int& v) {
  static const Int lo = std::numeric_limits<int64_t>::min();
  static const Int hi = std::numeric_limits<int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<int64_t>();
  return v.str();
}

json j_group(const GroupElement& v) {
  if (v.is_infinity()) return "inf";
  json a = json::array();
  for (const Int& c : v.coords()) a.push_back(j_int(c));
  return a;
}

json j_classification(const Classification& c) {
  json v;
  switch (c.kind) {
    case Classification::Kind::pseudo_limit:
      v["kind"] = "pseudo_limit";
      break;
    case Classification::Kind::coset:
      v["kind"] = "coset";
      v["k"] = j_int(*c.index);
      break;
    case Classification::Kind::outside:
      v["kind"] = "outside";
      switch (c.reason) {
        case Classification::Reason::gauge_undershoot:
          v["reason"] = "gauge_undershoot";
          break;
        case Classification::Reason::coset_prime_fail:
          v["reason"] = "coset_prime_fail";
          break;
        case Classification::Reason::gauge_mismatch:
          v["reason"] = "gauge_mismatch";
          break;
        default:
          break;
      }
      if (c.index) v["k"] = j_int(*c.index);
      break;
  }
  return v;
}

std::string command_echo(const std::vector<std::string>& args) {
  std::string s = "pcclosure";
  for (const auto& a : args) {
    s += ' ';
    s += a;
  }
  return s;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PCSeq load_valid_sequence(const std::string& path) {
  PCSeq seq = build_sequence(load_sequence_file(path));
  if (!seq.is_valid())
    throw std::runtime_error(path + ": not pseudo-convergent: " +
                             seq.validation()->message);
  return seq;
}

Int parse_index(const std::string& s) {
  Int n(s);
  if (n < 0) throw UsageError("index must be >= 0");
  return n;
}

const char* kUsage =
    "usage: pcclosure [--json] [--horizon N] [--max-degree D] <command> ...\n"
    "\n"
    "commands:\n"
    "  validate <file>                 check that the file describes a\n"
    "                                  pseudo-convergent sequence\n"
    "  term <file> <n>                 print s_n exactly\n"
    "  gauge <file> <n>                print delta_n = v(s_{n+1} - s_n)\n"
    "  closure <file>                  print the closure description\n"
    "  classify <file> --elem <expr>   membership verdict for an element\n"
    "  equal <fileE> <fileF>           decide whether the closures agree\n"
    "  hn <file> <n> [--eval <expr>]   print the basis polynomial H_n\n"
    "  expand <file> --poly <expr>     expand a polynomial in the basis\n"
    "  print-spec <file>               reprint the parsed sequence file\n"
    "  demo nontopological [--rank r]  run the two-sequence closure\n"
    "                                  comparison at rank r >= 2\n";

std::string print_one_line(const PCSeq& seq) {
  std::ostringstream os;
  os << "prefix [";
  for (size_t i = 0; i < seq.prefix().size(); ++i) {
    if (i) os << ", ";
    os << seq.prefix()[i].str();
  }
  os << "], c_n = (" << seq.tail().scale.str() << ")*t^(n*"
     << seq.tail().step.str() << ") for n >= " << seq.tail_start();
  return os.str();
}

int cmd_validate(const PCSeq& seq, const Options& opt,
                 const std::vector<std::string>& args, std::ostream& out) {
  json j{{"command", command_echo(args)},
         {"verdict", "pseudo-convergent"},
         {"rank", seq.rank()},
         {"prefix_length", seq.prefix().size()}};
  if (opt.json_mode)
    out << j.dump() << "\n";
  else
    out << "ok: pseudo-convergent (rank " << seq.rank() << ", prefix length "
        << seq.prefix().size() << ")\n";
  return 0;
}

int cmd_term(const PCSeq& seq, const Options& opt,
             const std::vector<std::string>& args, std::ostream& out,
             const Int& n) {
  FieldElement s = seq.term(n);
  if (opt.json_mode)
    out << json{{"command", command_echo(args)},
                {"n", j_int(n)},
                {"term", s.str()},
                {"valuation", j_group(valuation(s))}}
               .dump()
        << "\n";
  else
    out << s.str() << "\n";
  return 0;
}

int cmd_gauge(const PCSeq& seq, const Options& opt,
              const std::vector<std::string>& args, std::ostream& out,
              const Int& n) {
  GroupElement g = seq.gauge_at(n);
  if (opt.json_mode)
    out << json{{"command", command_echo(args)},
                {"n", j_int(n)},
                {"gauge", j_group(g)}}
               .dump()
        << "\n";
  else
    out << g.str() << "\n";
  return 0;
}

int cmd_closure(const PCSeq& seq, const Options& opt,
                const std::vector<std::string>& args, std::ostream& out) {
  ClosureDescription d = closure_describe(seq);
  if (opt.json_mode) {
    json cosets = json::array();
    for (const auto& part : d.prefix_cosets)
      cosets.push_back(json{{"k", j_int(part.k)},
                            {"center", part.center.str()},
                            {"scale", part.scale.str()},
                            {"prime", part.prime.j}});
    out << json{{"command", command_echo(args)},
                {"sigma", d.sigma.str()},
                {"breadth", d.breadth_ideal.str()},
                {"prefix_cosets", cosets},
                {"tail_prime", d.tail_prime.j},
                {"tail",
                 {{"u", d.tail.scale.str()},
                  {"b", j_group(d.tail.step)},
                  {"n0", j_int(d.tail.start)}}}}
               .dump()
        << "\n";
  } else {
    out << d.str();
  }
  return 0;
}

int cmd_classify(const PCSeq& seq, const Options& opt,
                 const std::vector<std::string>& args, std::ostream& out,
                 const std::string& expr) {
  FieldElement alpha = parse_element(expr, seq.rank());
  Classification c = classify(seq, alpha);
  if (opt.json_mode) {
    json j{{"command", command_echo(args)},
           {"verdict", j_classification(c)},
           {"v_alpha_minus_sigma", j_group(c.dist)}};
    if (c.gauge) j["delta_k"] = j_group(*c.gauge);
    if (c.w) j["v_alpha_minus_s_k"] = j_group(*c.w);
    out << j.dump() << "\n";
  } else {
    out << "verdict: " << c.str() << "\n";
    out << "v(alpha - sigma) = " << c.dist.str() << "\n";
    if (c.gauge) out << "delta_k = " << c.gauge->str() << "\n";
    if (c.w) out << "v(alpha - s_k) = " << c.w->str() << "\n";
  }
  return c.is_member() ? 0 : 1;
}

int cmd_equal(const PCSeq& a, const PCSeq& b, const Options& opt,
              const std::vector<std::string>& args, std::ostream& out) {
  ClosureEqualResult r = closure_equal(a, b);
  if (opt.json_mode) {
    json j{{"command", command_echo(args)},
           {"equal", r.equal},
           {"certificate", r.certificate}};
    if (r.fail_index) j["fail_index"] = j_int(*r.fail_index);
    out << j.dump() << "\n";
  } else {
    out << "equal: " << (r.equal ? "yes" : "no") << "\n";
    out << "certificate: " << r.certificate << "\n";
  }
  return r.equal ? 0 : 1;
}

int cmd_hn(const PCSeq& seq, const Options& opt,
           const std::vector<std::string>& args, std::ostream& out, const Int& n,
           const std::optional<std::string>& eval_expr) {
  if (n > opt.max_degree)
    throw UsageError("basis degree exceeds --max-degree (" +
                     std::to_string(opt.max_degree) + ")");
  FieldPoly h = basis_poly(seq, n);
  std::optional<FieldElement> value;
  if (eval_expr) value = h.eval(parse_element(*eval_expr, seq.rank()));
  if (opt.json_mode) {
    json j{{"command", command_echo(args)}, {"n", j_int(n)}, {"hn", h.str()}};
    if (value) {
      j["value"] = value->str();
      j["value_valuation"] = j_group(valuation(*value));
      j["in_V"] = in_valuation_ring(*value);
    }
    out << j.dump() << "\n";
  } else {
    out << "H_" << n << " = " << h.str() << "\n";
    if (value) {
      out << "value = " << value->str() << "\n";
      out << "valuation = " << valuation(*value).str() << "\n";
      out << "in V: " << (in_valuation_ring(*value) ? "yes" : "no") << "\n";
    }
  }
  return 0;
}

int cmd_expand(const PCSeq& seq, const Options& opt,
               const std::vector<std::string>& args, std::ostream& out,
               const std::string& poly_expr) {
  FieldPoly f = parse_poly(poly_expr, seq.rank());
  if (f.degree() > opt.max_degree)
    throw UsageError("polynomial degree exceeds --max-degree (" +
                     std::to_string(opt.max_degree) + ")");
  BasisExpansion e = expand_in_basis(seq, f);
  bool intval = true;
  for (const auto& c : e.coeffs)
    if (!in_valuation_ring(c)) intval = false;
  if (opt.json_mode) {
    json coeffs = json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(c.str());
    out << json{{"command", command_echo(args)},
                {"coefficients", coeffs},
                {"integer_valued", intval}}
               .dump()
        << "\n";
  } else {
    for (size_t i = 0; i < e.coeffs.size(); ++i)
      out << "a[" << i << "] = " << e.coeffs[i].str() << "\n";
    out << "integer-valued: " << (intval ? "yes" : "no") << "\n";
  }
  return 0;
}

struct DemoCheck {
  std::string name;
  bool ok;
  std::string detail;
};

int cmd_demo(const Options& opt, const std::vector<std::string>& args,
             std::ostream& out, int rank) {
  if (rank < 2) throw UsageError("demo requires --rank >= 2");
  int r = rank;
  FieldElement t = FieldElement::var(r, r);   // nonunit outside a smaller prime
  FieldElement p = FieldElement::var(r, 1);   // generator of that smaller prime
  FieldElement t2 = t * t, t3 = t2 * t;
  GroupElement b = GroupElement::unit(r, r);
  PCSeq e({t}, GeoTail{t2 - t, b, 0});         // s_n = t^(n+1)
  PCSeq eprime({t2}, GeoTail{t3 - t2, b, 0});  // s_n = t^(n+2)
  FieldElement alpha = t + p;

  std::vector<DemoCheck> checks;
  auto record = [&](std::string name, bool ok, std::string detail) {
    checks.push_back(DemoCheck{std::move(name), ok, std::move(detail)});
  };

  record("E pseudo-convergent", e.is_valid(), print_one_line(e));
  record("E' pseudo-convergent", eprime.is_valid(), print_one_line(eprime));

  Cut br_e = breadth(e), br_ep = breadth(eprime);
  Cut expected_breadth = PrimeCut{r, r - 1}.as_cut();
  record("breadth(E) = breadth(E') = P_" + std::to_string(r - 1),
         br_e == br_ep && br_e == expected_breadth,
         "breadth(E) = " + br_e.str() + ", breadth(E') = " + br_ep.str());

  FieldElement sig_e = pseudo_limit(e), sig_ep = pseudo_limit(eprime);
  record("pseudo_limit(E) = pseudo_limit(E') = 0",
         sig_e.is_zero() && sig_ep.is_zero(),
         "sigma(E) = " + sig_e.str() + ", sigma(E') = " + sig_ep.str());

  Classification ce = classify(e, alpha);
  record("classify(E, t+p) = coset(0)",
         ce.kind == Classification::Kind::coset && ce.index && *ce.index == 0,
         ce.str());

  Classification cep = classify(eprime, alpha);
  record("classify(E', t+p) = outside(gauge-undershoot at 0)",
         cep.kind == Classification::Kind::outside &&
             cep.reason == Classification::Reason::gauge_undershoot &&
             cep.index && *cep.index == 0,
         cep.str());

  ClosureOracleResult oep = closure_oracle(eprime, alpha, 5);
  GroupElement expect_v = -GroupElement::unit(r, r);
  bool oracle_ok = !oep.pass && oep.witness && *oep.witness == 1 &&
                   oep.witness_valuation && *oep.witness_valuation == expect_v;
  record("oracle on E' fails at n=1 with v(H'_1(t+p)) = " + expect_v.str(),
         oracle_ok,
         oep.pass ? "oracle passed"
                  : "fail at n=" + oep.witness->str() + ", v = " +
                        oep.witness_valuation->str());

  ClosureOracleResult oe = closure_oracle(e, alpha, opt.horizon);
  record("oracle on E passes to horizon " + opt.horizon.str(), oe.pass,
         oe.pass ? "pass" : "fail at n=" + oe.witness->str());

  ClosureEqualResult eq = closure_equal(e, eprime);
  record("closure_equal(E, E') = false", !eq.equal, eq.certificate);

  record("t+p differs from t (finite sets are polynomially closed)",
         !(alpha == t), "p = " + p.str());

  bool all_ok = true;
  for (const auto& c : checks) all_ok = all_ok && c.ok;

  if (opt.json_mode) {
    for (const auto& c : checks)
      out << json{{"command", command_echo(args)},
                  {"check", c.name},
                  {"ok", c.ok},
                  {"detail", c.detail}}
                 .dump()
          << "\n";
    out << json{{"command", command_echo(args)}, {"demo_ok", all_ok}}.dump()
        << "\n";
  } else {
    out << "non-topological closure demo (rank " << r << ", t = t" << r
        << ", p = t1)\n";
    out << "E  = {t^(n+1)}:  " << print_one_line(e) << "\n";
    out << "E' = {t^(n+2)}:  " << print_one_line(eprime) << "\n";
    for (const auto& c : checks)
      out << (c.ok ? "  [ok]   " : "  [FAIL] ") << c.name << "  -- " << c.detail
          << "\n";
    if (all_ok)
      out << "demo: all checks hold; t+p lies in the closure of E but in "
             "neither the closure of E' nor {t},\n"
             "so no topology can produce this closure operator.\n";
    else
      out << "demo: FAILED\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  std::vector<std::string> args;
  std::optional<std::string> elem_expr, poly_expr, eval_expr;
  int demo_rank = 2;

  try {
    for (size_t i = 0; i < raw_args.size(); ++i) {
      const std::string& a = raw_args[i];
      auto need_value = [&](const char* flag) -> const std::string& {
        if (i + 1 >= raw_args.size())
          throw UsageError(std::string(flag) + " needs a value");
        return raw_args[++i];
      };
      if (a == "--json") {
        opt.json_mode = true;
      } else if (a == "--horizon") {
        opt.horizon = Int(need_value("--horizon"));
        if (opt.horizon < 0) throw UsageError("--horizon must be >= 0");
      } else if (a == "--max-degree") {
        opt.max_degree = std::stoi(need_value("--max-degree"));
        if (opt.max_degree < 0) throw UsageError("--max-degree must be >= 0");
      } else if (a == "--elem") {
        elem_expr = need_value("--elem");
      } else if (a == "--poly") {
        poly_expr = need_value("--poly");
      } else if (a == "--eval") {
        eval_expr = need_value("--eval");
      } else if (a == "--rank") {
        demo_rank = std::stoi(need_value("--rank"));
      } else if (a == "--help" || a == "-h") {
        out << kUsage;
        return 0;
      } else if (!a.empty() && a[0] == '-' && a.size() > 1 &&
                 !std::isdigit(static_cast<unsigned char>(a[1]))) {
        throw UsageError("unknown flag: " + a);
      } else {
        args.push_back(a);
      }
    }

    if (args.empty()) {
      err << kUsage;
      return 2;
    }
    const std::string& cmd = args[0];

    if (cmd == "validate") {
      if (args.size() != 2) throw UsageError("validate needs a sequence file");
      PCSeq seq = build_sequence(load_sequence_file(args[1]));
      if (!seq.is_valid()) {
        err << "not pseudo-convergent: " << seq.validation()->message
            << " (index " << seq.validation()->index << ")\n";
        return 2;
      }
      return cmd_validate(seq, opt, raw_args, out);
    }
    if (cmd == "term" || cmd == "gauge") {
      if (args.size() != 3) throw UsageError(cmd + " needs a file and an index");
      PCSeq seq = load_valid_sequence(args[1]);
      Int n = parse_index(args[2]);
      return cmd == "term" ? cmd_term(seq, opt, raw_args, out, n)
                           : cmd_gauge(seq, opt, raw_args, out, n);
    }
    if (cmd == "closure") {
      if (args.size() != 2) throw UsageError("closure needs a sequence file");
      return cmd_closure(load_valid_sequence(args[1]), opt, raw_args, out);
    }
    if (cmd == "classify") {
      if (args.size() != 2 || !elem_expr)
        throw UsageError("classify needs a file and --elem <expr>");
      return cmd_classify(load_valid_sequence(args[1]), opt, raw_args, out,
                          *elem_expr);
    }
    if (cmd == "equal") {
      if (args.size() != 3) throw UsageError("equal needs two sequence files");
      return cmd_equal(load_valid_sequence(args[1]), load_valid_sequence(args[2]),
                       opt, raw_args, out);
    }
    if (cmd == "hn") {
      if (args.size() != 3) throw UsageError("hn needs a file and an index");
      return cmd_hn(load_valid_sequence(args[1]), opt, raw_args, out,
                    parse_index(args[2]), eval_expr);
    }
    if (cmd == "expand") {
      if (args.size() != 2 || !poly_expr)
        throw UsageError("expand needs a file and --poly <expr>");
      return cmd_expand(load_valid_sequence(args[1]), opt, raw_args, out,
                        *poly_expr);
    }
    if (cmd == "print-spec") {
      if (args.size() != 2) throw UsageError("print-spec needs a sequence file");
      PCSeq seq = build_sequence(load_sequence_file(args[1]));
      out << print_sequence_spec(seq);
      return 0;
    }
    if (cmd == "demo") {
      if (args.size() != 2 || args[1] != "nontopological")
        throw UsageError("unknown demo; available: nontopological");
      return cmd_demo(opt, raw_args, out, demo_rank);
    }
    throw UsageError("unknown command: " + cmd);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pcc
