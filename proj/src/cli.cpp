#include "stablecore/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "stablecore/core.hpp"
#include "stablecore/diagonal.hpp"
#include "stablecore/errors.hpp"
#include "stablecore/report.hpp"

namespace stablecore::cli {

namespace {

struct Options {
  std::string input;
  std::string inline_ideal;
  bool json = false;
  bool no_trim = false;
  std::uint64_t seed = 7;
  int trials = 5;
  int max_d = 8;
  int d = 0;
};

struct Exit {
  int code;
};

struct Loaded {
  StableIdeal2 original;
  Trimmed trimmed;
};

std::string join(const std::vector<Monomial>& ms) {
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + ms[i].to_string();
  return s;
}

std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

Loaded load(const Options& opt, std::ostream& err) {
  std::string text;
  if (!opt.input.empty() && !opt.inline_ideal.empty()) {
    err << "error: give either --input or --ideal, not both\n";
    throw Exit{kParse};
  }
  if (!opt.inline_ideal.empty()) {
    text = opt.inline_ideal;
  } else if (opt.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) {
      err << "error: cannot read " << opt.input << "\n";
      throw Exit{kParse};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    err << "error: an ideal is required (--input <path> or --ideal '<json>')\n";
    throw Exit{kParse};
  }

  try {
    auto ideal = parse_ideal_json(text);
    auto t = trim(ideal);
    if (t.ideal.dim() > opt.max_d) {
      err << "error: d = " << t.ideal.dim() << " exceeds --max-d " << opt.max_d << "\n";
      throw Exit{kParse};
    }
    return Loaded{ideal, t};
  } catch (const NotStronglyStable& e) {
    err << "error: not strongly stable: " << e.what() << "\n";
    throw Exit{kStability};
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    throw Exit{kParse};
  }
}

Json ideal_block(const Loaded& l, const Options& opt) {
  Json j = to_json(opt.no_trim ? l.original : l.trimmed.ideal);
  if (l.trimmed.changed()) {
    j["trimmed_from"] = l.trimmed.original_dim;
    j["trimmed_d"] = l.trimmed.ideal.dim();
  }
  return j;
}

void require_gd(const Loaded& l, std::ostream& err) {
  const auto diag = has_Gd(l.trimmed.ideal);
  if (diag.holds) return;
  err << "error: G_d fails: x" << l.trimmed.ideal.height() - 1 << "*x" << l.trimmed.ideal.dim()
      << " is not in the ideal";
  if (diag.witness) {
    err << "; witness prime (x1..x" << diag.witness->s << ") needs " << diag.witness->localized_count
        << " local generators";
  }
  err << "\n";
  throw Exit{kGd};
}

int cmd_check(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto l = load(opt, err);
  const auto& ideal = l.trimmed.ideal;
  const auto diag = has_Gd(ideal);
  const int spread = analytic_spread(ideal);
  if (opt.json) {
    Json j{{"ideal", ideal_block(l, opt)},
           {"g", ideal.height()},
           {"original_d", l.original.dim()},
           {"trimmed_d", ideal.dim()},
           {"Gd", to_json(diag)},
           {"analytic_spread", spread}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "d = " << l.original.dim();
  if (l.trimmed.changed()) out << " (trimmed to d' = " << ideal.dim() << ")";
  out << "\nrows = [";
  for (std::size_t i = 0; i < ideal.rows().size(); ++i) out << (i ? ", " : "") << ideal.rows()[i];
  out << "]\ng = " << ideal.height() << "\n\n" << render_tableau(ideal) << "\n";
  if (diag.by_convention) {
    out << "G_d: yes (g = 1, by convention)\n";
  } else if (diag.holds) {
    out << "G_d: yes (x" << ideal.height() - 1 << "*x" << ideal.dim() << " is in I)\n";
  } else {
    const auto& w = *diag.witness;
    out << "G_d: no (x" << ideal.height() - 1 << "*x" << ideal.dim() << " is not in I)\n"
        << "  witness prime (x1..x" << w.s << "), s = " << w.s << ", t = " << w.t << "\n"
        << "  local generators (" << w.local_generators.size() << "): " << join(w.local_generators) << "\n"
        << "  localized minimal generator count: " << w.localized_count << "\n";
  }
  out << "analytic spread = " << spread << "\n";
  return kOk;
}

int cmd_core(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto l = load(opt, err);
  require_gd(l, err);
  auto c = core(l.trimmed.ideal);
  if (l.trimmed.changed()) c.trimmed_from = l.trimmed.original_dim;
  const auto gens = opt.no_trim ? c.extended_generators() : c.generators;
  const std::string provenance = c.extrapolated ? "formula-extrapolated" : "theorem";
  if (opt.json) {
    Json j{{"ideal", ideal_block(l, opt)},
           {"g", c.g},
           {"core_generators", strings(gens)},
           {"count", gens.size()},
           {"provenance", provenance}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "core(I) = I*m^" << c.g - 1 << ", generated in degree " << c.g + 1 << " by " << gens.size()
      << " monomials (" << provenance << ")\n";
  if (c.trimmed_from) out << "computed over d' = " << c.source.dim() << " and extended to d = " << *c.trimmed_from << "\n";
  for (const auto& m : gens) out << "  " << m.to_string() << "\n";
  return kOk;
}

int cmd_reduction(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto l = load(opt, err);
  require_gd(l, err);
  const auto j = diagonal_reduction(l.trimmed.ideal);
  const auto r = certify_reduction(l.trimmed.ideal);
  if (opt.json) {
    Json doc{{"ideal", ideal_block(l, opt)},
             {"g", l.trimmed.ideal.height()},
             {"diagonal_reduction", to_json(j)},
             {"reduction", to_json(r)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "diagonal reduction J:\n";
    for (std::size_t n = 0; n < j.gens.size(); ++n)
      out << "  f" << n + 1 << " = " << j.gens[n].to_string() << "   (beta = " << j.betas[n] << ")\n";
    out << "I^g = J I^(g-1) in degree " << r.witness_degree << ": " << (r.reduction_holds ? "yes" : "NO")
        << " (ranks " << r.rank_power << " / " << r.rank_product << ")\n";
    out << "reduction number of I with respect to J: " << r.reduction_number << "\n";
  }
  if (!r.reduction_holds) {
    err << "certification failed: reduction\n";
    return kCertification;
  }
  return kOk;
}

int require_small_d(const Options& opt, int min_d, std::ostream& err) {
  if (opt.d < min_d) {
    err << "error: --d must be at least " << min_d << "\n";
    throw Exit{kParse};
  }
  if (opt.d > opt.max_d) {
    err << "error: --d " << opt.d << " exceeds --max-d " << opt.max_d << "\n";
    throw Exit{kParse};
  }
  return opt.d;
}

int cmd_socle(const Options& opt, std::ostream& out, std::ostream& err) {
  const int d = require_small_d(opt, 1, err);
  const auto s = socle_check(d);
  if (opt.json) {
    Json j = to_json(s);
    j["d"] = d;
    out << j.dump(2) << "\n";
  } else {
    out << "socle of R/J in degree " << d << " (J = diagonal reduction of m^2):\n";
    for (const auto& p : s.basis) out << "  " << p.to_string() << "\n";
    out << "matches x1^" << d << ": " << (s.matches ? "yes" : "NO") << "\n";
    out << "x1^" << d << " outside J: " << (s.top_power_outside ? "yes" : "NO") << "\n";
  }
  if (!(s.matches && s.top_power_outside)) {
    err << "certification failed: socle\n";
    return kCertification;
  }
  return kOk;
}

int cmd_northcott(const Options& opt, std::ostream& out, std::ostream& err) {
  const int d = require_small_d(opt, 2, err);
  const auto n = northcott_check(d);
  if (opt.json) {
    Json j = to_json(n);
    j["d"] = d;
    out << j.dump(2) << "\n";
  } else {
    out << "det(A) = " << n.det.to_string() << "\n"
        << "A (x1..x" << d << ")^T = (f1..f" << d << ")^T: " << (n.rows_match ? "yes" : "NO") << "\n"
        << "det(A) - x1^" << d << " in J: " << (n.eq3 ? "yes" : "NO") << "\n"
        << "x1^" << d << " - (-1)^" << n.c << " x" << d << "^" << d << " in J: " << (n.eq4 ? "yes" : "NO") << "\n"
        << "(det(A)) + J = J : m in degree " << d << ": " << (n.colon_match ? "yes" : "NO") << "\n";
  }
  if (!n.all()) {
    err << "certification failed: northcott\n";
    return kCertification;
  }
  return kOk;
}

int cmd_algorithm(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto l = load(opt, err);
  const auto s = run_algorithm(l.trimmed.ideal);
  const auto cmp = verify_Sh_equals_Th(s);
  if (opt.json) {
    write_ordered_s_lines(out, s);
  } else {
    out << "S for d = " << s.dim() << ", g = " << s.height() << " (" << s.size() << " elements)\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto [h, j] = *s.locate(s.sequence()[i]);
      out << "  M" << i + 1 << " = " << s.sequence()[i].to_string() << "   (S_" << h << ", #" << j << ")\n";
    }
    out << "S_h = T_h for every h: " << (cmp.equal ? "yes" : "NO") << "\n";
  }
  if (!cmp.equal) {
    err << "certification failed: Sh_equals_Th (stratum " << cmp.h << ", position " << cmp.position << ")\n";
    return kCertification;
  }
  return kOk;
}

int cmd_certify_all(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto l = load(opt, err);
  require_gd(l, err);
  const auto& ideal = l.trimmed.ideal;
  const int g = ideal.height();

  std::vector<std::string> failed;
  Json checks{{"Gd", true}};
  auto run = [&](const std::string& name, const std::function<bool(Json&)>& body) {
    bool ok = false;
    try {
      ok = body(checks);
    } catch (const CertificationFailure& e) {
      err << "  " << e.what() << "\n";
      ok = false;
    }
    if (!ok) failed.push_back(name);
    return ok;
  };

  auto c = core(ideal);
  run("core_strongly_stable", [&](Json& j) {
    const bool ok = core_strong_stability_check(c);
    j["core_strongly_stable"] = ok;
    return ok;
  });
  run("Sh_equals_Th", [&](Json& j) {
    const auto s = run_algorithm(ideal);
    const bool ok = verify_Sh_equals_Th(s).equal && s_covers_products(s);
    j["Sh_equals_Th"] = ok;
    return ok;
  });
  run("Im_in_J", [&](Json& j) {
    const auto rep = certify_Im_in_J(ideal);
    const auto jp = diagonal_reduction(ideal).presentation();
    bool ok = true;
    for (const auto& rec : rep.records)
      if (expand_certificate(jp, rec.certificate, rep.degree) != HomogeneousPoly(rec.monomial)) ok = false;
    j["Im_in_J"] = ok;
    j["Im_in_J_certificates"] = rep.records.size();
    return ok;
  });
  run("IS_in_J", [&](Json& j) {
    certify_IS_in_J(ideal);
    j["IS_in_J"] = true;
    return true;
  });
  run("reduction", [&](Json& j) {
    const auto r = certify_reduction(ideal);
    j["reduction_holds"] = r.reduction_holds;
    j["reduction_number_leq"] = r.reduction_number;
    return r.reduction_holds && r.reduction_number <= g - 1;
  });
  run("socle", [&](Json& j) {
    const auto s = socle_check(g);
    j["socle"] = s.matches && s.top_power_outside;
    return s.matches && s.top_power_outside;
  });
  run("lemma_in_soc", [&](Json& j) {
    bool ok = true;
    for (const auto& m : lemma_in_soc_check(g)) ok = ok && m.member;
    j["lemma_in_soc"] = ok;
    return ok;
  });
  if (g >= 2) {
    run("lemma_soc_lem", [&](Json& j) {
      bool ok = true;
      for (const auto& m : lemma_soc_lem_check(g)) ok = ok && m.membership.member && m.closed_form;
      j["lemma_soc_lem"] = ok;
      return ok;
    });
    run("northcott", [&](Json& j) {
      const auto n = northcott_check(g);
      Json nj = to_json(n);
      nj["d"] = g;
      j["northcott"] = nj;
      return n.all();
    });
    run("lower_bound", [&](Json& j) {
      const auto lb = certify_lower_bound_obstruction(ideal);
      j["lower_bound"] = to_json(lb);
      return lb.all();
    });
  } else {
    checks["lemma_soc_lem"] = nullptr;
    checks["northcott"] = nullptr;
    checks["lower_bound"] = nullptr;
  }
  run("upper_bound", [&](Json& j) {
    const auto ub = certify_core_upper_bound(ideal, opt.trials, opt.seed);
    j["upper_bound_trials"] = ub.passed;
    return ub.all();
  });

  if (l.trimmed.changed()) c.trimmed_from = l.trimmed.original_dim;
  const auto gens = opt.no_trim ? c.extended_generators() : c.generators;
  Json report{{"ideal", ideal_block(l, opt)},
              {"g", g},
              {"core_generators", strings(gens)},
              {"checks", checks},
              {"seed", opt.seed},
              {"trials", opt.trials},
              {"provenance", c.extrapolated ? "formula-extrapolated" : "theorem"},
              {"failed", failed}};
  if (opt.json) {
    out << report.dump(2) << "\n";
  } else {
    out << "certify-all for d = " << ideal.dim() << ", rows = " << Json(ideal.rows()).dump() << ", g = " << g << "\n";
    for (auto it = checks.begin(); it != checks.end(); ++it) out << "  " << it.key() << ": " << it.value().dump() << "\n";
    out << (failed.empty() ? "all checks passed\n" : "some checks FAILED\n");
  }
  if (!failed.empty()) {
    err << "certification failed:";
    for (const auto& f : failed) err << " " << f;
    err << "\n";
    return kCertification;
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cores of degree-two strongly stable ideals, with exact certificates", "stablecore"};
  app.require_subcommand(1, 1);
  Options opt;

  auto add_ideal_options = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Path to an ideal JSON file, or - for stdin");
    sub->add_option("--ideal", opt.inline_ideal, "Inline ideal JSON");
    sub->add_flag("--json", opt.json, "Emit JSON");
    sub->add_flag("--no-trim", opt.no_trim, "Report in the original ambient ring");
    sub->add_option("--max-d", opt.max_d, "Largest accepted dimension after trimming")->check(CLI::PositiveNumber);
  };
  auto add_dim_options = [&](CLI::App* sub) {
    sub->add_option("--d", opt.d, "Number of variables")->required();
    sub->add_flag("--json", opt.json, "Emit JSON");
    sub->add_option("--max-d", opt.max_d, "Largest accepted dimension")->check(CLI::PositiveNumber);
  };

  std::map<CLI::App*, std::function<int()>> handlers;
  auto ideal_cmd = [&](const char* name, const char* help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    add_ideal_options(sub);
    handlers[sub] = [&, fn] { return fn(opt, out, err); };
    return sub;
  };
  ideal_cmd("check", "Validate the ideal, trim it, and test G_d", cmd_check);
  ideal_cmd("core", "Compute core(I) = I m^(g-1)", cmd_core);
  ideal_cmd("reduction", "Diagonal reduction and reduction number", cmd_reduction);
  ideal_cmd("algorithm", "Ordered set S of the stepping algorithm", cmd_algorithm);
  auto* all = ideal_cmd("certify-all", "Run every certification", cmd_certify_all);
  all->add_option("--seed", opt.seed, "Seed for the random coordinate changes");
  all->add_option("--trials", opt.trials, "Number of random coordinate changes")->check(CLI::NonNegativeNumber);

  auto* socle = app.add_subcommand("socle", "Socle of R/J for the diagonal reduction of m^2");
  add_dim_options(socle);
  handlers[socle] = [&] { return cmd_socle(opt, out, err); };
  auto* northcott = app.add_subcommand("northcott", "Northcott determinant checks");
  add_dim_options(northcott);
  handlers[northcott] = [&] { return cmd_northcott(opt, out, err); };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn();
  } catch (const Exit& e) {
    return e.code;
  } catch (const GdFailure& e) {
    err << "error: " << e.what() << "\n";
    return kGd;
  } catch (const CertificationFailure& e) {
    err << "certification failed: " << e.what() << "\n";
    return kCertification;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}

}  // namespace stablecore::cli
