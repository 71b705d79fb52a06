#include "cybe/report.hpp"

#include <sstream>

#include "cybe/bialgebra.hpp"
#include "cybe/enumerate.hpp"

namespace cybe {

using nlohmann::ordered_json;

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (std::size_t m = 0; m < v.size(); ++m) {
    if (!v[m].is_zero()) out.push_back(ordered_json::array({m + 1, v[m].to_string()}));
  }
  return out;
}

std::string tensor_text(const Tensor2& r) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < r.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) {
      if (r(i, j).is_zero()) continue;
      os << (first ? "" : " + ") << r(i, j).to_string() << " e" << i + 1 << "(x)e" << j + 1;
      first = false;
    }
  }
  return first ? "0" : os.str();
}

ordered_json entries3_json(const std::vector<Entry3>& entries) {
  ordered_json out = ordered_json::array();
  for (const auto& e : entries) out.push_back(ordered_json::array({e.i + 1, e.j + 1, e.m + 1, e.value.to_string()}));
  return out;
}

ordered_json witness_json(const std::vector<WitnessEntry>& entries) {
  ordered_json out = ordered_json::array();
  for (const auto& e : entries) {
    ordered_json row = ordered_json::array();
    for (std::size_t idx : e.index) row.push_back(idx + 1);
    row.push_back(e.value.to_string());
    out.push_back(row);
  }
  return out;
}

ordered_json axiom_json(const AxiomCheck& check) {
  ordered_json w = ordered_json::array();
  for (const auto& wit : check.witnesses) {
    ordered_json item;
    item["i"] = wit.i + 1;
    if (wit.j) item["j"] = *wit.j + 1;
    item["residual"] = witness_json(wit.entries);
    w.push_back(item);
  }
  return ordered_json{{"ok", check.ok}, {"witnesses", w}};
}

ordered_json labels_json(const std::set<SolutionLabel>& labels) {
  ordered_json out = ordered_json::array();
  for (SolutionLabel l : labels) out.push_back(label_name(l));
  return out;
}

std::string labels_text(const std::set<SolutionLabel>& labels) {
  if (labels.empty()) return "none";
  std::string out;
  for (SolutionLabel l : labels) out += (out.empty() ? "" : "; ") + label_prose(l);
  return out;
}

ordered_json algebra_json(const LieAlgebra& L, const std::vector<JacobiViolation>& violations) {
  ordered_json v = ordered_json::array();
  for (const auto& jv : violations) {
    v.push_back(ordered_json{{"i", jv.i + 1}, {"j", jv.j + 1}, {"k", jv.k + 1}, {"residual", vector_json(jv.residual)}});
  }
  const Regime regime = solution_regime(L);
  return ordered_json{{"label", L.label()},
                      {"dim", L.dim()},
                      {"field", L.field().to_string()},
                      {"jacobi", violations.empty()},
                      {"jacobi_violations", v},
                      {"regime", regime_name(regime)},
                      {"covered", regime != Regime::Uncovered}};
}

std::string algebra_text(const LieAlgebra& L, const std::vector<JacobiViolation>& violations) {
  std::ostringstream os;
  os << "algebra " << L.label() << " over " << L.field().to_string() << ", dim " << L.dim() << "\n";
  os << "  Jacobi identity: " << (violations.empty() ? "holds" : "FAILS") << "\n";
  for (const auto& jv : violations) {
    os << "    at (e" << jv.i + 1 << ", e" << jv.j + 1 << ", e" << jv.k + 1 << ")\n";
  }
  os << "  classification regime: " << regime_name(solution_regime(L)) << "\n";
  return os.str();
}

ordered_json header(const char* command, const ProblemFile& problem) {
  ordered_json out;
  out["command"] = command;
  out["input"] = serialize_problem(problem);
  return out;
}

unsigned effective_workers(const ProblemFile& problem, const CommandOptions& opts) {
  if (opts.workers) return *opts.workers;
  if (problem.options.workers) return *problem.options.workers;
  return 1;
}

} // namespace

std::string label_prose(SolutionLabel l) {
  switch (l) {
  case SolutionLabel::StronglySymmetric: return "strongly symmetric";
  case SolutionLabel::SkewSymmetric: return "skew symmetric";
  case SolutionLabel::AlphaBetaSkew: return "α,β-skew symmetric";
  case SolutionLabel::HeisenbergPNonzero: return "Heisenberg case p ≠ 0 (q = p, p² = xy, xu = sp, xv = tp, tu = vs)";
  case SolutionLabel::HeisenbergPZero: return "Heisenberg case p = q = 0 (xy = xu = xv = ys = yt = 0, tu = vs)";
  case SolutionLabel::SemidirectBetaZeroMixed: return "β = 0 case with z = 0, t = -s, v = -u";
  case SolutionLabel::SemidirectUnitDeltaMixed: return "δ = 1 case with s = t = z = 0, v = -u";
  case SolutionLabel::SemidirectDegenerateZNonzero: return "β = δ = 0 case with z ≠ 0";
  case SolutionLabel::SemidirectDegenerateZZero: return "β = δ = 0 case with z = 0";
  case SolutionLabel::Abelian: return "abelian algebra (every tensor)";
  case SolutionLabel::Unclassified: return "no closed-form classification for this algebra";
  }
  return "?";
}

CommandResult cmd_check(const ProblemFile& problem, const CommandOptions&) {
  const LieAlgebra L = build_algebra(problem);
  const auto violations = check_jacobi(L);
  const auto form = standard_form(L);
  const bool cyclic = form && form->kind == StandardForm::Kind::Cyclic;

  CommandResult out;
  out.report = header("check", problem);
  out.report["algebra"] = algebra_json(L, violations);
  std::ostringstream text;
  text << algebra_text(L, violations);

  bool all_solutions = true;
  ordered_json results = ordered_json::array();
  for (std::size_t n = 0; n < problem.tensors.size(); ++n) {
    const Tensor2& r = problem.tensors[n];
    const ResidualReport res = cybe_residual(L, r);
    const Classification cls = classify_solution(L, r);
    all_solutions = all_solutions && res.is_zero;

    ordered_json item;
    item["index"] = n + 1;
    item["entries"] = tensor_entries_json(r);
    item["is_solution"] = res.is_zero;
    item["residual"] = entries3_json(res.nonzero_entries);
    item["symmetric"] = is_symmetric(r);
    item["skew_symmetric"] = is_skew_symmetric(r);
    item["strongly_symmetric"] = is_strongly_symmetric(r);
    if (cyclic) {
      item["alpha_beta_skew_symmetric"] = is_alpha_beta_skew(r, *form->first, *form->second);
    } else {
      item["alpha_beta_skew_symmetric"] = nullptr;
    }
    item["labels"] = labels_json(cls.labels);
    results.push_back(item);

    text << "tensor " << n + 1 << ": r = " << tensor_text(r) << "\n";
    text << "  solves the CYBE: " << yes_no(res.is_zero) << "\n";
    text << "  symmetric: " << yes_no(is_symmetric(r)) << ", skew symmetric: " << yes_no(is_skew_symmetric(r))
         << ", strongly symmetric: " << yes_no(is_strongly_symmetric(r)) << "\n";
    if (cyclic) text << "  α,β-skew symmetric: " << yes_no(is_alpha_beta_skew(r, *form->first, *form->second)) << "\n";
    text << "  classification: " << labels_text(cls.labels) << "\n";
  }
  out.report["tensors"] = results;
  const bool ok = violations.empty() && all_solutions;
  out.report["verdict"] = ordered_json{{"jacobi", violations.empty()}, {"all_solutions", all_solutions}, {"ok", ok}};
  out.text = text.str();
  out.exit_code = ok ? kExitOk : kExitFailed;
  return out;
}

CommandResult cmd_bialgebra(const ProblemFile& problem, const CommandOptions&) {
  const LieAlgebra L = build_algebra(problem);
  const auto violations = check_jacobi(L);

  CommandResult out;
  out.report = header("bialgebra", problem);
  out.report["algebra"] = algebra_json(L, violations);
  std::ostringstream text;
  text << algebra_text(L, violations);

  bool all_ok = violations.empty();
  ordered_json results = ordered_json::array();
  for (std::size_t n = 0; n < problem.tensors.size(); ++n) {
    const Tensor2& r = problem.tensors[n];
    const BialgebraReport rep = bialgebra_check(L, r);

    ordered_json item;
    item["index"] = n + 1;
    item["entries"] = tensor_entries_json(r);
    item["r_in_image"] = rep.r_in_image;
    item["coantisymmetry"] = axiom_json(rep.coantisymmetry);
    item["cojacobi"] = axiom_json(rep.cojacobi);
    item["compatibility"] = axiom_json(rep.compatibility);
    item["is_cybe_solution"] = rep.is_cybe_solution;
    item["is_coboundary"] = rep.is_coboundary;
    item["is_triangular"] = rep.is_triangular;

    ordered_json pred;
    bool agreement = true;
    if (!rep.r_in_image) {
      pred["status"] = "not_skew";
    } else {
      const auto cob = coboundary_predicate(L, r);
      const auto tri = triangular_predicate(L, r);
      if (!cob || !tri) {
        pred["status"] = "uncovered";
      } else {
        agreement = *cob == rep.is_coboundary && *tri == rep.is_triangular;
        pred["status"] = "evaluated";
        pred["coboundary"] = *cob;
        pred["triangular"] = *tri;
        pred["agreement"] = agreement;
      }
    }
    item["predicates"] = pred;
    results.push_back(item);
    all_ok = all_ok && rep.is_coboundary && agreement;

    text << "tensor " << n + 1 << ": r = " << tensor_text(r) << "\n";
    text << "  r in Im(1 - tau): " << yes_no(rep.r_in_image) << "\n";
    text << "  Im Delta in Im(1 - tau): " << yes_no(rep.coantisymmetry.ok) << ", co-Jacobi: " << yes_no(rep.cojacobi.ok)
         << ", compatibility: " << yes_no(rep.compatibility.ok) << "\n";
    text << "  coboundary Lie bialgebra: " << yes_no(rep.is_coboundary)
         << ", triangular: " << yes_no(rep.is_triangular) << "\n";
    if (pred["status"] == "evaluated") {
      text << "  closed-form conditions: coboundary " << yes_no(pred["coboundary"].get<bool>()) << ", triangular "
           << yes_no(pred["triangular"].get<bool>()) << "; agreement " << yes_no(agreement) << "\n";
    } else {
      text << "  closed-form conditions: " << pred["status"].get<std::string>() << "\n";
    }
  }
  out.report["tensors"] = results;
  out.report["verdict"] = ordered_json{{"ok", all_ok}};
  out.text = text.str();
  out.exit_code = all_ok ? kExitOk : kExitFailed;
  return out;
}

CommandResult cmd_enumerate(const ProblemFile& problem, const CommandOptions& opts) {
  if (!problem.field.is_prime()) throw InputError("enumerate needs a prime field");
  const LieAlgebra L = build_algebra(problem);
  EnumerationOptions eo;
  if (problem.options.budget) eo.budget = *problem.options.budget;
  if (opts.budget) eo.budget = *opts.budget;
  eo.workers = effective_workers(problem, opts);

  CommandResult out;
  out.report = header("enumerate", problem);
  EnumerationReport rep;
  try {
    rep = verify_classification(L, eo);
  } catch (const BudgetExceeded& e) {
    out.report["error"] = "budget_exceeded";
    out.report["message"] = e.what();
    out.report["partial"] = false;
    out.text = std::string("budget exceeded: ") + e.what() + "\n";
    out.exit_code = kExitFailed;
    return out;
  }

  auto grids = [&](const std::vector<Grid>& list) {
    ordered_json a = ordered_json::array();
    for (const auto& g : list) a.push_back(tensor_entries_json(grid_to_tensor(g, L.field())));
    return a;
  };
  ordered_json counts = ordered_json::object();
  for (const auto& [label, count] : rep.label_counts) counts[label_name(label)] = count;

  ordered_json& r = out.report;
  r["p"] = rep.p;
  r["algebra"] = rep.algebra;
  r["dim"] = rep.dim;
  r["regime"] = regime_name(rep.regime);
  r["empirical_only"] = rep.empirical_only;
  r["total"] = rep.total;
  r["solutions"] = rep.solutions;
  r["predicted"] = rep.predicted;
  r["matched"] = rep.matched;
  r["mismatches"] = rep.missed + rep.spurious;
  r["missed"] = rep.missed;
  r["spurious"] = rep.spurious;
  r["missed_witnesses"] = grids(rep.missed_witnesses);
  r["spurious_witnesses"] = grids(rep.spurious_witnesses);
  r["label_counts"] = counts;
  r["confirmed"] = rep.confirmed();
  if (opts.timing) r["timing"] = ordered_json{{"seconds", rep.seconds}, {"workers", rep.workers}};

  std::ostringstream text;
  text << "algebra " << rep.algebra << " over F_" << rep.p << ": scanned " << rep.total << " tensors\n";
  text << "  CYBE solutions: " << rep.solutions << "\n";
  if (rep.empirical_only) {
    text << "  no closed-form classification covers this algebra; counts are empirical only\n";
  } else {
    text << "  predicted by the classification: " << rep.predicted << ", matched: " << rep.matched << "\n";
    text << "  solutions outside the classification: " << rep.missed
         << ", predicted tensors that are not solutions: " << rep.spurious << "\n";
    for (const auto& [label, count] : rep.label_counts) text << "    " << label_prose(label) << ": " << count << "\n";
    text << "  classification " << (rep.confirmed() ? "confirmed" : "NOT confirmed") << "\n";
  }
  if (opts.timing) text << "  wall time " << rep.seconds << " s with " << rep.workers << " worker(s)\n";
  out.text = text.str();
  out.exit_code = rep.confirmed() ? kExitOk : kExitFailed;
  return out;
}

CommandResult cmd_generate(const ProblemFile& problem, const CommandOptions&) {
  if (!problem.options.generate) throw InputError("generate needs options.generate with a case and parameters");
  const GenerateSpec& g = *problem.options.generate;
  const LieAlgebra L = build_algebra(problem);
  const Tensor2 r = generate_solution(L, g.solution_case, g.params);
  const bool solves = is_cybe_solution(L, r);
  const Classification cls = classify_solution(L, r);

  CommandResult out;
  out.report = header("generate", problem);
  out.report["case"] = case_name(g.solution_case);
  out.report["tensor"] = ordered_json{{"entries", tensor_entries_json(r)}};
  if (r.dim() == 3) {
    const NamedCoefficients c = named(r);
    ordered_json nm;
    const std::pair<char, const Scalar*> fields[] = {{'x', &c.x}, {'y', &c.y}, {'z', &c.z}, {'p', &c.p}, {'q', &c.q},
                                                     {'s', &c.s}, {'t', &c.t}, {'u', &c.u}, {'v', &c.v}};
    for (const auto& [name, value] : fields) nm[std::string(1, name)] = value->to_string();
    out.report["named"] = nm;
  }
  out.report["self_check"] = ordered_json{{"is_solution", solves}, {"labels", labels_json(cls.labels)}};

  std::ostringstream text;
  text << "case " << case_name(g.solution_case) << " on " << L.label() << " over " << L.field().to_string() << "\n";
  text << "  r = " << tensor_text(r) << "\n";
  text << "  self-check, solves the CYBE: " << yes_no(solves) << "\n";
  text << "  classification: " << labels_text(cls.labels) << "\n";
  out.text = text.str();
  out.exit_code = solves ? kExitOk : kExitFailed;
  return out;
}

CommandResult cmd_families() {
  struct Row {
    const char* name;
    const char* dim;
    const char* params;
    std::vector<const char*> brackets;
  };
  const std::vector<Row> rows = {
      {"I", "n", "any n >= 1", {}},
      {"II", "3", "alpha, beta", {"[e1,e2] = e3", "[e2,e3] = alpha e1", "[e3,e1] = beta e2"}},
      {"III", "3", "", {"[e1,e2] = e3", "[e2,e3] = 0", "[e3,e1] = 0"}},
      {"IV", "3", "beta, delta (delta != 0)", {"[e1,e2] = 0", "[e1,e3] = e1 + beta e2", "[e2,e3] = delta e2"}},
      {"V", "3", "", {"[e1,e2] = 0", "[e1,e3] = e1", "[e2,e3] = 0"}},
      {"VI", "2", "", {"[e1,e2] = e1"}},
      {"SL2", "3", "", {"[e1,e2] = e3", "[e2,e3] = 4 e1", "[e3,e1] = -4 e2"}},
  };
  CommandResult out;
  out.report["command"] = "families";
  ordered_json list = ordered_json::array();
  std::ostringstream text;
  for (const auto& row : rows) {
    ordered_json b = ordered_json::array();
    for (const char* s : row.brackets) b.push_back(s);
    list.push_back(ordered_json{{"family", row.name}, {"dim", row.dim}, {"parameters", row.params}, {"brackets", b}});
    text << row.name << " (dim " << row.dim << (row.params[0] ? std::string("; ") + row.params : "") << "): ";
    if (row.brackets.empty()) text << "abelian, all brackets zero";
    for (std::size_t i = 0; i < row.brackets.size(); ++i) text << (i ? ", " : "") << row.brackets[i];
    text << "\n";
  }
  out.report["families"] = list;
  out.text = text.str();
  return out;
}

} // namespace cybe
