#include "ringkt/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace ringkt {

using ojson = nlohmann::ordered_json;

namespace {

ojson int_json(const Integer& x) { return x.get_str(); }

Integer int_from(const ojson& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (!j.is_string()) throw Error(ErrorKind::MalformedSpec, "expected an integer or decimal string");
  Integer z;
  if (z.set_str(j.get<std::string>(), 10) != 0)
    throw Error(ErrorKind::MalformedSpec, "bad integer '" + j.get<std::string>() + "'");
  return z;
}

ojson matrix_json(const IntMatrix& a) {
  ojson rows = ojson::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    ojson row = ojson::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(int_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from(const ojson& j, std::size_t cols_if_empty = 0) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedSpec, "matrix must be an array of rows");
  if (j.empty()) return IntMatrix(0, cols_if_empty);
  const std::size_t cols = j[0].size();
  IntMatrix a(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorKind::MalformedSpec, "ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) a(i, k) = int_from(j[i][k]);
  }
  return a;
}

ojson int_vector_json(const IntVector& v) {
  ojson out = ojson::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

IntVector int_vector_from(const ojson& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(int_from(x));
  return v;
}

ojson graded_json(const GradedGroup& g) {
  ojson out = ojson::array();
  for (const auto& d : g.deg)
    out.push_back(ojson{{"q_rank", d.q_rank}, {"z_rank", d.z_rank}, {"torsion", int_vector_json(d.torsion)},
                        {"text", d.to_string()}});
  return ojson{{"text", g.to_string()}, {"degrees", out}};
}

GradedGroup graded_from(const ojson& j) {
  GradedGroup g;
  const auto& d = j.at("degrees");
  if (!d.is_array() || d.size() != 2) throw Error(ErrorKind::MalformedSpec, "graded group needs two degrees");
  for (int k = 0; k < 2; ++k) {
    g.deg[k].q_rank = d[k].at("q_rank").get<std::size_t>();
    g.deg[k].z_rank = d[k].at("z_rank").get<std::size_t>();
    g.deg[k].torsion = int_vector_from(d[k].at("torsion"));
  }
  return g;
}

ojson formula_json(const KFormula& f) {
  ojson tr = ojson::array();
  for (const auto& g : f.truncations) tr.push_back(graded_json(g));
  return ojson{{"text", f.text}, {"coefficient_rank", f.coefficient_rank}, {"truncations", tr}};
}

KFormula formula_from(const ojson& j) {
  KFormula f;
  f.text = j.at("text").get<std::string>();
  f.coefficient_rank = j.at("coefficient_rank").get<std::size_t>();
  for (const auto& g : j.at("truncations")) f.truncations.push_back(graded_from(g));
  return f;
}

ojson eta_json(const EtaReport& e) {
  return ojson{{"c", e.c}, {"basis", e.basis}, {"finite_block", matrix_json(e.finite_block)},
               {"inf_diagonal", e.inf_diagonal}};
}

EtaReport eta_from(const ojson& j) {
  EtaReport e;
  e.c = j.at("c").get<std::int64_t>();
  e.basis = j.at("basis").get<std::vector<std::string>>();
  e.finite_block = matrix_from(j.at("finite_block"));
  e.inf_diagonal = j.at("inf_diagonal").get<std::vector<std::string>>();
  return e;
}

ojson field_json(const FieldReport& f) {
  return ojson{{"name", f.name},
               {"n", f.n},
               {"m", f.m},
               {"real_places", f.real_places},
               {"D", f.modulus},
               {"norm_D", f.modulus_norm},
               {"discriminant", int_json(f.discriminant)},
               {"mu_maximality", f.mu_verdict},
               {"mu_detail", f.mu_detail},
               {"maximal_classes", f.maximal_classes},
               {"inf_ranks", int_vector_json(f.inf_ranks)},
               {"delta", f.delta}};
}

FieldReport field_from(const ojson& j) {
  FieldReport f;
  f.name = j.at("name").get<std::string>();
  f.n = j.at("n").get<int>();
  f.m = j.at("m").get<int>();
  f.real_places = j.at("real_places").get<std::size_t>();
  f.modulus = j.at("D").get<std::string>();
  f.modulus_norm = j.at("norm_D").get<std::string>();
  f.discriminant = int_from(j.at("discriminant"));
  f.mu_verdict = j.at("mu_maximality").get<std::string>();
  f.mu_detail = j.at("mu_detail").get<std::string>();
  f.maximal_classes = j.at("maximal_classes").get<std::vector<std::string>>();
  f.inf_ranks = int_vector_from(j.at("inf_ranks"));
  f.delta = j.at("delta").get<int>();
  return f;
}

template <class T, class F>
ojson optional_json(const std::optional<T>& x, F f) {
  return x ? f(*x) : ojson(nullptr);
}

}  // namespace

EtaReport eta_report(const EtaMatrix& e) {
  EtaReport r;
  r.c = e.c;
  for (const auto& l : e.basis) r.basis.push_back(to_string(l));
  r.finite_block = e.finite_block;
  for (int x : e.inf_exponents) r.inf_diagonal.push_back("c^" + std::to_string(x));
  return r;
}

FieldReport field_report(const SemidirectGroup& g) {
  const Order& o = g.order();
  FieldReport f;
  f.name = o.spec().name;
  f.n = o.n();
  f.m = o.m();
  f.real_places = real_places(o.spec().poly);
  const OrderElement d = admissibility_modulus(o);
  f.modulus = o.format(d);
  f.modulus_norm = Integer(abs(o.norm(d))).get_str();
  f.discriminant = o.discriminant();
  const MuReport mu = verify_mu_maximality(o);
  f.mu_verdict = to_string(mu.verdict);
  f.mu_detail = mu.detail;
  for (const auto& l : g.maximal_classes()) f.maximal_classes.push_back(to_string(l));
  f.inf_ranks = inf_ranks(o);
  f.delta = delta(o);
  return f;
}

Report make_report(const SemidirectGroup& g, const KTheoryReport& k) {
  Report r;
  r.field = field_report(g);
  r.target = k.target;
  r.depth = k.depth;
  if (k.target == "ring-cstar") r.c = k.c;
  if (k.subalgebra) {
    r.eta = eta_report(k.subalgebra->eta);
    r.subalgebra = k.subalgebra->group;
  }
  r.pv = k.pv;
  r.tower = k.tower;
  r.roots_branch = k.roots_branch;
  r.real_branch = k.real_branch;
  r.final_formula = k.final_formula;
  r.checks["mu_maximal_not_refuted"] = r.field.mu_verdict != to_string(MuVerdict::Failed);
  r.checks["tower_matches_formula"] = k.tower == k.final_formula.truncations;
  if (k.roots_branch) r.checks["branches_agree"] = *k.roots_branch == k.real_branch;
  if (k.subalgebra) r.checks["eta_shape_verified"] = true;  // eta_matrix throws otherwise
  r.note = "UCT Kirchberg algebra; the isomorphism class is determined by " + k.final_formula.text;
  return r;
}

std::string to_json(const Report& r, int indent) {
  ojson tower = ojson::array();
  for (const auto& g : r.tower) tower.push_back(graded_json(g));
  ojson checks = ojson::object();
  for (const auto& [k, v] : r.checks) checks[k] = v;
  ojson j{{"field", field_json(r.field)},
          {"target", r.target},
          {"c", r.c ? ojson(*r.c) : ojson(nullptr)},
          {"depth", r.depth},
          {"eta", optional_json(r.eta, eta_json)},
          {"subalgebra_k", optional_json(r.subalgebra, graded_json)},
          {"pv_step", optional_json(r.pv, graded_json)},
          {"tower", tower},
          {"roots_branch", optional_json(r.roots_branch, formula_json)},
          {"real_branch", formula_json(r.real_branch)},
          {"final", formula_json(r.final_formula)},
          {"checks", checks},
          {"note", r.note}};
  return j.dump(indent);
}

Report report_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, std::string("report JSON: ") + e.what());
  }
  try {
    Report r;
    r.field = field_from(j.at("field"));
    r.target = j.at("target").get<std::string>();
    if (!j.at("c").is_null()) r.c = j.at("c").get<std::int64_t>();
    r.depth = j.at("depth").get<int>();
    if (!j.at("eta").is_null()) r.eta = eta_from(j.at("eta"));
    if (!j.at("subalgebra_k").is_null()) r.subalgebra = graded_from(j.at("subalgebra_k"));
    if (!j.at("pv_step").is_null()) r.pv = graded_from(j.at("pv_step"));
    for (const auto& g : j.at("tower")) r.tower.push_back(graded_from(g));
    if (!j.at("roots_branch").is_null()) r.roots_branch = formula_from(j.at("roots_branch"));
    r.real_branch = formula_from(j.at("real_branch"));
    r.final_formula = formula_from(j.at("final"));
    for (const auto& [k, v] : j.at("checks").items()) r.checks[k] = v.get<bool>();
    r.note = j.at("note").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, std::string("report JSON: ") + e.what());
  }
}

std::string to_json(const EtaReport& e, int indent) { return eta_json(e).dump(indent); }
std::string to_json(const FieldReport& f, int indent) { return field_json(f).dump(indent); }
std::string to_json(const GradedGroup& g, int indent) { return graded_json(g).dump(indent); }

MatrixInput parse_matrix_input(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, std::string("matrix JSON: ") + e.what());
  }
  MatrixInput in;
  if (j.is_array()) {
    in.a = matrix_from(j);
  } else if (j.is_object() && j.contains("rows")) {
    in.a = matrix_from(j.at("rows"));
    if (j.contains("parameter") && !j.at("parameter").is_null()) in.parameter = int_from(j.at("parameter"));
  } else {
    throw Error(ErrorKind::MalformedSpec, "matrix file needs a 'rows' array");
  }
  if (in.a.rows() != in.a.cols()) throw Error(ErrorKind::DimensionMismatch, "telescope matrix must be square");
  return in;
}

std::string summary_text(const FieldReport& f) {
  std::ostringstream s;
  s << "field " << f.name << ": n = " << f.n << ", m = " << f.m << ", real places = " << f.real_places << "\n";
  s << "D = " << f.modulus << " (|N(D)| = " << f.modulus_norm << "), disc(R) = " << f.discriminant.get_str() << "\n";
  s << "mu maximality: " << f.mu_verdict << "\n";
  s << "maximal finite subgroups (" << f.maximal_classes.size() << "):";
  for (const auto& l : f.maximal_classes) s << " " << l;
  s << "\nd_k =";
  for (const auto& d : f.inf_ranks) s << " " << d.get_str();
  s << ", delta = " << f.delta << "\n";
  return s.str();
}

std::string summary_text(const Report& r) {
  std::ostringstream s;
  s << summary_text(r.field);
  if (r.c) s << "c = " << *r.c << "\n";
  if (r.eta) s << "eta_c finite block: " << r.eta->basis.size() << " x " << r.eta->basis.size() << "\n";
  if (r.subalgebra) s << "K_*(subalgebra) = " << r.subalgebra->to_string() << "\n";
  if (r.pv) s << "after PV step     = " << r.pv->to_string() << "\n";
  for (std::size_t t = 0; t < r.tower.size(); ++t) s << "depth " << t << ": " << r.tower[t].to_string() << "\n";
  if (r.roots_branch) s << "roots-of-unity branch: " << r.roots_branch->text << "\n";
  s << "real-place branch:     " << r.real_branch.text << "\n";
  s << "K_* = " << r.final_formula.text << "\n";
  for (const auto& [k, v] : r.checks) s << (v ? "[ok]   " : "[FAIL] ") << k << "\n";
  return s.str();
}

}  // namespace ringkt
