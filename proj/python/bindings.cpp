// Python bindings. Everything crosses the boundary as plain values or JSON
// text; the package wrapper decodes the JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringkt/indres.hpp"
#include "ringkt/report.hpp"

namespace py = pybind11;
using namespace ringkt;

namespace {

OrderPtr open_field(const std::string& path) { return load_field(load_field_file(path)); }

IntMatrix to_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix a(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != a.cols()) throw Error(ErrorKind::ShapeMismatch, "ragged matrix");
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = rows[i][j];
  }
  return a;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "K-theory of ring C*-algebras of rings of integers";
  m.attr("FIELDS_DIR") = RINGKT_FIELDS_DIR;

  py::register_exception<Error>(m, "RingktError", PyExc_ValueError);

  m.def("analyze_json", [](const std::string& path) {
    SemidirectGroup g(open_field(path));
    return to_json(field_report(g));
  });
  m.def("eta_json", [](const std::string& path, std::int64_t c) {
    SemidirectGroup g(open_field(path));
    return to_json(eta_report(eta_matrix(g, c)));
  });
  m.def("ktheory_json", [](const std::string& path, std::int64_t c, int depth, bool group_cstar) {
    SemidirectGroup g(open_field(path));
    KTheoryReport k = group_cstar ? group_algebra_k(g, depth) : full_k_theory(g, c, depth);
    return to_json(make_report(g, k));
  });
  m.def("is_admissible", [](const std::string& path, long c) { return is_admissible(*open_field(path), Integer(c)); });
  m.def("limit_json", [](const std::vector<std::vector<long>>& rows, std::optional<long> parameter, bool invert_all) {
    TelescopeSystem sys{to_matrix(rows), std::nullopt};
    if (parameter) sys.certificate = TelescopeSystem::infer_certificate(sys.a, Integer(*parameter));
    return to_json(telescope_colimit(sys, invert_all));
  }, py::arg("rows"), py::arg("parameter") = py::none(), py::arg("invert_all_primes") = false);
  m.def("check_doublecoset", [](const std::string& group) {
    RepresentationContext ctx(FiniteGroup::catalog(group));
    const auto subs = ctx.group().subgroups();
    std::size_t failures = 0;
    for (auto h : subs)
      for (auto k : subs)
        if (!double_coset_check(ctx, h, k).ok) ++failures;
    return std::make_pair(subs.size() * subs.size(), failures);
  });
  m.def("catalog_names", [](int max_order) { return FiniteGroup::catalog_names(max_order); });
}
