#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "shiish/arrangement.hpp"
#include "shiish/error.hpp"
#include "shiish/graphs.hpp"
#include "shiish/json_io.hpp"
#include "shiish/parking.hpp"
#include "shiish/verify.hpp"

namespace py = pybind11;
using namespace shiish;

namespace {

std::vector<int> as_vector(const Word& w) { return {w.values().begin(), w.values().end()}; }

std::vector<int> as_vector(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.n(); ++i) out.push_back(p(i));
  return out;
}

py::int_ to_pyint(Count128 v) {
  std::string digits;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  } while (v != 0);
  return py::int_(py::str(digits));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Words, regions and parking functions of the arrangements A^k_n";
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  m.def("is_parking_function", [](const std::vector<int>& a) { return is_parking_function(Word(a)); });
  m.def("is_ish_parking", [](const std::vector<int>& a) { return is_ish_parking(Word(a)); });
  m.def("is_k_partial", [](const std::vector<int>& a, int k) { return is_k_partial(Word(a), k); });
  m.def("parks_all_tail", [](const std::vector<int>& a, int k) { return parks_all_tail(Word(a), k); });
  m.def("centre", [](const std::vector<int>& a) { return centre(Word(a)).members; });
  m.def("sort_tail", [](const std::vector<int>& a, int k) {
    const auto st = sort_tail(Word(a), k);
    return py::make_tuple(as_vector(st.word), as_vector(st.pi));
  });
  m.def("sigma", [](const std::vector<int>& a, int k) -> std::optional<std::vector<int>> {
    const auto s = sigma_characterization(Word(a), k);
    if (!s) return std::nullopt;
    return as_vector(*s);
  });
  m.def("count_tail_parkers", [](int n, int k) { return to_pyint(count_tail_parkers(n, k)); });

  m.def("is_g_parking", [](const std::vector<int>& a, int k) {
    const Word w(a);
    return is_g_parking(build_rooted(w.n(), k), w);
  });
  m.def("tree_to_word", [](int n, int k, const std::vector<EncodedArc>& tree) {
    return as_vector(tree_to_word(build_rooted(n, k), tree));
  });

  // Structured results travel as JSON text; the package wrapper decodes them.
  m.def("_classify", [](const std::vector<int>& a, const std::vector<int>& ks) {
    return classification_json(Word(a), ks).dump();
  });
  m.def("_burn", [](const std::vector<int>& a, int k) {
    const Word w(a);
    return to_json(dfs_burn(build_rooted(w.n(), k), w)).dump();
  });
  m.def(
      "_regions",
      [](int n, int k, int cap) {
        const Arrangement arr(n, k);
        Json out = Json::array();
        for (const auto& lr : enumerate_regions(arr, cap)) out.push_back(region_json(arr, lr));
        return out.dump();
      },
      py::arg("n"), py::arg("k"), py::arg("cap") = kDefaultRegionCap);
  m.def(
      "_cross_validate",
      [](int n, int k, int workers) {
        EquivalenceReport rep;
        {
          py::gil_scoped_release release;
          rep = cross_validate(n, k, {workers, true});
        }
        return to_json(rep).dump();
      },
      py::arg("n"), py::arg("k"), py::arg("workers") = 1);
  m.def("_reproduce_tables", [] {
    Json out = Json::array();
    for (const auto& c : reproduce_tables()) out.push_back(to_json(c));
    return out.dump();
  });
}
