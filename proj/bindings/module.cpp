#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "relweyl/characters.hpp"
#include "relweyl/cli.hpp"
#include "relweyl/error.hpp"
#include "relweyl/root_system.hpp"
#include "relweyl/weyl_group.hpp"

namespace py = pybind11;
using namespace relweyl;

namespace {

std::vector<int> zero_based(std::vector<int> J) {
  for (int& j : J) {
    if (j < 1) throw UsageError("J indices are 1-based positive integers");
    --j;
  }
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  return J;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

std::vector<Root> positive_roots(const std::string& type) {
  return RootSystem(CartanType::parse(type)).positive_roots();
}

std::vector<std::vector<int>> cartan_matrix(const std::string& type) {
  return RootSystem(CartanType::parse(type)).cartan_matrix();
}

std::string weyl_order_str(const std::string& type) {
  return weyl_order(CartanType::parse(type)).str();
}

std::vector<int> degrees(const std::string& type) {
  const RootSystem rs(CartanType::parse(type));
  const WeylGroup W = WeylGroup::enumerate(rs, Int(kDefaultMaxOrder));
  return fundamental_degrees(rs, W.length_histogram());
}

std::size_t relative_order(const std::string& type, const std::vector<int>& J) {
  const RootSystem rs(CartanType::parse(type));
  const WeylGroup W = WeylGroup::enumerate(rs, Int(kDefaultMaxOrder));
  return RelativeWeylGroup::build(rs, W, zero_based(J)).order();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact root systems, relative Weyl groups and graded characters of H*(G/P)";
  m.def("cli", &cli, py::arg("args"),
        "Run the relweyl command line in-process; returns (exit_code, stdout, stderr).");
  m.def("positive_roots", &positive_roots, py::arg("type"),
        "Positive roots in simple-root coordinates, sorted by (height, lex).");
  m.def("cartan_matrix", &cartan_matrix, py::arg("type"));
  m.def("weyl_order", &weyl_order_str, py::arg("type"),
        "|W| as a decimal string (exact for every type, including E8).");
  m.def("fundamental_degrees", &degrees, py::arg("type"),
        "Degrees d_1..d_n of the fundamental invariants; enumerates W.");
  m.def("relative_order", &relative_order, py::arg("type"), py::arg("J"),
        "|W(L)| for the parabolic given by 1-based simple root indices J.");
}
