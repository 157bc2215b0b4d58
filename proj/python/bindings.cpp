#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ordcomb/bqo.hpp"
#include "ordcomb/fraisse.hpp"
#include "ordcomb/omega.hpp"
#include "ordcomb/parse.hpp"
#include "ordcomb/theta.hpp"

namespace py = pybind11;
using namespace ordcomb;

namespace {

std::string order_str(std::strong_ordering o) { return std::string(to_string(o)); }

std::vector<FinSet::value_type> set_list(const FinSet& s) { return s.elements(); }

StabilizingArray array_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_array(in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ordinal notations, stabilizing arrays and linear order embeddings";

  // Raised as ordcomb.Error(code, message[, position, expected]).
  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      auto args = py::make_tuple(std::string(to_string(e.code())), e.what(), e.position(), e.expected());
      PyErr_SetObject(error.ptr(), args.ptr());
    } catch (const Error& e) {
      auto args = py::make_tuple(std::string(to_string(e.code())), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("compare_omega", [](const std::string& base, const std::string& s, const std::string& t) {
    return order_str(omega_compare(parse_base_order(base), parse_omega_term(s), parse_omega_term(t)));
  }, py::arg("base"), py::arg("s"), py::arg("t"));

  m.def("enumerate_omega", [](const std::string& base, std::size_t count) {
    std::vector<std::string> out;
    for (const auto& t : omega_enumerate(parse_base_order(base), count)) out.push_back(t.str());
    return out;
  }, py::arg("base"), py::arg("count"));

  m.def("compare_theta", [](const std::string& base, const std::string& s, const std::string& t) {
    return order_str(theta_compare(parse_base_order(base), parse_theta_term(s), parse_theta_term(t)));
  }, py::arg("base"), py::arg("s"), py::arg("t"));

  m.def("theta_validate", [](const std::string& base, const std::string& t) {
    return theta_validate(parse_base_order(base), parse_theta_term(t));
  }, py::arg("base"), py::arg("t"));

  m.def("theta_coefficients", [](const std::string& t) {
    std::vector<std::string> out;
    for (const auto& k : theta_coefficients(parse_theta_term(t))) out.push_back(k.str());
    return out;
  }, py::arg("t"));

  m.def("theta_descend", [](const std::string& base, std::size_t budget) -> std::optional<std::vector<std::string>> {
    auto d = theta_descend_search(parse_base_order(base), budget);
    if (!d) return std::nullopt;
    std::vector<std::string> out;
    for (const auto& t : d->chain) out.push_back(t.str());
    return out;
  }, py::arg("base"), py::arg("budget"));

  m.def("embeds", [](const std::string& s, const std::string& t) {
    return embeds(parse_order_term(s), parse_order_term(t));
  }, py::arg("source"), py::arg("target"));

  m.def("finite_suborder_check", [](const std::string& s, const std::string& t, std::size_t k) {
    return finite_suborder_check(parse_order_term(s), parse_order_term(t), k);
  }, py::arg("source"), py::arg("target"), py::arg("k"));

  m.def("fraisse_pair", [](const std::vector<std::string>& terms) {
    std::vector<OrderTerm> orders;
    for (const auto& t : terms) orders.push_back(parse_order_term(t));
    return fraisse_pair(orders);
  }, py::arg("orders"));

  m.def("good_pair", [](const std::string& array_text, std::size_t size, const std::string& order, unsigned jobs)
            -> std::optional<std::vector<FinSet::value_type>> {
    auto a = array_from_text(array_text);
    if (order != "antichain" && order != "chain") throw Error(ErrorCode::OutOfRange, "order must be antichain or chain");
    auto q = order == "chain" ? QuasiOrder::chain(size) : QuasiOrder::antichain(size);
    auto hit = good_pair_search(a, q, jobs);
    if (!hit) return std::nullopt;
    return set_list(*hit);
  }, py::arg("array_text"), py::arg("size"), py::arg("order") = "antichain", py::arg("jobs") = 1);

  m.def("three_antichain_good_pair", [](const std::string& array_text, unsigned jobs) {
    auto a = array_from_text(array_text);
    auto x = three_antichain_good_pair(a, jobs);
    static const char* exits[] = {"homogeneous", "adjacent-pair", "root-tail"};
    return py::dict(py::arg("set") = set_list(x.witness), py::arg("value") = x.value,
                    py::arg("exit") = exits[static_cast<int>(x.exit)], py::arg("root") = set_list(x.root));
  }, py::arg("array_text"), py::arg("jobs") = 1);

  m.def("homogeneous_set", [](const std::string& array_text, std::size_t target, unsigned jobs)
            -> std::optional<std::pair<std::vector<FinSet::value_type>, Color>> {
    auto a = array_from_text(array_text);
    auto h = cofinite_homogeneous_search(a, target, jobs);
    if (!h) return std::nullopt;
    return std::make_pair(set_list(h->set), h->color);
  }, py::arg("array_text"), py::arg("target"), py::arg("jobs") = 1);
}
