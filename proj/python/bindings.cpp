#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "shufflesym/combinatorics.hpp"
#include "shufflesym/cycles.hpp"
#include "shufflesym/errors.hpp"
#include "shufflesym/io.hpp"
#include "shufflesym/point_process.hpp"
#include "shufflesym/rsk.hpp"
#include "shufflesym/series.hpp"
#include "shufflesym/shuffle.hpp"
#include "shufflesym/symmetric_functions.hpp"

namespace py = pybind11;
using namespace shufflesym;

namespace {

// Rationals cross the boundary as fractions.Fraction; anything whose str()
// parses as "p/q" is accepted on the way in.
py::object to_py(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(r));
}

Rational from_py(const py::handle& h) { return parse_rational(py::str(h).cast<std::string>()); }

std::vector<Rational> rationals(const py::iterable& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(from_py(x));
  return out;
}

py::list to_py(const std::vector<Rational>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::tuple to_py(const Permutation& pi) { return py::cast(pi.images()); }
py::tuple to_py(const Partition& lambda) { return py::cast(lambda.parts()); }

py::dict to_py(const ExactDistribution& d) {
  py::dict out;
  for (const auto& [pi, w] : d.entries()) out[to_py(pi)] = to_py(w);
  return out;
}

py::dict to_py(const CycleTypeDistribution& d) {
  py::dict out;
  for (const auto& [lambda, w] : d.entries()) out[to_py(lambda)] = to_py(w);
  return out;
}

py::tuple to_py(const InsertionResult& r) { return py::make_tuple(r.insertion.rows, r.recording.rows); }

PointConfig config_from(const std::vector<std::pair<double, double>>& continuum,
                        const std::vector<std::pair<double, int>>& lines) {
  PointConfig c;
  for (const auto& [x, y] : continuum) c.continuum.push_back({x, y});
  for (const auto& [x, level] : lines) c.lines.push_back({x, level});
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for (alpha, beta, gamma) shuffles";

  static PyObject* error = py::exception<Error>(m, "ShuffleSymError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error, (std::string(error_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<ShuffleParams>(m, "ShuffleParams")
      .def(py::init([](const py::iterable& alpha, const py::iterable& beta, const py::object& gamma) {
             return ShuffleParams(rationals(alpha), rationals(beta), from_py(gamma));
           }),
           py::arg("alpha") = py::list(), py::arg("beta") = py::list(), py::arg("gamma") = 0)
      .def_static("gsr", &ShuffleParams::gsr, py::arg("k"))
      .def_static("uniform", &ShuffleParams::uniform)
      .def_static("from_json", [](const std::string& text) { return io::params_from_json(text); })
      .def("to_json", [](const ShuffleParams& p) { return io::params_to_json(p); })
      .def_property_readonly("alpha", [](const ShuffleParams& p) { return to_py(p.alpha()); })
      .def_property_readonly("beta", [](const ShuffleParams& p) { return to_py(p.beta()); })
      .def_property_readonly("gamma", [](const ShuffleParams& p) { return to_py(p.gamma()); })
      .def("swapped", &ShuffleParams::swapped)
      .def("collision_probability", [](const ShuffleParams& p) { return to_py(p.collision_probability()); })
      .def("__eq__", [](const ShuffleParams& a, const ShuffleParams& b) { return a == b; })
      .def("__repr__", &ShuffleParams::describe);

  // symmetric functions
  m.def("extended_h", [](const ShuffleParams& p, int kmax) { return to_py(extended_h_sequence(p, kmax)); });
  m.def("extended_schur", [](const ShuffleParams& p, const std::vector<int>& lambda) {
    return to_py(extended_schur(p, Partition::from_unsorted(lambda)));
  });
  m.def("extended_power_sum", [](const ShuffleParams& p, int n) { return to_py(extended_power_sum(p, n)); });
  m.def("hook_length_count", [](const std::vector<int>& lambda) {
    return py::int_(py::str(hook_length_count(Partition::from_unsorted(lambda)).get_str()));
  });

  // shuffles
  m.def("sample_word", &sample_word, py::arg("params"), py::arg("n"), py::arg("seed"));
  m.def("sample_shuffle", [](const ShuffleParams& p, int n, std::uint64_t seed) { return to_py(sample_shuffle(p, n, seed)); },
        py::arg("params"), py::arg("n"), py::arg("seed"));
  m.def("inverse_shuffle_sample",
        [](const ShuffleParams& p, int n, std::uint64_t seed) { return to_py(inverse_shuffle_sample(p, n, seed)); },
        py::arg("params"), py::arg("n"), py::arg("seed"));
  m.def("word_to_permutation",
        [](const SignedWord& w, std::uint64_t seed) { return to_py(word_to_permutation(w, seed)); }, py::arg("word"),
        py::arg("seed"));
  m.def("exact_distribution", [](const ShuffleParams& p, int n, int k) {
    return to_py(convolve_power(exact_shuffle_distribution(p, n), k));
  }, py::arg("params"), py::arg("n"), py::arg("k") = 1);
  m.def("exact_distances", [](const ShuffleParams& p, int n, int k) {
    const auto d = exact_distances(convolve_power(exact_shuffle_distribution(p, n), k));
    return py::make_tuple(to_py(d.separation), to_py(d.total_variation));
  }, py::arg("params"), py::arg("n"), py::arg("k") = 1);

  // RSK
  m.def("rsk", [](const std::vector<int>& images) { return to_py(rsk(Permutation(images))); });
  m.def("rsk_shape", [](const std::vector<int>& images) { return to_py(rsk_shape(Permutation(images))); });
  m.def("brkv_insert", [](const SignedWord& w) { return to_py(brkv_insert(w)); });
  m.def("brkv_inverse", [](const std::vector<std::vector<int>>& p, const std::vector<std::vector<int>>& q) {
    return brkv_inverse(Tableau{p}, Tableau{q});
  });
  m.def("maj_measure", [](const std::vector<int>& images, const py::object& p, const py::object& q, int k, int l) {
    return to_py(maj_measure(Permutation(images), from_py(p), from_py(q), k, l));
  });

  // series identities
  m.def("gessel_sides", [](const ShuffleParams& p, const py::iterable& x, int n, int D) {
    const auto xs = rationals(x);
    return py::make_tuple(to_py(gessel_lhs(p, xs, n, D).coefficients()), to_py(gessel_rhs(p, xs, n, D).coefficients()));
  });
  m.def("cauchy_residual", [](const ShuffleParams& p, const py::iterable& x, int D) {
    return to_py(cauchy_residual(p, rationals(x), D).coefficients());
  });
  m.def("gap_probability", [](const py::object& gamma_plus, const ShuffleParams& p_minus, int n) {
    return br_gap_probability(from_py(gamma_plus), p_minus, n).value;
  });

  // cycles
  m.def("cycle_type_distribution", [](const ShuffleParams& p, int n) { return to_py(cycle_type_distribution(p, n)); });
  m.def("expected_fixed_points", [](const ShuffleParams& p, int n) { return to_py(expected_fixed_points(p, n)); });
  m.def("separation_bound", [](const ShuffleParams& p, int k, int n) { return to_py(separation_bound(p, k, n)); });
  m.def("limit_cycle_pmf", [](int i, long q, const py::object& gamma, const py::object& u, int cap) {
    return limit_cycle_pmf(i, q, from_py(gamma), from_py(u), cap).pmf;
  }, py::arg("i"), py::arg("q"), py::arg("gamma"), py::arg("u") = 1, py::arg("cap") = 10);

  // point process: configurations are (continuum [(x, y)], lines [(x, level)])
  m.def("sample_br", [](const py::object& gamma_plus, const ShuffleParams& p, std::uint64_t seed) {
    const auto c = sample_br(from_py(gamma_plus), p, seed);
    std::vector<std::pair<double, double>> cont;
    std::vector<std::pair<double, int>> lines;
    for (const auto& pt : c.continuum) cont.emplace_back(pt.x, pt.y);
    for (const auto& pt : c.lines) lines.emplace_back(pt.x, pt.level);
    return py::make_tuple(cont, lines);
  });
  m.def("br_partition", [](const std::vector<std::pair<double, double>>& continuum,
                           const std::vector<std::pair<double, int>>& lines) {
    return to_py(br_partition(config_from(continuum, lines)));
  });
  m.def("br_partition_bruteforce", [](const std::vector<std::pair<double, double>>& continuum,
                                      const std::vector<std::pair<double, int>>& lines) {
    return to_py(br_partition_bruteforce(config_from(continuum, lines)));
  });
  m.def("br_shape_probability", [](const std::vector<int>& lambda, const py::object& gamma_plus, const ShuffleParams& p) {
    return br_shape_probability(Partition::from_unsorted(lambda), from_py(gamma_plus), p).value;
  });

  // readers for the CLI's CSV artifacts
  m.def("read_distribution_csv", [](const std::string& text) {
    std::istringstream in(text);
    return to_py(io::read_distribution_csv(in));
  });
  m.def("read_cycle_csv", [](const std::string& text) {
    std::istringstream in(text);
    return to_py(io::read_cycle_csv(in));
  });
}
