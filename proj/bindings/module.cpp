#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "cising/dynamics.hpp"
#include "cising/landscape.hpp"
#include "cising/lumped.hpp"
#include "cising/oracle.hpp"

namespace py = pybind11;
using namespace cising;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
      return d;
    }
    case nlohmann::json::value_t::array: {
      py::list l;
      for (const auto& value : j) l.append(json_to_py(value));
      return l;
    }
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    default: return py::none();
  }
}

Params make_params(int n, const std::string& epsilon, const std::string& h, double beta) {
  Params p;
  p.n = n;
  p.k = 2;
  p.epsilon = Rational::parse(epsilon);
  p.h = Rational::parse(h);
  p.beta = beta;
  p.validate();
  return p;
}

ClassState to_class(const py::object& obj, int n) {
  if (py::isinstance<py::str>(obj)) {
    const auto text = obj.cast<std::string>();
    if (auto named = parse_named_state(text)) return named_class(*named, n);
    throw std::invalid_argument("unknown state name '" + text + "'");
  }
  const auto tup = obj.cast<std::vector<int>>();
  if (tup.size() != 3) throw std::invalid_argument("class must be (p1, p2, a)");
  ClassState c{tup[0], tup[1], tup[2]};
  require_class_valid(c, n);
  return c;
}

std::vector<ClassState> to_classes(const py::object& obj, int n) {
  std::vector<ClassState> out;
  if (py::isinstance<py::str>(obj) ||
      (py::isinstance<py::tuple>(obj) && py::len(obj) == 3 &&
       py::isinstance<py::int_>(py::reinterpret_borrow<py::tuple>(obj)[0]))) {
    out.push_back(to_class(obj, n));
    return out;
  }
  for (const auto& item : obj) {
    out.push_back(to_class(py::reinterpret_borrow<py::object>(item), n));
  }
  return out;
}

py::tuple class_tuple(const ClassState& c) { return py::make_tuple(c.p1, c.p2, c.a); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ising metastability on two-cluster graphs: exact lumped chains, "
            "landscape predictions and brute-force certification";

  m.def(
      "analyze",
      [](int n, const std::string& epsilon, const std::string& h) {
        return json_to_py(analyze(make_params(n, epsilon, h, 1.0)).to_json());
      },
      py::arg("n"), py::arg("epsilon") = "0", py::arg("h") = "0",
      "closed-form landscape report as a dict");

  m.def(
      "hamiltonian",
      [](int n, const std::vector<int>& spins, const std::string& epsilon,
         const std::string& h) {
        Params p = make_params(n, epsilon, h, 1.0);
        const ClusteredGraph g = ClusteredGraph::build(p);
        return hamiltonian(g, SpinConfig::from_spins(spins), p);
      },
      py::arg("n"), py::arg("spins"), py::arg("epsilon") = "0", py::arg("h") = "0");

  m.def(
      "classify",
      [](int n, const std::vector<int>& spins) {
        Params p = make_params(n, "0", "0", 1.0);
        const ClusteredGraph g = ClusteredGraph::build(p);
        return class_tuple(classify(g, SpinConfig::from_spins(spins)));
      },
      py::arg("n"), py::arg("spins"));

  m.def(
      "class_energy",
      [](int n, int p1, int p2, int a, const std::string& epsilon, const std::string& h) {
        Params p = make_params(n, epsilon, h, 1.0);
        return class_energy(ClassState{p1, p2, a}, p);
      },
      py::arg("n"), py::arg("p1"), py::arg("p2"), py::arg("a"), py::arg("epsilon") = "0",
      py::arg("h") = "0");

  m.def(
      "enumerate_classes",
      [](int n) {
        py::list out;
        for (const ClassState& c : enumerate_classes(n)) out.append(class_tuple(c));
        return out;
      },
      py::arg("n"));

  m.def(
      "class_size",
      [](int n, int p1, int p2, int a) { return class_size(ClassState{p1, p2, a}, n); },
      py::arg("n"), py::arg("p1"), py::arg("p2"), py::arg("a"));

  py::class_<LumpedChain>(m, "LumpedChain")
      .def(py::init([](int n, const std::string& epsilon, const std::string& h, double beta) {
             return build_lumped_chain(n, make_params(n, epsilon, h, beta), beta);
           }),
           py::arg("n"), py::arg("epsilon"), py::arg("h"), py::arg("beta"))
      .def_property_readonly("num_classes", &LumpedChain::num_classes)
      .def("classes",
           [](const LumpedChain& chain) {
             py::list out;
             for (const ClassState& c : chain.classes) out.append(class_tuple(c));
             return out;
           })
      .def("stationary", &LumpedChain::stationary)
      .def("row_sum_error", &LumpedChain::max_row_sum_error)
      .def("detailed_balance_error", &LumpedChain::max_detailed_balance_error)
      .def("to_dict", [](const LumpedChain& chain) { return json_to_py(chain.to_json()); });

  m.def(
      "exact_hitting_moments",
      [](const LumpedChain& chain, const py::object& start, const py::object& targets,
         bool precise) {
        const HittingMoments hm = exact_hitting_moments(
            chain, to_class(start, chain.n), to_classes(targets, chain.n), precise);
        py::dict d;
        d["mean"] = hm.mean;
        d["second_moment"] = hm.second_moment;
        d["log_mean"] = hm.log_mean;
        d["residual"] = hm.residual;
        return d;
      },
      py::arg("chain"), py::arg("start"), py::arg("targets"), py::arg("precise") = false);

  m.def(
      "spectral_gap",
      [](const LumpedChain& chain, bool precise) {
        const SpectrumResult res = spectral_gap(chain, precise);
        py::dict d;
        d["a2"] = res.a2;
        d["gap"] = res.gap;
        d["log_gap"] = res.log_gap;
        d["dense"] = res.dense;
        return d;
      },
      py::arg("chain"), py::arg("precise") = false);

  m.def(
      "mixing_time",
      [](const LumpedChain& chain, double gamma, long long budget) {
        const MixingResult res = mixing_time(chain, gamma, budget);
        py::dict d;
        d["steps"] = res.steps;
        d["converged"] = res.converged;
        d["tv_reached"] = res.tv_reached;
        return d;
      },
      py::arg("chain"), py::arg("gamma"), py::arg("budget") = 200000);

  m.def(
      "sample_hitting_times",
      [](const LumpedChain& chain, const py::object& start, const py::object& targets,
         int trials, std::uint64_t seed, long long max_steps, int threads, bool full) {
        const HittingStats stats = sample_hitting_times(
            chain, to_class(start, chain.n), to_classes(targets, chain.n), trials, seed,
            max_steps, std::nullopt, threads, full);
        py::dict d;
        d["trials"] = stats.trials;
        d["censored"] = stats.censored;
        d["mean"] = stats.mean;
        d["std_error"] = stats.std_error;
        d["second_moment"] = stats.second_moment;
        d["samples"] = stats.samples;
        return d;
      },
      py::arg("chain"), py::arg("start"), py::arg("targets"), py::arg("trials") = 100,
      py::arg("seed") = 1, py::arg("max_steps") = 100000000LL, py::arg("threads") = 1,
      py::arg("full") = false);

  m.def(
      "communication_height",
      [](int n, const std::string& epsilon, const std::string& h, const py::object& from,
         const py::object& to, int n_max) {
        Params p = make_params(n, epsilon, h, 1.0);
        StateGraph sg(n, n_max);
        const std::uint64_t a = representative(to_class(from, n), n).bits();
        const std::uint64_t b = representative(to_class(to, n), n).bits();
        const Rational phi = communication_height(sg, p, a, b);
        py::dict d;
        d["exact"] = phi.str();
        d["value"] = phi.to_double();
        d["barrier"] = (phi - sg.energy(a, p)).to_double();
        return d;
      },
      py::arg("n"), py::arg("epsilon"), py::arg("h"), py::arg("from_state"),
      py::arg("to_state"), py::arg("n_max") = 5);

  m.def(
      "verify_gate",
      [](int n, const std::string& epsilon, const std::string& h, const py::object& from,
         const py::object& to, const py::object& gate, int n_max) {
        Params p = make_params(n, epsilon, h, 1.0);
        StateGraph sg(n, n_max);
        const std::uint64_t a = representative(to_class(from, n), n).bits();
        const std::uint64_t b = representative(to_class(to, n), n).bits();
        const GateVerdict v = verify_gate(sg, p, a, b, to_classes(gate, n));
        py::dict d;
        d["is_gate"] = v.is_gate;
        d["subset_of_saddles"] = v.subset_of_saddles;
        d["disconnects"] = v.disconnects;
        d["minimal"] = v.minimal;
        d["phi"] = v.phi.to_double();
        py::list w;
        for (const ClassState& c : v.witness) w.append(class_tuple(c));
        d["witness"] = w;
        return d;
      },
      py::arg("n"), py::arg("epsilon"), py::arg("h"), py::arg("from_state"),
      py::arg("to_state"), py::arg("gate"), py::arg("n_max") = 5);
}
