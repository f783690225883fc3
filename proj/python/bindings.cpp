#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "synclab/analysis.hpp"
#include "synclab/errors.hpp"
#include "synclab/families.hpp"
#include "synclab/monoid.hpp"
#include "synclab/permutation_group.hpp"
#include "synclab/pi_chain.hpp"
#include "synclab/sweep.hpp"
#include "synclab/text_format.hpp"

namespace py = pybind11;
using namespace synclab;

namespace {

Transformation to_map(const std::vector<State>& images) { return Transformation(images); }

std::vector<State> members(const StateSet& s) { return s.members(); }

std::vector<std::pair<State, State>> pairs(const BinaryRelation& r) { return r.pairs(); }

py::object word_or_none(const std::optional<Word>& w) {
  if (!w) return py::none();
  return py::cast(w->letters);
}

py::dict sweep_dict(const SweepReport& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["n"] = r.n;
  d["seed"] = r.seed;
  d["instances"] = r.instances;
  d["qualifying"] = r.qualifying;
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict cd;
    cd["name"] = c.name;
    cd["checked"] = c.checked;
    cd["violations"] = c.violations;
    cd["examples"] = c.examples;
    checks.append(cd);
  }
  d["checks"] = checks;
  d["ok"] = r.ok();
  return d;
}

PermutationSet group_from(std::size_t n, const std::vector<std::vector<State>>& perms) {
  std::vector<Transformation> maps;
  for (const auto& p : perms) maps.push_back(to_map(p));
  return PermutationSet::from_maps(n, maps);
}

}  // namespace

PYBIND11_MODULE(_synclab, m) {
  m.doc() = "Reset thresholds, augmenting words, singular relations and transition monoids";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", error);
  py::register_exception<DomainError>(m, "DomainError", error);
  py::register_exception<NotOnePointError>(m, "NotOnePointError", error);
  py::register_exception<DiagonalPairError>(m, "DiagonalPairError", error);
  py::register_exception<CapacityError>(m, "CapacityError", error);
  py::register_exception<ParseError>(m, "ParseError", error);

  py::class_<Gates>(m, "Gates")
      .def(py::init<>())
      .def_static("from_environment", py::overload_cast<>(&Gates::from_environment))
      .def_readwrite("subset_bfs_max_n", &Gates::subset_bfs_max_n)
      .def_readwrite("at_exact_max_n", &Gates::at_exact_max_n)
      .def_readwrite("monoid_cap", &Gates::monoid_cap)
      .def_readwrite("generating_set_max_monoid", &Gates::generating_set_max_monoid);

  py::class_<Automaton>(m, "Automaton")
      .def(py::init([](std::size_t n, const std::vector<std::pair<std::string, std::vector<State>>>& gens) {
             std::vector<Generator> named;
             for (const auto& [name, images] : gens) named.push_back({name, to_map(images)});
             return Automaton(n, std::move(named));
           }),
           py::arg("n"), py::arg("generators"))
      .def_property_readonly("states", &Automaton::states)
      .def_property_readonly("generators",
                             [](const Automaton& a) {
                               std::vector<std::pair<std::string, std::vector<State>>> out;
                               for (const auto& g : a.generators()) out.emplace_back(g.name, g.map.images());
                               return out;
                             })
      .def("evaluate", [](const Automaton& a, const std::vector<std::string>& word) { return a.evaluate({word}).images(); })
      .def("__eq__", [](const Automaton& a, const Automaton& b) { return a == b; })
      .def("__repr__", [](const Automaton& a) { return "<Automaton n=" + std::to_string(a.states()) + ">"; });

  m.def("parse_automaton", [](const std::string& text) { return parse_automaton(text); });
  m.def("render_automaton", &render_automaton);
  m.def("build_family", [](const std::string& kind, std::size_t n) { return build_family(family_from_string(kind), n); },
        py::arg("kind"), py::arg("n"));
  m.def("full_monoid_generators", &full_monoid_generators);

  m.def("compose", [](const std::vector<State>& f, const std::vector<State>& g) {
    return compose(to_map(f), to_map(g)).images();
  });
  m.def("map_profile", [](const std::vector<State>& f) {
    const auto p = map_profile(to_map(f));
    py::dict d;
    d["rank"] = p.rank;
    d["image"] = members(p.image);
    d["coimage"] = members(p.coimage);
    d["kernel"] = p.kernel.parts;
    d["class"] = to_string(p.cls);
    d["one_point"] = p.one_point;
    d["simple"] = p.simple;
    return d;
  });
  m.def("one_point_profile", [](const std::vector<State>& f) {
    const auto p = one_point_profile(to_map(f));
    py::dict d;
    d["k"] = p.k;
    d["duplicate"] = p.duplicate;
    d["cyclepoint"] = p.cyclepoint;
    d["excluded"] = members(p.excluded);
    d["rest"] = members(p.rest);
    return d;
  });

  m.def("is_primitive",
        [](std::size_t n, const std::vector<std::vector<State>>& perms, const std::string& method) {
          if (method != "higman_sims" && method != "block_oracle") throw DomainError("unknown method " + method);
          return is_primitive(group_from(n, perms),
                              method == "higman_sims" ? PrimitivityMethod::higman_sims : PrimitivityMethod::block_oracle);
        },
        py::arg("n"), py::arg("perms"), py::arg("method") = "higman_sims");
  m.def("orbits", [](std::size_t n, const std::vector<std::vector<State>>& perms) { return orbits(group_from(n, perms)); });
  m.def("pi_chain", [](const std::vector<State>& f, const std::vector<std::vector<State>>& perms) {
    const auto chain = pi_chain(to_map(f), group_from(f.size(), perms));
    py::dict d;
    py::list rels;
    for (const auto& r : chain.relations) rels.append(pairs(r));
    d["relations"] = rels;
    d["closure"] = pairs(chain.closure);
    d["msc"] = chain.msc;
    return d;
  });

  m.def("classify", [](const Automaton& a) {
    const auto c = classify(a);
    py::dict d;
    d["synchronizing"] = c.synchronizing;
    d["transitive"] = c.transitive;
    d["directable"] = c.directable;
    d["one_point"] = c.one_point;
    d["weakly_singular"] = c.weakly_singular;
    return d;
  });
  m.def("exact_reset_threshold",
        [](const Automaton& a, const Gates& gates) -> py::object {
          const auto rt = exact_reset_threshold(a, gates);
          if (!rt) return py::none();
          return py::make_tuple(rt->length, rt->word.letters);
        },
        py::arg("automaton"), py::arg("gates") = Gates{});
  m.def("augment_threshold", &augment_threshold, py::arg("automaton"), py::arg("gates") = Gates{});
  m.def("greedy_reset_word",
        [](const Automaton& a, const Gates& gates) { return word_or_none(greedy_reset_word(a, gates)); },
        py::arg("automaton"), py::arg("gates") = Gates{});
  m.def("msc", [](const Automaton& a) { return msc(a); });
  m.def("reachability",
        [](const Automaton& a, const Gates& gates) {
          const auto r = reachability(a, gates);
          std::vector<std::vector<State>> images;
          for (const auto& s : r.reachable_images) images.push_back(s.members());
          return py::make_tuple(images, r.completely_reachable);
        },
        py::arg("automaton"), py::arg("gates") = Gates{});
  m.def("subset_witness_word",
        [](const Automaton& a, const std::vector<State>& target, const Gates& gates) {
          return word_or_none(subset_witness_word(a, StateSet(a.states(), target), gates));
        },
        py::arg("automaton"), py::arg("target"), py::arg("gates") = Gates{});
  m.def("verify_bounds",
        [](const Automaton& a, const Gates& gates) {
          const auto r = verify_bounds(a, gates);
          py::dict d;
          d["n"] = r.n;
          d["synchronizing"] = r.synchronizing;
          d["directable"] = r.directable;
          d["is_one_point"] = r.is_one_point;
          d["msc"] = r.msc;
          d["msc_bound"] = r.msc_bound;
          d["at"] = r.at;
          d["rt_exact"] = r.rt_exact;
          d["rt_bound"] = r.rt_bound;
          d["greedy_word_length"] = r.greedy_word_length;
          d["all_ok"] = r.all_ok;
          d["flags"] = r.flags;
          d["violations"] = r.violations;
          return d;
        },
        py::arg("automaton"), py::arg("gates") = Gates{});

  m.def("monoid_stats",
        [](const Automaton& a, const Gates& gates) {
          const auto s = monoid_stats(generate_monoid(a, gates.monoid_cap));
          py::dict d;
          d["size"] = s.size;
          d["sr"] = s.sr;
          d["has_one_point_of_rank_sr"] = s.has_one_point_of_rank_sr;
          d["synchronizing"] = s.synchronizing;
          return d;
        },
        py::arg("automaton"), py::arg("gates") = Gates{});
  m.def("monoid_reset_threshold",
        [](const Automaton& a, const Gates& gates) {
          return monoid_reset_threshold(generate_monoid(a, gates.monoid_cap), gates).value;
        },
        py::arg("automaton"), py::arg("gates") = Gates{});
  m.def("verify_theorem17",
        [](std::size_t n, const Gates& gates) {
          const auto r = verify_theorem17(n, gates);
          py::dict d;
          d["n"] = r.n;
          d["monoid_size"] = r.monoid_size;
          d["inverse_monoid_size"] = r.inverse_monoid_size;
          d["phi_is_isomorphism"] = r.phi_is_isomorphism;
          d["rt"] = r.rt;
          d["rt_expected"] = r.rt_expected;
          return d;
        },
        py::arg("n"), py::arg("gates") = Gates{});

  m.def("run_sweep",
        [](const std::string& suite, std::size_t n, std::size_t samples, std::uint64_t seed, const Gates& gates) {
          return sweep_dict(run_sweep(suite, n, samples, seed, gates));
        },
        py::arg("suite"), py::arg("n"), py::arg("samples") = 0, py::arg("seed") = kDefaultSeed,
        py::arg("gates") = Gates{});
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
