#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "fgcover/analysis.hpp"
#include "fgcover/cli.hpp"
#include "fgcover/error.hpp"
#include "fgcover/io.hpp"
#include "fgcover/oracle.hpp"
#include "fgcover/partition.hpp"
#include "fgcover/ratfunc.hpp"
#include "fgcover/spectral.hpp"
#include "fgcover/zcover.hpp"

namespace py = pybind11;
using namespace fgc;

namespace {

using Graph = std::shared_ptr<SchreierGraph>;

// Exact integers cross the boundary as Python ints, via their decimal text.
py::object to_int(const mpz_class& x) { return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10)); }

py::list ints(std::span<const mpz_class> xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_int(x));
  return out;
}

py::tuple fraction(const RationalFunction& f) {
  return py::make_tuple(ints(f.numerator().coefficients()), ints(f.denominator().coefficients()));
}

Graph subgroup_from_generators(int rank, const std::vector<std::string>& gens) {
  std::vector<GroupWord> words;
  for (const auto& g : gens) words.push_back(parse_word(g, rank));
  return std::make_shared<SchreierGraph>(fold(rank, words));
}

Graph subgroup_from_permutations(int rank, const std::vector<std::vector<Vertex>>& perms, Vertex basepoint) {
  return std::make_shared<SchreierGraph>(SchreierGraph::from_permutations(rank, perms, basepoint));
}

AnalysisOptions options(std::size_t depth, bool oracle, bool numeric) { return {depth, oracle, numeric}; }

std::string analyze_json(const std::string& text, std::size_t depth, bool oracle, bool numeric) {
  const AnalysisOptions opts = options(depth, oracle, numeric);
  switch (io::detect_kind(text)) {
    case io::InputKind::Subgroup: return io::dump(io::report_to_json(analyze_subgroup(io::parse_subgroup(text), opts)));
    case io::InputKind::ZFamily: return io::dump(io::report_to_json(analyze_z(io::parse_z_family(text), opts)));
    case io::InputKind::Partition: break;
  }
  return io::dump(io::report_to_json(analyze(io::parse_partition(text), opts)));
}

py::dict verify_json(const std::string& text) {
  const PartitionSpec spec = io::parse_partition(text);
  const PartitionVerdict v = verify_partition(spec);
  py::dict out;
  out["status"] = to_string(v.status);
  out["witness"] = v.witness ? py::cast(format_word(*v.witness, spec.rank)) : py::none();
  out["overlap"] = v.overlap ? py::cast(std::make_pair(v.overlap->first + 1, v.overlap->second + 1)) : py::none();
  out["certified"] = witness_certified(spec, v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_fgcover, m) {
  m.doc() = "Schreier automata and coset-partition checks for free groups";

  auto& base = py::register_exception<Error>(m, "FgcoverError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidLetter>(m, "InvalidLetter", PyExc_ValueError);
  py::register_exception<InfiniteIndex>(m, "InfiniteIndex", base.ptr());
  py::register_exception<NotTransitive>(m, "NotTransitive", base.ptr());
  py::register_exception<NotAPartition>(m, "NotAPartition", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  py::class_<SchreierGraph, Graph>(m, "Subgroup")
      .def_static("from_generators", &subgroup_from_generators, py::arg("rank"), py::arg("generators"))
      .def_static("from_permutations", &subgroup_from_permutations, py::arg("rank"), py::arg("permutations"),
                  py::arg("basepoint") = 0, "0-based one-line permutations, one per generator")
      .def_property_readonly("rank", &SchreierGraph::rank)
      .def_property_readonly("index", &SchreierGraph::index)
      .def_property_readonly("period", [](const SchreierGraph& g) { return period(g); })
      .def("permutation", [](const SchreierGraph& g, int generator) {
        if (generator < 1 || generator > g.rank()) throw py::index_error("generator out of range");
        const auto p = g.permutation(generator);
        return std::vector<Vertex>(p.begin(), p.end());
      })
      .def("transition_matrix", [](const SchreierGraph& g) {
        const TransitionMatrix a = transition_matrix(g);
        std::vector<std::vector<long>> rows(a.dimension(), std::vector<long>(a.dimension()));
        for (std::size_t i = 0; i < a.dimension(); ++i)
          for (std::size_t j = 0; j < a.dimension(); ++j) rows[i][j] = a(i, j);
        return rows;
      })
      .def("char_poly", [](const SchreierGraph& g) { return ints(reciprocal_char_poly(transition_matrix(g)).coefficients()); },
           "coefficients of det(I - zA), constant term first")
      .def("coset", [](const SchreierGraph& g, const std::string& w) { return resolve(g, parse_word(w, g.rank())); },
           py::arg("word"), "vertex of the coset H w")
      .def("genfunc", [](const SchreierGraph& g, Vertex i, Vertex j) {
        if (i >= g.index() || j >= g.index()) throw py::index_error("vertex out of range");
        return fraction(genfunc(g, i, j));
      }, py::arg("start"), py::arg("end"), "(numerator, denominator) coefficient lists")
      .def("series", [](const SchreierGraph& g, Vertex i, Vertex j, std::size_t k) {
        if (i >= g.index() || j >= g.index()) throw py::index_error("vertex out of range");
        return ints(series_from_matrix(g, i, j, k));
      }, py::arg("start"), py::arg("end"), py::arg("max_degree"))
      .def("count_words", [](const Graph& g, const std::string& rep, std::size_t k) {
        return ints(oracle::count_by_enumeration(Coset::of(g, parse_word(rep, g->rank())), k));
      }, py::arg("rep"), py::arg("max_length"), "positive words per length in H rep, by enumeration")
      .def("contains", [](const Graph& g, const std::string& w, const std::string& rep) {
        return membership(Coset::of(g, parse_word(rep, g->rank())), parse_word(w, g->rank()));
      }, py::arg("word"), py::arg("rep") = "", "whether word lies in H rep")
      .def("to_json", [](const SchreierGraph& g) { return io::dump(io::subgroup_to_json(g)); })
      .def("__eq__", [](const SchreierGraph& a, const SchreierGraph& b) { return a == b; })
      .def("__repr__", [](const SchreierGraph& g) {
        return "<Subgroup rank " + std::to_string(g.rank()) + ", index " + std::to_string(g.index()) + ">";
      });

  m.def("parse_subgroup", [](const std::string& text) { return std::const_pointer_cast<SchreierGraph>(io::parse_subgroup(text)); });
  m.def("analyze_json", &analyze_json, py::arg("text"), py::arg("series_depth") = 20, py::arg("oracle") = false,
        py::arg("numeric_residues") = false, "report JSON for a subgroup, partition or residue-class document",
        py::call_guard<py::gil_scoped_release>());
  m.def("verify_json", &verify_json, py::arg("text"));
  m.def("generate_json", [](int rank, std::size_t depth, std::uint64_t seed) {
    io::Json meta;
    meta["generated"] = {{"rank", rank}, {"depth", depth}, {"seed", seed}, {"catalogue_version", kCatalogueVersion}};
    return io::dump(io::partition_to_json(generate_partition(rank, depth, seed), meta));
  }, py::arg("rank"), py::arg("depth"), py::arg("seed"));
  m.def("z_verify", [](const std::vector<std::pair<std::int64_t, std::int64_t>>& moduli) {
    std::vector<ResidueClass> classes;
    for (const auto& [d, r] : moduli) classes.push_back({d, r});
    const ZVerdict v = z_verify(ZCoveringSpec(std::move(classes)));
    py::dict out;
    out["status"] = to_string(v.status);
    out["witness"] = v.witness ? py::cast(*v.witness) : py::none();
    out["overlap"] = v.overlap ? py::cast(std::make_pair(v.overlap->first + 1, v.overlap->second + 1)) : py::none();
    out["period"] = v.period;
    return out;
  }, py::arg("moduli"));
  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "run the command-line front end in process: (exit code, stdout, stderr)");
}
