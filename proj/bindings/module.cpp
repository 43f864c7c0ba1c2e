#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "barnette/io.hpp"
#include "barnette/oracle.hpp"
#include "barnette/partition.hpp"
#include "barnette/verify.hpp"

namespace py = pybind11;
using namespace barnette;

namespace {

PlaneTriangulation from_rot(const std::vector<std::vector<int>>& rotations) {
  return PlaneTriangulation::from_rotation(rotations);
}

py::dict hyp_dict(const HypothesisReport& rep) {
  py::dict d;
  py::list sat;
  for (const auto& p : rep.satisfying) sat.append(py::make_tuple(p[0], p[1], p[2]));
  d["satisfying"] = sat;
  py::list fails;
  for (const auto& f : rep.failures) {
    py::dict fd;
    fd["pair"] = py::make_tuple(f.pair[0], f.pair[1]);
    fd["cycle"] = f.cycle;
    fails.append(fd);
  }
  d["failures"] = fails;
  return d;
}

py::dict record_dict(const InstanceRecord& rec) {
  py::dict d;
  d["name"] = rec.name;
  d["n"] = rec.graph.vertex_count();
  d["rotations"] = rec.graph.rotations();
  d["provenance"] = rec.provenance;
  d["hypothesis"] = hyp_dict(rec.hypothesis);
  return d;
}

py::dict graph_info(const std::vector<std::vector<int>>& rotations) {
  auto g = from_rot(rotations);
  py::dict d;
  d["n"] = g.vertex_count();
  d["edges"] = g.edge_count();
  d["face_count"] = g.face_count();
  py::list faces;
  for (const auto& f : g.faces()) faces.append(py::make_tuple(f[0], f[1], f[2]));
  d["faces"] = faces;
  std::vector<int> degs;
  for (int v = 0; v < g.vertex_count(); ++v) degs.push_back(g.degree(v));
  d["degrees"] = degs;
  d["four_connected"] = is_four_connected(g);
  return d;
}

py::dict partition_dict(const TreePartition& p, const std::vector<std::string>& trace) {
  py::dict d;
  d["S"] = p.S;
  d["T"] = p.T;
  d["case_trace"] = trace;
  return d;
}

}  // namespace

PYBIND11_MODULE(_barnette, m) {
  m.doc() = "tree-tree partitions of even plane triangulations and dual Hamilton cycles";

  py::register_exception<Error>(m, "BarnetteError");

  m.def("catalog_names", &catalog_names);
  m.def("catalog", [](const std::string& name) { return record_dict(catalog(name)); }, py::arg("name"));
  m.def("random_instance",
        [](uint64_t seed, int steps) { return record_dict(random_instance(seed, steps)); },
        py::arg("seed"), py::arg("steps"));
  m.def("graph_info", &graph_info, py::arg("rotations"),
        "validate a rotation system and report counts, faces and degrees");
  m.def("expand_octahedral",
        [](const std::vector<std::vector<int>>& rotations, int face_index) {
          return expand_octahedral(from_rot(rotations), face_index).rotations();
        },
        py::arg("rotations"), py::arg("face_index"));
  m.def("three_color",
        [](const std::vector<std::vector<int>>& rotations) { return three_color(from_rot(rotations)).color; },
        py::arg("rotations"));
  m.def("check_hypothesis",
        [](const std::vector<std::vector<int>>& rotations) {
          auto g = from_rot(rotations);
          return hyp_dict(check_hypothesis(g, classify(g, three_color(g))));
        },
        py::arg("rotations"));
  m.def("separating_triangles",
        [](const std::vector<std::vector<int>>& rotations) {
          auto g = from_rot(rotations);
          py::list out;
          for (const auto& t : separating_triangles(g)) {
            py::dict d;
            d["cycle"] = py::make_tuple(t.cycle[0], t.cycle[1], t.cycle[2]);
            d["inside"] = t.inside;
            d["outside"] = t.outside;
            out.append(d);
          }
          return out;
        },
        py::arg("rotations"));
  m.def("partition",
        [](const std::vector<std::vector<int>>& rotations, const std::string& mode, int a, int b,
           int c) {
          auto g = from_rot(rotations);
          std::vector<std::string> trace;
          TreePartition p;
          if (mode == "through")
            p = partition_through(g, PathABC{a, b, c}, &trace);
          else if (mode == "edge-avoid")
            p = partition_edge_avoid(g, PathABC{a, b, c}, &trace);
          else
            fail(ErrorKind::NotAPath, "mode must be 'through' or 'edge-avoid'");
          return partition_dict(p, trace);
        },
        py::arg("rotations"), py::arg("mode"), py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("verify_sweep",
        [](const std::vector<std::vector<int>>& rotations, bool oracle, int jobs) {
          auto rec = make_record("python", from_rot(rotations), "python");
          SweepResult r = verify_sweep(rec, oracle, jobs);
          py::dict d;
          d["hypothesis_ok"] = r.hypothesis_ok;
          d["paths_checked"] = r.paths_checked;
          d["through_checked"] = r.through_checked;
          d["property_failures"] = r.property_failures;
          d["oracle_disagreements"] = r.oracle_disagreements;
          d["seeds_audited"] = r.seeds_audited;
          d["seed_audit_failures"] = r.seed_audit_failures;
          d["oracle_skipped"] = r.oracle_skipped;
          d["failures"] = r.failures;
          d["ok"] = r.ok();
          return d;
        },
        py::arg("rotations"), py::arg("oracle") = false, py::arg("jobs") = 1);
  m.def("brute_partitions",
        [](const std::vector<std::vector<int>>& rotations, const std::vector<int>& require_S,
           const std::vector<int>& require_T) {
          auto g = from_rot(rotations);
          py::list out;
          for (const auto& p : brute_partitions(g, PartitionConstraint{require_S, require_T}))
            out.append(py::make_tuple(p.S, p.T));
          return out;
        },
        py::arg("rotations"), py::arg("require_S") = std::vector<int>{},
        py::arg("require_T") = std::vector<int>{});
  m.def("brute_ham_cycles",
        [](const std::vector<std::vector<int>>& rotations) {
          auto g = from_rot(rotations);
          py::list out;
          for (const auto& h : brute_ham(build_dual(g))) out.append(h.order);
          return out;
        },
        py::arg("rotations"), "all Hamilton cycles of the dual, canonical forms");
  m.def("partition_to_ham",
        [](const std::vector<std::vector<int>>& rotations, const std::vector<int>& S,
           const std::vector<int>& T) {
          auto g = from_rot(rotations);
          return partition_to_ham(g, TreePartition{S, T}, build_dual(g)).order;
        },
        py::arg("rotations"), py::arg("S"), py::arg("T"));
  m.def("to_planar_code",
        [](const std::vector<std::vector<int>>& rotations) {
          std::ostringstream os(std::ios::binary);
          write_planar_code_one(from_rot(rotations), os);
          return py::bytes(os.str());
        },
        py::arg("rotations"));
  m.def("from_planar_code",
        [](const py::bytes& data) {
          std::istringstream is(static_cast<std::string>(data), std::ios::binary);
          py::list out;
          for (const auto& e : read_planar_code(is)) {
            py::dict d;
            if (e.record)
              d["rotations"] = e.record->graph.rotations();
            else
              d["error"] = e.error;
            out.append(d);
          }
          return out;
        },
        py::arg("data"));
  m.def("to_rot1",
        [](const std::vector<std::vector<int>>& rotations) {
          std::ostringstream os;
          write_rot1(from_rot(rotations), os);
          return os.str();
        },
        py::arg("rotations"));
  m.def("from_rot1",
        [](const std::string& text) {
          std::istringstream is(text);
          return read_rot1(is).rotations();
        },
        py::arg("text"));
}
