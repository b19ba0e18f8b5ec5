#include "ctri/conic_pipeline.hpp"
#include "ctri/error.hpp"
#include "ctri/generators.hpp"
#include "ctri/io.hpp"
#include "ctri/search.hpp"
#include "ctri/triple_system.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ctri;

namespace {

py::object fraction(const Rat& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

Rat to_rat(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw py::type_error("coordinate must be a number");
  return parse_rat(py::str(h).cast<std::string>());
}

HPoint to_point(const py::handle& h) {
  auto seq = h.cast<py::sequence>();
  if (seq.size() == 2) return HPoint(to_rat(seq[0]), to_rat(seq[1]));
  if (seq.size() == 3) return HPoint::homogeneous(to_rat(seq[0]), to_rat(seq[1]), to_rat(seq[2]));
  throw py::value_error("a point is (x, y) or (x, y, w)");
}

py::tuple from_point(const HPoint& p) {
  if (p.is_finite()) return py::make_tuple(fraction(p.ax()), fraction(p.ay()));
  return py::make_tuple(fraction(p.x()), fraction(p.y()), 0);
}

std::vector<HPoint> to_points(const py::handle& h) {
  std::vector<HPoint> out;
  for (auto item : h.cast<py::iterable>()) out.push_back(to_point(item));
  return out;
}

py::list from_points(const std::vector<HPoint>& pts) {
  py::list out;
  for (const auto& p : pts) out.append(from_point(p));
  return out;
}

std::shared_ptr<LabeledSets> to_sets(const py::dict& d) {
  auto s = std::make_shared<LabeledSets>();
  s->a = to_points(d["A"]);
  s->b = to_points(d["B"]);
  s->c = to_points(d["C"]);
  if (d.contains("c_at_infinity")) s->c_at_infinity = d["c_at_infinity"].cast<bool>();
  s->validate();
  return s;
}

py::dict from_sets(const LabeledSets& s) {
  py::dict d;
  d["A"] = from_points(s.a);
  d["B"] = from_points(s.b);
  d["C"] = from_points(s.c);
  d["c_at_infinity"] = s.c_at_infinity;
  return d;
}

py::tuple from_edge(const Edge& e) { return py::make_tuple(e.a, e.b, e.c); }

py::list from_edges(std::span<const Edge> edges) {
  py::list out;
  for (const auto& e : edges) out.append(from_edge(e));
  return out;
}

std::vector<Edge> to_edges(const py::handle& h) {
  std::vector<Edge> out;
  for (auto item : h.cast<py::iterable>()) {
    auto t = item.cast<std::array<Index, 3>>();
    out.push_back(Edge{t[0], t[1], t[2]});
  }
  return out;
}

Hypergraph3 to_graph(const py::handle& edges) {
  auto es = to_edges(edges);
  std::size_t n[3] = {0, 0, 0};
  for (const auto& e : es) {
    n[0] = std::max<std::size_t>(n[0], e.a + 1);
    n[1] = std::max<std::size_t>(n[1], e.b + 1);
    n[2] = std::max<std::size_t>(n[2], e.c + 1);
  }
  return Hypergraph3(n[0], n[1], n[2], std::move(es));
}

py::list conic_coeffs(const Conic& c) {
  py::list out;
  for (int i = 0; i < 6; ++i) out.append(py::int_(py::str(c[i].get_str())));
  return out;
}

Conic to_conic(const py::handle& h) {
  auto seq = h.cast<py::sequence>();
  if (seq.size() != 6) throw py::value_error("a conic has six coefficients");
  std::array<Rat, 6> q;
  for (int i = 0; i < 6; ++i) q[i] = to_rat(seq[i]);
  return Conic(q);
}

ModeChoice to_mode(const std::string& m) {
  if (m == "t1") return ModeChoice::kT1;
  if (m == "t2") return ModeChoice::kT2;
  if (m == "auto") return ModeChoice::kAuto;
  throw py::value_error("mode must be 't1', 't2' or 'auto'");
}

SearchParams params_from(unsigned threads) {
  SearchParams p;
  p.threads = threads;
  return p;
}

py::dict tictactoe_dict(const TicTacToe& t) {
  py::dict d;
  py::list rows, cols;
  for (const auto& e : t.rows) rows.append(from_edge(e));
  for (const auto& e : t.cols) cols.append(from_edge(e));
  d["rows"] = rows;
  d["cols"] = cols;
  return d;
}

py::dict extraction_dict(const ConicExtraction& r) {
  py::dict d;
  d["mode"] = mode_name(r.mode);
  d["conic"] = r.conic ? py::object(conic_coeffs(*r.conic)) : py::object(py::none());
  d["rank"] = r.rank;
  d["on_conic"] = r.on_conic;
  d["first_triple"] = r.pair.first;
  d["second_triple"] = r.pair.second;
  d["support"] = r.pair.support();
  d["degeneracy"] = r.degeneracy ? py::object(py::str(r.degeneracy->str())) : py::object(py::none());
  d["polynomial"] = r.polynomial.str();
  return d;
}

std::vector<IndexPair> to_pairs(const py::object& pairs, std::size_t n) {
  if (pairs.is_none()) return all_pairs(n);
  std::vector<IndexPair> out;
  for (auto item : pairs.cast<py::iterable>()) {
    auto p = item.cast<std::pair<Index, Index>>();
    out.push_back(p);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Collinear triple systems, configuration search and conic extraction";

  static py::exception<Error> error_type(m, "CtriError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type.ptr())(e.what());
      exc.attr("code") = error_code_name(e.code());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "build_triples",
      [](const py::dict& sets, unsigned threads) { return from_edges(build_triples(to_sets(sets), threads).edges()); },
      py::arg("sets"), py::arg("threads") = 0, "Collinear (a, b, c) index triples of the labeled sets.");

  m.def(
      "canonical_order",
      [](const py::dict& sets) {
        const auto ordered = canonical_order(build_triples(to_sets(sets)));
        py::dict d;
        d["sets"] = from_sets(ordered.system.sets());
        d["edges"] = from_edges(ordered.system.edges());
        d["permutation"] = ordered.certificate.permutation;
        d["ok"] = verify_order(ordered.system.graph()).ok;
        return d;
      },
      py::arg("sets"), "Reorder the sets so the ordering conditions hold.");

  m.def(
      "find_663",
      [](const py::object& edges) {
        py::list out;
        for (const auto& c : find_663(to_graph(edges))) out.append(py::make_tuple(from_edge(c.edges[0]),
                                                                                 from_edge(c.edges[1]),
                                                                                 from_edge(c.edges[2])));
        return out;
      },
      py::arg("edges"), "Every (6,3) configuration among the given edges.");

  m.def(
      "find_tictactoe",
      [](const py::dict& sets, std::uint64_t seed, bool exhaustive, unsigned threads) -> py::object {
        const auto sys = build_triples(to_sets(sets), threads);
        const auto params = resolve_params(sys, params_from(threads));
        const auto r = find_tictactoe(sys, params, seed, exhaustive ? TttStrategy::kExhaustive : TttStrategy::kAuto);
        if (!r.tictactoe) return py::none();
        return tictactoe_dict(*r.tictactoe);
      },
      py::arg("sets"), py::arg("seed") = 0, py::arg("exhaustive") = false, py::arg("threads") = 0,
      "A tic-tac-toe configuration as rows and columns of index triples, or None.");

  m.def(
      "find_k_system",
      [](const py::dict& sets, std::size_t k, std::size_t block_size) -> py::object {
        const auto sys = build_triples(to_sets(sets));
        const auto r = find_k_system(sys, k, block_size == 0 ? k : block_size);
        if (!r.system) return py::none();
        py::dict d;
        d["k"] = r.system->k;
        d["a_blocks"] = r.system->a_blocks;
        d["c_blocks"] = r.system->c_blocks;
        d["centers"] = r.system->centers;
        d["edges"] = from_edges(r.system->edges);
        return d;
      },
      py::arg("sets"), py::arg("k"), py::arg("block_size") = 0, "A verified k-system, or None.");

  m.def(
      "extract_conic",
      [](const py::dict& sets, std::uint64_t seed, const std::string& mode, unsigned threads) {
        const auto sys = build_triples(to_sets(sets), threads);
        return extraction_dict(extract_conic(sys, params_from(threads), seed, to_mode(mode)));
      },
      py::arg("sets"), py::arg("seed") = 0, py::arg("mode") = "auto", py::arg("threads") = 0,
      "Recover the conic through the B points; raises CtriError on degenerate input.");

  m.def(
      "directions",
      [](const py::object& points, const py::object& pairs, bool conic, std::uint64_t seed) {
        const auto pts = to_points(points);
        const auto ps = to_pairs(pairs, pts.size());
        py::dict d;
        if (!conic) {
          const auto inst = direction_instance(pts, ps);
          d["directions"] = inst.e_directions;
          d["crossing_directions"] = inst.directions.size();
          d["near"] = inst.near;
          return d;
        }
        const auto r = convex_few_directions(pts, ps, params_from(1), seed);
        d["directions"] = r.instance.e_directions;
        d["crossing_directions"] = r.instance.directions.size();
        d["near"] = r.instance.near;
        d["conic"] = r.conic ? py::object(conic_coeffs(*r.conic)) : py::object(py::none());
        d["a_star"] = r.a_star;
        d["a_star_star"] = r.a_star_star;
        py::list h;
        for (const auto& [u, v] : r.h) h.append(py::make_tuple(u, v));
        d["h"] = h;
        return d;
      },
      py::arg("points"), py::arg("pairs") = py::none(), py::arg("conic") = true, py::arg("seed") = 0,
      "Direction counts of a convex point set and the few-directions conic.");

  m.def(
      "on_conic",
      [](const py::object& conic, const py::object& point) { return on_conic(to_conic(conic), to_point(point)); },
      py::arg("conic"), py::arg("point"));

  m.def(
      "gen_pascal_ttt",
      [](std::uint64_t seed) {
        const auto inst = gen_pascal_ttt(seed);
        py::dict d;
        d["sets"] = from_sets(*inst.sets);
        d["conic"] = conic_coeffs(inst.conic);
        d["expected"] = tictactoe_dict(inst.expected);
        return d;
      },
      py::arg("seed") = 0);

  m.def(
      "gen_conic_instance",
      [](const py::object& triple, std::size_t n_b, std::uint64_t seed) {
        const auto pts = to_points(triple);
        if (pts.size() != 3) throw py::value_error("triple needs three points");
        const auto inst = gen_conic_instance(PointTriple{pts[0], pts[1], pts[2]}, n_b, seed);
        py::dict d;
        d["sets"] = from_sets(*inst.sets);
        d["conic"] = conic_coeffs(inst.conic);
        d["samples"] = inst.samples;
        return d;
      },
      py::arg("triple"), py::arg("n_b"), py::arg("seed") = 0);

  m.def(
      "gen_degenerate_family",
      [](const py::object& positions) {
        std::vector<std::pair<Rat, Rat>> pos;
        for (const auto& p : to_points(positions)) pos.emplace_back(p.ax(), p.ay());
        return from_sets(*gen_degenerate_family(pos));
      },
      py::arg("positions"));

  m.def("gen_ksystem", [](std::size_t k) { return from_sets(*gen_ksystem(k).sets); }, py::arg("k"));
  m.def(
      "gen_mutually_avoiding", [](std::size_t n, std::uint64_t seed) { return from_sets(*gen_mutually_avoiding(n, seed)); },
      py::arg("n"), py::arg("seed") = 0);
  m.def("gen_grid_with_directions", [](std::size_t m) { return from_sets(*gen_grid_with_directions(m)); },
        py::arg("m"));
  m.def("gen_circle_points", [](std::size_t n) { return from_points(gen_circle_points(n)); }, py::arg("n"));

  m.def(
      "parse_pointset", [](const std::string& text) { return from_sets(parse_pointset(text)); }, py::arg("text"));
  m.def(
      "format_pointset", [](const py::dict& sets) { return format_pointset(*to_sets(sets)); }, py::arg("sets"));
}
