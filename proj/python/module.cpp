#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "polymat/cone.hpp"
#include "polymat/constructs.hpp"
#include "polymat/inequality.hpp"
#include "polymat/matroid.hpp"
#include "polymat/represent.hpp"

namespace py = pybind11;
using namespace polymat;

namespace {

py::object to_fraction(const Rational& q) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(q.get_num().get_str(), py::arg("denominator") = 1) /
         fraction(q.get_den().get_str(), py::arg("denominator") = 1);
}

Rational from_py(const py::object& value) {
  if (py::isinstance<py::int_>(value)) return rat_parse(py::str(value).cast<std::string>());
  if (py::isinstance<py::str>(value)) return rat_parse(value.cast<std::string>());
  // fractions.Fraction or anything with numerator/denominator
  if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
    std::string num = py::str(value.attr("numerator")).cast<std::string>();
    std::string den = py::str(value.attr("denominator")).cast<std::string>();
    return rat_parse(num + "/" + den);
  }
  throw input_error("expected int, str, or Fraction");
}

ScanOptions scan_options(const std::string& mode, std::uint64_t trials, std::uint64_t seed,
                         unsigned threads) {
  ScanOptions opts;
  if (mode == "exhaustive")
    opts.mode = ScanMode::exhaustive;
  else if (mode == "sampled")
    opts.mode = ScanMode::sampled;
  else
    throw input_error("mode must be 'exhaustive' or 'sampled'");
  opts.trials = trials;
  opts.seed = seed;
  opts.threads = threads;
  return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact polymatroid and subspace-rank toolkit";

  py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<size_error>(m, "SizeError", PyExc_ValueError);
  py::register_exception<verification_error>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<Field>(m, "Field")
      .def_static("make", &Field::make, py::arg("p"), py::arg("m") = 1)
      .def_static("parse", &Field::parse)
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("m", &Field::m)
      .def("order", &Field::order)
      .def("__repr__", &Field::literal)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; });

  py::class_<RankVector>(m, "RankVector")
      .def_property_readonly("n", &RankVector::n)
      .def_property_readonly("labels",
                             [](const RankVector& h) { return h.ground().labels; })
      .def("value", [](const RankVector& h, Mask mask) { return to_fraction(h.at(mask)); },
           py::arg("mask"))
      .def("values",
           [](const RankVector& h) {
             py::list out;
             for (const Rational& v : h.values()) out.append(to_fraction(v));
             return out;
           })
      .def("save", [](const RankVector& h, const std::string& path) { save_rankvec(path, h); })
      .def_static("load", [](const std::string& path) { return load_rankvec(path); })
      .def("__eq__",
           [](const RankVector& a, const RankVector& b) { return a.values() == b.values(); })
      .def("__repr__", [](const RankVector& h) {
        std::ostringstream os;
        os << "RankVector(n=" << h.n() << ")";
        return os.str();
      });

  py::class_<Arrangement>(m, "Arrangement")
      .def_property_readonly("n", &Arrangement::size)
      .def_property_readonly("ambient", [](const Arrangement& a) { return a.ambient; })
      .def_property_readonly("field", [](const Arrangement& a) { return a.field; })
      .def_property_readonly("labels", [](const Arrangement& a) { return a.labels; })
      .def("rank_vector", [](const Arrangement& a) { return rank_vector(a); })
      .def("save", [](const Arrangement& a, const std::string& path) { save_arr(path, a); })
      .def_static("load", [](const std::string& path) { return load_arr(path); })
      .def("__repr__", [](const Arrangement& a) {
        std::ostringstream os;
        os << "Arrangement(n=" << a.size() << ", ambient=" << a.ambient << ", field='"
           << a.field.literal() << "')";
        return os.str();
      });

  m.def("fano", [](const std::string& field) { return fano_arrangement(Field::parse(field)); },
        py::arg("field") = "GF(2)");
  m.def("x2", [](const std::string& field) { return dfz_arrangement(Field::parse(field)); },
        py::arg("field") = "GF(3)");
  m.def("phi",
        [](const std::string& f1, const std::string& f2) {
          return phi_base(Field::parse(f1), Field::parse(f2));
        },
        py::arg("field_x1") = "GF(2)", py::arg("field_x2") = "GF(3)");
  m.def("phi_eps",
        [](const py::object& eps, const std::string& f1, const std::string& f2) {
          return phi_perturbed(from_py(eps), Field::parse(f1), Field::parse(f2));
        },
        py::arg("eps"), py::arg("field_x1") = "GF(2)", py::arg("field_x2") = "GF(3)");

  m.def("rank", [](const RankVector& h, Mask a) { return to_fraction(rank(h, a)); });
  m.def("cond_entropy",
        [](const RankVector& h, Mask a, Mask c) { return to_fraction(cond_entropy(h, a, c)); });
  m.def("mutual_info",
        [](const RankVector& h, Mask a, Mask b, Mask c) {
          return to_fraction(mutual_info(h, a, b, c));
        },
        py::arg("h"), py::arg("a"), py::arg("b"), py::arg("c") = 0);
  m.def("scale",
        [](const RankVector& h, const py::object& c) { return scale(h, from_py(c)); });
  m.def("induce", [](const RankVector& h, const std::vector<Mask>& parts) {
    return induce(h, parts);
  });
  m.def("epsilon_perturb", [](const RankVector& h, const py::object& eps) {
    return epsilon_perturb(h, from_py(eps));
  });
  m.def("direct_sum", &direct_sum);
  m.def("integer_perturb", &integer_perturb, py::arg("arr"), py::arg("k"));

  m.def("is_polymatroid", [](const RankVector& h) { return is_polymatroid(h); });
  m.def("polymatroid_violation", [](const RankVector& h) -> py::object {
    auto bad = polymatroid_violation(h);
    if (!bad) return py::none();
    return py::str(bad->describe());
  });
  m.def("is_matroid", &is_matroid);
  m.def("circuits", &circuits);
  m.def("is_connected", &is_connected);
  m.def("proportionality",
        [](const RankVector& mm, const RankVector& g) { return to_fraction(proportionality(mm, g)); });
  m.def("equality_set_check", [](const RankVector& mm, const RankVector& g) -> py::object {
    auto bad = equality_set_check(mm, g);
    if (!bad) return py::none();
    return py::str(bad->describe(mm.ground()));
  });

  m.def("ingleton_score", [](const RankVector& h, Mask a1, Mask a2, Mask a3, Mask a4) {
    return to_fraction(ingleton_score(h, a1, a2, a3, a4));
  });
  m.def("ingleton_scan",
        [](const RankVector& h, const std::string& mode, std::uint64_t trials, std::uint64_t seed,
           unsigned threads) {
          IngletonReport rep = ingleton_scan(h, scan_options(mode, trials, seed, threads));
          py::dict out;
          out["min_score"] = to_fraction(rep.min_score);
          out["argmin"] = rep.argmin;
          out["checked"] = rep.quadruples_checked;
          out["mode"] = rep.mode == ScanMode::exhaustive ? "exhaustive" : "sampled";
          return out;
        },
        py::arg("h"), py::arg("mode") = "exhaustive", py::arg("trials") = 1000000,
        py::arg("seed") = 1, py::arg("threads") = 0);
  m.def("dfz_ratio",
        [](const RankVector& h, const std::vector<Mask>& nums, const std::vector<Mask>& dens) {
          return to_fraction(dfz_ratio(h, nums, dens));
        });
  m.def("equalities",
        [](const std::string& which, const RankVector& h) {
          auto list = which == "x1" ? fano_equalities()
                                    : which == "x2" ? dfz_equalities()
                                                    : throw input_error("which must be x1 or x2");
          py::list out;
          for (const RankEquality& eq : list)
            out.append(py::make_tuple(eq.name, to_fraction(eval_expr(h, eq.expr)),
                                      eq.holds(h)));
          return out;
        },
        py::arg("which"), py::arg("h"));
  m.def("perturbation_case",
        [](const RankVector& h, const py::object& eps, const std::array<Mask, 4>& quad) {
          PerturbationCaseReport rep = perturbation_case(h, from_py(eps), quad);
          py::dict out;
          out["case"] = rep.case_number;
          out["biting_pairs"] = rep.biting_pairs;
          out["score_after"] = to_fraction(rep.score_after);
          return out;
        });

  py::class_<GeneratorSet>(m, "GeneratorSet")
      .def_property_readonly("count",
                             [](const GeneratorSet& g) { return g.generators.size(); })
      .def_property_readonly("subspaces",
                             [](const GeneratorSet& g) { return g.subspace_count; })
      .def("generator", [](const GeneratorSet& g, std::size_t i) { return g.generators.at(i); })
      .def("save", [](const GeneratorSet& g, const std::string& dir) { save_generators(dir, g); })
      .def_static("load", [](const std::string& dir) { return load_generators(dir); });

  m.def("enumerate_generators",
        [](std::uint32_t n, const std::string& field, std::uint32_t dim) {
          return enumerate_generators(n, Field::parse(field), dim);
        });
  m.def("merge_generators", [](GeneratorSet& into, const GeneratorSet& more) {
    merge_generators(into, more);
  });
  m.def("cone_member", [](const RankVector& h, const GeneratorSet& gens) {
    MembershipCertificate cert = cone_member(h, gens);
    py::dict out;
    out["member"] = cert.member;
    if (cert.member) {
      py::list coeffs;
      for (const auto& [j, c] : cert.coefficients)
        coeffs.append(py::make_tuple(j, to_fraction(c)));
      out["coefficients"] = coeffs;
    } else {
      py::list lam;
      for (const Rational& v : cert.separating) lam.append(to_fraction(v));
      out["separating"] = lam;
    }
    return out;
  });
}
