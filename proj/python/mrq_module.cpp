#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mrq/abelian.hpp"
#include "mrq/conjugacy.hpp"
#include "mrq/ctest.hpp"
#include "mrq/dwz.hpp"
#include "mrq/morphisms.hpp"
#include "mrq/reports.hpp"
#include "mrq/seqcheck.hpp"
#include "mrq/words.hpp"

namespace py = pybind11;
using namespace mrq;

namespace {

py::object big_to_int(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::tuple rat_tuple(const Rat& r) {
  return py::make_tuple(r.numerator(), r.denominator());
}

// pybind11 cannot hold shared_ptr<const T>, so the alphabet handle is wrapped
struct PyAlphabet {
  AlphabetPtr ptr;
};

GenSetId genset_from(const std::string& name) {
  if (name == "g") return GenSetId::g;
  if (name == "u") return GenSetId::u;
  throw std::invalid_argument("genset must be 'g' or 'u'");
}

py::dict shorten_dict(const ShortenResult& r) {
  py::dict out;
  out["k"] = r.k;
  out["genset"] = r.genset == GenSetId::g ? "g" : "u";
  out["l_star"] = r.l_star;
  out["q_star"] = r.q_star;
  out["max_length"] = r.max_length;
  out["normalized"] = rat_tuple(r.normalized);
  return out;
}

}  // namespace

PYBIND11_MODULE(_mrq, m) {
  m.doc() = "exact free-group computation and the shortening-quotient "
            "verification harness";

  py::class_<PyAlphabet>(m, "Alphabet")
      .def(py::init([](std::vector<std::string> names) {
             return PyAlphabet{Alphabet::make(std::move(names))};
           }),
           py::arg("names"))
      .def_property_readonly("rank", [](const PyAlphabet& a) { return a.ptr->rank(); })
      .def_property_readonly("names",
                             [](const PyAlphabet& a) { return a.ptr->names(); })
      .def("__repr__", [](const PyAlphabet& a) {
        std::string out = "Alphabet([";
        for (int i = 0; i < a.ptr->rank(); ++i) {
          if (i) out += ", ";
          out += "'" + a.ptr->name(i) + "'";
        }
        return out + "])";
      });
  m.def("standard_alphabet",
        [](int rank) { return PyAlphabet{Alphabet::standard(rank)}; },
        py::arg("rank"));

  py::class_<Word>(m, "Word")
      .def("__str__", [](const Word& w) { return to_string(w); })
      .def("__repr__", [](const Word& w) { return "Word('" + to_string(w) + "')"; })
      .def("__len__", [](const Word& w) { return w.size(); })
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__hash__", [](const Word& w) { return w.hash(); })
      .def("__mul__", [](const Word& a, const Word& b) { return multiply(a, b); })
      .def("__invert__", [](const Word& w) { return invert(w); })
      .def_property_readonly("alphabet",
                             [](const Word& w) { return PyAlphabet{w.alphabet()}; });

  m.def("parse_word",
        [](const std::string& text, const PyAlphabet& a) {
          return parse_word(text, a.ptr);
        },
        py::arg("text"), py::arg("alphabet"));
  m.def("multiply", &multiply);
  m.def("invert", &invert);
  m.def("conjugate", &conjugate, py::arg("u"), py::arg("s"));
  m.def("translation_length", &translation_length);
  m.def("exponent_vector", &exponent_vector);
  m.def("cyclic_core", [](const Word& u) { return cyclic_reduce(u).core.core; });
  m.def("is_proper_power", [](const Word& u) -> py::object {
    auto r = is_proper_power(u);
    if (!r) return py::none();
    return py::make_tuple(r->root, r->exponent);
  });
  m.def("power_length",
        [](const Word& u, long long n) { return power(u, n).length(); },
        py::arg("u"), py::arg("n"),
        "reduced length of u^n without materializing it");
  m.def("expand_power",
        [](const Word& u, long long n) { return expand(power(u, n)); });

  m.def("subgroup_rank",
        [](const std::vector<Word>& gens, const PyAlphabet& a) {
          return subgroup_rank(fold(gens, a.ptr));
        });
  m.def("subgroup_contains",
        [](const std::vector<Word>& gens, const Word& u, const PyAlphabet& a) {
          return membership(fold(gens, a.ptr), u);
        });
  m.def("is_cyclic_subgroup",
        [](const std::vector<Word>& words, const PyAlphabet& a) {
          return is_cyclic_subgroup(words, a.ptr);
        });
  m.def("is_primitive_rank2", &is_primitive_rank2);

  m.def("are_conjugate", [](const Word& u, const Word& v) -> py::object {
    auto r = are_conjugate(u, v);
    if (!r.found) return py::none();
    return py::cast(*r.witness);
  });
  m.def("simultaneous_conjugator",
        [](const std::vector<Word>& a, const std::vector<Word>& b) -> py::object {
          auto r = simultaneous_conjugator(a, b);
          if (!r.found) return py::none();
          return py::cast(*r.witness);
        });

  m.def("ivanov_word", [] { return build_ivanov().pattern; });
  m.def("eval_ivanov", [](const Word& a1, const Word& a2) {
    return eval_at(build_ivanov(), a1, a2);
  });
  m.def("cyclicity_criterion_check", &cyclicity_criterion_check);
  m.def("ctest_sweep", [](int bound) {
    auto r = ctest_sweep(bound);
    py::dict out;
    out["bound"] = r.bound;
    out["pairs_checked"] = r.pairs_checked;
    out["witnessed"] = r.witnessed;
    out["vacuous"] = r.vacuous;
    out["counterexamples"] = r.counterexamples;
    return out;
  });

  m.def("smith_normal_form", [](const std::vector<std::vector<long long>>& rows) {
    size_t r = rows.size(), c = rows.empty() ? 0 : rows[0].size();
    IntMatrix matrix(r, c);
    for (size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
      for (size_t j = 0; j < c; ++j) matrix.at(i, j) = rows[i][j];
    }
    auto snf = smith_normal_form(matrix);
    auto to_list = [](const IntMatrix& m) {
      py::list out;
      for (size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (size_t j = 0; j < m.cols(); ++j) row.append(big_to_int(m.at(i, j)));
        out.append(row);
      }
      return out;
    };
    return py::make_tuple(to_list(snf.d), to_list(snf.u), to_list(snf.v));
  });
  m.def("homology", [](const PyAlphabet& gens, const std::vector<Word>& relators) {
    auto h = homology_of_presentation(gens.ptr, relators);
    py::list torsion;
    for (const auto& t : h.torsion) torsion.append(big_to_int(t));
    return py::make_tuple(h.betti, torsion);
  });

  m.def("verify_relators", [](long long k, long long l, long long q) {
    return verify_relators({k, l, q});
  });
  m.def("gen_lengths", [](long long k, long long l, long long q,
                          const std::string& genset) {
    return gen_lengths({k, l, q},
                       DwzPresentation::instance().genset(genset_from(genset)));
  });
  m.def("z_image_length",
        [](long long k) { return z_image_length({k, 0, 0}); });
  m.def("shorten", [](long long k, const std::string& genset) {
    return shorten_dict(shorten(k, genset_from(genset)));
  });
  m.def("envelope_minimax", [](const std::string& genset) {
    auto r = pl_minimax(envelope_terms(genset_from(genset)));
    return py::make_tuple(rat_tuple(r.first), rat_tuple(r.second));
  });
  m.def("normalized_profile",
        [](long long k, const std::string& genset,
           const std::vector<std::pair<long long, long long>>& grid) {
          std::vector<Rat> xs;
          for (const auto& [num, den] : grid) xs.emplace_back(num, den);
          auto rows = normalized_profile(k, genset_from(genset), xs);
          py::list out;
          for (const auto& [x, v] : rows)
            out.append(py::make_tuple(rat_tuple(x), rat_tuple(v)));
          return out;
        });
  m.def("homology_report", [] {
    auto r = homology_report();
    py::dict out;
    out["g_w_betti"] = r.g_w.betti;
    py::list quotients;
    for (const auto& [eps, h] : r.quotients)
      quotients.append(py::make_tuple(eps, h.betti));
    out["quotient_betti"] = quotients;
    out["distinct"] = r.distinct;
    return out;
  });

  m.def("twist_growth_check", &twist_growth_check, py::arg("a"), py::arg("b"),
        py::arg("z"), py::arg("n"));
  m.def("twist_sweep", [](uint64_t seed, int samples) {
    auto r = twist_sweep(seed, samples);
    py::dict out;
    out["samples"] = r.samples;
    out["probes"] = r.probes;
    out["violations"] = r.violations;
    out["first_violation"] = r.first_violation;
    return out;
  });
  m.def("sample_smallcancel",
        [](int rank, int length, uint64_t seed) {
          auto t = sample_smallcancel(rank, length, seed);
          return t.images;
        },
        py::arg("rank"), py::arg("length"), py::arg("seed"));
  m.def("cancellation_stats", [](const std::vector<Word>& images) {
    if (images.empty()) throw std::invalid_argument("empty tuple");
    ImageTuple t{Alphabet::standard((int)images.size()), images};
    auto s = cancellation_stats(t);
    return py::make_tuple(s.chi, s.xi, s.c);
  });
}
