#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <random>

#include "equiquot/adequacy.hpp"
#include "equiquot/corpus.hpp"
#include "equiquot/gset.hpp"
#include "equiquot/partition.hpp"
#include "equiquot/skew.hpp"
#include "equiquot/torsion.hpp"
#include "equiquot/zeta.hpp"

namespace py = pybind11;
using namespace equiquot;

namespace {

std::shared_ptr<PermGroup> ptr(PermGroup g) {
    return std::make_shared<PermGroup>(std::move(g));
}

// the C++ API shares groups as shared_ptr<const PermGroup>; python wrappers
// hold the non-const pointer and every exposed method is read-only anyway
std::shared_ptr<PermGroup> mut(const GroupPtr& g) {
    return std::const_pointer_cast<PermGroup>(g);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact finite-group computations: extended quotients, character "
              "theory, twisted function algebras, and integral torsion bookkeeping";

    py::class_<Perm>(m, "Perm")
        .def(py::init<std::vector<int>>())
        .def_property_readonly("images", [](const Perm& p) { return p.images(); })
        .def("order", &Perm::order)
        .def("inverse", &Perm::inverse)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__repr__",
             [](const Perm& p) { return "Perm" + p.to_cycle_string(); });

    py::class_<PermGroup, std::shared_ptr<PermGroup>>(m, "PermGroup")
        .def(py::init([](int degree, std::vector<Perm> gens, std::string name) {
                 return std::make_shared<PermGroup>(degree, std::move(gens),
                                                    std::move(name));
             }),
             py::arg("degree"), py::arg("generators"), py::arg("name") = "")
        .def_property_readonly("degree", &PermGroup::degree)
        .def_property_readonly("order", &PermGroup::order)
        .def_property_readonly("name", &PermGroup::name)
        .def("elements", &PermGroup::elements)
        .def("generators", &PermGroup::generators)
        .def("contains", &PermGroup::contains)
        .def("num_conjugacy_classes",
             [](const PermGroup& g) { return g.conjugacy_classes().size(); })
        .def("__len__", &PermGroup::order)
        .def("__repr__", [](const PermGroup& g) {
            return "<PermGroup " + (g.name().empty() ? "?" : g.name()) + " order " +
                   std::to_string(g.order()) + ">";
        });

    py::class_<ExactSequence>(m, "ExactSequence")
        .def_property_readonly("N", [](const ExactSequence& s) { return mut(s.N); })
        .def_property_readonly("G", [](const ExactSequence& s) { return mut(s.G); })
        .def_property_readonly("H", [](const ExactSequence& s) { return mut(s.H); })
        .def_readonly("name", &ExactSequence::name);

    m.def("symmetric_group", [](int n) { return ptr(symmetric_group(n)); });
    m.def("cyclic_group", [](int n) { return ptr(cyclic_group(n)); });
    m.def("direct_product", [](const PermGroup& a, const PermGroup& b) {
        return ptr(direct_product(a, b));
    });
    m.def("wreath_product",
          [](const PermGroup& t, int n) { return wreath_product(t, n); });
    m.def("heisenberg_sequence", [](int n) { return heisenberg_group(n).seq; });
    m.def("exs0_sequence", &exs0_sequence);
    m.def("a4_cover_sequence", &a4_cover_sequence);
    m.def("quotient_sequence",
          [](const PermGroup& g, const PermGroup& n, std::string name) {
              return quotient_sequence(g, n, std::move(name));
          },
          py::arg("G"), py::arg("N"), py::arg("name") = "");

    py::class_<GSet>(m, "GSet")
        .def_property_readonly("size", &GSet::size)
        .def_property_readonly("labels", &GSet::labels)
        .def("__len__", &GSet::size);
    m.def("natural_gset",
          [](GroupPtr g) { return natural_gset(std::move(g)); });
    m.def("left_translation_gset", &left_translation_gset);
    m.def("power_gset", &power_gset);
    m.def("random_gset", [](GroupPtr g, int max_points, unsigned seed) {
        std::mt19937 rng(seed);
        return random_gset(std::move(g), max_points, rng);
    });
    m.def("num_orbits",
          [](const GSet& x) { return orbits(x).size(); });

    py::class_<ExtendedQuotient>(m, "ExtendedQuotient")
        .def_readonly("size", &ExtendedQuotient::size)
        .def_readonly("class_formula_size", &ExtendedQuotient::class_formula_size);
    m.def("extended_quotient", &extended_quotient);
    m.def("orbifold_euler", &orbifold_euler);

    py::class_<OrbitCensus>(m, "OrbitCensus")
        .def_readonly("entries", &OrbitCensus::entries);
    py::class_<ConditionIII>(m, "ConditionIII")
        .def_readonly("pass_", &ConditionIII::pass)
        .def_readonly("class_side", &ConditionIII::class_side)
        .def_readonly("char_side", &ConditionIII::char_side);
    py::class_<S0Report>(m, "S0Report")
        .def_readonly("sequence_name", &S0Report::sequence_name)
        .def_readonly("cond_ii", &S0Report::cond_ii)
        .def_readonly("cond_iii", &S0Report::cond_iii)
        .def_readonly("in_s0", &S0Report::in_s0);
    m.def("theta_vanishes", &theta_vanishes);
    m.def("in_s0", &in_s0);

    py::class_<AdequacyReport>(m, "AdequacyReport")
        .def_readonly("adequate", &AdequacyReport::adequate)
        .def_readonly("conclusion", &AdequacyReport::conclusion);
    m.def("is_s0_adequate", &is_s0_adequate);

    py::class_<XiProof>(m, "XiProof")
        .def_readonly("sequence_name", &XiProof::sequence_name)
        .def_readonly("skew_dim", &XiProof::skew_dim)
        .def_readonly("commutant_dim", &XiProof::commutant_dim)
        .def_readonly("expected_dim", &XiProof::expected_dim)
        .def_readonly("pass_", &XiProof::pass);
    m.def("verify_xi", &verify_xi);

    py::class_<HeisenbergProof>(m, "HeisenbergProof")
        .def_readonly("n", &HeisenbergProof::n)
        .def_readonly("induced_degree", &HeisenbergProof::induced_degree)
        .def_readonly("irreducible", &HeisenbergProof::irreducible)
        .def_readonly("pass_", &HeisenbergProof::pass);
    m.def("verify_heisenberg_lemma", &verify_heisenberg_lemma);

    m.def("sym_power_count", &sym_power_count);
    m.def("ext_quot_sym_count", &ext_quot_sym_count);
    m.def("brute_force_ext_quot", &brute_force_ext_quot, py::arg("x"), py::arg("n"),
          py::arg("budget") = 2000000);
    py::class_<GsIdentityProof>(m, "GsIdentityProof")
        .def_readonly("x", &GsIdentityProof::x)
        .def_readonly("product_side", &GsIdentityProof::product_side)
        .def_readonly("partition_side", &GsIdentityProof::partition_side)
        .def_readonly("brute_side", &GsIdentityProof::brute_side)
        .def_readonly("pass_", &GsIdentityProof::pass);
    m.def("verify_gs_identity", &verify_gs_identity, py::arg("x"), py::arg("degree"),
          py::arg("brute_max") = 4, py::arg("budget") = 2000000);
    m.def("sigma_n_adequacy_passes",
          [](int n) { return sigma_n_adequacy(n).all_pass; });

    py::class_<IntMatrix>(m, "IntMatrix")
        .def(py::init<int, int>())
        .def(py::init([](const std::vector<std::vector<long long>>& rows) {
            if (rows.empty()) return IntMatrix(0, 0);
            IntMatrix a(static_cast<int>(rows.size()),
                        static_cast<int>(rows[0].size()));
            for (int i = 0; i < a.rows; ++i)
                for (int j = 0; j < a.cols; ++j) a.entries[i][j] = rows[i][j];
            return a;
        }))
        .def_readonly("rows", &IntMatrix::rows)
        .def_readonly("cols", &IntMatrix::cols)
        // arbitrary-precision internally; exposed as python ints via decimal
        // strings to avoid any overflow at the boundary
        .def_property_readonly("entries", [](const IntMatrix& a) {
            py::list out;
            for (const auto& row : a.entries) {
                py::list r;
                for (const auto& v : row)
                    r.append(py::int_(py::str(v.str())));
                out.append(r);
            }
            return out;
        });
    py::class_<SnfResult>(m, "SnfResult")
        .def_readonly("U", &SnfResult::U)
        .def_readonly("D", &SnfResult::D)
        .def_readonly("V", &SnfResult::V);
    m.def("smith_normal_form", &smith_normal_form);

    py::class_<FgAbGroup>(m, "FgAbGroup")
        .def_readonly("free_rank", &FgAbGroup::free_rank)
        .def_property_readonly("invariant_factors", [](const FgAbGroup& g) {
            py::list out;
            for (const auto& d : g.invariant_factors)
                out.append(py::int_(py::str(d.str())));
            return out;
        })
        .def("__repr__",
             [](const FgAbGroup& g) { return "<FgAbGroup " + g.to_string() + ">"; });
    m.def("cokernel", &cokernel);
    m.def("tau",
          [](const FgAbGroup& g) { return py::int_(py::str(tau(g).str())); });

    m.def("corpus_run",
          [](const std::string& data_dir, const std::string& filter, unsigned seed) {
              return corpus_run(data_dir, filter, seed).dump(2);
          },
          py::arg("data_dir"), py::arg("filter") = "", py::arg("seed") = 1234u);
}
