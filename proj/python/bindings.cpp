#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "kozmo/bench.hpp"
#include "kozmo/decompositions.hpp"
#include "kozmo/errors.hpp"
#include "kozmo/ideal_io.hpp"
#include "kozmo/mvt.hpp"
#include "kozmo/oracle.hpp"
#include "kozmo/simplicial.hpp"

namespace py = pybind11;

// Multidegree <-> tuple of ints, VarSet <-> sorted list of variable indices.
namespace pybind11::detail {

template <>
struct type_caster<kozmo::Multidegree> {
    PYBIND11_TYPE_CASTER(kozmo::Multidegree, const_name("tuple[int, ...]"));

    bool load(handle src, bool convert) {
        if (!isinstance<sequence>(src) || isinstance<str>(src)) return false;
        const auto seq = reinterpret_borrow<sequence>(src);
        kozmo::Multidegree mu(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            make_caster<long long> item;
            if (!item.load(seq[i], convert)) return false;
            const long long v = cast_op<long long>(item);
            if (v < 0) throw value_error("exponents must be non-negative");
            if (v > static_cast<long long>(std::numeric_limits<kozmo::Exponent>::max())) {
                throw value_error("exponent is too large");
            }
            mu[i] = static_cast<kozmo::Exponent>(v);
        }
        value = std::move(mu);
        return true;
    }

    static handle cast(const kozmo::Multidegree& mu, return_value_policy, handle) {
        tuple out(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) out[i] = pybind11::int_(mu[i]);
        return out.release();
    }
};

template <>
struct type_caster<kozmo::VarSet> {
    PYBIND11_TYPE_CASTER(kozmo::VarSet, const_name("list[int]"));

    bool load(handle src, bool) {
        if (!isinstance<iterable>(src)) return false;
        std::vector<std::size_t> indices;
        for (auto item : reinterpret_borrow<iterable>(src)) indices.push_back(item.cast<std::size_t>());
        value = kozmo::VarSet::from_indices(indices);
        return true;
    }

    static handle cast(const kozmo::VarSet& vars, return_value_policy, handle) {
        list out;
        for (auto i : vars.indices()) out.append(pybind11::int_(i));
        return out.release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace kozmo;

MonomialIdeal make_ideal(std::vector<Multidegree> generators, std::optional<std::size_t> n) {
    if (!n) {
        if (generators.empty()) throw DimensionError("the ring dimension is needed for the zero ideal");
        n = generators.front().size();
    }
    return minimalize(std::move(generators), *n);
}

PivotStrategy strategy_named(const std::string& name) {
    if (name == "lex") return PivotStrategy::lex_first();
    if (name == "last") return PivotStrategy::last_generator();
    throw InvalidInputError("unknown strategy '" + name + "' (use 'lex' or 'last')");
}

MvtOptions options(const std::string& strategy, bool prune, unsigned threads) {
    MvtOptions o = prune ? MvtOptions{} : MvtOptions::unpruned();
    o.strategy = strategy_named(strategy);
    o.threads = threads;
    return o;
}

py::dict verdict_dict(const oracle::Verdict& v) {
    py::dict d;
    d["ok"] = v.ok;
    d["sampled"] = v.sampled;
    d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
    d["detail"] = v.detail;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Koszul homology tools for monomial ideals";

    auto error = py::register_exception<Error>(m, "KozmoError", PyExc_RuntimeError);
    py::register_exception<DimensionError>(m, "DimensionError", error);
    auto domain = py::register_exception<DomainError>(m, "DomainError", error);
    py::register_exception<UndefinedLambdaError>(m, "UndefinedLambdaError", domain);
    py::register_exception<OverflowError>(m, "ExponentOverflowError", error);
    py::register_exception<ScaleError>(m, "ScaleError", error);
    py::register_exception<LeafError>(m, "LeafError", error);
    py::register_exception<InvalidInputError>(m, "InvalidInputError", error);
    py::register_exception<FeasibilityError>(m, "FeasibilityError", error);
    py::register_exception<SyntaxError>(m, "IdealSyntaxError", error);

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def(py::init(&make_ideal), py::arg("generators"), py::arg("n") = py::none(),
             "Ideal generated by the given exponent vectors, reduced to its minimal generators.")
        .def_static("zero", &MonomialIdeal::zero, py::arg("n"))
        .def_static("unit", &MonomialIdeal::unit, py::arg("n"))
        .def_property_readonly("generators", &MonomialIdeal::generators)
        .def_property_readonly("ring_dimension", &MonomialIdeal::ring_dimension)
        .def_property_readonly("is_zero", &MonomialIdeal::is_zero)
        .def_property_readonly("is_unit", &MonomialIdeal::is_unit)
        .def_property_readonly("is_artinian", &MonomialIdeal::is_artinian)
        .def("__len__", &MonomialIdeal::size)
        .def("__contains__", [](const MonomialIdeal& i, const Multidegree& nu) { return contains(i, nu); })
        .def("lcm_lambda", [](const MonomialIdeal& i) { return lcm_lambda(i); })
        .def("artinian_closure", [](const MonomialIdeal& i) { return artinian_closure(i); })
        .def(py::self == py::self)
        .def("__repr__", [](const MonomialIdeal& i) { return "MonomialIdeal(" + format_ideal(make_document(i)) + ")"; });

    py::class_<IdealDocument>(m, "IdealDocument")
        .def_readonly("variable_names", &IdealDocument::variable_names)
        .def_readonly("ideal", &IdealDocument::ideal)
        .def_readonly("dropped", &IdealDocument::dropped)
        .def_property_readonly("source_format", [](const IdealDocument& d) {
            return d.source_format == SourceFormat::ExponentVector ? "exponent-vector" : "monomial-string";
        });

    m.def("parse_ideal", &parse_ideal, py::arg("text"));
    m.def("read_ideal_file", [](const std::string& path) { return read_ideal_file(path); }, py::arg("path"));
    m.def("format_ideal", &format_ideal, py::arg("document"));
    m.def("format_monomial", [](const Multidegree& mu) { return format_monomial(mu); }, py::arg("mu"));

    m.def("koszul_homology_dim", &koszul_homology_dim, py::arg("ideal"), py::arg("i"), py::arg("mu"));
    m.def("is_closed_corner", &is_closed_corner, py::arg("ideal"), py::arg("mu"));
    m.def("is_maximal_corner", &is_maximal_corner, py::arg("ideal"), py::arg("mu"));
    m.def("lfd", &lfd, py::arg("ideal"), py::arg("mu"));
    m.def("gfd", &gfd, py::arg("ideal"), py::arg("mu"));

    m.def(
        "maximal_corners",
        [](const MonomialIdeal& i, const std::string& strategy, bool prune, unsigned threads) {
            py::gil_scoped_release release;
            return compute_b_n_minus_1(i, options(strategy, prune, threads));
        },
        py::arg("ideal"), py::arg("strategy") = "lex", py::arg("prune") = true, py::arg("threads") = 1);

    m.def(
        "betti_bounds",
        [](const MonomialIdeal& i, const std::string& strategy) {
            py::dict out;
            for (const auto& [key, b] : betti_bounds(build_mvt(i, strategy_named(strategy), false))) {
                out[py::make_tuple(key.degree, py::cast(key.mu))] = py::make_tuple(b.lower, b.upper);
            }
            return out;
        },
        py::arg("ideal"), py::arg("strategy") = "lex");

    m.def(
        "irreducible_decomposition",
        [](const MonomialIdeal& i, unsigned threads) {
            std::vector<IrreducibleComponent> components;
            {
                py::gil_scoped_release release;
                components = irreducible_decomposition(i, options("lex", true, threads));
            }
            std::vector<Multidegree> out;
            for (auto& c : components) out.push_back(std::move(c.exponents));
            return out;
        },
        py::arg("ideal"), py::arg("threads") = 1);

    m.def(
        "stanley_decomposition",
        [](const MonomialIdeal& i) {
            std::vector<std::pair<Multidegree, VarSet>> out;
            for (auto& c : stanley_general(i).cones) out.emplace_back(std::move(c.base), c.free);
            return out;
        },
        py::arg("ideal"));

    m.def(
        "hilbert_series",
        [](const MonomialIdeal& i, std::size_t max_degree) {
            const auto series = hilbert_series(stanley_general(i));
            py::dict out;
            out["series"] = series.to_string();
            out["coefficients"] = series.coefficients(max_degree);
            return out;
        },
        py::arg("ideal"), py::arg("max_degree") = 10);

    m.def("krull_dimension", [](const MonomialIdeal& i) { return krull_dimension(stanley_general(i)); },
          py::arg("ideal"));

    m.def(
        "random_ideal",
        [](std::size_t vars, std::size_t gens, Exponent max_exp, std::uint64_t seed, bool generic) {
            return random_ideal(BenchSpec{vars, gens, max_exp, seed, generic, 1});
        },
        py::arg("vars"), py::arg("gens"), py::arg("max_exp"), py::arg("seed") = 1, py::arg("generic") = false);

    m.def(
        "verify",
        [](const MonomialIdeal& i) {
            py::dict out;
            out["irreducible"] = verdict_dict(oracle::verify_irreducible(i, irreducible_decomposition(i)));
            out["stanley"] = verdict_dict(oracle::verify_stanley(i, stanley_general(i)));
            return out;
        },
        py::arg("ideal"));

    m.def("koszul_homology_bruteforce", &oracle::koszul_homology_bruteforce, py::arg("ideal"), py::arg("i"),
          py::arg("mu"));
    m.def("standard_monomial_count", &oracle::standard_monomial_count, py::arg("ideal"), py::arg("degree"));
}
