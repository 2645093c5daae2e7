#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charcycle/cech.hpp"
#include "charcycle/hilbert.hpp"
#include "charcycle/job.hpp"
#include "charcycle/parse.hpp"

namespace py = pybind11;
using namespace charcycle;

namespace {

RingPtr make_ring(const std::vector<std::string>& variables) { return Ring::make(variables); }

Ideal make_ideal(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens)
        polys.push_back(parse_polynomial(g, ring));
    return Ideal(ring, std::move(polys));
}

std::vector<std::string> basis_strings(const std::vector<Polynomial>& basis) {
    std::vector<std::string> out;
    for (const auto& g : basis)
        out.push_back(g.to_string());
    return out;
}

// components as (conormal generators, support generators, multiplicity)
using PyComponent = std::tuple<std::vector<std::string>, std::vector<std::string>, long>;

std::vector<PyComponent> cycle_components(const CharCycle& cycle) {
    std::vector<PyComponent> out;
    for (const auto& [key, entry] : cycle.entries())
        out.emplace_back(basis_strings(entry.first.conormal.groebner_basis()),
                         basis_strings(entry.first.base.groebner_basis()), entry.second);
    return out;
}

CharCycle cycle_from_components(const RingPtr& base,
                                const std::vector<std::pair<std::vector<std::string>, long>>& comps) {
    RingPtr doubled = doubled_ring(base);
    CharCycle cycle(doubled, base);
    for (const auto& [gens, mult] : comps) {
        std::vector<Polynomial> polys;
        for (const auto& g : gens)
            polys.push_back(parse_polynomial(g, base));
        cycle.add(component_of_variety(Ideal(base, std::move(polys))), mult);
    }
    return cycle;
}

Strategy parse_strategy(const std::string& s) {
    if (s == "single")
        return Strategy::Single;
    if (s == "iterative")
        return Strategy::Iterative;
    throw MisuseError("strategy must be 'single' or 'iterative'");
}

} // namespace

PYBIND11_MODULE(_charcycle, m) {
    m.doc() = "characteristic cycles of localizations and local cohomology modules";

    py::register_exception<ParseError>(m, "JobParseError");
    py::register_exception<Error>(m, "EngineError");

    m.def(
        "groebner_basis",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& gens,
           const std::string& order) {
            RingPtr ring = make_ring(variables);
            MonomialOrder o =
                order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
            return basis_strings(make_ideal(ring, gens).groebner_basis(o));
        },
        py::arg("variables"), py::arg("generators"), py::arg("order") = "grevlex",
        "Reduced Groebner basis of the ideal, as canonical strings.");

    m.def(
        "normal_form",
        [](const std::vector<std::string>& variables, const std::string& poly,
           const std::vector<std::string>& gens) {
            RingPtr ring = make_ring(variables);
            return make_ideal(ring, gens).normal_form(parse_polynomial(poly, ring)).to_string();
        },
        py::arg("variables"), py::arg("poly"), py::arg("generators"));

    m.def(
        "dimension",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& gens) {
            return dimension(make_ideal(make_ring(variables), gens));
        },
        py::arg("variables"), py::arg("generators"));

    m.def(
        "degree",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& gens) {
            return degree(make_ideal(make_ring(variables), gens)).get_si();
        },
        py::arg("variables"), py::arg("generators"));

    m.def(
        "associated_primes",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& gens) {
            std::vector<std::tuple<std::vector<std::string>, bool, int>> out;
            for (const auto& c : associated_primes(make_ideal(make_ring(variables), gens)))
                out.emplace_back(basis_strings(c.prime.groebner_basis()),
                                 c.flag == PrimeFlag::Embedded, c.dim);
            return out;
        },
        py::arg("variables"), py::arg("generators"),
        "Associated primes as (generators, embedded, dim) triples.");

    m.def(
        "localize",
        [](const std::vector<std::string>& variables,
           const std::vector<std::pair<std::vector<std::string>, long>>& components,
           const std::vector<std::string>& factors, const std::string& strategy) {
            RingPtr base = make_ring(variables);
            CharCycle cycle = cycle_from_components(base, components);
            Localizer loc;
            loc.poly = Polynomial::constant(base, 1);
            for (const auto& f : factors) {
                Polynomial p = parse_polynomial(f, base);
                loc.poly = loc.poly * p;
                loc.factors.push_back(std::move(p));
            }
            return cycle_components(
                localize_cycle(cycle, loc, parse_strategy(strategy), nullptr));
        },
        py::arg("variables"), py::arg("components"), py::arg("factors"),
        py::arg("strategy") = "iterative",
        "Localize a cycle (components given by their support ideals) at a factor list.");

    m.def(
        "zero_section",
        [](const std::vector<std::string>& variables) {
            return cycle_components(zero_section(doubled_ring(make_ring(variables))));
        },
        py::arg("variables"));

    m.def(
        "cech_cycles",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& gens,
           const std::string& strategy) {
            RingPtr base = make_ring(variables);
            std::vector<Localizer> factors;
            for (const auto& g : gens)
                factors.push_back({parse_polynomial(g, base), {}});
            CechResult result =
                run_cech(zero_section(doubled_ring(base)), factors, parse_strategy(strategy));
            std::map<int, std::vector<PyComponent>> out;
            for (const auto& [r, cc] : result.cohomology)
                if (!cc.is_zero())
                    out[r] = cycle_components(cc);
            return out;
        },
        py::arg("variables"), py::arg("generators"), py::arg("strategy") = "single",
        "CC(H^r_I(R)) for the ideal generated by `generators`, keyed by r.");

    m.def(
        "lyubeznik",
        [](const std::vector<std::string>& variables, const std::vector<std::string>& gens,
           const std::string& strategy) {
            RingPtr base = make_ring(variables);
            std::vector<Localizer> factors;
            for (const auto& g : gens)
                factors.push_back({parse_polynomial(g, base), {}});
            return lyubeznik_table(factors, base, parse_strategy(strategy)).table.lambda;
        },
        py::arg("variables"), py::arg("generators"), py::arg("strategy") = "single",
        "The Lyubeznik table Lambda(R/I) as a (d+1) x (d+1) matrix.");

    m.def(
        "run_job",
        [](const std::string& text, const std::string& strategy, bool strict, bool vertices,
           const std::string& split, const std::string& cache_dir) {
            JobSpec job = parse_job(text);
            RunOptions options;
            options.strategy = parse_strategy(strategy);
            options.strict = strict;
            options.vertices = vertices;
            options.cache_dir = cache_dir;
            if (!split.empty())
                options.split = parse_split(split);
            Report report = run(job, options);
            py::dict out;
            out["exit_code"] = report.exit_code;
            out["json"] = report.structured;
            out["text"] = report.text;
            out["warnings"] = report.warnings;
            return out;
        },
        py::arg("text"), py::arg("strategy") = "single", py::arg("strict") = false,
        py::arg("vertices") = false, py::arg("split") = "", py::arg("cache_dir") = "",
        "Run a job in the CLI input language and return the report.");
}
