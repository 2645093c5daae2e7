#include "charcycle/job.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "charcycle/cache.hpp"
#include "charcycle/hilbert.hpp"
#include "charcycle/parse.hpp"

namespace charcycle {

using nlohmann::json;

namespace {

bool is_kw(const Token& t, const char* kw) {
    return t.kind == Token::Kind::Ident && t.text == kw;
}

bool is_punct(const Token& t, const char* p) {
    return t.kind == Token::Kind::Punct && t.text == p;
}

std::vector<std::string> parse_ring_names(Lexer& lex) {
    std::vector<std::string> names;
    while (true) {
        if (lex.peek().kind != Token::Kind::Ident)
            lex.fail("expected variable name");
        std::string first = lex.next().text;
        if (is_punct(lex.peek(), "..")) {
            lex.next();
            if (lex.peek().kind != Token::Kind::Ident)
                lex.fail("expected range end");
            std::string last = lex.next().text;
            auto split_suffix = [&](const std::string& s) -> std::pair<std::string, long> {
                size_t pos = s.size();
                while (pos > 0 && std::isdigit(static_cast<unsigned char>(s[pos - 1])))
                    --pos;
                if (pos == s.size())
                    lex.fail("range endpoints need a numeric suffix");
                return {s.substr(0, pos), std::stol(s.substr(pos))};
            };
            auto [pa, na] = split_suffix(first);
            auto [pb, nb] = split_suffix(last);
            if (pa != pb || nb < na)
                lex.fail("invalid variable range");
            for (long i = na; i <= nb; ++i)
                names.push_back(pa + std::to_string(i));
        } else {
            names.push_back(first);
        }
        if (is_punct(lex.peek(), ","))
            lex.next();
        else
            break;
    }
    return names;
}

Localizer parse_generator(Lexer& lex, const RingPtr& ring) {
    Localizer g;
    if (is_punct(lex.peek(), "[")) {
        lex.next();
        Polynomial product = Polynomial::constant(ring, 1);
        while (true) {
            Polynomial factor = parse_polynomial_tokens(lex, ring);
            if (factor.is_zero())
                lex.fail("zero factor");
            product = product * factor;
            g.factors.push_back(std::move(factor));
            if (is_punct(lex.peek(), ",")) {
                lex.next();
                continue;
            }
            break;
        }
        if (!is_punct(lex.peek(), "]"))
            lex.fail("expected ']'");
        lex.next();
        g.poly = std::move(product);
    } else {
        g.poly = parse_polynomial_tokens(lex, ring);
    }
    if (g.poly.is_zero())
        lex.fail("zero generator");
    return g;
}

std::pair<Ideal, long> parse_cycle_component(Lexer& lex, const RingPtr& ring) {
    if (!is_kw(lex.peek(), "V"))
        lex.fail("expected component V(...)");
    lex.next();
    if (!is_punct(lex.peek(), "("))
        lex.fail("expected '('");
    lex.next();
    std::vector<Polynomial> gens;
    if (!is_punct(lex.peek(), ")")) {
        while (true) {
            Polynomial p = parse_polynomial_tokens(lex, ring);
            if (!p.is_zero())
                gens.push_back(std::move(p));
            if (is_punct(lex.peek(), ",")) {
                lex.next();
                continue;
            }
            break;
        }
    }
    if (!is_punct(lex.peek(), ")"))
        lex.fail("expected ')'");
    lex.next();
    long mult = 1;
    if (is_punct(lex.peek(), "[")) {
        lex.next();
        if (lex.peek().kind != Token::Kind::Integer)
            lex.fail("expected multiplicity");
        mult = std::stol(lex.next().text);
        if (mult < 1)
            lex.fail("multiplicity must be positive");
        if (!is_punct(lex.peek(), "]"))
            lex.fail("expected ']'");
        lex.next();
    }
    return {Ideal(ring, std::move(gens)), mult};
}

std::string vertex_name(uint32_t alpha, int s) {
    std::string out = "{";
    bool first = true;
    for (int j = 0; j < s; ++j)
        if (alpha & (1u << j)) {
            out += (first ? "" : ",") + std::to_string(j);
            first = false;
        }
    return out + "}";
}

json component_json(const ConormalComponent& comp, long mult) {
    json c;
    c["generators"] = json::array();
    for (const auto& g : comp.conormal.groebner_basis())
        c["generators"].push_back(g.to_string());
    c["support"] = json::array();
    for (const auto& g : comp.base.groebner_basis())
        c["support"].push_back(g.to_string());
    c["multiplicity"] = mult;
    c["dim"] = comp.dim;
    return c;
}

json cycle_json(const CharCycle& cycle) {
    json arr = json::array();
    for (const auto& [key, entry] : cycle.entries())
        arr.push_back(component_json(entry.first, entry.second));
    return arr;
}

std::string cycle_text(const CharCycle& cycle) {
    if (cycle.is_zero())
        return "{}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [key, entry] : cycle.entries()) {
        os << (first ? "" : ", ") << "ideal (";
        bool g_first = true;
        for (const auto& g : entry.first.base.groebner_basis()) {
            os << (g_first ? "" : ", ") << g.to_string();
            g_first = false;
        }
        if (entry.first.base.is_zero())
            os << "0";
        os << ") => " << entry.second;
        first = false;
    }
    os << "}";
    return os.str();
}

CharCycle starting_cycle(const JobSpec& job) {
    if (job.module.is_ring)
        return zero_section(job.doubled);
    CharCycle out(job.doubled, job.base);
    for (const auto& [ideal, mult] : job.module.declared)
        out.add(component_of_variety(ideal), mult);
    return out;
}

json vertices_json(const Hypercube& cube) {
    json v = json::object();
    for (uint32_t alpha = 0; alpha < cube.vertices.size(); ++alpha)
        v[vertex_name(alpha, cube.s)] = cycle_json(cube.vertices[alpha]);
    return v;
}

json pruned_json(const PrunedCube& pruned) {
    json v = json::object();
    for (uint32_t alpha = 0; alpha < pruned.vertices.size(); ++alpha)
        v[vertex_name(alpha, pruned.s)] = cycle_json(pruned.vertices[alpha]);
    return v;
}

void cech_text(std::ostringstream& os, const CechResult& result) {
    uint32_t count = 1u << result.pruned.s;
    for (uint32_t alpha = 0; alpha < count; ++alpha)
        os << vertex_name(alpha, result.pruned.s) << " => "
           << cycle_text(result.pruned.vertices[alpha]) << "\n";
    for (const auto& [r, cc] : result.cohomology)
        os << "CC(H^" << r << ") = " << cycle_text(cc) << "\n";
}

} // namespace

JobSpec parse_job(const std::string& text) {
    Lexer lex(text);
    JobSpec job;
    bool have_command = false;
    std::vector<std::pair<std::vector<Polynomial>, long>> declared_raw;
    bool module_is_cycle = false;

    while (!lex.at_end()) {
        if (is_punct(lex.peek(), ";")) {
            lex.next();
            continue;
        }
        const Token& t = lex.peek();
        if (is_kw(t, "ring")) {
            lex.next();
            if (job.base)
                lex.fail("duplicate ring declaration");
            job.base = Ring::make(parse_ring_names(lex));
            job.doubled = doubled_ring(job.base);
        } else if (is_kw(t, "ideal")) {
            lex.next();
            if (!job.base)
                lex.fail("ideal before ring declaration");
            while (true) {
                job.generators.push_back(parse_generator(lex, job.base));
                if (is_punct(lex.peek(), ",")) {
                    lex.next();
                    continue;
                }
                break;
            }
        } else if (is_kw(t, "module")) {
            lex.next();
            if (!job.base)
                lex.fail("module before ring declaration");
            if (is_kw(lex.peek(), "R")) {
                lex.next();
            } else if (is_kw(lex.peek(), "cycle")) {
                lex.next();
                module_is_cycle = true;
                if (!is_punct(lex.peek(), "{"))
                    lex.fail("expected '{'");
                lex.next();
                while (true) {
                    auto [ideal, mult] = parse_cycle_component(lex, job.base);
                    job.module.declared.emplace_back(std::move(ideal), mult);
                    if (is_punct(lex.peek(), ",")) {
                        lex.next();
                        continue;
                    }
                    break;
                }
                if (!is_punct(lex.peek(), "}"))
                    lex.fail("expected '}'");
                lex.next();
            } else {
                lex.fail("expected 'R' or 'cycle'");
            }
        } else if (is_kw(t, "localize") || is_kw(t, "cech") || is_kw(t, "lyubeznik") ||
                   is_kw(t, "decompose")) {
            if (have_command)
                lex.fail("duplicate command");
            have_command = true;
            std::string cmd = lex.next().text;
            if (cmd == "localize") {
                job.command = Command::Localize;
                if (!lex.at_end() && !is_punct(lex.peek(), ";")) {
                    if (!job.base)
                        lex.fail("localize before ring declaration");
                    job.localize_target = parse_generator(lex, job.base);
                }
            } else if (cmd == "cech") {
                job.command = Command::Cech;
            } else if (cmd == "lyubeznik") {
                job.command = Command::Lyubeznik;
            } else {
                job.command = Command::Decompose;
            }
        } else {
            lex.fail("expected a declaration or command");
        }
    }
    if (!job.base) {
        throw ParseError("missing ring declaration", 1, 1);
    }
    if (!have_command)
        throw ParseError("missing command", 1, 1);
    job.module.is_ring = !module_is_cycle;
    if (job.command != Command::Localize && job.generators.empty())
        throw ParseError("missing ideal declaration", 1, 1);
    if (job.command == Command::Localize && !job.localize_target) {
        if (job.generators.size() != 1)
            throw ParseError("localize needs a polynomial (or a single-generator ideal)", 1, 1);
        job.localize_target = job.generators[0];
    }
    return job;
}

std::vector<std::vector<int>> parse_split(const std::string& text) {
    std::vector<std::vector<int>> groups;
    std::istringstream is(text);
    std::string group;
    while (std::getline(is, group, '|')) {
        std::vector<int> indices;
        std::istringstream gs(group);
        std::string idx;
        while (std::getline(gs, idx, ','))
            if (!idx.empty())
                indices.push_back(std::stoi(idx));
        if (!indices.empty())
            groups.push_back(std::move(indices));
    }
    return groups;
}

std::string cycle_to_json(const CharCycle& cycle) { return cycle_json(cycle).dump(); }

CharCycle cycle_from_json(const std::string& json_text, const RingPtr& doubled,
                          const RingPtr& base) {
    json doc = json::parse(json_text);
    CharCycle cycle(doubled, base);
    for (const auto& comp : doc) {
        std::vector<Polynomial> gens;
        for (const auto& g : comp["generators"])
            gens.push_back(parse_polynomial(g.get<std::string>(), doubled));
        cycle.add(ConormalComponent::from_conormal(Ideal(doubled, std::move(gens)), base),
                  comp["multiplicity"].get<long>());
    }
    return cycle;
}

Report run(const JobSpec& job, const RunOptions& options) {
    Report report;
    json doc;
    doc["schema"] = "charcycle-report/1";
    doc["ring"] = {{"variables", job.base->variables()},
                   {"cotangent_variables",
                    std::vector<std::string>(job.doubled->variables().begin() + job.base->nvars(),
                                             job.doubled->variables().end())}};
    std::ostringstream text;

    ComputeCache cache(options.cache_dir);
    LocalizeContext ctx;
    ctx.cache = &cache;
    for (const auto& g : job.generators) {
        ctx.factor_hints.push_back(g.poly);
        for (const auto& f : g.factors)
            ctx.factor_hints.push_back(f);
    }

    bool user_cycle = !job.module.is_ring;
    bool needs_dagger_warning =
        user_cycle && (job.command == Command::Cech || job.command == Command::Lyubeznik);
    if (needs_dagger_warning)
        report.warnings.push_back(
            "module is a user-supplied cycle: pruning results are conditional on the "
            "saturation hypothesis for every localization map in the Cech complex; a direct "
            "sum that is not saturated (e.g. R + H^1_(x)(R) at f = x) misleads the pruning "
            "unless a --split is supplied per summand");

    try {
        switch (job.command) {
        case Command::Localize: {
            doc["command"] = "localize";
            CharCycle start = starting_cycle(job);
            CharCycle result =
                localize_cycle(start, *job.localize_target, options.strategy, &ctx);
            doc["cycle"] = cycle_json(result);
            text << "CC(M_f) = " << cycle_text(result) << "\n";
            break;
        }
        case Command::Cech: {
            doc["command"] = "cech";
            CharCycle start = starting_cycle(job);
            std::vector<CharCycle> parts;
            if (options.split) {
                std::vector<CharCycle> groups;
                std::vector<std::pair<ConormalComponent, long>> flat;
                for (const auto& [key, entry] : start.entries())
                    flat.push_back(entry);
                for (const auto& indices : *options.split) {
                    CharCycle part(job.doubled, job.base);
                    for (int idx : indices) {
                        if (idx < 0 || idx >= static_cast<int>(flat.size()))
                            throw MisuseError("split index out of range");
                        part.add(flat[idx].first, flat[idx].second);
                    }
                    groups.push_back(std::move(part));
                }
                parts = decompose_direct_sum(start, groups);
            } else {
                parts = {start};
            }
            std::map<int, CharCycle> total;
            json runs = json::array();
            for (const auto& part : parts) {
                CechResult result = run_cech(part, job.generators, options.strategy, &ctx);
                json run_doc;
                if (options.vertices)
                    run_doc["vertices"] = vertices_json(result.cube);
                run_doc["pruned"] = pruned_json(result.pruned);
                json coh = json::object();
                for (const auto& [r, cc] : result.cohomology) {
                    coh[std::to_string(r)] = cycle_json(cc);
                    auto it = total.find(r);
                    if (it == total.end())
                        total.emplace(r, cc);
                    else
                        it->second = it->second.plus(cc);
                }
                run_doc["cohomology"] = coh;
                runs.push_back(std::move(run_doc));
                cech_text(text, result);
            }
            doc["runs"] = runs;
            json coh = json::object();
            for (const auto& [r, cc] : total)
                coh[std::to_string(r)] = cycle_json(cc);
            doc["cohomology"] = coh;
            if (parts.size() > 1) {
                text << "total:\n";
                for (const auto& [r, cc] : total)
                    text << "CC(H^" << r << ") = " << cycle_text(cc) << "\n";
            }
            break;
        }
        case Command::Lyubeznik: {
            doc["command"] = "lyubeznik";
            if (user_cycle)
                throw MisuseError("lyubeznik runs on the polynomial ring module");
            LyubeznikResult result =
                lyubeznik_table(job.generators, job.base, options.strategy, &ctx);
            doc["lyubeznik"] = result.table.lambda;
            json coh = json::object();
            for (const auto& [r, cc] : result.ideal_cohomology)
                coh[std::to_string(r)] = cycle_json(cc);
            doc["cohomology"] = coh;
            if (options.vertices) {
                json cubes = json::object();
                for (const auto& [r, res] : result.maximal_ideal_runs)
                    cubes[std::to_string(r)] = vertices_json(res.cube);
                doc["maximal_ideal_vertices"] = cubes;
            }
            text << "Lambda(R/I):\n";
            for (int p = 0; p <= result.table.d; ++p) {
                for (int i = 0; i <= result.table.d; ++i)
                    text << (i ? " " : "") << result.table.lambda[p][i];
                text << "\n";
            }
            for (const auto& [r, cc] : result.ideal_cohomology)
                text << "CC(H^" << r << "_I(R)) = " << cycle_text(cc) << "\n";
            break;
        }
        case Command::Decompose: {
            doc["command"] = "decompose";
            std::vector<Polynomial> gens;
            std::vector<Polynomial> hints;
            for (const auto& g : job.generators) {
                gens.push_back(g.poly);
                for (const auto& f : g.factors)
                    hints.push_back(f);
            }
            Ideal ideal(job.base, gens);
            ComponentList comps = associated_primes(ideal, hints);
            std::vector<Ideal> min_primes;
            for (const auto& c : comps)
                if (c.flag == PrimeFlag::Minimal)
                    min_primes.push_back(c.prime);
            json arr = json::array();
            for (const auto& c : comps) {
                json entry;
                entry["generators"] = json::array();
                for (const auto& g : c.prime.groebner_basis())
                    entry["generators"].push_back(g.to_string());
                entry["dim"] = c.dim;
                entry["embedded"] = c.flag == PrimeFlag::Embedded;
                if (c.flag == PrimeFlag::Minimal)
                    entry["multiplicity"] = multiplicity_along(ideal, c.prime, &min_primes);
                arr.push_back(std::move(entry));
                text << (c.flag == PrimeFlag::Embedded ? "embedded" : "minimal") << " dim "
                     << c.dim << ": " << c.prime.canonical_key() << "\n";
            }
            doc["components"] = arr;
            break;
        }
        }
    } catch (const ParseError&) {
        throw;
    } catch (const MisuseError& e) {
        report.exit_code = 3;
        doc["error"] = e.what();
        report.structured = doc.dump(2);
        report.text = std::string("error: ") + e.what() + "\n";
        return report;
    } catch (const Error& e) {
        report.exit_code = 3;
        doc["error"] = e.what();
        report.structured = doc.dump(2);
        report.text = std::string("error: ") + e.what() + "\n";
        return report;
    }

    doc["warnings"] = report.warnings;
    for (const auto& w : cache.warnings())
        report.warnings.push_back(w);
    if (options.strict && needs_dagger_warning)
        report.exit_code = 4;
    report.structured = doc.dump(2);
    std::ostringstream full_text;
    for (const auto& w : report.warnings)
        full_text << "warning: " << w << "\n";
    full_text << text.str();
    report.text = full_text.str();
    return report;
}

} // namespace charcycle
