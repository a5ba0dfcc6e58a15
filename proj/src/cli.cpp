#include "edf/cli.hpp"

#include "edf/constructions.hpp"
#include "edf/equivalence.hpp"
#include "edf/errors.hpp"
#include "edf/family_file.hpp"
#include "edf/field.hpp"
#include "edf/number_theory.hpp"
#include "edf/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>

namespace edf::cli {

namespace {

std::string format_set(const Group& g, const ElementSet& s)
{
    const char* sep = g.kind() == GroupKind::product ? " " : ", ";
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? sep : "") + g.format(s[i]);
    return out + "}";
}

void print_family(std::ostream& out, const Group& g, const SetFamily& fam, const std::string& indent = "  ")
{
    for (std::size_t i = 0; i < fam.size(); ++i)
        out << indent << "A" << i << " = " << format_set(g, fam[i]) << "\n";
}

std::uint32_t to_u32(const std::string& s, const char* what)
{
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || s.front() == '-' || v > 0xffffffffUL)
        throw ParseError(std::string("bad ") + what + " '" + s + "'");
    return static_cast<std::uint32_t>(v);
}

std::string join_tokens(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : " ") + p;
    return out;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw ParseError("cannot write '" + path + "'");
}

std::vector<bool> parse_bits(const std::string& s)
{
    std::vector<bool> bits;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw ParseError("orientation bits must be 0/1, got '" + s + "'");
        bits.push_back(c == '1');
    }
    return bits;
}

struct ConstructArgs {
    std::string name;
    std::vector<std::string> params;
    std::string emit;
    std::uint64_t seed = 0;
};

int do_construct(const ConstructArgs& a, std::ostream& out)
{
    using Builder = std::function<ConstructionResult(const std::vector<std::uint32_t>&)>;
    struct Entry {
        std::size_t arity;
        Builder build;
    };
    const std::map<std::string, Entry> table = {
        {"cyclotomic-edf", {2, [](auto& p) { return cyclotomic_edf(p[0], p[1]); }}},
        {"cyclotomic-cedf", {2, [](auto& p) { return cyclotomic_cedf(p[0], p[1]); }}},
        {"noncyclic-cedf", {1, [](auto& p) { return noncyclic_cedf(p[0]); }}},
        {"m4-cedf", {2, [](auto& p) { return m4_cedf(p[0], p[1]); }}},
        {"gsedf-two-set", {2, [](auto& p) { return gsedf_two_set(p[0], p[1]); }}},
        {"sedf-squares", {1, [](auto& p) { return sedf_squares(p[0]); }}},
        {"kab-star", {3, [&](auto& p) { return kab_star_edf(p[0], p[1], p[2], a.seed); }}},
        {"kab-undirected", {3, [&](auto& p) { return kab_undirected_edf(p[0], p[1], p[2], a.seed); }}},
        {"cycle-non-cedf", {2, [](auto& p) { return cycle_non_cedf(p[0], p[1]); }}},
    };

    std::optional<ConstructionResult> r;
    if (a.name == "tournament-edf") {
        if (a.params.size() != 2 && a.params.size() != 3)
            throw ParseError("tournament-edf takes q e [bits]");
        auto bits = a.params.size() == 3 ? parse_bits(a.params[2]) : std::vector<bool>{};
        r = tournament_edf(to_u32(a.params[0], "q"), to_u32(a.params[1], "e"), bits);
    } else {
        auto it = table.find(a.name);
        if (it == table.end())
            throw ParseError("unknown construction '" + a.name + "'");
        if (a.params.size() != it->second.arity)
            throw ParseError(a.name + " takes " + std::to_string(it->second.arity) + " parameter(s)");
        std::vector<std::uint32_t> p;
        for (const auto& s : a.params)
            p.push_back(to_u32(s, "parameter"));
        r = it->second.build(p);
    }

    out << r->label() << " VERIFIED\n";
    out << "group " << to_string(r->group.spec()) << "; digraph " << r->digraph.spec() << "\n";
    print_family(out, r->group, r->family);
    for (const auto& c : r->non_cedf)
        out << "not a CEDF on " << c.oriented.spec() << ": " << r->group.format(c.first) << " occurs "
            << c.first_count << " time(s), " << r->group.format(c.second) << " occurs " << c.second_count
            << " time(s)\n";
    if (!a.emit.empty()) {
        std::optional<LabelledDigraph> h;
        if (!r->variant)
            h = r->digraph;
        write_file(a.emit, emit_family_file(r->group, r->family, h, DisjointMode::disjoint, r->variant));
    }
    return ok;
}

struct VerifyArgs {
    std::string family;
    std::string digraph;
    std::optional<std::uint32_t> lambda;
    bool adjacent = false;
    std::string variant;
};

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    auto file = read_family_file(a.family);
    const auto& g = file.group;
    std::optional<Variant> variant = file.variant;
    if (!a.variant.empty())
        variant = parse_variant(a.variant);
    if (!a.digraph.empty() && a.variant.empty())
        variant.reset();
    if (variant) {
        const auto v = *variant;
        auto rep = verify_variant(g, file.family, v, a.lambda);
        std::size_t k = 0;
        for (const auto& c : rep.checks)
            out << "check " << k++ << ": " << c.summary(g) << "\n";
        for (const auto& [i, j] : rep.disjointness_violations)
            out << "sets " << i << " and " << j << " intersect\n";
        if (rep.verified) {
            out << to_string(v) << " VERIFIED";
            if (rep.lambda)
                out << " lambda=" << *rep.lambda;
            out << "\n";
        } else {
            out << to_string(v) << " FAILED\n";
        }
        return rep.verified ? ok : negative;
    }

    std::optional<LabelledDigraph> h = file.digraph;
    if (!a.digraph.empty())
        h = parse_digraph(a.digraph);
    if (!h) {
        err << "verify: no digraph given on the command line or in the file\n";
        return usage;
    }
    VerifyOptions opts;
    opts.expected_lambda = a.lambda;
    opts.mode = a.adjacent ? DisjointMode::adjacent_disjoint : file.mode;
    auto rep = verify_h_edf(g, *h, file.family, opts);
    out << rep.summary(g) << "\n";
    return rep.verified ? ok : negative;
}

struct SearchArgs {
    std::vector<std::string> group;
    std::string digraph;
    std::uint32_t l = 0;
    std::uint32_t lambda = 0;
    std::uint64_t max_solutions = 1;
    bool adjacent = false;
    std::string symmetry = "translation";
    std::optional<double> time_budget;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::string emit;
};

int do_search(const SearchArgs& a, std::ostream& out)
{
    Group g(parse_group_spec(join_tokens(a.group)));
    auto h = parse_digraph(a.digraph);
    SearchOptions opts;
    opts.mode = a.adjacent ? DisjointMode::adjacent_disjoint : DisjointMode::disjoint;
    opts.max_solutions = a.max_solutions;
    opts.symmetry = parse_symmetry(a.symmetry);
    opts.time_budget = a.time_budget;
    opts.threads = a.threads;
    opts.seed = a.seed;
    std::size_t k = 0;
    auto result = search_h_edf(g, h, a.l, a.lambda, opts, [&](const SetFamily& fam) {
        out << "solution " << k++ << ":";
        for (const auto& s : fam.sets)
            out << " " << format_set(g, s);
        out << "\n";
        out.flush();
    });
    out << result.certificate.summary() << "\n";
    if (!a.emit.empty() && !result.solutions.empty())
        write_file(a.emit, emit_family_file(g, result.solutions.front(), h, opts.mode));
    return result.solutions.empty() ? negative : ok;
}

struct EquivArgs {
    std::string a, b;
    bool no_prefilter = false;
    bool reversed = false;
};

std::string fingerprint_text(const Fingerprint& fp)
{
    std::string out = "[";
    for (std::size_t i = 0; i < fp.size(); ++i) {
        out += i ? " (" : "(";
        for (std::size_t j = 0; j < fp[i].size(); ++j)
            out += (j ? "," : "") + std::to_string(fp[i][j]);
        out += ")";
    }
    return out + "]";
}

int do_equiv(const EquivArgs& a, std::ostream& out)
{
    auto fa = read_family_file(a.a);
    auto fb = read_family_file(a.b);
    if (!(fa.group == fb.group))
        throw ParseError("the two families live in different groups");
    const auto& g = fa.group;
    out << "fingerprint A: " << fingerprint_text(inequivalence_fingerprint(g, fa.family)) << "\n";
    out << "fingerprint B: " << fingerprint_text(inequivalence_fingerprint(g, fb.family)) << "\n";
    EquivalenceOptions opts;
    opts.fingerprint_prefilter = !a.no_prefilter;
    opts.try_reversed = a.reversed;
    auto r = cedf_equivalent(g, fa.family, fb.family, opts);
    if (!r) {
        out << "NONE (" << r.candidates_examined << " candidates examined)\n";
        return negative;
    }
    out << "EQUIVALENT " << describe(g, *r.witness) << "\n";
    return ok;
}

int do_cyclotomy(std::uint32_t q, std::uint32_t e, std::ostream& out)
{
    if (!prime_power(q))
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    FieldTable f(q);
    const Group g = f.additive_group();
    out << "GF(" << q << "), primitive element " << g.format(f.primitive());
    if (!f.modulus().empty()) {
        out << ", modulus x^" << f.degree();
        for (std::size_t i = f.modulus().size(); i-- > 0;)
            if (f.modulus()[i] != 0)
                out << " + " << f.modulus()[i] << (i ? "x^" + std::to_string(i) : "");
    }
    out << "\n";
    auto classes = cyclotomic_classes(f, e);
    for (std::size_t i = 0; i < classes.size(); ++i)
        out << "C" << i << " = " << format_set(g, classes[i]) << "\n";
    out << "-1 in C0: " << (minus_one_in_c0(q, e) ? "yes" : "no") << "\n";
    return ok;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"External difference families: constructions, verification, search, equivalence"};
    app.name(args.empty() ? "edftool" : args[0]);
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build and re-verify a known family");
    construct->add_option("name", ca.name, "cyclotomic-edf, cyclotomic-cedf, tournament-edf, noncyclic-cedf, "
                                           "m4-cedf, gsedf-two-set, sedf-squares, kab-star, kab-undirected, "
                                           "cycle-non-cedf")
        ->required();
    construct->add_option("params", ca.params, "Numeric parameters");
    construct->add_option("--emit", ca.emit, "Write the family file here");
    construct->add_option("--seed", ca.seed, "Partition seed (kab constructions)");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check a family file");
    verify->add_option("--family", va.family, "Family file")->required();
    verify->add_option("--digraph", va.digraph, "Digraph spec (overrides the file)");
    verify->add_option("--lambda", va.lambda, "Expected lambda");
    verify->add_flag("--adjacent-disjoint", va.adjacent, "Only adjacent sets must be disjoint");
    verify->add_option("--variant", va.variant, "edf, sedf, gedf, gsedf, cedf[:c], scedf[:c]");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Backtracking search for families");
    search->add_option("--group", sa.group, "Group, e.g. 'cyclic 19' or dihedral:28")->required()->expected(1, 8);
    search->add_option("--digraph", sa.digraph, "Digraph spec")->required();
    search->add_option("--l", sa.l, "Set size")->required();
    search->add_option("--lambda", sa.lambda, "Target lambda")->required();
    search->add_option("--max-solutions", sa.max_solutions, "Stop after N solutions (0 = all)");
    search->add_flag("--adjacent-disjoint", sa.adjacent, "Only adjacent sets must be disjoint");
    search->add_option("--symmetry", sa.symmetry, "none, translation or automorphism");
    search->add_option("--time-budget", sa.time_budget, "Seconds");
    search->add_option("--threads", sa.threads, "Worker threads");
    search->add_option("--seed", sa.seed, "Shuffle top-level branches (0 keeps the canonical order)");
    search->add_option("--emit", sa.emit, "Write the first solution here");

    EquivArgs ea;
    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two families");
    equiv->add_option("--family-a", ea.a, "First family file")->required();
    equiv->add_option("--family-b", ea.b, "Second family file")->required();
    equiv->add_flag("--no-prefilter", ea.no_prefilter, "Examine every candidate");
    equiv->add_flag("--reversed", ea.reversed, "Also try the reversed cyclic order");

    std::uint32_t q = 0, e = 0;
    auto* cyclo = app.add_subcommand("cyclotomy", "Print the cyclotomic classes of GF(q)");
    cyclo->add_option("--q", q, "Field order")->required();
    cyclo->add_option("--e", e, "Number of classes")->required();

    std::vector<const char*> argv;
    argv.push_back(args.empty() ? "edftool" : args[0].c_str());
    for (std::size_t i = 1; i < args.size(); ++i)
        argv.push_back(args[i].c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex, out, err);
    } catch (const CLI::CallForAllHelp& ex) {
        return app.exit(ex, out, err);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex, out, err);
        return usage;
    }

    try {
        if (*construct)
            return do_construct(ca, out);
        if (*verify)
            return do_verify(va, out, err);
        if (*search)
            return do_search(sa, out);
        if (*equiv)
            return do_equiv(ea, out);
        if (*cyclo)
            return do_cyclotomy(q, e, out);
    } catch (const edf::ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return usage;
    } catch (const UnsupportedError& ex) {
        err << "unsupported: " << ex.what() << "\n";
        return unsupported;
    } catch (const std::invalid_argument& ex) {
        err << "unsupported: " << ex.what() << "\n";
        return unsupported;
    }
    return usage;
}

} // namespace edf::cli
