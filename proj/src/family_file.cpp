#include "edf/family_file.hpp"

#include "edf/errors.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edf {

namespace {

struct Token {
    std::string_view text;
    std::uint32_t column; // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            out.push_back({line.substr(start, i - start), static_cast<std::uint32_t>(start + 1)});
    }
    return out;
}

std::string rest_of_line(const std::vector<Token>& toks, std::size_t from)
{
    std::string out;
    for (std::size_t i = from; i < toks.size(); ++i)
        out += (i > from ? " " : "") + std::string(toks[i].text);
    return out;
}

} // namespace

FamilyFile parse_family_file(std::string_view text)
{
    FamilyFile out;
    bool have_group = false, have_digraph = false, have_mode = false, have_variant = false, ended = false;
    std::uint32_t line_no = 0, last_line = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        auto line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;

        auto toks = tokenize(line);
        if (toks.empty() || toks[0].text.front() == '#')
            continue;
        const auto& kw = toks[0];
        last_line = line_no;
        auto fail = [&](const std::string& msg, std::uint32_t col) -> ParseError { return ParseError(msg, line_no, col); };

        if (ended)
            throw fail("content after 'end'", kw.column);
        if (!have_group && kw.text != "group")
            throw fail("expected 'group' line first", kw.column);

        if (kw.text == "group") {
            if (have_group)
                throw fail("duplicate 'group' line", kw.column);
            if (toks.size() < 2)
                throw fail("missing group description", kw.column);
            try {
                out.group = Group(parse_group_spec(rest_of_line(toks, 1)));
            } catch (const std::exception& e) {
                throw fail(e.what(), toks[1].column);
            }
            have_group = true;
        } else if (kw.text == "digraph") {
            if (have_digraph)
                throw fail("duplicate 'digraph' line", kw.column);
            if (toks.size() != 2)
                throw fail("'digraph' takes one spec without spaces", kw.column);
            try {
                out.digraph = parse_digraph(toks[1].text);
            } catch (const std::exception& e) {
                throw fail(e.what(), toks[1].column);
            }
            have_digraph = true;
        } else if (kw.text == "mode") {
            if (have_mode)
                throw fail("duplicate 'mode' line", kw.column);
            if (toks.size() != 2 || (toks[1].text != "adjacent-disjoint" && toks[1].text != "disjoint"))
                throw fail("mode must be 'disjoint' or 'adjacent-disjoint'", toks.size() > 1 ? toks[1].column : kw.column);
            out.mode = toks[1].text == "disjoint" ? DisjointMode::disjoint : DisjointMode::adjacent_disjoint;
            have_mode = true;
        } else if (kw.text == "variant") {
            if (have_variant)
                throw fail("duplicate 'variant' line", kw.column);
            if (toks.size() != 2)
                throw fail("'variant' takes one name", kw.column);
            try {
                out.variant = parse_variant(toks[1].text);
            } catch (const std::exception& e) {
                throw fail(e.what(), toks[1].column);
            }
            have_variant = true;
        } else if (kw.text == "set") {
            if (toks.size() < 2)
                throw fail("empty set", kw.column);
            ElementSet s;
            std::vector<std::uint8_t> seen(out.group.order(), 0);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                Element x;
                try {
                    x = out.group.parse_element(toks[i].text);
                } catch (const std::exception& e) {
                    throw fail(e.what(), toks[i].column);
                }
                if (seen[x.index])
                    throw fail("duplicate element '" + std::string(toks[i].text) + "' in set", toks[i].column);
                seen[x.index] = 1;
                s.push_back(x);
            }
            out.family.sets.push_back(std::move(s));
        } else if (kw.text == "end") {
            if (toks.size() != 1)
                throw fail("unexpected text after 'end'", toks[1].column);
            if (out.family.sets.empty())
                throw fail("no sets", kw.column);
            ended = true;
        } else {
            throw fail("unknown keyword '" + std::string(kw.text) + "'", kw.column);
        }
    }
    if (!ended)
        throw ParseError(out.family.sets.empty() ? "no sets" : "missing 'end'", last_line, 1);
    if (out.digraph && out.digraph->vertex_count() != out.family.size())
        throw ParseError("digraph has " + std::to_string(out.digraph->vertex_count()) + " vertices but the file has " +
                         std::to_string(out.family.size()) + " sets");
    return out;
}

FamilyFile read_family_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_family_file(buf.str());
}

std::string emit_family_file(const Group& g, const SetFamily& fam, const std::optional<LabelledDigraph>& digraph,
                             DisjointMode mode, const std::optional<Variant>& variant)
{
    std::string out = "group " + to_string(g.spec()) + "\n";
    if (digraph)
        out += "digraph " + digraph->spec() + "\n";
    if (mode == DisjointMode::adjacent_disjoint)
        out += "mode adjacent-disjoint\n";
    if (variant)
        out += "variant " + to_string(*variant) + "\n";
    for (const auto& s : fam.sets) {
        out += "set";
        for (Element x : s)
            out += " " + g.format(x);
        out += "\n";
    }
    out += "end\n";
    return out;
}

std::string emit_family_file(const FamilyFile& file)
{
    return emit_family_file(file.group, file.family, file.digraph, file.mode, file.variant);
}

} // namespace edf
