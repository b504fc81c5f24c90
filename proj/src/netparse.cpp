#include "defzero/netparse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_map>

namespace defzero {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         (kind == Kind::Syntax ? "syntax error: " : "error: ") + message),
      kind_(kind), line_(line), column_(column)
{
}

bool NetworkDocument::is_binary() const
{
    return std::all_of(reactions.begin(), reactions.end(), [](const Reaction& r) {
        return r.source.molecularity() <= 2 && r.product.molecularity() <= 2;
    });
}

namespace {

constexpr std::uint64_t kMaxCoefficient = 1'000'000'000;

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 && static_cast<unsigned char>(c) < 128; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_char(char c) { return is_alpha(c) || is_digit(c) || c == '_'; }
bool is_blank(char c) { return c == ' ' || c == '\t'; }

class SpeciesTable {
public:
    std::uint32_t intern(const std::string& name)
    {
        auto [it, inserted] = ids_.try_emplace(name, static_cast<std::uint32_t>(names_.size() + 1));
        if (inserted)
            names_.push_back(name);
        return it->second;
    }

    bool contains(const std::string& name) const { return ids_.contains(name); }
    std::vector<std::string> take() { return std::move(names_); }

private:
    std::unordered_map<std::string, std::uint32_t> ids_;
    std::vector<std::string> names_;
};

// Parser for a single reaction line; `text` excludes the comment and line break.
class LineParser {
public:
    LineParser(std::string_view text, std::size_t line, SpeciesTable& species)
        : text_(text), line_(line), species_(species)
    {
    }

    struct Result {
        Composition source;
        Composition product;
        bool reversible = false;
    };

    Result parse()
    {
        Result r;
        r.source = complex();
        skip_blanks();
        if (consume("<->"))
            r.reversible = true;
        else if (!consume("->"))
            fail_syntax("expected '->' or '<->'");
        r.product = complex();
        skip_blanks();
        if (pos_ != text_.size())
            fail_syntax(std::string("unexpected character '") + text_[pos_] + "'");
        return r;
    }

private:
    Composition complex()
    {
        skip_blanks();
        std::vector<Composition::Term> terms;
        for (;;) {
            skip_blanks();
            const std::size_t start = pos_;
            std::optional<std::uint64_t> coefficient;
            if (pos_ < text_.size() && is_digit(text_[pos_]))
                coefficient = number();
            const bool lone_zero = coefficient && *coefficient == 0 && pos_ - start == 1;
            skip_blanks();
            if (pos_ < text_.size() && is_alpha(text_[pos_])) {
                if (coefficient && *coefficient == 0)
                    fail_semantic("coefficient must be positive", start);
                const std::uint32_t id = species_.intern(name());
                terms.push_back({id, static_cast<std::uint32_t>(coefficient.value_or(1))});
            } else if (lone_zero && terms.empty()) {
                // The empty complex; it cannot take part in a sum.
                return {};
            } else {
                fail_syntax(coefficient ? "expected a species name after the coefficient" : "expected a complex");
            }
            skip_blanks();
            if (pos_ < text_.size() && text_[pos_] == '+') {
                ++pos_;
                continue;
            }
            break;
        }
        return Composition::from_terms(std::move(terms));
    }

    std::uint64_t number()
    {
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && is_digit(text_[pos_])) {
            value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > kMaxCoefficient)
                fail_semantic("coefficient too large", start);
            ++pos_;
        }
        return value;
    }

    std::string name()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_blanks()
    {
        while (pos_ < text_.size() && is_blank(text_[pos_]))
            ++pos_;
    }

    bool consume(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) != token)
            return false;
        pos_ += token.size();
        return true;
    }

    [[noreturn]] void fail_syntax(const std::string& msg) const
    {
        throw ParseError(ParseError::Kind::Syntax, line_, pos_ + 1, msg);
    }

    [[noreturn]] void fail_semantic(const std::string& msg, std::size_t at) const
    {
        throw ParseError(ParseError::Kind::Semantic, line_, at + 1, msg);
    }

    std::string_view text_;
    std::size_t line_;
    SpeciesTable& species_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_blank(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_blank(s.back()))
        s.remove_suffix(1);
    return s;
}

// "# species: A B C" -> the names, or nullopt if the comment is something else.
std::optional<std::vector<std::string>> species_header(std::string_view comment, std::size_t line, std::size_t offset)
{
    comment.remove_prefix(1); // '#'
    std::string_view body = trim(comment);
    constexpr std::string_view key = "species:";
    if (body.substr(0, key.size()) != key)
        return std::nullopt;
    body.remove_prefix(key.size());

    std::vector<std::string> names;
    std::size_t i = 0;
    while (i < body.size()) {
        if (is_blank(body[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < body.size() && !is_blank(body[i]))
            ++i;
        std::string_view name = body.substr(start, i - start);
        const bool valid = is_alpha(name.front()) && std::all_of(name.begin(), name.end(), is_name_char);
        if (!valid)
            throw ParseError(ParseError::Kind::Syntax, line, offset + 1,
                             "invalid species name '" + std::string(name) + "' in species header");
        names.emplace_back(name);
    }
    return names;
}

} // namespace

NetworkDocument parse_network(std::string_view text)
{
    NetworkDocument doc;
    doc.source_text = std::string(text);
    SpeciesTable species;

    std::vector<Reaction> reactions;
    std::vector<std::size_t> reaction_lines;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool seen_reaction = false;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            if (!seen_reaction && trim(line.substr(0, hash)).empty()) {
                if (auto names = species_header(line.substr(hash), line_no, hash)) {
                    for (const auto& name : *names) {
                        if (species.contains(name))
                            throw ParseError(ParseError::Kind::Semantic, line_no, hash + 1,
                                             "species '" + name + "' declared twice");
                        species.intern(name);
                    }
                }
            }
            line = line.substr(0, hash);
        }

        if (!trim(line).empty()) {
            for (std::size_t i = 0; i < line.size(); ++i)
                if (static_cast<unsigned char>(line[i]) >= 128 || (std::iscntrl(static_cast<unsigned char>(line[i])) && line[i] != '\t'))
                    throw ParseError(ParseError::Kind::Syntax, line_no, i + 1, "unexpected byte in reaction line");
            LineParser parser(line, line_no, species);
            auto parsed = parser.parse();
            if (parsed.source == parsed.product)
                throw ParseError(ParseError::Kind::Semantic, line_no, 1,
                                 "a complex cannot be both source and product of one reaction");
            reactions.emplace_back(parsed.source, parsed.product);
            reaction_lines.push_back(line_no);
            if (parsed.reversible) {
                reactions.emplace_back(parsed.product, parsed.source);
                reaction_lines.push_back(line_no);
            }
            seen_reaction = true;
        }
        pos = end + 1;
    }

    // Duplicate directed reactions are reported at their second occurrence.
    std::vector<std::size_t> order(reactions.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    auto key_less = [&](std::size_t a, std::size_t b) {
        const auto& ra = reactions[a];
        const auto& rb = reactions[b];
        if (auto c = canonical_compare(ra.source, rb.source); c != 0)
            return c < 0;
        if (auto c = canonical_compare(ra.product, rb.product); c != 0)
            return c < 0;
        return a < b;
    };
    std::sort(order.begin(), order.end(), key_less);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto& prev = reactions[order[i - 1]];
        const auto& cur = reactions[order[i]];
        if (prev == cur)
            throw ParseError(ParseError::Kind::Semantic, reaction_lines[order[i]], 1, "duplicate reaction");
    }

    doc.species = species.take();
    doc.reactions = std::move(reactions);
    return doc;
}

namespace {

std::string format_complex(const Composition& c, const std::vector<std::string>& names)
{
    if (c.empty())
        return "0";
    std::string out;
    for (const auto& t : c.terms()) {
        if (!out.empty())
            out += " + ";
        if (t.count > 1)
            out += std::to_string(t.count) + " ";
        out += names[t.species - 1];
    }
    return out;
}

} // namespace

std::string serialize_network(const NetworkDocument& doc)
{
    std::string out;
    if (!doc.species.empty()) {
        out += "# species:";
        for (const auto& s : doc.species)
            out += " " + s;
        out += "\n";
    }
    const ReactionNetwork net = to_reaction_network(doc);
    const auto edges = net.edges();
    const auto verts = net.vertices();
    for (const Edge& e : edges) {
        const bool reversible = std::binary_search(edges.begin(), edges.end(), Edge{e.product, e.source});
        if (reversible && e.source > e.product)
            continue;
        out += format_complex(verts[e.source], doc.species);
        out += reversible ? " <-> " : " -> ";
        out += format_complex(verts[e.product], doc.species);
        out += "\n";
    }
    return out;
}

ReactionNetwork to_reaction_network(const NetworkDocument& doc)
{
    return ReactionNetwork(static_cast<std::uint32_t>(doc.species.size()), doc.reactions);
}

NetworkDocument document_from_network(const ReactionNetwork& net)
{
    NetworkDocument doc;
    for (std::uint32_t i = 1; i <= net.species_count(); ++i)
        doc.species.push_back("S" + std::to_string(i));
    doc.reactions = net.reactions();
    return doc;
}

} // namespace defzero
