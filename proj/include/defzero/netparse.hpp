#pragma once

#include "defzero/network.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace defzero {

/// Reaction network file.
///
///     # species: S E SE P        (optional; fixes coordinate order)
///     S + E <-> SE               one reaction per line, '#' starts a comment
///     SE <-> P + E
///     2 A -> 0                   '0' is the empty complex
///
/// complex := "0" | term ("+" term)*, term := [positive integer] name,
/// name := letter (letter | digit | '_')*. "<->" expands to both directions.
struct NetworkDocument {
    /// Declared species first, then the rest in order of first appearance.
    std::vector<std::string> species;
    /// Directed reactions; Composition species ids index into `species` (1-based).
    std::vector<Reaction> reactions;
    std::string source_text;

    /// No complex has molecularity above two.
    bool is_binary() const;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, Semantic };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

/// Throws ParseError (and nothing else) on malformed input.
NetworkDocument parse_network(std::string_view text);

/// Canonical text: species header, then one line per reaction or reversible
/// pair sorted by (source, product) canonical vertex index, LF line endings.
/// The empty document serializes to "".
std::string serialize_network(const NetworkDocument& doc);

ReactionNetwork to_reaction_network(const NetworkDocument& doc);

/// Document for a network whose species have no names; uses S1..Sn.
NetworkDocument document_from_network(const ReactionNetwork& net);

} // namespace defzero
