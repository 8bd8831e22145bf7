#pragma once

// JSON input documents. See docs/input-format.md for the grammar.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tbcalc/heegaard.hpp"
#include "tbcalc/open_book.hpp"

namespace tbcalc {

struct OpenBookDocument {
    OpenBookPresentation open_book;
    std::optional<PageKnot> knot;

    friend bool operator==(const OpenBookDocument&, const OpenBookDocument&) = default;
};

/// Heegaard payload. The knot block is A, optionally with I and the
/// dividing-set count; tb needs I, the order verdict does not.
struct HeegaardDocument {
    std::size_t genus = 0;
    IntegerMatrix relations;
    std::optional<IntegerVector> knot_generators;
    std::optional<IntegerVector> knot_relations;
    Integer dividing_intersections = 0;

    bool has_knot() const { return knot_generators.has_value(); }
    /// Complete knot data, available when both A and I are present.
    std::optional<HeegaardData> data() const;

    friend bool operator==(const HeegaardDocument&, const HeegaardDocument&) = default;
};

enum class Mode { openbook, heegaard };

struct InputDocument {
    std::optional<std::string> name;
    std::optional<std::string> description;
    std::variant<OpenBookDocument, HeegaardDocument> payload;

    Mode mode() const { return payload.index() == 0 ? Mode::openbook : Mode::heegaard; }
    bool has_knot() const;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws ParseError for malformed JSON and InputError, prefixed with the
/// offending field path, for schema or invariant violations.
InputDocument parse_document(std::string_view text);
InputDocument read_document(std::istream& in);
InputDocument read_document(const std::filesystem::path& path);

/// Pretty-printed JSON, newline terminated. parse_document inverts it.
std::string write_document(const InputDocument& doc);
void write_document(const InputDocument& doc, const std::filesystem::path& path);

/// Doubles the page: relations -C, A and I both equal to the knot's arc
/// pairings, no dividing-set crossings.
HeegaardDocument convert_to_heegaard(const OpenBookDocument& doc);

/// The Heegaard view of any document (identity for heegaard mode).
HeegaardDocument as_heegaard(const InputDocument& doc);

}  // namespace tbcalc
