#include "tbcalc/document.hpp"

#include <fstream>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

#include "json.hpp"

#include "tbcalc/error.hpp"

namespace tbcalc {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw InputError(path + ": " + message);
}

std::string child(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string element(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

Integer parse_integer(const json& j, const std::string& path) {
    if (j.is_number_integer() && !j.is_number_unsigned()) return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        static const std::regex digits("^[+-]?[0-9]+$");
        const auto& s = j.get_ref<const std::string&>();
        if (!std::regex_match(s, digits)) fail(path, "expected an integer, got string \"" + s + "\"");
        return Integer(s[0] == '+' ? s.substr(1) : s);
    }
    if (j.is_number_float()) fail(path, "expected an integer, got a floating-point number");
    fail(path, std::string("expected an integer, got ") + j.type_name());
}

std::size_t parse_count(const json& j, const std::string& path) {
    Integer v = parse_integer(j, path);
    if (v < 0) fail(path, "must be nonnegative");
    if (!v.fits_ulong_p() || v > 1'000'000) fail(path, "value too large");
    return v.get_ui();
}

const json& require(const json& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(path.empty() ? std::string(key) : path, std::string("missing required key \"") + key + "\"");
    return *it;
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path.empty() ? "document" : path, std::string("expected an object, got ") + j.type_name());
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items())
        if (!keys.contains(key)) fail(child(path, key), "unknown key");
}

IntegerVector parse_vector(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, std::string("expected an array, got ") + j.type_name());
    IntegerVector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], element(path, i)));
    return v;
}

IntegerMatrix parse_matrix(const json& j, const std::string& path, std::size_t expected_cols) {
    if (!j.is_array()) fail(path, std::string("expected an array of rows, got ") + j.type_name());
    std::vector<IntegerVector> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        rows.push_back(parse_vector(j[r], element(path, r)));
        if (rows.back().size() != expected_cols)
            fail(element(path, r), "expected " + std::to_string(expected_cols) + " entries, got " +
                                       std::to_string(rows.back().size()));
    }
    return IntegerMatrix::from_rows(rows, expected_cols);
}

OpenBookDocument parse_open_book(const json& doc) {
    const json& page_json = require(doc, "page", "");
    require_object(page_json, "page");
    reject_unknown_keys(page_json, {"genus", "boundary"}, "page");
    const std::size_t genus = parse_count(require(page_json, "genus", "page"), "page.genus");
    const std::size_t boundary = parse_count(require(page_json, "boundary", "page"), "page.boundary");
    PageSurface page(genus, boundary);

    std::vector<DehnTwist> twists;
    if (auto it = doc.find("twists"); it != doc.end()) {
        if (!it->is_array()) fail("twists", std::string("expected an array, got ") + it->type_name());
        for (std::size_t k = 0; k < it->size(); ++k) {
            const json& t = (*it)[k];
            const std::string path = element("twists", k);
            require_object(t, path);
            reject_unknown_keys(t, {"sign", "arcs"}, path);
            Integer sign = parse_integer(require(t, "sign", path), child(path, "sign"));
            if (sign != 1 && sign != -1) fail(child(path, "sign"), "must be +1 or -1");
            twists.push_back({static_cast<int>(sign.get_si()), parse_vector(require(t, "arcs", path), child(path, "arcs"))});
        }
    }

    IntegerMatrix pairings(twists.size(), twists.size());
    if (auto it = doc.find("twist_pairings"); it != doc.end())
        pairings = parse_matrix(*it, "twist_pairings", twists.size());
    else if (!twists.empty())
        fail("twist_pairings", "missing required key \"twist_pairings\"");
    if (pairings.rows() != twists.size())
        fail("twist_pairings", "expected " + std::to_string(twists.size()) + " rows, got " +
                                   std::to_string(pairings.rows()));

    OpenBookDocument out{OpenBookPresentation(page, std::move(twists), std::move(pairings)), std::nullopt};
    if (auto it = doc.find("knot"); it != doc.end()) {
        require_object(*it, "knot");
        reject_unknown_keys(*it, {"arcs"}, "knot");
        PageKnot knot{parse_vector(require(*it, "arcs", "knot"), "knot.arcs")};
        if (knot.arc_pairings.size() != out.open_book.arc_count())
            fail("knot.arcs", "expected length " + std::to_string(out.open_book.arc_count()) + ", got " +
                                  std::to_string(knot.arc_pairings.size()));
        out.knot = std::move(knot);
    }
    return out;
}

HeegaardDocument parse_heegaard(const json& doc) {
    HeegaardDocument out;
    out.genus = parse_count(require(doc, "genus", ""), "genus");
    out.relations = parse_matrix(require(doc, "C", ""), "C", out.genus);
    validate_relations(out.genus, out.relations);

    auto vector_field = [&](const char* key) -> std::optional<IntegerVector> {
        auto it = doc.find(key);
        if (it == doc.end()) return std::nullopt;
        IntegerVector v = parse_vector(*it, key);
        if (v.size() != out.genus)
            fail(key, "expected length " + std::to_string(out.genus) + ", got " + std::to_string(v.size()));
        return v;
    };
    out.knot_generators = vector_field("A");
    out.knot_relations = vector_field("I");
    if (auto it = doc.find("dividing"); it != doc.end()) {
        out.dividing_intersections = parse_integer(*it, "dividing");
        if (out.dividing_intersections < 0) fail("dividing", "dividing-set count must be nonnegative");
        if (mpz_odd_p(out.dividing_intersections.get_mpz_t())) fail("dividing", "dividing-set count must be even");
        if (!out.knot_generators) fail("dividing", "requires the knot vector \"A\"");
    }
    if (out.knot_relations && !out.knot_generators) fail("I", "requires the knot vector \"A\"");
    return out;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json vector_json(const IntegerVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(integer_json(x));
    return arr;
}

json matrix_json(const IntegerMatrix& m) {
    json arr = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(vector_json(m.row(r)));
    return arr;
}

}  // namespace

std::optional<HeegaardData> HeegaardDocument::data() const {
    if (!knot_generators || !knot_relations) return std::nullopt;
    return HeegaardData(genus, relations, *knot_generators, *knot_relations, dividing_intersections);
}

bool InputDocument::has_knot() const {
    if (const auto* ob = std::get_if<OpenBookDocument>(&payload)) return ob->knot.has_value();
    return std::get<HeegaardDocument>(payload).has_knot();
}

InputDocument parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_and_column(text, e.byte);
        std::string what = e.what();
        // nlohmann prefixes "[json.exception.parse_error.101] parse error at line L, column C: "
        if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
        throw ParseError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what,
                         line, col);
    }
    require_object(doc, "");

    const json& mode = require(doc, "mode", "");
    if (!mode.is_string()) fail("mode", "expected a string");
    std::optional<std::string> name, description;
    for (const char* key : {"name", "description"}) {
        if (auto it = doc.find(key); it != doc.end()) {
            if (!it->is_string()) fail(key, "expected a string");
            (key[0] == 'n' ? name : description) = it->get<std::string>();
        }
    }
    const auto& mode_name = mode.get_ref<const std::string&>();
    if (mode_name == "openbook") {
        reject_unknown_keys(doc, {"mode", "name", "description", "page", "twists", "twist_pairings", "knot"}, "");
        return {name, description, parse_open_book(doc)};
    }
    if (mode_name == "heegaard") {
        reject_unknown_keys(doc, {"mode", "name", "description", "genus", "C", "A", "I", "dividing"}, "");
        return {name, description, parse_heegaard(doc)};
    }
    fail("mode", "must be \"openbook\" or \"heegaard\", got \"" + mode_name + "\"");
}

InputDocument read_document(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_document(text);
}

InputDocument read_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string() + ": cannot open file");
    return read_document(in);
}

std::string write_document(const InputDocument& doc) {
    json out = json::object();
    if (doc.name) out["name"] = *doc.name;
    if (doc.description) out["description"] = *doc.description;
    if (const auto* ob = std::get_if<OpenBookDocument>(&doc.payload)) {
        out["mode"] = "openbook";
        const auto& book = ob->open_book;
        out["page"] = {{"genus", book.page().genus()}, {"boundary", book.page().boundary_components()}};
        json twists = json::array();
        for (const auto& t : book.twists()) twists.push_back({{"sign", t.sign}, {"arcs", vector_json(t.arc_pairings)}});
        out["twists"] = std::move(twists);
        out["twist_pairings"] = matrix_json(book.twist_pairings());
        if (ob->knot) out["knot"] = {{"arcs", vector_json(ob->knot->arc_pairings)}};
    } else {
        const auto& h = std::get<HeegaardDocument>(doc.payload);
        out["mode"] = "heegaard";
        out["genus"] = h.genus;
        out["C"] = matrix_json(h.relations);
        if (h.knot_generators) {
            out["A"] = vector_json(*h.knot_generators);
            if (h.knot_relations) out["I"] = vector_json(*h.knot_relations);
            out["dividing"] = integer_json(h.dividing_intersections);
        }
    }
    return out.dump(2) + "\n";
}

void write_document(const InputDocument& doc, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw InputError(path.string() + ": cannot open for writing");
    os << write_document(doc);
    if (!os) throw InputError(path.string() + ": write failed");
}

HeegaardDocument convert_to_heegaard(const OpenBookDocument& doc) {
    HeegaardDocument out;
    out.genus = doc.open_book.arc_count();
    out.relations = -monodromy_matrix(doc.open_book);
    if (doc.knot) {
        HeegaardData data = to_heegaard(doc.open_book, *doc.knot);
        out.knot_generators = data.knot_generators();
        out.knot_relations = data.knot_relations();
        out.dividing_intersections = data.dividing_intersections();
    }
    return out;
}

HeegaardDocument as_heegaard(const InputDocument& doc) {
    if (const auto* ob = std::get_if<OpenBookDocument>(&doc.payload)) return convert_to_heegaard(*ob);
    return std::get<HeegaardDocument>(doc.payload);
}

}  // namespace tbcalc
