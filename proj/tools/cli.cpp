#include "cli.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tbcalc/error.hpp"
#include "tbcalc/homology.hpp"
#include "tbcalc/lattice.hpp"

namespace tbcalc::cli {
namespace {

using nlohmann::json;

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json vector_json(const IntegerVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(integer_json(x));
    return arr;
}

json group_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
    return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

// The outcome of a tb computation, which may lack a value when a Heegaard
// document omits I.
struct TbOutcome {
    std::optional<Integer> order;
    std::optional<Rational> tb;
    IntegerVector certificate;
    std::optional<bool> kernel_orthogonal;
};

TbOutcome from_result(const std::optional<TbResult>& r) {
    if (!r) return {};
    return {r->order, r->tb, r->certificate, r->kernel_orthogonal};
}

TbOutcome compute_tb(const InputDocument& doc) {
    if (const auto* ob = std::get_if<OpenBookDocument>(&doc.payload)) {
        if (!ob->knot) throw InputError("knot: the tb command needs a knot block");
        return from_result(tb_open_book(ob->open_book, *ob->knot));
    }
    const auto& h = std::get<HeegaardDocument>(doc.payload);
    if (!h.has_knot()) throw InputError("A: the tb command needs the knot vector \"A\"");
    if (auto data = h.data()) return from_result(tb_heegaard(*data));
    auto cert = minimal_order(h.relations, *h.knot_generators);
    if (!cert) return {};
    return {cert->order, std::nullopt, cert->solution, std::nullopt};
}

std::string verdict(const TbOutcome& t) {
    if (!t.order) return "infinite order";
    if (*t.order == 1) return "nullhomologous";
    return "rationally nullhomologous";
}

json tb_json(const TbOutcome& t) {
    json j = {{"verdict", verdict(t)}, {"order", nullptr}, {"tb_numerator", nullptr}, {"tb_denominator", nullptr},
              {"certificate", nullptr}, {"kernel_orthogonal", nullptr}};
    if (t.order) {
        j["order"] = integer_json(*t.order);
        j["certificate"] = vector_json(t.certificate);
    }
    if (t.tb) {
        j["tb_numerator"] = integer_json(t.tb->get_num());
        j["tb_denominator"] = integer_json(t.tb->get_den());
    }
    if (t.kernel_orthogonal) j["kernel_orthogonal"] = *t.kernel_orthogonal;
    return j;
}

std::string tb_label(const TbOutcome& t) { return t.order && *t.order != 1 ? "tb_Q" : "tb"; }

void tb_text(std::ostream& os, const TbOutcome& t) {
    if (!t.order) {
        os << "verdict: infinite order\n";
        os << "the knot is not rationally nullhomologous; tb is undefined\n";
        return;
    }
    if (*t.order == 1)
        os << "verdict: nullhomologous\n";
    else
        os << "verdict: rationally nullhomologous of order " << *t.order << "\n";
    os << "order " << *t.order << ", " << tb_label(t) << " = "
       << (t.tb ? format_fraction(*t.tb) : std::string("unavailable (no I vector given)")) << "\n";
    os << "certificate E = " << to_string(t.certificate) << "\n";
}

void collect_warnings(const TbOutcome& t, Report& report) {
    if (t.kernel_orthogonal && !*t.kernel_orthogonal)
        report.warnings.emplace_back(
            "pairing vector is not orthogonal to ker C; the value depends on the chosen certificate");
}

void verbose_header(std::ostream& err, const InputDocument& doc) {
    if (doc.name) err << "document: " << *doc.name << "\n";
    const HeegaardDocument h = as_heegaard(doc);
    if (doc.mode() == Mode::openbook)
        err << "monodromy matrix C = " << -h.relations << "\n";
    else
        err << "relation matrix C = " << h.relations << "\n";
    std::vector<Integer> factors = invariant_factors(h.relations);
    err << "invariant factors = " << to_string(factors) << "\n";
}

InputDocument load(bool from_stdin, const std::string& file, std::istream& in) {
    if (from_stdin) return read_document(in);
    if (file.empty()) throw InputError("no input file given (pass FILE or --stdin)");
    return read_document(std::filesystem::path(file));
}

}  // namespace

Report cmd_tb(const InputDocument& doc, const Options& opts) {
    const TbOutcome t = compute_tb(doc);
    Report report;
    report.exit_code = t.order ? kExitSuccess : kExitInfiniteOrder;
    if (opts.json) {
        report.output = tb_json(t).dump() + "\n";
    } else {
        std::ostringstream os;
        tb_text(os, t);
        report.output = os.str();
    }
    collect_warnings(t, report);
    return report;
}

Report cmd_homology(const InputDocument& doc, const Options& opts) {
    const HeegaardDocument h = as_heegaard(doc);
    const AbelianGroup manifold = h1_manifold(h.relations);
    json j = {{"h1_manifold", group_json(manifold)}};
    std::ostringstream os;
    os << "H₁(M) = " << manifold.to_string() << "\n";

    if (h.has_knot()) {
        const auto data = h.data();
        const bool nullhomologous = solve_integer(h.relations, *h.knot_generators).has_value();
        if (!data) {
            os << "complement: unavailable (no I vector given)\n";
            j["h1_complement"] = nullptr;
            j["complement_lemma"] = "unavailable";
        } else if (!nullhomologous) {
            os << "complement lemma: not applicable (knot is not nullhomologous)\n";
            j["h1_complement"] = group_json(h1_complement(*data));
            j["complement_lemma"] = to_string(LemmaVerdict::not_applicable);
        } else {
            const AbelianGroup complement = h1_complement(*data);
            const LemmaVerdict v = verify_complement_lemma(*data);
            os << "H₁(M∖νK) = " << complement.to_string() << "\n";
            os << "complement lemma: " << to_string(v) << "\n";
            j["h1_complement"] = group_json(complement);
            j["complement_lemma"] = to_string(v);
        }
    }

    Report report;
    report.output = opts.json ? j.dump() + "\n" : os.str();
    return report;
}

Report cmd_stabilize(const InputDocument& doc, int sign, const std::string& output_path, const Options& opts) {
    const auto* ob = std::get_if<OpenBookDocument>(&doc.payload);
    if (!ob) throw InputError("mode: stabilization is an open-book operation; got a heegaard document");
    if (!ob->knot) throw InputError("knot: the stabilize command needs a knot block");
    if (sign != 1 && sign != -1) throw InputError("sign: must be +1 or -1");

    auto [book, knot] = stabilize(ob->open_book, *ob->knot, sign);
    const InputDocument stabilized{doc.name, doc.description, OpenBookDocument{std::move(book), std::move(knot)}};
    write_document(stabilized, std::filesystem::path(output_path));

    const TbOutcome before = compute_tb(doc);
    const TbOutcome after = compute_tb(stabilized);
    Report report;
    report.exit_code = after.order ? kExitSuccess : kExitInfiniteOrder;
    std::optional<Rational> delta;
    if (before.tb && after.tb) delta = Rational(*after.tb - *before.tb);

    if (opts.json) {
        json j = {{"old", tb_json(before)}, {"new", tb_json(after)}, {"output", output_path},
                  {"delta", delta ? json(format_fraction(*delta)) : json(nullptr)}};
        report.output = j.dump() + "\n";
    } else {
        std::ostringstream os;
        os << "wrote " << output_path << "\n";
        if (delta) {
            os << "old " << tb_label(before) << " = " << format_fraction(*before.tb) << "\n";
            os << "new " << tb_label(after) << " = " << format_fraction(*after.tb) << "\n";
            os << "delta = " << format_fraction(*delta) << "\n";
        } else {
            os << "tb undefined: the knot has infinite order\n";
        }
        report.output = os.str();
    }
    collect_warnings(after, report);
    return report;
}

InputDocument cmd_convert(const InputDocument& doc) {
    const auto* ob = std::get_if<OpenBookDocument>(&doc.payload);
    if (!ob) throw InputError("mode: convert expects an openbook document");
    return {doc.name, doc.description, convert_to_heegaard(*ob)};
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thurston-Bennequin invariants of Legendrian knots on open-book pages and Heegaard surfaces",
                 "tbcalc"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opts;
    bool from_stdin = false;
    app.add_flag("--json", opts.json, "Emit machine-readable JSON");
    app.add_flag("-v,--verbose", opts.verbose, "Print intermediate matrices to standard error");
    app.add_flag("--stdin", from_stdin, "Read the input document from standard input");

    std::string file;
    auto* tb = app.add_subcommand("tb", "Order verdict and (rational) Thurston-Bennequin invariant");
    tb->add_option("file", file, "Input document");
    auto* homology = app.add_subcommand("homology", "First homology of M and of the knot complement");
    homology->add_option("file", file, "Input document");

    int sign = 0;
    std::string output;
    auto* stab = app.add_subcommand("stabilize", "Stabilize an open book and its page knot");
    stab->add_option("file", file, "Input document");
    stab->add_option("-s,--sign", sign, "Sign of the added Dehn twist (+1 or -1)")->required();
    stab->add_option("-o,--output", output, "Where to write the stabilized document")->required();

    auto* convert = app.add_subcommand("convert", "Rewrite an open book as a Heegaard document");
    convert->add_option("file", file, "Input document");
    convert->add_option("-o,--output", output, "Output path (standard output when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        const InputDocument doc = load(from_stdin, file, in);
        if (opts.verbose) verbose_header(err, doc);

        if (convert->parsed()) {
            const InputDocument converted = cmd_convert(doc);
            if (output.empty())
                out << write_document(converted);
            else
                write_document(converted, std::filesystem::path(output));
            return kExitSuccess;
        }

        Report report;
        if (tb->parsed())
            report = cmd_tb(doc, opts);
        else if (homology->parsed())
            report = cmd_homology(doc, opts);
        else
            report = cmd_stabilize(doc, sign, output, opts);
        out << report.output;
        for (const auto& w : report.warnings) err << "warning: " << w << "\n";
        return report.exit_code;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitInputError;
}

}  // namespace tbcalc::cli
