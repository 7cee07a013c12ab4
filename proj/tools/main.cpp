// cobordkit command-line interface. Talks to the library exclusively through
// the C API in cobordkit.h; rendering and argument handling live here.

#include "cobordkit.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using njson = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct CliError {
    std::string message;
};

[[noreturn]] void input_error(const std::string& message) { throw CliError{message}; }

std::string format_flag;

bool use_json() {
    if (format_flag == "json") return true;
    if (format_flag == "table") return false;
    input_error("invalid format '" + format_flag + "' (expected table or json)");
}

std::string default_format() {
    const char* env = std::getenv("COBORDKIT_FORMAT");
    if (!env || !*env) return "table";
    const std::string value = env;
    if (value != "table" && value != "json")
        input_error("invalid COBORDKIT_FORMAT '" + value + "' (expected table or json)");
    return value;
}

struct Range {
    int64_t lo = 0;
    int64_t hi = 0;
};

Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        input_error("invalid range '" + text + "' (expected lo..hi)");
    try {
        std::size_t used = 0;
        const int64_t lo = std::stoll(text.substr(0, pos), &used);
        if (used != pos) throw std::invalid_argument(text);
        const std::string rest = text.substr(pos + 2);
        const int64_t hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        if (lo > hi) input_error("invalid range '" + text + "' (lo > hi)");
        return Range{lo, hi};
    } catch (const CliError&) {
        throw;
    } catch (const std::exception&) {
        input_error("invalid range '" + text + "' (expected lo..hi)");
    }
}

std::vector<int64_t> parse_partition(const std::string& text) {
    std::vector<int64_t> parts;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoll(piece, &used));
            if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            input_error("invalid partition '" + text + "' (expected e.g. 2,1,1)");
        }
    }
    if (parts.empty()) input_error("empty partition");
    return parts;
}

// RAII wrapper around cobord_doc; converts non-OK statuses into CliError.
struct Doc {
    cobord_doc* handle = nullptr;

    Doc() = default;
    Doc(const Doc&) = delete;
    Doc& operator=(const Doc&) = delete;
    ~Doc() { cobord_doc_free(handle); }

    bool pass() const { return cobord_doc_pass(handle) == 1; }
    njson json() const { return njson::parse(cobord_doc_json(handle)); }
};

void check(cobord_status status) {
    if (status == COBORD_OK) return;
    input_error(std::string(cobord_status_name(status)) + ": " + cobord_last_error());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) input_error("cannot open output file '" + out_path + "'");
    out << text << '\n';
    if (!out) input_error("cannot write output file '" + out_path + "'");
}

std::string cell(const njson& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

std::string render_table(const std::vector<std::string>& headers,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) widths[c] = headers[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << std::left << std::setw(static_cast<int>(widths[c]) + 2) << row[c];
        out << '\n';
    };
    line(headers);
    for (const auto& row : rows) line(row);
    return out.str();
}

// ---- chern ----------------------------------------------------------------

struct ChernArgs {
    int64_t n = 0;
    int64_t a = 0;
    std::string structure = "standard";
    std::string partition;
    std::string out_path;
};

int run_chern(const ChernArgs& args) {
    int structure;
    if (args.structure == "standard")
        structure = COBORD_STRUCTURE_STANDARD;
    else if (args.structure == "twisted")
        structure = COBORD_STRUCTURE_TWISTED;
    else
        input_error("invalid structure '" + args.structure + "' (expected standard or twisted)");

    if (!args.partition.empty()) {
        const std::vector<int64_t> parts = parse_partition(args.partition);
        char* ring_value = nullptr;
        check(cobord_chern_number(args.n, args.a, structure, parts.data(), parts.size(),
                                  &ring_value));
        std::string ring(ring_value);
        cobord_free_string(ring_value);
        std::string closed = "0";
        if (structure == COBORD_STRUCTURE_STANDARD) {
            char* closed_value = nullptr;
            check(cobord_chern_number_closed(args.n, parts.data(), parts.size(), &closed_value));
            closed = closed_value;
            cobord_free_string(closed_value);
        }
        const bool match = ring == closed;
        if (use_json()) {
            njson doc{{"n", args.n},
                      {"a", args.a},
                      {"structure", args.structure},
                      {"partition", parts},
                      {"ring", ring},
                      {"closed", closed},
                      {"match", match}};
            emit(doc.dump(2), args.out_path);
        } else {
            emit(render_table({"partition", "ring", "closed"},
                              {{"[" + args.partition + "]", ring, closed}}),
                 args.out_path);
        }
        return match ? kExitPass : kExitCheckFailed;
    }

    Doc doc;
    check(cobord_chern_table(args.n, args.a, structure, &doc.handle));
    const njson table = doc.json();
    if (use_json()) {
        emit(table.dump(2), args.out_path);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : table["rows"])
            rows.push_back({row["partition"].dump(), cell(row["ring"]), cell(row["closed"])});
        emit(render_table({"partition", "ring", "closed"}, rows), args.out_path);
    }
    return doc.pass() ? kExitPass : kExitCheckFailed;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    int64_t n = 0;
    std::optional<int64_t> a;
    std::optional<int64_t> b;
    std::string a_range;
    std::string b_range;
    std::string out_path;
};

Range range_of(const std::optional<int64_t>& single, const std::string& range,
               const char* flag) {
    if (!range.empty() && single)
        input_error(std::string("give either --") + flag + " or --" + flag + "-range, not both");
    if (!range.empty()) return parse_range(range);
    if (single) return Range{*single, *single};
    input_error(std::string("missing --") + flag + " or --" + flag + "-range");
}

std::string describe_failure(const njson& doc) {
    std::string text;
    if (doc.contains("counterexample") && !doc["counterexample"].is_null())
        text += " counterexample " + doc["counterexample"].dump();
    if (doc.contains("detail") && doc["detail"].is_string() &&
        !doc["detail"].get<std::string>().empty())
        text += " (" + doc["detail"].get<std::string>() + ")";
    return text;
}

int finish_verify(const std::string& headline, bool pass, const njson& doc,
                  const std::string& out_path) {
    if (use_json()) {
        emit(doc.dump(2), out_path);
    } else {
        std::string text = headline + ": " + (pass ? "PASS" : "FAIL");
        if (!pass) text += describe_failure(doc);
        emit(text, out_path);
    }
    return pass ? kExitPass : kExitCheckFailed;
}

int run_verify_independence(const VerifyArgs& args) {
    const Range r = range_of(args.a, args.a_range, "a");
    Doc doc;
    check(cobord_verify_independence(args.n, r.lo, r.hi, &doc.handle));
    return finish_verify("independence n=" + std::to_string(args.n) + " a in " +
                             std::to_string(r.lo) + ".." + std::to_string(r.hi),
                         doc.pass(), doc.json(), args.out_path);
}

int run_verify_twisted_null(const VerifyArgs& args) {
    const Range r = range_of(args.a, args.a_range, "a");
    Doc doc;
    check(cobord_verify_twisted_null(args.n, r.lo, r.hi, &doc.handle));
    return finish_verify("twisted-null n=" + std::to_string(args.n) + " a in " +
                             std::to_string(r.lo) + ".." + std::to_string(r.hi),
                         doc.pass(), doc.json(), args.out_path);
}

int run_verify_pairwise(const VerifyArgs& args, bool gluing) {
    const Range ra = range_of(args.a, args.a_range, "a");
    const Range rb = range_of(args.b, args.b_range, "b");
    bool all_pass = true;
    njson runs = njson::array();
    std::vector<std::vector<std::string>> rows;
    for (int64_t a = ra.lo; a <= ra.hi; ++a) {
        for (int64_t b = rb.lo; b <= rb.hi; ++b) {
            Doc doc;
            check(gluing ? cobord_verify_gluing(args.n, a, b, &doc.handle)
                         : cobord_verify_triple(args.n, a, b, &doc.handle));
            const bool pass = doc.pass();
            all_pass = all_pass && pass;
            runs.push_back(doc.json());
            std::string note = pass ? "PASS" : "FAIL" + describe_failure(doc.json());
            rows.push_back({std::to_string(a), std::to_string(b), note});
        }
    }
    const std::string mode = gluing ? "gluing" : "triple";
    if (use_json()) {
        njson doc;
        doc["mode"] = mode;
        doc["n"] = args.n;
        doc["pass"] = all_pass;
        doc["runs"] = runs.size() == 1 ? runs[0] : std::move(runs);
        emit(doc.dump(2), args.out_path);
    } else if (rows.size() == 1) {
        std::string text = mode + " n=" + std::to_string(args.n) + " a=" + rows[0][0] +
                           " b=" + rows[0][1] + ": " + rows[0][2];
        emit(text, args.out_path);
    } else {
        emit(render_table({"a", "b", mode}, rows), args.out_path);
    }
    return all_pass ? kExitPass : kExitCheckFailed;
}

// ---- hexprism ----------------------------------------------------------------

struct HexArgs {
    int64_t n = 0;
    int64_t a = 0;
    int64_t b = 0;
    std::string out_path;
};

int run_hexprism(const HexArgs& args) {
    Doc doc;
    check(cobord_hexprism_certificate(args.n, args.a, args.b, &doc.handle));
    const njson cert = doc.json();
    if (!args.out_path.empty()) {
        std::ofstream out(args.out_path);
        if (!out) input_error("cannot open output file '" + args.out_path + "'");
        out << cert.dump(2) << '\n';
        if (!out) input_error("cannot write output file '" + args.out_path + "'");
    }
    if (use_json()) {
        if (args.out_path.empty()) emit(cert.dump(2), "");
    } else {
        std::ostringstream text;
        text << "hexprism n=" << args.n << " a=" << args.a << " b=" << args.b << ": "
             << (doc.pass() ? "PASS" : "FAIL") << '\n';
        text << "  isotropy_valid: " << cert["isotropy_valid"].dump() << '\n';
        for (const auto& comp : cert["boundaries"])
            text << "  " << comp["facet"].get<std::string>() << " -> "
                 << comp["label"].get<std::string>() << "  b'=" << cell(comp["b_parameter"])
                 << "  orientation=" << comp["orientation"].dump() << '\n';
        text << "  triple identity: " << cert["chern_tables"]["triple_identity_pass"].dump()
             << '\n';
        text << "  gluing certificate: " << cert["chern_tables"]["gluing"]["pass"].dump();
        if (!args.out_path.empty()) text << "\n  certificate written to " << args.out_path;
        emit(text.str(), "");
    }
    return doc.pass() ? kExitPass : kExitCheckFailed;
}

// ---- charfun validate / glequiv ---------------------------------------------

njson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) input_error("cannot open input file '" + path + "'");
    njson doc = njson::parse(in, nullptr, false);
    if (doc.is_discarded()) input_error("file '" + path + "' is not valid JSON");
    return doc;
}

struct PolytopeHandle {
    cobord_polytope* handle = nullptr;
    ~PolytopeHandle() { cobord_polytope_free(handle); }
};

struct AssignmentHandle {
    cobord_assignment* handle = nullptr;
    ~AssignmentHandle() { cobord_assignment_free(handle); }
};

int run_charfun_validate(const std::string& input, const std::string& out_path) {
    const njson doc = load_json_file(input);
    if (!doc.is_object() || !doc.contains("polytope") || !doc.contains("assignment"))
        input_error("input must be an object with polytope and assignment");

    PolytopeHandle p;
    check(cobord_polytope_from_json(doc["polytope"].dump().c_str(), &p.handle));
    AssignmentHandle asg;
    check(cobord_assignment_from_json(doc["assignment"].dump().c_str(), &asg.handle));

    Doc report;
    std::string headline;
    if (doc.contains("exceptional")) {
        if (!doc["exceptional"].is_array())
            input_error("exceptional must be an array of facet ids");
        std::vector<std::string> marked;
        for (const auto& id : doc["exceptional"]) {
            if (!id.is_string()) input_error("exceptional entries must be strings");
            marked.push_back(id.get<std::string>());
        }
        std::vector<const char*> raw;
        raw.reserve(marked.size());
        for (const auto& id : marked) raw.push_back(id.c_str());

        int mode = COBORD_ISOTROPY_SARKAR;
        if (doc.contains("mode")) {
            const std::string m = doc["mode"].get<std::string>();
            if (m == "independence")
                mode = COBORD_ISOTROPY_INDEPENDENCE;
            else if (m == "sarkar")
                mode = COBORD_ISOTROPY_SARKAR;
            else
                input_error("mode must be 'independence' or 'sarkar'");
        }
        check(cobord_validate_isotropy(p.handle, raw.data(), raw.size(), asg.handle, mode,
                                       &report.handle));
        headline = "isotropy";
    } else {
        check(cobord_check_characteristic(p.handle, asg.handle, &report.handle));
        headline = "characteristic";
    }

    if (use_json()) {
        emit(report.json().dump(2), out_path);
    } else {
        std::string text = headline + ": " + (report.pass() ? "PASS" : "FAIL");
        const njson r = report.json();
        if (!report.pass() && r.contains("witness_vertex") && !r["witness_vertex"].is_null())
            text += " at vertex " + r["witness_vertex"].dump();
        if (!report.pass() && r.contains("witness_det") && !r["witness_det"].is_null())
            text += " det=" + cell(r["witness_det"]);
        if (!report.pass() && r.contains("detail") && r["detail"].is_string() &&
            !r["detail"].get<std::string>().empty())
            text += " (" + r["detail"].get<std::string>() + ")";
        emit(text, out_path);
    }
    return report.pass() ? kExitPass : kExitCheckFailed;
}

int run_glequiv(const std::string& input, const std::string& out_path) {
    const njson doc = load_json_file(input);
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("b"))
        input_error("input must be an object with assignments a and b");

    AssignmentHandle a, b;
    check(cobord_assignment_from_json(doc["a"].dump().c_str(), &a.handle));
    check(cobord_assignment_from_json(doc["b"].dump().c_str(), &b.handle));
    const std::string blocks = doc.contains("blocks") ? doc["blocks"].dump() : "[]";
    const bool allow_sign = doc.contains("allow_sign") && doc["allow_sign"].is_boolean() &&
                            doc["allow_sign"].get<bool>();

    Doc report;
    check(cobord_gl_equivalent(a.handle, b.handle, blocks.c_str(), allow_sign ? 1 : 0,
                               &report.handle));
    if (use_json()) {
        emit(report.json().dump(2), out_path);
    } else if (report.pass()) {
        const njson w = report.json()["witness"];
        std::string text = "glequiv: FOUND\n  U = " + w["U"].dump() +
                           "\n  sigma = " + w["sigma"].dump() + "\n  signs = " + w["signs"].dump();
        emit(text, out_path);
    } else {
        emit("glequiv: NOT FOUND", out_path);
    }
    return report.pass() ? kExitPass : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact complex-bordism invariants of projective bundles over CP^1"};
    app.require_subcommand(1);
    app.fallthrough(false);

    try {
        format_flag = default_format();
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitInputError;
    }

    // chern
    ChernArgs chern_args;
    CLI::App* chern = app.add_subcommand("chern", "Chern numbers of P^n(a)");
    chern->add_option("--n", chern_args.n, "complex dimension n")->required();
    chern->add_option("--a", chern_args.a, "twisting degree a");
    chern->add_option("--structure", chern_args.structure, "standard | twisted");
    chern->add_option("--partition", chern_args.partition, "single partition, e.g. 2,1");
    chern->add_option("--out", chern_args.out_path, "write output to file");
    chern->add_option("--format", format_flag, "table | json");

    // verify
    CLI::App* verify = app.add_subcommand("verify", "verify bordism identities");
    verify->require_subcommand(1);
    VerifyArgs verify_args;
    auto add_verify_common = [&](CLI::App* sub, bool with_b) {
        sub->add_option("--n", verify_args.n, "complex dimension n")->required();
        sub->add_option("--a", verify_args.a, "twisting degree a");
        sub->add_option("--a-range", verify_args.a_range, "inclusive range lo..hi");
        if (with_b) {
            sub->add_option("--b", verify_args.b, "twisting degree b");
            sub->add_option("--b-range", verify_args.b_range, "inclusive range lo..hi");
        }
        sub->add_option("--out", verify_args.out_path, "write output to file");
        sub->add_option("--format", format_flag, "table | json");
    };
    CLI::App* independence =
        verify->add_subcommand("independence", "ring Chern numbers match the closed form");
    add_verify_common(independence, false);
    CLI::App* twisted_null =
        verify->add_subcommand("twisted-null", "twisted Chern numbers vanish");
    add_verify_common(twisted_null, false);
    CLI::App* triple = verify->add_subcommand("triple", "triple bordism relation");
    add_verify_common(triple, true);
    CLI::App* gluing = verify->add_subcommand("gluing", "gluing triple and signed Chern sums");
    add_verify_common(gluing, true);

    // hexprism
    HexArgs hex_args;
    CLI::App* hexprism = app.add_subcommand("hexprism", "hexagon-prism bordism certificate");
    hexprism->add_option("--n", hex_args.n, "complex dimension n (>= 2)")->required();
    hexprism->add_option("--a", hex_args.a, "twisting degree a");
    hexprism->add_option("--b", hex_args.b, "twisting degree b");
    hexprism->add_option("--out", hex_args.out_path, "certificate file path");
    hexprism->add_option("--format", format_flag, "table | json");

    // charfun validate
    CLI::App* charfun = app.add_subcommand("charfun", "characteristic/isotropy checks");
    charfun->require_subcommand(1);
    std::string charfun_input, charfun_out;
    CLI::App* charfun_validate =
        charfun->add_subcommand("validate", "validate a facet vector assignment");
    charfun_validate->add_option("--input", charfun_input, "input JSON file")->required();
    charfun_validate->add_option("--out", charfun_out, "write output to file");
    charfun_validate->add_option("--format", format_flag, "table | json");

    // glequiv
    std::string glequiv_input, glequiv_out;
    CLI::App* glequiv = app.add_subcommand("glequiv", "GL_n(Z)-equivalence of assignments");
    glequiv->add_option("--input", glequiv_input, "input JSON file")->required();
    glequiv->add_option("--out", glequiv_out, "write output to file");
    glequiv->add_option("--format", format_flag, "table | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (chern->parsed()) return run_chern(chern_args);
        if (independence->parsed()) return run_verify_independence(verify_args);
        if (twisted_null->parsed()) return run_verify_twisted_null(verify_args);
        if (triple->parsed()) return run_verify_pairwise(verify_args, false);
        if (gluing->parsed()) return run_verify_pairwise(verify_args, true);
        if (hexprism->parsed()) return run_hexprism(hex_args);
        if (charfun_validate->parsed()) return run_charfun_validate(charfun_input, charfun_out);
        if (glequiv->parsed()) return run_glequiv(glequiv_input, glequiv_out);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    std::cerr << "error: no subcommand\n";
    return kExitInputError;
}
