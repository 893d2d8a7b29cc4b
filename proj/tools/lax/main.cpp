#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lax/acceptance.hpp"
#include "lax/coproduct.hpp"
#include "lax/errors.hpp"
#include "lax/gt.hpp"
#include "lax/lax_rational.hpp"
#include "lax/lax_trig.hpp"
#include "lax/rtt.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lax;

enum Exit : int { kOk = 0, kIdentityFailed = 1, kUsage = 2 };

// Thrown for bad flag combinations found after CLI11 has parsed the line.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::vector<std::string> divisors;
    std::string matrix_path;
    std::string mode;  // empty: whatever the divisor file says
    std::string out;
    std::string format = "text";
    bool raw = false;
    int order = 0;
    int point = 1;
    std::string direction = "infinity";
    std::string kind = "rational";
    int n = 2;
    std::string young;
};

Divisor load_divisor(const std::string& path, const std::string& mode) {
    std::string text = slurp(path);
    if (!mode.empty()) {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(path + ": " + e.what());
        }
        j["mode"] = mode;
        if (mode == "rational") j["zero"] = nullptr;
        text = j.dump();
    }
    return Divisor::from_json(text);
}

Divisor only_divisor(const Options& o) {
    if (o.divisors.size() != 1) throw UsageError("exactly one --divisor is required");
    return load_divisor(o.divisors.front(), o.mode);
}

// Writes to --out when given, otherwise to stdout. The format follows the
// --out extension unless --format was set explicitly.
class Sink {
public:
    explicit Sink(const Options& o) : path_(o.out), format_(o.format) {
        if (format_ == "text" && path_.size() > 4) {
            const std::string ext = path_.substr(path_.rfind('.') == std::string::npos ? 0 : path_.rfind('.'));
            if (ext == ".json") format_ = "json";
            if (ext == ".tex") format_ = "latex";
        }
    }
    const std::string& format() const { return format_; }

    void emit(const std::string& text) const {
        if (path_.empty()) {
            std::cout << text << (text.empty() || text.back() != '\n' ? "\n" : "");
            return;
        }
        std::ofstream out(path_);
        if (!out) throw UsageError("cannot write " + path_);
        out << text << (text.empty() || text.back() != '\n' ? "\n" : "");
    }

    void matrix(const OpMatrix& m, const Signature& sig) const {
        if (format_ == "json") emit(matrix_to_json(m, sig));
        else if (format_ == "latex") emit(to_latex(m));
        else emit(m.to_string());
    }

private:
    std::string path_;
    std::string format_;
};

std::string verdict(bool ok) { return ok ? "pass" : "FAIL"; }

// ---------------------------------------------------------------- commands

int cmd_build(const Options& o) {
    const Divisor d = only_divisor(o);
    const Sink sink(o);
    if (d.mode() == Mode::Rational) {
        LaxMatrix t = build_lax(d);
        if (!o.raw) t = normalize_and_check_polynomial(t);
        sink.matrix(t.T, signature_of(t.divisor));
    } else {
        TrigLaxMatrix t = build_lax_trig(d);
        if (!o.raw) t = normalize_and_check_polynomial_trig(t);
        sink.matrix(t.T, signature_of(t.divisor));
    }
    return kOk;
}

int cmd_linear(const Options& o) {
    const Divisor d = only_divisor(o);
    const OpMatrix t = d.mode() == Mode::Rational ? build_linear_lax(d).T : build_linear_lax_trig(d).T;
    Sink(o).matrix(t, signature_of(d));
    return kOk;
}

int cmd_verify_rtt(const Options& o) {
    OpMatrix t;
    Mode mode = Mode::Rational;
    if (!o.matrix_path.empty()) {
        if (!o.divisors.empty()) throw UsageError("--matrix and --divisor are exclusive");
        ParsedMatrix parsed = matrix_from_json(slurp(o.matrix_path));
        t = parsed.matrix;
        mode = parsed.signature.mode;
    } else {
        const Divisor d = only_divisor(o);
        mode = d.mode();
        t = mode == Mode::Rational ? normalize_and_check_polynomial(build_lax(d)).T
                                   : normalize_and_check_polynomial_trig(build_lax_trig(d)).T;
    }
    if (!o.mode.empty() && o.mode != to_string(mode)) throw UsageError("--mode disagrees with the matrix signature");
    const RttReport rep = verify_rtt(t, mode == Mode::Rational ? RKind::Rational : RKind::Trig);
    const Sink sink(o);
    if (sink.format() == "json") {
        sink.emit(rep.to_json());
    } else {
        std::string text = "RTT " + verdict(rep.ok) + " (" + std::to_string(rep.components) + " components)\n";
        for (const auto& f : rep.failures)
            text += "  component (" + std::to_string(f.i) + "," + std::to_string(f.k) + "),(" + std::to_string(f.j) +
                    "," + std::to_string(f.l) + "): " + f.difference + "\n";
        sink.emit(text);
    }
    return rep.ok ? kOk : kIdentityFailed;
}

int cmd_yang_baxter(const Options& o) {
    RKind kind;
    if (o.kind == "rational") kind = RKind::Rational;
    else if (o.kind == "trig") kind = RKind::Trig;
    else kind = RKind::Finite;
    const bool ok = check_yang_baxter(kind, o.n);
    Sink(o).emit("Yang-Baxter (" + o.kind + ", n = " + std::to_string(o.n) + "): " + verdict(ok));
    return ok ? kOk : kIdentityFailed;
}

int cmd_qdet(const Options& o) {
    const Divisor d = only_divisor(o);
    RatFun value, closed;
    bool consistent = true;
    if (d.mode() == Mode::Rational) {
        value = qdet_image(d);
        closed = qdet_closed_form(d);
        consistent = value == closed;
    } else {
        const RatFun image = qdet_image_trig(d);
        closed = qdet_closed_form_trig(d);
        consistent = image == closed;
        value = image;
        if (d.n() == 2) {
            // Quantum determinant of the normalized matrix itself.
            value = qdet2_trig(normalize_and_check_polynomial_trig(build_lax_trig(d)).T);
            const Poly shifted = Poly::monomial(Monomial::of(Var::v(), -2) * Monomial::of(Var::z()));
            auto at = [&](const RatFun& f) { return f.substitute({{Var::z(), shifted}}); };
            const RatFun norm = trig_normalization_factor(d);
            consistent = consistent && value == at(image) * norm * at(norm);
        }
    }
    const Sink sink(o);
    if (sink.format() == "json") {
        json j{{"qdet", value.to_string()}, {"closed_form", closed.to_string()}, {"consistent", consistent}};
        sink.emit(j.dump(2));
    } else {
        sink.emit(value.to_string() + (consistent ? "" : "\ninconsistent with the closed form " + closed.to_string()));
    }
    return consistent ? kOk : kIdentityFailed;
}

int cmd_limit(const Options& o) {
    const Divisor d = only_divisor(o);
    if (o.point < 1 || std::size_t(o.point) > d.points().size()) throw UsageError("--point is out of range");
    const auto s = std::size_t(o.point - 1);
    OpMatrix lim, want;
    Signature sig;
    if (d.mode() == Mode::Rational) {
        if (o.direction != "infinity") throw UsageError("rational points can only be sent to infinity");
        const LaxMatrix l = normalized_limit(build_lax(d), s);
        lim = l.T;
        want = build_lax(l.divisor).T;
        sig = signature_of(l.divisor);
    } else {
        const auto dir = o.direction == "zero" ? LimitDirection::ToZero : LimitDirection::ToInfinity;
        const TrigLaxMatrix l = limits_trig(build_lax_trig(d), s, dir);
        lim = l.T;
        want = build_lax_trig(l.divisor).T;
        sig = signature_of(l.divisor);
    }
    Sink(o).matrix(lim, sig);
    if (lim == want) return kOk;
    std::cerr << "limit differs from the matrix of the moved divisor\n";
    return kIdentityFailed;
}

std::vector<Divisor> all_divisors(const Options& o) {
    if (o.divisors.size() < 2) throw UsageError("at least two --divisor files are required");
    std::vector<Divisor> out;
    for (const auto& p : o.divisors) out.push_back(load_divisor(p, o.mode));
    for (const auto& d : out)
        if (d.n() != out.front().n() || d.mode() != out.front().mode())
            throw UsageError("all divisors must share n and mode");
    return out;
}

OpMatrix normalized_matrix(const Divisor& d) {
    return d.mode() == Mode::Rational ? normalize_and_check_polynomial(build_lax(d)).T
                                      : normalize_and_check_polynomial_trig(build_lax_trig(d)).T;
}

int cmd_fuse(const Options& o) {
    const auto ds = all_divisors(o);
    OpMatrix t = normalized_matrix(ds.front());
    Signature sig{ds.front().mode(), ds.front().n(), {ds.front().a()}};
    for (std::size_t k = 1; k < ds.size(); ++k) {
        t = fuse(t, normalized_matrix(ds[k]), unsigned(k));
        sig.a.push_back(ds[k].a());
    }
    Sink(o).matrix(t, sig);
    return kOk;
}

int cmd_coproduct(const Options& o) {
    const auto ds = all_divisors(o);
    if (ds.size() != 2) throw UsageError("coproduct takes exactly two --divisor files");
    const Mode mode = ds[0].mode();
    const OpMatrix t = coproduct(normalized_matrix(ds[0]), normalized_matrix(ds[1]));
    const RttReport rtt = verify_rtt(t, mode == Mode::Rational ? RKind::Rational : RKind::Trig);
    std::optional<CoproductReport> gens;
    if (mode == Mode::Rational) gens = o.order > 0 ? verify_coproduct_generators(ds[0], ds[1], o.order)
                                                   : verify_coproduct_generators(ds[0], ds[1]);
    const bool ok = rtt.ok && (!gens || gens->ok);
    const Sink sink(o);
    if (sink.format() == "json") {
        json j{{"ok", ok}, {"rtt", json::parse(rtt.to_json())}};
        if (gens) j["generators"] = json::parse(gens->to_json());
        sink.emit(j.dump(2));
    } else {
        std::string text = "RTT of the coproduct: " + verdict(rtt.ok) + "\n";
        if (gens)
            for (const auto& c : gens->checks)
                text += "  " + c.generator + ": " + verdict(c.ok) + (c.ok ? "" : " (" + c.difference + ")") + "\n";
        sink.emit(text);
    }
    return ok ? kOk : kIdentityFailed;
}

int cmd_degenerate(const Options& o) {
    const Divisor d = only_divisor(o);
    if (d.mode() != Mode::Trig) throw UsageError("degenerate needs a trigonometric divisor");
    const TrigLaxMatrix t = build_lax_trig(d);
    try {
        const LaxMatrix r = degenerate_to_rational(t, o.order > 0 ? o.order : 2);
        Sink(o).matrix(r.T, signature_of(r.divisor));
        return kOk;
    } catch (const MismatchWithRational& e) {
        std::cerr << e.what() << "\n";
        return kIdentityFailed;
    } catch (const NegativeEpsPower& e) {
        std::cerr << e.what() << "\n";
        return kIdentityFailed;
    }
}

std::vector<int> parse_young(const std::string& text) {
    std::vector<int> rows;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            rows.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("--young expects comma-separated integers, got '" + text + "'");
        }
    }
    return rows;
}

int cmd_gt_compare(const Options& o) {
    const GTReport rep = gauge_and_compare(parse_young(o.young), o.n);
    const Sink sink(o);
    if (sink.format() == "json") {
        sink.emit(rep.to_json());
    } else {
        std::string text = "Gelfand-Tsetlin comparison: " + verdict(rep.ok) + "\n";
        for (const auto& e : rep.entries) {
            text += "  (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") " + verdict(e.ok) + "\n";
            text += "    gauged:   " + e.gauged + "\n";
            if (!e.ok) text += "    expected: " + e.expected + "\n";
        }
        sink.emit(text);
    }
    return rep.ok ? kOk : kIdentityFailed;
}

int cmd_suite(const Options& o) {
    const auto results =
        run_acceptance_suite([](const CriterionResult& r) { std::cout << format_line(r) << std::endl; });
    const std::string table = summary_table(results);
    if (o.out.empty()) std::cout << "\n" << table;
    else Sink(o).emit(table);
    for (const auto& r : results)
        if (!r.ok) return kIdentityFailed;
    return kOk;
}

// Malformed input and unmet hypotheses are usage errors; everything else
// from the library means an identity did not hold.
bool is_input_error(const Error& e) {
    return dynamic_cast<const NotAdmissible*>(&e) || dynamic_cast<const ParseError*>(&e) ||
           dynamic_cast<const BadDiagram*>(&e) || dynamic_cast<const SizeMismatch*>(&e) ||
           dynamic_cast<const SignatureMismatch*>(&e) || dynamic_cast<const NotLinearCase*>(&e);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lax matrices for shifted Yangians and quantum affine algebras"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> modes{"rational", "trig"};
    auto with_divisor = [&](CLI::App* sub, bool many = false) {
        auto* opt = sub->add_option("--divisor", o.divisors, many ? "divisor JSON files, in tensor order"
                                                                  : "divisor JSON file");
        if (!many) opt->expected(1);
        sub->add_option("--mode", o.mode, "override the divisor's mode")->check(CLI::IsMember(modes));
        sub->add_option("--out", o.out, "output file; .json and .tex select the format");
        sub->add_option("--format", o.format, "text, json or latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        return sub;
    };

    std::map<CLI::App*, int (*)(const Options&)> handlers;
    auto* build = with_divisor(app.add_subcommand("build", "build and normalize T_D(z)"));
    build->add_flag("--raw", o.raw, "skip the normalization");
    handlers[build] = cmd_build;
    handlers[with_divisor(app.add_subcommand("linear", "linear-case closed form of T_D(z)"))] = cmd_linear;

    auto* rtt = with_divisor(app.add_subcommand("verify-rtt", "check the RTT relation"));
    rtt->add_option("--matrix", o.matrix_path, "matrix JSON written by build");
    handlers[rtt] = cmd_verify_rtt;

    auto* yb = app.add_subcommand("yang-baxter", "check the Yang-Baxter equation for an R-matrix");
    yb->add_option("--kind", o.kind)->check(CLI::IsMember({"rational", "trig", "finite"}));
    yb->add_option("--n", o.n)->check(CLI::Range(1, 4));
    handlers[yb] = cmd_yang_baxter;

    handlers[with_divisor(app.add_subcommand("qdet", "quantum determinant"))] = cmd_qdet;

    auto* limit = with_divisor(app.add_subcommand("limit", "send a finite point to zero or infinity"));
    limit->add_option("--point", o.point, "1-based index of the point")->required();
    limit->add_option("--direction", o.direction)->check(CLI::IsMember({"infinity", "zero"}));
    handlers[limit] = cmd_limit;

    handlers[with_divisor(app.add_subcommand("fuse", "monodromy product of several matrices"), true)] = cmd_fuse;
    auto* cop = with_divisor(app.add_subcommand("coproduct", "coproduct of two matrices with checks"), true);
    cop->add_option("--order", o.order, "extra D modes checked to vanish");
    handlers[cop] = cmd_coproduct;

    auto* degen = with_divisor(app.add_subcommand("degenerate", "trigonometric to rational degeneration"));
    degen->add_option("--order", o.order, "epsilon expansion order (default 2)");
    handlers[degen] = cmd_degenerate;

    auto* gt = app.add_subcommand("gt-compare", "compare with the Gelfand-Tsetlin formulas");
    gt->add_option("--young", o.young, "rows of blambda, e.g. \"2,1,0\"")->required();
    gt->add_option("--n", o.n)->required();
    gt->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    handlers[gt] = cmd_gt_compare;

    auto* suite = app.add_subcommand("suite", "run the acceptance battery");
    suite->add_option("--out", o.out, "write the summary table here");
    handlers[suite] = cmd_suite;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        for (const auto& [sub, run] : handlers)
            if (sub->parsed()) return run(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return is_input_error(e) ? kUsage : kIdentityFailed;
    }
    return kUsage;
}
