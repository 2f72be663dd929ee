#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bnint/axioms.hpp"
#include "bnint/certificate.hpp"
#include "bnint/erasability.hpp"
#include "bnint/prover.hpp"
#include "bnint/rules.hpp"
#include "bnint/tables.hpp"
#include "bnint/theorems.hpp"
#include "bnint/tuple.hpp"

namespace bnint::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "plain";
    std::string output;
    std::string axiom_file;
    std::string accept = "good";
    unsigned workers = 1;

    std::vector<int> ints;  // positional tuple arguments
    int characteristic = 0;
    int rmin = 14;
    int rmax = 13;
    std::string expected;
    std::vector<std::string> disabled;
    std::string csv_path;
    std::string json_path;
    std::string cert_path;
    int bound_r = 64;
    int bound_d = 1024;
    int er_r = 0;
    std::vector<std::string> er_s, er_w;
    std::string er_file;
    bool brute = false;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

// Sends text to --output or to the stream.
void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty())
        out << text;
    else
        write_file(o.output, text);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Tuple tuple_arg(const Options& o) { return {o.ints[0], o.ints[1], o.ints[2], o.ints[3], o.ints[4]}; }

std::string compact(const Tuple& t) {
    std::ostringstream os;
    os << '(' << t.d << ',' << t.g << ',' << t.r << ',' << t.ell << ',' << t.m << ')';
    return os.str();
}

AxiomSet load_axioms(const Options& o) {
    AxiomSet ax = AxiomSet::standard();
    if (!o.axiom_file.empty()) ax.load_extra_json(read_json_file(o.axiom_file));
    return ax;
}

// ---- commands --------------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
    auto v = bn_interpolation(o.ints[0], o.ints[1], o.ints[2], Characteristic::from_int(o.characteristic));
    static const char* reasons[] = {"Generic", "SporadicException", "Char2Rational"};
    const char* reason = reasons[static_cast<int>(v.reason)];
    if (o.format == "json") {
        emit(o, out,
             dump({{"d", o.ints[0]}, {"g", o.ints[1]}, {"r", o.ints[2]}, {"char", o.characteristic},
                   {"holds", v.holds}, {"reason", reason}}));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "d,g,r,char,holds,reason\n"
           << o.ints[0] << ',' << o.ints[1] << ',' << o.ints[2] << ',' << o.characteristic << ','
           << (v.holds ? "true" : "false") << ',' << reason << '\n';
        emit(o, out, os.str());
    } else {
        emit(o, out, v.describe() + "\n");
    }
    return v.holds ? kOk : kMathException;
}

int cmd_max_points(const Options& o, std::ostream& out) {
    auto a = max_points(o.ints[0], o.ints[1], o.ints[2]);
    if (o.format == "json") {
        json j{{"d", o.ints[0]}, {"g", o.ints[1]}, {"r", o.ints[2]}, {"predicted_n", a.predicted_n},
               {"is_exception", a.is_exception}, {"exception_upper_bound", nullptr}};
        if (a.exception_upper_bound) j["exception_upper_bound"] = *a.exception_upper_bound;
        emit(o, out, dump(j));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "d,g,r,predicted_n,is_exception,exception_upper_bound\n"
           << o.ints[0] << ',' << o.ints[1] << ',' << o.ints[2] << ',' << a.predicted_n << ','
           << (a.is_exception ? "true" : "false") << ',';
        if (a.exception_upper_bound) os << *a.exception_upper_bound;
        os << '\n';
        emit(o, out, os.str());
    } else {
        std::string text = "predicted n = " + std::to_string(a.predicted_n) + "\n";
        if (a.is_exception) text += "exception: at most " + std::to_string(*a.exception_upper_bound) + " points\n";
        emit(o, out, text);
    }
    return a.is_exception ? kMathException : kOk;
}

int cmd_good(const Options& o, std::ostream& out) {
    Tuple t = tuple_arg(o);
    auto v = goodness(t);
    if (o.format == "json") {
        json fails = json::array();
        for (auto f : v.failures) fails.push_back(std::string(failure_name(f)));
        emit(o, out, dump({{"tuple", tuple_to_json(t)}, {"good", v.is_good()}, {"failures", fails}}));
    } else if (o.format == "csv") {
        std::string fails;
        for (auto f : v.failures) fails += (fails.empty() ? "" : ";") + std::string(failure_name(f));
        std::ostringstream os;
        os << "d,g,r,l,m,good,failures\n"
           << t.d << ',' << t.g << ',' << t.r << ',' << t.ell << ',' << t.m << ',' << (v.is_good() ? "true" : "false")
           << ',' << fails << '\n';
        emit(o, out, os.str());
    } else {
        emit(o, out, v.describe() + "\n");
    }
    return v.is_good() ? kOk : kMathException;
}

int cmd_delta(const Options& o, std::ostream& out) {
    Tuple t = tuple_arg(o);
    Rational q = delta(t);
    if (o.format == "json") {
        emit(o, out,
             dump({{"tuple", tuple_to_json(t)}, {"delta", q.to_string()}, {"numerator", q.num()},
                   {"denominator", q.den()}}));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "d,g,r,l,m,delta\n" << t.d << ',' << t.g << ',' << t.r << ',' << t.ell << ',' << t.m << ',' << q << '\n';
        emit(o, out, os.str());
    } else {
        emit(o, out, q.to_string() + "\n");
    }
    return kOk;
}

// Irreducible tuples grouped by r, five to a row.
std::string grid(const std::vector<Tuple>& ts) {
    std::map<int, std::vector<Tuple>> by_r;
    for (const auto& t : ts) by_r[t.r].push_back(t);
    std::ostringstream os;
    for (const auto& [r, row] : by_r) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i % 5 == 0) os << (i == 0 ? "r = " + std::string(r < 10 ? " " : "") + std::to_string(r) + ":" : "       ");
            bool last = i % 5 == 4 || i + 1 == row.size();
            os << "  ";
            if (last)
                os << compact(row[i]) << '\n';
            else
                os << std::left << std::setw(14) << compact(row[i]);
        }
    }
    return os.str();
}

int cmd_sporadic(const Options& o, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.r_max = o.rmax;
    cfg.workers = o.workers;
    cfg.axioms = load_axioms(o);
    cfg.accept = *accept_mode_from_name(o.accept);
    for (const auto& name : o.disabled) {
        auto id = rule_from_name(name);
        if (!id) throw InputError("unknown rule '" + name + "'");
        cfg.disable(*id);
    }

    std::vector<Tuple> expected = constants().sporadic30;
    if (!o.expected.empty()) expected = constants_from_json(read_json_file(o.expected)).sporadic30;
    std::set<Tuple> want;
    for (const auto& t : expected)
        if (t.r <= o.rmax) want.insert(t);

    auto rep = run_sporadic_search(cfg);
    std::set<Tuple> got(rep.irreducible.begin(), rep.irreducible.end());
    std::vector<Tuple> missing, unexpected;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(unexpected));
    const bool match = missing.empty() && unexpected.empty();

    if (!o.csv_path.empty()) write_file(o.csv_path, rep.to_csv());
    if (o.format == "json") {
        json j = rep.to_json();
        json mj = json::array(), uj = json::array();
        for (const auto& t : missing) mj.push_back(tuple_to_json(t));
        for (const auto& t : unexpected) uj.push_back(tuple_to_json(t));
        j["expected_match"] = match;
        j["missing"] = mj;
        j["unexpected"] = uj;
        emit(o, out, dump(j));
    } else if (o.format == "csv") {
        emit(o, out, rep.to_csv());
    } else {
        std::string text = grid(rep.irreducible);
        text += std::to_string(rep.irreducible.size()) + " irreducible / " + std::to_string(rep.examined) + " examined\n";
        emit(o, out, text);
    }
    if (!match) {
        for (const auto& t : missing) err << "missing:    " << compact(t) << '\n';
        for (const auto& t : unexpected) err << "unexpected: " << compact(t) << '\n';
        return kMismatch;
    }
    return kOk;
}

int cmd_thm14(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.rmin < 14 || o.rmax < o.rmin) throw InputError("need 14 <= --rmin <= --rmax");
    auto rep = verify_thm14(o.rmin, o.rmax, o.workers);
    if (o.format == "json") {
        emit(o, out, dump(rep.to_json()));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "r,box_tuples\n";
        for (const auto& [r, n] : rep.examined_per_r) os << r << ',' << n << '\n';
        emit(o, out, os.str());
    } else {
        std::ostringstream os;
        os << "r in [" << rep.r_min << ", " << rep.r_max << "]: " << rep.examined << " box tuples, "
           << rep.violators.size() << " uncovered (" << rep.skipped_delta1 << " delta = 1 tuples skipped)\n"
           << "outside the box: " << rep.outside_checked << " tuples, " << rep.outside_violators.size()
           << " without a large-parameter rule\n";
        emit(o, out, os.str());
    }
    for (const auto& t : rep.violators) err << "uncovered: " << compact(t) << '\n';
    for (const auto& t : rep.outside_violators) err << "outside, uncovered: " << compact(t) << '\n';
    return rep.ok() ? kOk : kMismatch;
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
    SearchConfig cfg;
    cfg.axioms = load_axioms(o);
    cfg.accept = *accept_mode_from_name(o.accept);
    cfg.bounds = {o.bound_r, o.bound_d};
    Certifier cert(cfg);
    Tuple t = tuple_arg(o);
    Certificate c;
    try {
        c = cert.certify(t);
    } catch (const Irreducible& e) {
        err << "irreducible: " << compact(e.tuple) << '\n';
        return kIrreducible;
    } catch (const BoundsExceeded& e) {
        throw InputError(e.what());
    }
    auto check = verify_certificate(c, cfg.axioms);
    if (!check) {
        err << "internal error: certificate failed verification: " << check.diagnostic << '\n';
        return kMismatch;
    }
    std::string doc = dump(c.to_json());
    if (!o.json_path.empty()) write_file(o.json_path, doc);
    if (o.format == "json") {
        if (o.json_path.empty()) emit(o, out, doc);
        else emit(o, out, dump({{"root", tuple_to_json(t)}, {"nodes", c.nodes.size()}, {"depth", c.depth()}}));
    } else {
        const auto& root = c.nodes.at(t);
        std::string how = root.axiom ? "axiom " + std::string(axiom_name(*root.axiom))
                                     : "rule " + std::string(rule_name(root.rule));
        std::ostringstream os;
        if (o.format == "csv")
            os << "d,g,r,l,m,nodes,depth,root\n"
               << t.d << ',' << t.g << ',' << t.r << ',' << t.ell << ',' << t.m << ',' << c.nodes.size() << ','
               << c.depth() << ',' << how << '\n';
        else
            os << compact(t) << ": " << c.nodes.size() << " nodes, depth " << c.depth() << ", root by " << how << '\n';
        emit(o, out, os.str());
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    Certificate c = Certificate::from_json(read_json_file(o.cert_path));
    auto res = verify_certificate(c, load_axioms(o));
    if (o.format == "json") {
        emit(o, out,
             dump({{"ok", res.ok()}, {"failure", std::string(verify_failure_name(res.failure))},
                   {"diagnostic", res.diagnostic}, {"nodes", c.nodes.size()}}));
    } else if (o.format == "csv") {
        emit(o, out,
             "ok,failure,nodes\n" + std::string(res.ok() ? "true" : "false") + "," +
                 std::string(verify_failure_name(res.failure)) + "," + std::to_string(c.nodes.size()) + "\n");
    } else {
        emit(o, out, res.ok() ? "ok (" + std::to_string(c.nodes.size()) + " nodes)\n"
                              : "rejected: " + std::string(verify_failure_name(res.failure)) + "\n");
    }
    if (!res.ok()) err << res.diagnostic << '\n';
    return res.ok() ? kOk : kMismatch;
}

void add_counts(ModCollection& c, const std::vector<std::string>& specs, Strength s) {
    for (const auto& spec : specs) {
        auto eq = spec.find('=');
        std::string type = spec.substr(0, eq);
        int count = 1;
        if (eq != std::string::npos) {
            try {
                std::size_t used = 0;
                count = std::stoi(spec.substr(eq + 1), &used);
                if (used != spec.size() - eq - 1 || count < 0) throw std::invalid_argument(spec);
            } catch (const std::logic_error&) {
                throw InputError("bad count in '" + spec + "'");
            }
        }
        ModType t = parse_type_name(std::string(s == Strength::Strong ? "s" : "w") + type);
        c[t] += count;
    }
}

int cmd_erasable(const Options& o, std::ostream& out) {
    ModCollection c;
    int r = o.er_r;
    if (!o.er_file.empty()) {
        auto [fc, fr] = collection_from_json(read_json_file(o.er_file));
        c = fc;
        if (r == 0) r = fr;
    }
    add_counts(c, o.er_s, Strength::Strong);
    add_counts(c, o.er_w, Strength::Weak);
    if (r < 3) throw InputError("erasable needs --r >= 3");
    auto res = is_erasable(c, r);
    if (o.brute && brute_force_erasable(c, r) != res.erasable) throw std::logic_error("search and brute force disagree");
    std::vector<std::string> names;
    for (const auto& t : res.witness) names.push_back(type_name(t));
    if (o.format == "json") {
        emit(o, out, dump({{"collection", collection_to_json(c, r)}, {"erasable", res.erasable}, {"witness", names}}));
    } else if (o.format == "csv") {
        std::string w;
        for (const auto& n : names) w += (w.empty() ? "" : " ") + n;
        emit(o, out, "r,erasable,witness\n" + std::to_string(r) + "," + (res.erasable ? "true" : "false") + "," + w + "\n");
    } else {
        std::string text = res.erasable ? "erasable" : "not erasable";
        if (!names.empty()) {
            text += "; order:";
            for (const auto& n : names) text += " " + n;
        }
        emit(o, out, text + "\n");
    }
    return res.erasable ? kOk : kMathException;
}

int cmd_dump_constants(const Options& o, std::ostream& out) {
    emit(o, out, dump(constants_to_json()));
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Arithmetic checks and reduction search for interpolation of Brill-Noether curves", "bnint"};
    app.require_subcommand(1, 1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config", "", "Read option defaults from a key=value file (flags win)");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_option("--output", o.output, "Write the main output to this file");
    app.add_option("--axioms", o.axiom_file, "JSON file of extra axiom tuples");
    app.add_option("--accept", o.accept, "Subgoal acceptance")->check(CLI::IsMember({"good", "recursive"}));
    app.add_option("--workers", o.workers, "Worker threads")->envname("BNINT_WORKERS")->check(CLI::Range(1u, 1024u));

    auto* check = app.add_subcommand("check", "Does interpolation hold for (d, g, r)?");
    check->add_option("dgr", o.ints, "d g r")->expected(3)->required();
    check->add_option("--char", o.characteristic, "Characteristic (0 or a prime)");

    auto* maxp = app.add_subcommand("max-points", "Number of general points a curve passes through");
    maxp->add_option("dgr", o.ints, "d g r")->expected(3)->required();

    auto* good = app.add_subcommand("good", "Goodness of (d, g, r, l, m)");
    good->add_option("tuple", o.ints, "d g r l m")->expected(5)->required();

    auto* del = app.add_subcommand("delta", "Exact delta of (d, g, r, l, m)");
    del->add_option("tuple", o.ints, "d g r l m")->expected(5)->required();

    auto* spor = app.add_subcommand("sporadic", "Search the sporadic region and compare with the table of 30");
    spor->add_option("--rmax", o.rmax, "Largest r searched")->check(CLI::Range(3, 40));
    spor->add_option("--expected", o.expected, "constants.json whose sporadic30 list is the expectation");
    spor->add_option("--disable-rule", o.disabled, "Leave a rule out (repeatable)");
    spor->add_option("--csv", o.csv_path, "Write every examined tuple to this CSV file");

    auto* thm = app.add_subcommand("thm14", "Check that every good box tuple with r >= 14 reduces");
    thm->add_option("--rmin", o.rmin, "Smallest r")->check(CLI::Range(14, 200));
    thm->add_option("--rmax", o.rmax, "Largest r")->required()->check(CLI::Range(14, 200));

    auto* cert = app.add_subcommand("certify", "Build a reduction certificate down to axioms");
    cert->add_option("tuple", o.ints, "d g r l m")->expected(5)->required();
    cert->add_option("--json", o.json_path, "Write the certificate here");
    cert->add_option("--bound-r", o.bound_r, "Largest r the search may visit");
    cert->add_option("--bound-d", o.bound_d, "Largest d the search may visit");

    auto* ver = app.add_subcommand("verify", "Re-check a certificate file");
    ver->add_option("certificate", o.cert_path)->required();

    auto* er = app.add_subcommand("erasable", "Decide erasability of a collection of modifications");
    er->add_option("--r", o.er_r, "Dimension r");
    er->add_option("--s", o.er_s, "Strong type and count, i,j=c (repeatable)");
    er->add_option("--w", o.er_w, "Weak type and count, i,j=c (repeatable)");
    er->add_option("--json", o.er_file, "Read the collection from a JSON file");
    er->add_flag("--brute", o.brute, "Cross-check against exhaustive permutation");

    auto* dumpc = app.add_subcommand("dump-constants", "Print the built-in tables as JSON");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return cmd_check(o, out);
        if (*maxp) return cmd_max_points(o, out);
        if (*good) return cmd_good(o, out);
        if (*del) return cmd_delta(o, out);
        if (*spor) return cmd_sporadic(o, out, err);
        if (*thm) return cmd_thm14(o, out, err);
        if (*cert) return cmd_certify(o, out, err);
        if (*ver) return cmd_verify(o, out, err);
        if (*er) return cmd_erasable(o, out);
        if (*dumpc) return cmd_dump_constants(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const CalculusError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace bnint::cli
