#include "bpfib/cli.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bpfib/error.hpp"
#include "bpfib/json_io.hpp"
#include "bpfib/matrixseq.hpp"
#include "bpfib/presets.hpp"
#include "bpfib/sequence.hpp"
#include "bpfib/series.hpp"
#include "bpfib/summation.hpp"
#include "bpfib/verify.hpp"

namespace bpfib::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxFailuresShown = 5;

void emit_json(std::ostream& os, const json& j) { os << j.dump() << '\n'; }

int check_flag(bool ok) { return ok ? kExitOk : kExitFailed; }

int cmd_q(const RunConfig& c, const Params& p, std::ostream& os) {
    Rational value;
    if (c.method == "fast") {
        value = q_fast(p, c.n);
    } else if (c.method == "binet") {
        value = q_binet(p, c.n);
    } else {
        value = q_recurrence(p, c.n);
    }
    if (c.format == Format::Json) {
        emit_json(os, {{"n", c.n}, {"method", c.method}, {"q", value}});
    } else {
        os << value << '\n';
    }
    return kExitOk;
}

int cmd_matrix(const RunConfig& c, const Params& p, std::ostream& os) {
    Mat2 m;
    if (c.method == "closed") {
        m = f_closed(p, c.n);
    } else if (c.method == "binet") {
        m = f_binet(p, c.n);
    } else {
        m = f_recurrence(p, c.n);
    }
    if (c.format == Format::Json) {
        emit_json(os, m);
    } else {
        os << m << '\n';
    }
    return kExitOk;
}

int cmd_det(const RunConfig& c, const Params& p, std::ostream& os) {
    const Rational det = f_det(p, c.n);
    const Rational expected = det_expected(p, c.n);
    const bool ok = det == expected;
    if (c.format == Format::Json) {
        emit_json(os, {{"n", c.n}, {"det", det}, {"expected", expected}, {"matches", ok}});
    } else {
        os << "det(F_" << c.n << ") = " << det << " (expected " << expected << ")\n";
    }
    return check_flag(ok);
}

int cmd_cassini(const RunConfig& c, const Params& p, std::ostream& os) {
    const CassiniSides s = cassini_check(p, c.n);
    const bool ok = s.lhs == s.rhs;
    if (c.format == Format::Json) {
        emit_json(os, {{"n", c.n}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"matches", ok}});
    } else {
        os << "lhs = " << s.lhs << ", rhs = " << s.rhs << '\n';
    }
    return check_flag(ok);
}

int cmd_binet(const RunConfig& c, const Params& p, std::ostream& os) {
    const Mat2 m = f_binet(p, c.n);
    const bool ok = m == f_recurrence(p, c.n);
    if (c.format == Format::Json) {
        const QuadExt alpha = quad_alpha(p);
        emit_json(os, {{"n", c.n},
                       {"disc", p.disc()},
                       {"alpha", {{"rat", alpha.rat()}, {"irr", alpha.irr()}}},
                       {"matrix", m},
                       {"matches_recurrence", ok}});
    } else {
        os << m << '\n';
    }
    return check_flag(ok);
}

int cmd_gf(const RunConfig& c, const Params& p, std::ostream& os) {
    const MatRatFunc rf = c.reciprocal ? reciprocal_gf(p) : gf_matrix(p);
    for (const Mat2& coeff : expand(rf, c.order).coefficients) {
        emit_json(os, coeff);
    }
    return kExitOk;
}

void print_sum(const RunConfig& c, const SumReport& r, std::ostream& os) {
    if (c.format == Format::Json) {
        emit_json(os, r);
    } else {
        os << "n = " << r.n << "\ndirect = " << r.direct << "\nclosed = " << r.closed
           << "\nmatches = " << (r.matches ? "true" : "false") << '\n';
    }
}

int cmd_sum(const RunConfig& c, const Params& p, std::ostream& os) {
    const SumReport r = sum_report(p, c.n);
    print_sum(c, r, os);
    return check_flag(r.matches);
}

int cmd_wsum(const RunConfig& c, const Params& p, std::ostream& os) {
    const SumReport r = weighted_sum_report(p, c.n, *c.x);
    print_sum(c, r, os);
    return check_flag(r.matches);
}

int cmd_verify(const RunConfig& c, const Params& p, std::ostream& os) {
    std::vector<VerifyReport> reports;
    if (c.identity == "all") {
        reports = run_all_verifications(p, c.n_max, c.k);
    } else {
        reports.push_back(verify_identity(*parse_identity(c.identity), p, c.n_max, c.k));
    }
    bool all_ok = true;
    for (const auto& r : reports) {
        all_ok = all_ok && r.passed();
    }
    if (c.format == Format::Json) {
        emit_json(os, {{"passed", all_ok}, {"reports", reports}});
        return check_flag(all_ok);
    }
    for (const auto& r : reports) {
        os << to_string(r.identity) << "  a=" << r.a << " b=" << r.b << "  [" << r.first << ", "
           << r.last << "]  " << r.status() << '\n';
        for (std::size_t i = 0; i < r.failures.size() && i < kMaxFailuresShown; ++i) {
            const auto& f = r.failures[i];
            os << "  n=" << f.index << (f.detail.empty() ? "" : " " + f.detail)
               << ": expected " << f.expected << ", got " << f.got << '\n';
        }
        if (r.failures.size() > kMaxFailuresShown) {
            os << "  ... " << r.failures.size() - kMaxFailuresShown << " more\n";
        }
    }
    return check_flag(all_ok);
}

int cmd_preset(const RunConfig& c, std::ostream& os, std::ostream& err) {
    const Preset which = *parse_preset(c.which);
    const Params p = preset_params(which, c.k);
    const Rational value = q_recurrence(p, c.n);
    const auto bad = preset_mismatches(which, c.n, c.k);
    if (c.format == Format::Json) {
        emit_json(os, {{"preset", to_string(which)},
                       {"a", p.a()},
                       {"b", p.b()},
                       {"n", c.n},
                       {"q", value},
                       {"classical_agrees", bad.empty()}});
    } else {
        os << value << '\n';
    }
    if (!bad.empty()) {
        err << "preset " << to_string(which) << " disagrees with the classical recurrence at n="
            << bad.front() << '\n';
    }
    return check_flag(bad.empty());
}

int dispatch(const RunConfig& c, std::ostream& os, std::ostream& err) {
    if (c.command == Command::Preset) {
        return cmd_preset(c, os, err);
    }
    const Params p = make_params(c.a, c.b);
    switch (c.command) {
        case Command::Q: return cmd_q(c, p, os);
        case Command::Matrix: return cmd_matrix(c, p, os);
        case Command::Det: return cmd_det(c, p, os);
        case Command::Cassini: return cmd_cassini(c, p, os);
        case Command::Binet: return cmd_binet(c, p, os);
        case Command::Gf: return cmd_gf(c, p, os);
        case Command::Sum: return cmd_sum(c, p, os);
        case Command::Wsum: return cmd_wsum(c, p, os);
        case Command::Verify: return cmd_verify(c, p, os);
        case Command::Preset: break;
    }
    return kExitUsage;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ostringstream buffer;
    int code = kExitOk;
    try {
        code = dispatch(config, buffer, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::InternalIrrationalResidue ? kExitFailed : kExitUsage;
    }
    out << buffer.str();
    return code;
}

namespace {

struct RawArgs {
    std::string a;
    std::string b;
    std::string x;
    std::string format = "text";
};

/// Parses a rational flag; on failure writes a message naming the flag.
std::optional<Rational> parse_flag(const std::string& flag, const std::string& text,
                                   std::ostream& err) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        err << "error: " << flag << ": " << e.what() << '\n';
        return std::nullopt;
    }
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact bi-periodic Fibonacci numbers and matrices"};
    app.require_subcommand(1);
    RunConfig config;
    RawArgs raw;

    const std::vector<std::string> formats{"text", "json"};
    const std::map<std::string, Command> names{
        {"q", Command::Q},          {"matrix", Command::Matrix}, {"det", Command::Det},
        {"cassini", Command::Cassini}, {"binet", Command::Binet}, {"gf", Command::Gf},
        {"sum", Command::Sum},      {"wsum", Command::Wsum},     {"verify", Command::Verify},
        {"preset", Command::Preset}};
    const std::map<std::string, std::string> help{
        {"q", "scalar term q_n"},
        {"matrix", "matrix term F_n"},
        {"det", "determinant of F_n against (-b/a)^eps(n)"},
        {"cassini", "both sides of the Cassini identity at n"},
        {"binet", "F_n from the Binet formula over Q[sqrt(D)]"},
        {"gf", "Maclaurin coefficients of the generating function, one JSON matrix per line"},
        {"sum", "F_0 + ... + F_{n-1}, direct and closed form"},
        {"wsum", "sum of F_k x^-k for k <= n, direct and closed form"},
        {"verify", "check identities over a range of indices"},
        {"preset", "classical special cases (a = b)"}};

    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, cmd] : names) {
        CLI::App* sub = app.add_subcommand(name, help.at(name));
        subs[name] = sub;
        sub->add_option("--format", raw.format, "text or json")
            ->check(CLI::IsMember(formats));
        if (cmd != Command::Preset) {
            sub->add_option("--a", raw.a, "parameter a, as p/q")->required();
            sub->add_option("--b", raw.b, "parameter b, as p/q")->required();
        }
    }
    subs["q"]->add_option("--n", config.n, "index (>= -1)")->required();
    subs["q"]
        ->add_option("--method", config.method, "recurrence, fast or binet")
        ->check(CLI::IsMember({"recurrence", "fast", "binet"}));
    subs["matrix"]->add_option("--n", config.n, "index (>= 0)")->required();
    subs["matrix"]
        ->add_option("--method", config.method, "recurrence, closed or binet")
        ->check(CLI::IsMember({"recurrence", "closed", "binet"}));
    for (const char* name : {"det", "cassini", "binet", "sum", "wsum"}) {
        subs[name]->add_option("--n", config.n, "index")->required();
    }
    subs["wsum"]->add_option("--x", raw.x, "nonzero evaluation point, as p/q")->required();
    subs["gf"]->add_option("--order", config.order, "number of coefficients")
        ->check(CLI::PositiveNumber);
    subs["gf"]->add_flag("--reciprocal", config.reciprocal,
                         "expand sum F_k x^-k in t = 1/x instead");
    std::vector<std::string> identities{"all"};
    for (Identity id : kAllIdentities) {
        identities.emplace_back(to_string(id));
    }
    subs["verify"]
        ->add_option("--identity", config.identity, "identity name or all")
        ->check(CLI::IsMember(identities));
    subs["verify"]->add_option("--n-max", config.n_max, "largest index checked (>= 4)");
    subs["verify"]->add_option("--k", config.k, "k for the k-Fibonacci preset check");
    subs["preset"]
        ->add_option("--which", config.which, "fibonacci, pell or k-fibonacci")
        ->required()
        ->check(CLI::IsMember({"fibonacci", "pell", "k-fibonacci"}));
    subs["preset"]->add_option("--n", config.n, "index (>= 0)")->required();
    CLI::Option* k_opt = subs["preset"]->add_option("--k", config.k, "k for k-fibonacci");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto& [name, cmd] : names) {
        if (subs[name]->parsed()) {
            config.command = cmd;
        }
    }
    config.format = raw.format == "json" ? Format::Json : Format::Text;
    if (config.method.empty()) {
        config.method = "recurrence";
    }

    if (config.command != Command::Preset) {
        auto a = parse_flag("--a", raw.a, err);
        auto b = parse_flag("--b", raw.b, err);
        if (!a || !b) {
            return kExitUsage;
        }
        if (a->is_zero() || b->is_zero()) {
            err << "error: " << (a->is_zero() ? "--a" : "--b") << " must be nonzero\n";
            return kExitUsage;
        }
        config.a = *a;
        config.b = *b;
    }
    if (config.command == Command::Wsum) {
        config.x = parse_flag("--x", raw.x, err);
        if (!config.x) {
            return kExitUsage;
        }
        if (config.x->is_zero()) {
            err << "error: --x must be nonzero\n";
            return kExitUsage;
        }
    }
    if (config.command == Command::Verify && config.n_max < 4) {
        err << "error: --n-max must be at least 4\n";
        return kExitUsage;
    }
    if (config.command == Command::Preset) {
        if (config.which == "k-fibonacci" && k_opt->count() == 0) {
            err << "error: --k is required for --which k-fibonacci\n";
            return kExitUsage;
        }
        if (config.which == "k-fibonacci" && config.k == 0) {
            err << "error: --k must be nonzero\n";
            return kExitUsage;
        }
        if (config.n < 0) {
            err << "error: --n must be >= 0\n";
            return kExitUsage;
        }
    }
    return run(config, out, err);
}

}  // namespace bpfib::cli
