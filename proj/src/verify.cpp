#include "bpfib/verify.hpp"

#include <functional>
#include <future>
#include <utility>

#include "bpfib/error.hpp"
#include "bpfib/json_io.hpp"
#include "bpfib/matrixseq.hpp"
#include "bpfib/presets.hpp"
#include "bpfib/sequence.hpp"
#include "bpfib/series.hpp"
#include "bpfib/summation.hpp"

namespace bpfib {

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 11> kNames{{
    {Identity::ClosedForm, "closed_form"},
    {Identity::Determinant, "determinant"},
    {Identity::Cassini, "cassini"},
    {Identity::Binet, "binet"},
    {Identity::Gf, "gf"},
    {Identity::SumI, "sum_i"},
    {Identity::SumII, "sum_ii"},
    {Identity::Cor2, "cor2"},
    {Identity::PresetFib, "preset_fib"},
    {Identity::PresetPell, "preset_pell"},
    {Identity::PresetK, "preset_k"},
}};

std::string show(const Rational& x) { return x.str(); }
std::string show(const Mat2& m) { return to_text(m); }

/// Runs `check(n)` for n in [first, last]; a returned pair (expected, got)
/// that differs, or a thrown library error, becomes a failure.
template <typename Check>
void sweep(VerifyReport& r, std::int64_t first, std::int64_t last, Check&& check,
           const std::string& detail = {}) {
    for (std::int64_t n = first; n <= last; ++n) {
        try {
            auto [expected, got] = check(n);
            if (!(expected == got)) {
                r.failures.push_back({n, show(expected), show(got), detail});
            }
        } catch (const Error& e) {
            r.failures.push_back({n, "value", e.what(), detail});
        }
    }
}

VerifyReport make_report(Identity id, const Params& p, std::int64_t first, std::int64_t last) {
    VerifyReport r;
    r.identity = id;
    r.a = p.a();
    r.b = p.b();
    r.first = first;
    r.last = last;
    return r;
}

VerifyReport check_series(Identity id, const Params& p, std::int64_t n_max,
                          const std::vector<Mat2>& table) {
    VerifyReport r = make_report(id, p, 0, n_max);
    const MatRatFunc rf = id == Identity::Gf ? gf_matrix(p) : reciprocal_gf(p);
    const SeriesTrunc s = expand(rf, static_cast<std::size_t>(n_max + 1));
    sweep(r, 0, n_max, [&](std::int64_t n) {
        const auto i = static_cast<std::size_t>(n);
        return std::pair{table[i], s.coefficients[i]};
    });
    return r;
}

VerifyReport check_preset(Identity id, std::int64_t n_max, std::int64_t k) {
    const Preset which = id == Identity::PresetFib    ? Preset::Fibonacci
                         : id == Identity::PresetPell ? Preset::Pell
                                                      : Preset::KFibonacci;
    const Params p = preset_params(which, k);
    VerifyReport r = make_report(id, p, 0, n_max);
    const auto classical = classical_sequence(which == Preset::Fibonacci ? 1
                                              : which == Preset::Pell    ? 2
                                                                         : k,
                                              n_max);
    const QTable q(p, n_max);
    sweep(r, 0, n_max, [&](std::int64_t n) {
        return std::pair{Rational(classical[static_cast<std::size_t>(n)]), q(n)};
    });
    return r;
}

}  // namespace

std::string_view to_string(Identity id) {
    for (const auto& [key, name] : kNames) {
        if (key == id) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Identity> parse_identity(std::string_view name) {
    for (const auto& [key, text] : kNames) {
        if (text == name) {
            return key;
        }
    }
    return std::nullopt;
}

std::string VerifyReport::status() const {
    if (skipped) {
        return "skipped: " + note;
    }
    return passed() ? "passed" : "failed";
}

std::vector<Rational> weighted_sum_points(const Params& p) {
    static const std::array<Rational, 10> candidates{
        Rational{2},       Rational{-3},      Rational(1, 2), Rational(5, 3), Rational(-7, 4),
        Rational(3, 5),    Rational{5},       Rational(-2, 7), Rational(9, 2), Rational(-11, 3)};
    std::vector<Rational> points;
    for (const Rational& x : candidates) {
        if (!sum_quartic(p, x).is_zero()) {
            points.push_back(x);
            if (points.size() == 5) {
                break;
            }
        }
    }
    return points;
}

VerifyReport verify_identity(Identity id, const Params& p, std::int64_t n_max, std::int64_t k) {
    if (n_max < 4) {
        throw Error(Errc::IndexOutOfRange, "verification needs n_max >= 4");
    }
    switch (id) {
        case Identity::ClosedForm: {
            VerifyReport r = make_report(id, p, 0, n_max);
            const auto table = f_table(p, n_max);
            const QTable q(p, n_max + 1);
            sweep(r, 0, n_max, [&](std::int64_t n) {
                return std::pair{table[static_cast<std::size_t>(n)],
                                 f_closed_from(p, n, q(n - 1), q(n), q(n + 1))};
            });
            return r;
        }
        case Identity::Determinant: {
            VerifyReport r = make_report(id, p, 0, n_max);
            const auto table = f_table(p, n_max);
            sweep(r, 0, n_max, [&](std::int64_t n) {
                return std::pair{det_expected(p, n), table[static_cast<std::size_t>(n)].det()};
            });
            return r;
        }
        case Identity::Cassini: {
            VerifyReport r = make_report(id, p, 1, n_max);
            const QTable q(p, n_max + 1);
            sweep(r, 1, n_max, [&](std::int64_t n) {
                auto sides = cassini_from(p, n, q(n - 1), q(n), q(n + 1));
                return std::pair{std::move(sides.rhs), std::move(sides.lhs)};
            });
            return r;
        }
        case Identity::Binet: {
            VerifyReport r = make_report(id, p, 0, n_max);
            if (p.disc().is_zero()) {
                r.skipped = true;
                r.note = "degenerate discriminant";
                return r;
            }
            const auto table = f_table(p, n_max);
            sweep(r, 0, n_max, [&](std::int64_t n) {
                return std::pair{table[static_cast<std::size_t>(n)], f_binet(p, n)};
            });
            return r;
        }
        case Identity::Gf:
        case Identity::Cor2:
            return check_series(id, p, n_max, f_table(p, n_max));
        case Identity::SumI: {
            VerifyReport r = make_report(id, p, 1, n_max);
            const auto table = f_table(p, n_max);
            Mat2 running;
            sweep(r, 1, n_max, [&](std::int64_t n) {
                running += table[static_cast<std::size_t>(n - 1)];
                return std::pair{running, partial_sum_closed(p, n)};
            });
            return r;
        }
        case Identity::SumII: {
            VerifyReport r = make_report(id, p, 2, n_max);
            const auto table = f_table(p, n_max);
            for (const Rational& x : weighted_sum_points(p)) {
                const Rational t = inverse(x);
                // F_0 + F_1/x, then one term per n
                Mat2 running = table[0] + table[1] * t;
                Rational weight = t;
                sweep(
                    r, 2, n_max,
                    [&](std::int64_t n) {
                        weight *= t;
                        running += table[static_cast<std::size_t>(n)] * weight;
                        return std::pair{running, weighted_sum_closed(p, n, x)};
                    },
                    "x=" + x.str());
            }
            return r;
        }
        case Identity::PresetFib:
        case Identity::PresetPell:
        case Identity::PresetK:
            return check_preset(id, n_max, k);
    }
    throw Error(Errc::ParseError, "unknown identity");
}

std::vector<VerifyReport> run_all_verifications(const Params& p, std::int64_t n_max,
                                                std::int64_t k) {
    if (n_max < 4) {
        throw Error(Errc::IndexOutOfRange, "verification needs n_max >= 4");
    }
    std::vector<std::future<VerifyReport>> pending;
    pending.reserve(kAllIdentities.size());
    for (Identity id : kAllIdentities) {
        pending.push_back(std::async(std::launch::async, [id, &p, n_max, k] {
            return verify_identity(id, p, n_max, k);
        }));
    }
    std::vector<VerifyReport> reports;
    reports.reserve(pending.size());
    for (auto& f : pending) {
        reports.push_back(f.get());
    }
    return reports;
}

void to_json(nlohmann::json& j, const VerifyReport& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : r.failures) {
        nlohmann::json item{{"index", f.index}, {"expected", f.expected}, {"got", f.got}};
        if (!f.detail.empty()) {
            item["detail"] = f.detail;
        }
        failures.push_back(std::move(item));
    }
    j = nlohmann::json{{"identity", to_string(r.identity)},
                       {"params", {{"a", r.a}, {"b", r.b}}},
                       {"range", {r.first, r.last}},
                       {"status", r.status()},
                       {"passed", r.passed()},
                       {"failures", std::move(failures)}};
}

}  // namespace bpfib
