#include "CLI11.hpp"
#include "json.hpp"

#include "dyck/counting.hpp"
#include "dyck/partitions.hpp"
#include "dyck/paths.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// type rendered as [[part, multiplicity], ...] over the support
json type_to_json(const dyck::MultSeq& a) {
    json parts = json::array();
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        if (a.entries()[i] != 0)
            parts.push_back({static_cast<long long>(i + 1), a.entries()[i]});
    return parts;
}

std::string type_to_text(const dyck::MultSeq& a) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (a.entries()[i] == 0) continue;
        if (!first) os << " ";
        first = false;
        os << (i + 1);
        if (a.entries()[i] > 1) os << "^" << a.entries()[i];
    }
    os << ")";
    return os.str();
}

std::string rat_to_string(const dyck::BigRat& r) {
    if (dyck::is_integral(r)) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

int run_count(long long m, long long n, const std::string& method, bool terms) {
    if (m < 1 || n < 1) {
        std::cerr << "count: m and n must be >= 1\n";
        return kExitUsage;
    }
    const long long d = std::gcd(m, n);
    if (method == "coprime" && d != 1) {
        std::cerr << "count: --method coprime requires gcd(m,n)=1, got gcd=" << d << "\n";
        return kExitUsage;
    }
    if (method == "fuss" && m % n != 0) {
        std::cerr << "count: --method fuss requires m = k*n for a positive integer k\n";
        return kExitUsage;
    }
    if (method == "duchon" && (m % 2 != 0 || n % 3 != 0 || m / 2 != n / 3)) {
        std::cerr << "count: --method duchon requires (m,n) = (2l,3l)\n";
        return kExitUsage;
    }

    dyck::BigNat value;
    std::vector<std::pair<dyck::MultSeq, dyck::BigRat>> breakdown;
    if (method == "auto" || method == "main") {
        auto res = dyck::count_main(m, n);
        value = res.value;
        breakdown = std::move(res.terms);
    } else if (method == "recurrence") {
        value = dyck::count_recurrence(m, n);
    } else if (method == "coprime") {
        value = dyck::count_coprime(m, n);
    } else if (method == "fuss") {
        value = dyck::count_fuss(m / n, n);
    } else if (method == "duchon") {
        value = dyck::count_duchon(m / 2);
    } else if (method == "oracle") {
        value = dyck::count_dp(m, n, false);
    } else {
        std::cerr << "count: unknown method '" << method << "'\n";
        return kExitUsage;
    }

    std::cout << value.str() << "\n";
    if (terms) {
        if (breakdown.empty()) breakdown = dyck::count_main(m, n).terms;
        for (const auto& [a, t] : breakdown)
            std::cout << "term " << type_to_text(a) << " = " << rat_to_string(t) << "\n";
    }
    return kExitOk;
}

int run_table(long long max_m, long long max_n, const std::string& format,
              const std::string& out_path) {
    if (max_m < 1 || max_n < 1) {
        std::cerr << "table: bounds must be >= 1\n";
        return kExitUsage;
    }
    std::ostringstream os;
    if (format == "csv") {
        os << "m,n,value\n";
        for (long long m = 1; m <= max_m; ++m)
            for (long long n = 1; n <= max_n; ++n)
                os << m << "," << n << "," << dyck::count_main(m, n).value.str() << "\n";
    } else if (format == "json") {
        json arr = json::array();
        for (long long m = 1; m <= max_m; ++m)
            for (long long n = 1; n <= max_n; ++n)
                arr.push_back({{"m", m},
                               {"n", n},
                               {"method", "main"},
                               {"value", dyck::count_main(m, n).value.str()}});
        os << arr.dump(2) << "\n";
    } else {
        std::cerr << "table: format must be csv or json\n";
        return kExitUsage;
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "table: cannot open " << out_path << "\n";
            return kExitUsage;
        }
        f << os.str();
    }
    return kExitOk;
}

int run_census(long long m, long long n, const std::string& format) {
    if (m < 1 || n < 1 || m + n > dyck::enumeration_limit()) {
        std::cerr << "census: need m,n >= 1 and m+n <= " << dyck::enumeration_limit()
                  << " (set DYCK_ENUM_LIMIT to raise)\n";
        return kExitUsage;
    }
    if (format != "json") {
        std::cerr << "census: format must be json\n";
        return kExitUsage;
    }
    const auto records = dyck::census(m, n);
    dyck::BigNat total = 0;
    json arr = json::array();
    for (const auto& rec : records) {
        arr.push_back({{"type", type_to_json(rec.type)},
                       {"period", rec.period},
                       {"count", rec.count.str()}});
        total += rec.count;
    }
    if (total != dyck::count_main(m, n).value) {
        std::cerr << "census: total disagrees with C(m,n)\n";
        return kExitCheckFailed;
    }
    json out{{"m", m}, {"n", n}, {"records", arr}, {"total", total.str()}};
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

// ---- verify suites -----------------------------------------------------

struct Reporter {
    long long passed = 0;
    long long failed = 0;
    void check(bool ok, const std::string& name) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            std::cout << "FAIL " << name << "\n";
        }
    }
    void section(const std::string& name) { std::cout << "suite " << name << "\n"; }
};

void verify_cycle_lemma(Reporter& rep, long long limit) {
    rep.section("cycle-lemma");
    for (long long m = 1; m < limit; ++m)
        for (long long n = 1; m + n <= limit; ++n) {
            const long long d = std::gcd(m, n);
            bool class_law = true, dyck_law = true, canon_law = true;
            for (const dyck::PathWord& p : dyck::enumerate_paths(m, n)) {
                const long long per = dyck::period(p);
                const auto cls = dyck::rotation_class(p);
                if (static_cast<long long>(cls.size()) != per ||
                    (m + n) % per != 0 || d % ((m + n) / per) != 0)
                    class_law = false;
                long long dyck_count = 0;
                for (const auto& q : cls)
                    if (dyck::is_dyck(q)) ++dyck_count;
                if (dyck_count < 1 || (d == 1 && dyck_count != 1)) dyck_law = false;
                const auto canon = dyck::canonical_dyck(p);
                if (!dyck::is_dyck(canon) || cls.count(canon) != 1) canon_law = false;
            }
            std::ostringstream tag;
            tag << "(" << m << "," << n << ")";
            rep.check(class_law, "class-size/period law " + tag.str());
            rep.check(dyck_law, "Dyck representative law " + tag.str());
            rep.check(canon_law, "canonicalization law " + tag.str());
            if (d == 1)
                rep.check(dyck::binomial(m + n, n) ==
                              dyck::BigNat(m + n) * dyck::count_coprime(m, n),
                          "coprime closed form " + tag.str());
        }
}

void verify_hh(Reporter& rep, long long limit) {
    rep.section("hh");
    // all c with support in indices 1..4 and entries <= limit
    std::vector<long long> c(4, 0);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == c.size()) {
            const dyck::MultSeq cs(c);
            if (cs.size() == 0) return;
            bool ok = true;
            for (long long j = 0; j <= cs.size() - 1; ++j)
                if (!dyck::check_hh_identity(cs, j)) ok = false;
            rep.check(ok, "hh identity c=" + type_to_text(cs));
            return;
        }
        for (long long v = 0; v <= limit; ++v) {
            c[idx] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
}

void verify_chad_ahad(Reporter& rep, long long limit, bool with_a) {
    rep.section(with_a ? "ahad" : "chad");
    for (long long p = 1; p <= limit; ++p)
        for (long long q = 1; q <= limit; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long d = 1; d * (p + q) <= limit; ++d) {
                std::ostringstream tag;
                tag << "p=" << p << " q=" << q << " d=" << d;
                if (with_a) {
                    dyck::BigRat sum = 0;
                    for (const dyck::MultSeq& a : dyck::sequences_with_norm(d))
                        sum += dyck::BigRat(dyck::h(a) * dyck::d_power(p, q, a)) /
                               dyck::BigRat(a.size());
                    rep.check(sum == dyck::a_value(d * p, d * q), "ahaD " + tag.str());
                } else {
                    dyck::BigNat sum = 0;
                    for (const dyck::MultSeq& a : dyck::sequences_with_norm(d))
                        sum += dyck::h(a) * dyck::d_power(p, q, a);
                    rep.check(sum == dyck::count_dp(d * p, d * q, false),
                              "chaD " + tag.str());
                }
            }
        }
}

void verify_duchon(Reporter& rep, long long limit) {
    rep.section("duchon");
    for (long long l = 1; l <= limit; ++l) {
        bool ok = true;
        try {
            const auto v = dyck::count_duchon(l);  // self-checks against main
            if (l <= 3) ok = (v == dyck::count_dp(2 * l, 3 * l, false));
        } catch (const std::logic_error&) {
            ok = false;
        }
        rep.check(ok, "duchon l=" + std::to_string(l));
    }
}

void verify_catalan(Reporter& rep, long long limit) {
    rep.section("catalan");
    for (long long n = 1; n <= limit; ++n) {
        bool ok = true;
        for (long long i = 1; i <= n; ++i)
            if (!dyck::check_catalan_reduction(n, i)) ok = false;
        rep.check(ok, "catalan reduction n=" + std::to_string(n));
    }
}

void verify_fuss(Reporter& rep, long long limit) {
    rep.section("fuss");
    for (long long k = 1; k <= 3; ++k)
        for (long long n = 1; n <= limit; ++n) {
            std::ostringstream tag;
            tag << "k=" << k << " n=" << n;
            rep.check(dyck::check_fuss_recurrence(k, n), "fuss recurrence " + tag.str());
            rep.check(dyck::count_fuss(k, n) == dyck::count_dp(k * n, n, false),
                      "fuss closed form " + tag.str());
        }
}

void verify_oracle(Reporter& rep, long long limit) {
    rep.section("oracle");
    for (long long m = 1; m <= limit; ++m)
        for (long long n = 1; n <= limit; ++n) {
            const auto oracle = dyck::count_dp(m, n, false);
            std::ostringstream tag;
            tag << "(" << m << "," << n << ")";
            rep.check(dyck::count_main(m, n).value == oracle, "main vs DP " + tag.str());
            rep.check(dyck::count_recurrence(m, n) == oracle,
                      "recurrence vs DP " + tag.str());
        }
}

int run_verify(const std::string& suite, long long limit) {
    Reporter rep;
    const bool all = suite == "all";
    if (all || suite == "cycle-lemma") verify_cycle_lemma(rep, limit > 0 ? limit : 12);
    if (all || suite == "hh") verify_hh(rep, limit > 0 ? limit : 3);
    if (all || suite == "chad") verify_chad_ahad(rep, limit > 0 ? limit : 12, false);
    if (all || suite == "ahad") verify_chad_ahad(rep, limit > 0 ? limit : 12, true);
    if (all || suite == "duchon") verify_duchon(rep, limit > 0 ? limit : 4);
    if (all || suite == "catalan") verify_catalan(rep, limit > 0 ? limit : 30);
    if (all || suite == "fuss") verify_fuss(rep, limit > 0 ? limit : 5);
    if (all || suite == "oracle") verify_oracle(rep, limit > 0 ? limit : 10);
    std::cout << "checks passed: " << rep.passed << ", failed: " << rep.failed << "\n";
    return rep.failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting of generalized Dyck paths to (m,n)"};
    app.require_subcommand(1);

    long long m = 0, n = 0, max_m = 0, max_n = 0, limit = 0;
    std::string method = "auto", format = "csv", out_path, suite = "all";
    bool terms = false;

    auto* count = app.add_subcommand("count", "Count Dyck paths to (m,n)");
    count->add_option("m", m, "x-extent")->required();
    count->add_option("n", n, "y-extent")->required();
    count->add_option("--method", method,
                      "auto|main|recurrence|coprime|fuss|duchon|oracle");
    count->add_flag("--terms", terms, "print the per-partition term breakdown");

    auto* table = app.add_subcommand("table", "Emit a grid of C(m,n)");
    table->add_option("--max-m", max_m, "largest m")->required();
    table->add_option("--max-n", max_n, "largest n")->required();
    table->add_option("--format", format, "csv|json");
    table->add_option("--out", out_path, "write to file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run identity/oracle check suites");
    verify->add_option("--suite", suite,
                       "all|cycle-lemma|hh|chad|ahad|duchon|catalan|fuss|oracle");
    verify->add_option("--limit", limit, "suite-specific size bound");

    auto* census = app.add_subcommand("census", "Exhaustive (type, period) census");
    census->add_option("m", m, "x-extent")->required();
    census->add_option("n", n, "y-extent")->required();
    std::string census_format = "json";
    census->add_option("--format", census_format, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(m, n, method, terms);
        if (table->parsed()) return run_table(max_m, max_n, format, out_path);
        if (verify->parsed()) return run_verify(suite, limit);
        if (census->parsed()) return run_census(m, n, census_format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "cross-check failure: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
