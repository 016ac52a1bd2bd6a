// sdeg: exact subgroup-commutativity-degree tables and audits for the
// nonabelian groups Z_p^{n-1} x| Z_q.

#include "sdeg/cayley.hpp"
#include "sdeg/gfspace.hpp"
#include "sdeg/numbers.hpp"
#include "sdeg/pgrouplat.hpp"
#include "sdeg/qcount.hpp"
#include "sdeg/selftest.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sdeg;

namespace {

constexpr const char* kVersion = "sdeg-1.0";
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitInvariant = 3;

// Trend tables beyond this n are truncated with a warning row.
constexpr int kTrendMaxN = 40;

struct Output {
    std::string format = "text";
    std::string path;       // empty = stdout
    std::string cache_dir;  // empty = caching disabled
};

void write_atomic(const fs::path& target, const std::string& content) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out << content;
    }
    fs::rename(tmp, target);
}

void emit(const Output& out, const std::string& content) {
    if (out.path.empty()) {
        std::cout << content;
    } else {
        write_atomic(out.path, content);
    }
}

std::optional<std::string> cache_lookup(const Output& out, const std::string& key) {
    if (out.cache_dir.empty()) return std::nullopt;
    const fs::path file = fs::path(out.cache_dir) / (key + ".json");
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.at("version") != kVersion) return std::nullopt;
        return j.at("output").get<std::string>();
    } catch (...) {
        return std::nullopt;
    }
}

void cache_store(const Output& out, const std::string& key, const std::string& content) {
    if (out.cache_dir.empty()) return;
    std::error_code ec;
    fs::create_directories(out.cache_dir, ec);
    if (ec) return;
    json j;
    j["version"] = kVersion;
    j["output"] = content;
    write_atomic(fs::path(out.cache_dir) / (key + ".json"), j.dump());
}

// Runs the producer under the cache, emits, returns exit code.
template <typename F>
int cached_emit(const Output& out, const std::string& key, F&& produce) {
    if (auto hit = cache_lookup(out, key)) {
        emit(out, *hit);
        return kExitOk;
    }
    const std::string content = produce();
    cache_store(out, key, content);
    emit(out, content);
    return kExitOk;
}

std::string render_counts(const std::string& format, std::uint32_t p, int n, bool with_poly) {
    const Int P(p);
    std::vector<Int> row(n + 1);
    for (int k = 0; k <= n; ++k) row[k] = qcount::gaussian_rec(n, P, k);
    const Int total = qcount::total_subgroups(n, P);
    const auto poly = qcount::poly_f(n);

    if (format == "json") {
        json j;
        j["p"] = p;
        j["n"] = n;
        json rows = json::array();
        for (int k = 0; k <= n; ++k) rows.push_back({{"k", k}, {"count", row[k].str()}});
        j["rows"] = rows;
        j["total"] = total.str();
        if (with_poly) {
            json coeffs = json::array();
            for (const auto& c : poly.coeffs) coeffs.push_back(c.str());
            j["poly"] = coeffs;
        }
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "k,count\n";
        for (int k = 0; k <= n; ++k) os << k << "," << row[k].str() << "\n";
        os << "total," << total.str() << "\n";
        if (with_poly)
            for (std::size_t i = 0; i < poly.coeffs.size(); ++i)
                os << "poly_" << i << "," << poly.coeffs[i].str() << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "Subgroups of Z_" << p << "^" << n << " by order exponent k:\n";
    for (int k = 0; k <= n; ++k) os << "  k=" << k << ": " << row[k].str() << "\n";
    os << "total: " << total.str() << "\n";
    if (with_poly) {
        os << "f_" << n << "(X) coefficients (ascending): ";
        for (std::size_t i = 0; i < poly.coeffs.size(); ++i)
            os << (i ? " " : "") << poly.coeffs[i].str();
        os << "\n";
    }
    return os.str();
}

json params_json(const plat::PGroupParams& params) {
    return {{"p", params.p}, {"n", params.n}, {"q", params.q}, {"r", params.r}};
}

std::string render_audit(const std::string& format, const plat::AuditReport& rep) {
    if (format == "json") {
        json j;
        j["params"] = params_json(rep.params);
        j["sd"] = ratio_string(rep.sd_value);
        j["bound_rhs"] = ratio_string(rep.bound_value);
        j["sd_le_bound"] = rep.sd_le_bound;
        json per_k = json::array();
        for (const auto& row : rep.per_k)
            per_k.push_back({{"k", row.k},
                             {"c_max", row.c_max.str()},
                             {"c_bound", row.c_bound.str()},
                             {"ok", row.ok}});
        j["per_k"] = per_k;
        j["eq4_exact"] = rep.eq4_lhs_exact.str();
        j["eq4_majorant"] = rep.eq4_paper_majorant.str();
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "field,value\n";
        os << "sd," << ratio_string(rep.sd_value) << "\n";
        os << "bound_rhs," << ratio_string(rep.bound_value) << "\n";
        os << "sd_le_bound," << (rep.sd_le_bound ? "true" : "false") << "\n";
        for (const auto& row : rep.per_k)
            os << "c_max_k" << row.k << "," << row.c_max.str() << " (bound " << row.c_bound.str()
               << " ok=" << (row.ok ? "true" : "false") << ")\n";
        os << "eq4_exact," << rep.eq4_lhs_exact.str() << "\n";
        os << "eq4_majorant," << rep.eq4_paper_majorant.str() << "\n";
        return os.str();
    }
    std::ostringstream os;
    os << "audit G_{" << rep.params.n << "," << rep.params.p << "} (q=" << rep.params.q
       << ", r=" << rep.params.r << ")\n";
    os << "  sd        = " << ratio_string(rep.sd_value) << " ~ " << decimal_string(rep.sd_value)
       << "\n";
    os << "  bound rhs = " << ratio_string(rep.bound_value) << " ~ "
       << decimal_string(rep.bound_value) << "\n";
    os << "  sd <= bound: " << (rep.sd_le_bound ? "yes" : "no") << "\n";
    for (const auto& row : rep.per_k)
        os << "  k=" << row.k << ": max |C(K)| = " << row.c_max.str() << ", bound "
           << row.c_bound.str() << (row.ok ? " (ok)" : " (exceeded)") << "\n";
    os << "  sum of mixed |C(K)| = " << rep.eq4_lhs_exact.str() << ", majorant "
       << rep.eq4_paper_majorant.str() << "\n";
    return os.str();
}

std::string render_trend(const std::string& format, std::uint32_t p,
                         const std::vector<plat::TrendRow>& rows, bool truncated) {
    if (format == "json") {
        json j;
        j["p"] = p;
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back({{"n", row.n},
                           {"a_ratio", ratio_string(row.a_ratio)},
                           {"a_ratio_dec", decimal_string(row.a_ratio)},
                           {"p_pow", ratio_string(row.p_pow)},
                           {"p_pow_dec", decimal_string(row.p_pow)},
                           {"sd", ratio_string(row.sd)},
                           {"sd_dec", decimal_string(row.sd)}});
        j["rows"] = arr;
        if (truncated) j["warning"] = "budget exceeded; table truncated at n=" +
                                      std::to_string(kTrendMaxN);
        return j.dump(2) + "\n";
    }
    // csv is the stable contract; text shares it
    std::ostringstream os;
    os << "n,a_ratio,a_ratio_dec,p_pow,p_pow_dec,sd,sd_dec\n";
    for (const auto& row : rows)
        os << row.n << "," << ratio_string(row.a_ratio) << "," << decimal_string(row.a_ratio)
           << "," << ratio_string(row.p_pow) << "," << decimal_string(row.p_pow) << ","
           << ratio_string(row.sd) << "," << decimal_string(row.sd) << "\n";
    if (truncated)
        os << "warning,budget exceeded; table truncated at n=" << kTrendMaxN << ",,,,,\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact subgroup commutativity degree toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --format etc. may follow the subcommand

    Output out;
    if (const char* env = std::getenv("SDEG_CACHE_DIR")) out.cache_dir = env;
    app.add_option("--format", out.format, "Output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--output", out.path, "Write output to this file instead of stdout");
    app.add_option("--cache-dir", out.cache_dir,
                   "Cache directory (also via SDEG_CACHE_DIR); empty disables caching");

    std::uint32_t p = 3, q = 2;
    int n = 2, nmin = 2, nmax = 5;
    bool with_poly = false, quick = false;
    std::string method = "all";

    auto* counts = app.add_subcommand("counts", "Subgroup counts of Z_p^n");
    counts->add_option("--p", p, "prime p")->required();
    counts->add_option("--n", n, "rank n")->required();
    counts->add_flag("--poly", with_poly, "Include the coefficients of f_n");

    auto* sd = app.add_subcommand("sd", "Exact sd of the nonabelian P-group");
    sd->add_option("--p", p, "odd prime p")->required();
    sd->add_option("--n", n, "rank n >= 2")->required();
    sd->add_option("--q", q, "prime q dividing p-1")->required();
    sd->add_option("--method", method, "oracle, fast, csizes, or all")
        ->check(CLI::IsMember({"oracle", "fast", "csizes", "all"}));

    auto* audit = app.add_subcommand("audit", "Bound audit for G_{n,p}");
    audit->add_option("--p", p, "odd prime p")->required();
    audit->add_option("--n", n, "rank n >= 2")->required();
    audit->add_option("--q", q, "prime q dividing p-1")->required();

    auto* trend = app.add_subcommand("trend", "sd trend table over a range of n");
    trend->add_option("--p", p, "odd prime p")->required();
    trend->add_option("--nmin", nmin, "first n")->required();
    trend->add_option("--nmax", nmax, "last n")->required();

    auto* group = app.add_subcommand("group", "Export the Cayley table as JSON");
    group->add_option("--p", p, "odd prime p")->required();
    group->add_option("--n", n, "rank n >= 2")->required();
    group->add_option("--q", q, "prime q dividing p-1")->required();

    auto* selftest = app.add_subcommand("selftest", "Oracle-equivalence and invariant suites");
    selftest->add_flag("--quick", quick, "Reduced instance set");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (counts->parsed()) {
            if (!is_prime(p) || n < 1) {
                std::cerr << "counts: need prime p and n >= 1\n";
                return kExitUsage;
            }
            const std::string key = "counts_p" + std::to_string(p) + "_n" + std::to_string(n) +
                                    (with_poly ? "_poly" : "") + "_" + out.format;
            return cached_emit(out, key, [&] { return render_counts(out.format, p, n, with_poly); });
        }

        if (sd->parsed()) {
            const auto params = plat::make_params(p, n, q);
            const bool want_oracle = method == "oracle" || method == "all";
            const Int order = ipow(p, n - 1) * q;
            if (method == "oracle" && order > cayley::kMaxOrder) {
                std::cerr << "refusal: oracle method requires group order <= "
                          << cayley::kMaxOrder << ", got " << order.str() << "\n";
                return kExitRefusal;
            }
            const std::string key = "sd_p" + std::to_string(p) + "_n" + std::to_string(n) + "_q" +
                                    std::to_string(q) + "_" + method + "_" + out.format;
            if (auto hit = cache_lookup(out, key)) {
                emit(out, *hit);
                return kExitOk;
            }

            json methods;
            std::vector<Ratio> values;
            if (method == "fast" || method == "all") {
                values.push_back(plat::sd_fast(params));
                methods["fast"] = ratio_string(values.back());
            }
            if (method == "csizes") {
                values.push_back(plat::sd_via_csizes(params));
                methods["csizes"] = ratio_string(values.back());
            } else if (method == "all") {
                try {
                    values.push_back(plat::sd_via_csizes(params));
                    methods["csizes"] = ratio_string(values.back());
                } catch (const BudgetExceeded&) {
                    methods["csizes"] = nullptr;  // beyond the enumeration budget; skipped
                }
            }
            if (want_oracle && order <= cayley::kMaxOrder) {
                values.push_back(cayley::sd_exact(cayley::build_pgroup(p, n, q)));
                methods["oracle"] = ratio_string(values.back());
            } else if (method == "all") {
                methods["oracle"] = nullptr;  // beyond the oracle cap; skipped
            }
            bool agreement = true;
            for (const auto& v : values) agreement = agreement && v == values.front();

            std::string content;
            if (out.format == "json") {
                json j;
                j["params"] = params_json(params);
                j["methods"] = methods;
                j["sd"] = ratio_string(values.front());
                j["decimal"] = decimal_string(values.front());
                j["agreement"] = agreement;
                content = j.dump(2) + "\n";
            } else if (out.format == "csv") {
                std::ostringstream os;
                os << "method,sd\n";
                for (auto& [name, value] : methods.items())
                    os << name << "," << (value.is_null() ? "skipped" : value.get<std::string>())
                       << "\n";
                os << "agreement," << (agreement ? "true" : "false") << "\n";
                content = os.str();
            } else {
                std::ostringstream os;
                os << "sd(G_{" << n << "," << p << "}) [q=" << q << "]\n";
                for (auto& [name, value] : methods.items())
                    os << "  " << name << ": "
                       << (value.is_null() ? "skipped (beyond budget)" : value.get<std::string>())
                       << "\n";
                os << "  decimal: " << decimal_string(values.front()) << "\n";
                os << "  agreement: " << (agreement ? "yes" : "NO") << "\n";
                content = os.str();
            }
            if (!agreement) {
                emit(out, content);
                std::cerr << "invariant failure: sd methods disagree\n";
                return kExitInvariant;
            }
            cache_store(out, key, content);
            emit(out, content);
            return kExitOk;
        }

        if (audit->parsed()) {
            const auto rep = plat::audit(p, n, q);
            const std::string key = "audit_p" + std::to_string(p) + "_n" + std::to_string(n) +
                                    "_q" + std::to_string(q) + "_" + out.format;
            return cached_emit(out, key, [&] { return render_audit(out.format, rep); });
        }

        if (trend->parsed()) {
            if (!is_prime(p) || p == 2 || nmin < 2 || nmax < nmin) {
                std::cerr << "trend: need odd prime p and 2 <= nmin <= nmax\n";
                return kExitUsage;
            }
            const bool truncated = nmax > kTrendMaxN;
            const int upper = truncated ? kTrendMaxN : nmax;
            const std::string key = "trend_p" + std::to_string(p) + "_n" + std::to_string(nmin) +
                                    "-" + std::to_string(nmax) + "_" + out.format;
            const int code = cached_emit(out, key, [&] {
                return render_trend(out.format, p, plat::trend_table(p, nmin, upper), truncated);
            });
            return truncated ? kExitRefusal : code;
        }

        if (group->parsed()) {
            const Int order = ipow(p, n - 1) * q;
            if (order > cayley::kMaxOrder) {
                std::cerr << "refusal: group export requires order <= " << cayley::kMaxOrder
                          << ", got " << order.str() << "\n";
                return kExitRefusal;
            }
            const std::string key = "group_p" + std::to_string(p) + "_n" + std::to_string(n) +
                                    "_q" + std::to_string(q);
            return cached_emit(out, key,
                               [&] { return cayley::to_json(cayley::build_pgroup(p, n, q)) + "\n"; });
        }

        if (selftest->parsed()) {
            const auto results = sdeg::selftest::run(quick);
            bool all_passed = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
                if (!r.passed) std::cout << "  [" << r.detail << "]";
                std::cout << "\n";
                all_passed = all_passed && r.passed;
            }
            std::cout << (all_passed ? "selftest: all checks passed\n"
                                     : "selftest: FAILURES present\n");
            return all_passed ? kExitOk : kExitInvariant;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "refusal: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitUsage;
}
