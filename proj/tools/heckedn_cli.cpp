#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "heckedn/cyclotomic.hpp"
#include "heckedn/dn.hpp"
#include "heckedn/errors.hpp"
#include "heckedn/hecke_algebra.hpp"
#include "heckedn/schur.hpp"
#include "heckedn/typea.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitSeparation = 2;
constexpr int kExitViolatedTheorem = 3;

std::string default_cache_dir() {
    if (const char* env = std::getenv("HECKE_CACHE_DIR")) return env;
    return ".hecke-cache";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

int run_verify(int max_n, int oracle_bound) {
    using clock = std::chrono::steady_clock;
    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, clock::time_point start) {
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
        std::cout << (ok ? "pass" : "FAIL") << "  " << name << "  (" << ms << " ms)\n";
        all_ok = all_ok && ok;
    };

    for (int m = 1; m <= max_n; ++m) {
        for (const auto& mu : heckedn::partitions_of(m)) {
            const auto start = clock::now();
            const bool ok = heckedn::verify_specht_scalar(mu);
            report("Specht scalar identity at " + mu.str(), ok, start);
        }
    }
    for (int n = 1; n <= std::min(max_n, oracle_bound); ++n) {
        for (int a = 0; a <= n; ++a) {
            for (const auto& la : heckedn::enumerate_bipartitions(n, a)) {
                const auto start = clock::now();
                const bool ok = heckedn::oracle_f(la) == heckedn::f_poly(la);
                report("central eigenvalue f at " + la.str() + " a=" + std::to_string(a), ok,
                       start);
            }
        }
    }
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        for (int a = 0; a <= n; ++a) {
            for (const auto& la : heckedn::enumerate_bipartitions(n, a)) {
                const auto start = clock::now();
                const bool ok = heckedn::verify_trace_identity(la);
                report("trace identity at " + la.str() + " a=" + std::to_string(a), ok, start);
            }
        }
    }
    for (int m = 1; m <= std::min(max_n, 6); ++m) {
        for (const auto& beta : heckedn::partitions_of(m)) {
            const auto start = clock::now();
            const auto g = heckedn::g_poly(beta);
            const bool ok =
                g * g == heckedn::f_poly_one_param(heckedn::Bipartition(beta, beta));
            report("square root of f at " + beta.str(), ok, start);
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decomposition matrices of the Iwahori-Hecke algebra of type D_n"};
    app.require_subcommand(1);

    int n = 0, e = 0, m = 0, max_n = 4, oracle_bound = 4;
    std::string partition_text, bipartition_text, format = "text", out_path;
    std::string cache_dir = default_cache_dir();
    std::string sqrt_sign = "plus";
    int a_flag = -1;
    bool one_param = false;

    auto* decomp = app.add_subcommand("decomp-matrix", "full decomposition matrix of H_q(D_n)");
    decomp->add_option("--n", n, "rank n")->required();
    decomp->add_option("--e", e, "order of the root of unity")->required();
    decomp->add_option("--format", format, "text|csv|json");
    decomp->add_option("--out", out_path, "write to a file instead of stdout");
    decomp->add_option("--cache-dir", cache_dir, "type-A matrix cache directory");
    decomp->add_option("--sqrt-sign", sqrt_sign, "plus|minus square-root convention");

    auto* typea = app.add_subcommand("typea", "type A decomposition matrix (dual Specht labels)");
    typea->add_option("--m", m, "rank m")->required();
    typea->add_option("--e", e, "order of the root of unity")->required();
    typea->add_option("--out", out_path, "write to a file instead of stdout");
    typea->add_option("--cache-dir", cache_dir, "cache directory");

    auto* schur = app.add_subcommand("schur", "Schur elements");
    schur->add_option("--partition", partition_text, "partition, e.g. [2,1]");
    schur->add_option("--bipartition", bipartition_text, "bipartition, e.g. [2,1]|[1,1,1]");
    schur->add_option("--a", a_flag, "size of the first component (checked)");
    schur->add_option("--out", out_path, "write to a file instead of stdout");

    auto* fpoly = app.add_subcommand("f-poly", "the Laurent polynomial f_la");
    fpoly->add_option("--bipartition", bipartition_text, "bipartition, e.g. [2,1]|[2,1]")
        ->required();
    fpoly->add_option("--a", a_flag, "size of the first component (checked)");
    fpoly->add_flag("--one-param", one_param, "substitute the second parameter by 1");
    fpoly->add_option("--out", out_path, "write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run the brute-force identity suites");
    verify->add_option("--max-n", max_n, "largest rank to verify");
    verify->add_option("--oracle-bound", oracle_bound, "rank cap for the type B oracle");

    auto* phi = app.add_subcommand("phi", "cyclotomic polynomial Phi_e");
    phi->add_option("--e", e, "index")->required();
    phi->add_option("--out", out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_exit_code() == 0) return app.exit(err);
        app.exit(err);
        return kExitUsage;
    }

    try {
        if (decomp->parsed()) {
            if (sqrt_sign != "plus" && sqrt_sign != "minus") {
                std::cerr << "--sqrt-sign must be plus or minus\n";
                return kExitUsage;
            }
            const auto mat = heckedn::full_matrix(n, e, sqrt_sign == "minus", cache_dir);
            if (format == "text")
                emit(heckedn::render_text(mat), out_path);
            else if (format == "csv")
                emit(heckedn::render_csv(mat), out_path);
            else if (format == "json")
                emit(heckedn::render_json(mat), out_path);
            else {
                std::cerr << "--format must be text, csv or json\n";
                return kExitUsage;
            }
        } else if (typea->parsed()) {
            emit(heckedn::typea_cache_text(heckedn::decomposition_matrix_type_a(m, e, cache_dir)),
                 out_path);
        } else if (schur->parsed()) {
            if (partition_text.empty() == bipartition_text.empty()) {
                std::cerr << "schur wants exactly one of --partition / --bipartition\n";
                return kExitUsage;
            }
            if (!partition_text.empty()) {
                emit(heckedn::schur_type_a(heckedn::parse_partition(partition_text)).str() + "\n",
                     out_path);
            } else {
                const auto la = heckedn::parse_bipartition(bipartition_text);
                if (a_flag >= 0 && a_flag != la.a()) {
                    std::cerr << "--a disagrees with the bipartition\n";
                    return kExitUsage;
                }
                emit(heckedn::schur_bipartition(la).str() + "\n", out_path);
            }
        } else if (fpoly->parsed()) {
            const auto la = heckedn::parse_bipartition(bipartition_text);
            if (a_flag >= 0 && a_flag != la.a()) {
                std::cerr << "--a disagrees with the bipartition\n";
                return kExitUsage;
            }
            const auto f = one_param ? heckedn::f_poly_one_param(la) : heckedn::f_poly(la);
            emit(f.str() + "\n", out_path);
        } else if (verify->parsed()) {
            return run_verify(max_n, oracle_bound);
        } else if (phi->parsed()) {
            const auto& coeffs = heckedn::cyclotomic_polynomial(e);
            heckedn::LaurentPoly p;
            for (size_t i = 0; i < coeffs.size(); ++i)
                p.add_term(static_cast<int>(i), 0, coeffs[i]);
            emit(p.str() + "\n", out_path);
        }
    } catch (const heckedn::SeparationFailedError& err) {
        std::cerr << "separation condition violated: " << err.what() << "\n";
        return kExitSeparation;
    } catch (const heckedn::ViolatedTheoremError& err) {
        std::cerr << "violated-theorem assertion: " << err.what() << "\n";
        return kExitViolatedTheorem;
    } catch (const std::invalid_argument& err) {
        std::cerr << "invalid input: " << err.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
