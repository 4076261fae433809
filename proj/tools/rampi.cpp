// SPDX-License-Identifier: Apache-2.0

// rampi: compute pi from the 1103/26390 series, verify every identity in its
// derivation, and inspect the exact constants that appear along the way.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rampi/invariants.hpp"
#include "rampi/lattice.hpp"
#include "rampi/lseries.hpp"
#include "rampi/pi_engine.hpp"
#include "rampi/surd.hpp"
#include "rampi/verify.hpp"

namespace {

long default_precision() {
    if (const char *env = std::getenv("RAMPI_PRECISION")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
    }
    return 30;
}

int cmd_pi(long digits, const std::string &method) {
    std::string out = (method == "oracle") ? rampi::pi_oracle_digits(digits)
                                           : rampi::pi_ramanujan_digits(digits);
    std::cout << out << "\n";
    return 0;
}

int cmd_verify(const std::string &filter, long precision, bool json) {
    auto results = rampi::run_checks(filter, rampi::Precision(precision));
    size_t fails = 0, flags = 0;
    for (const auto &r : results) {
        std::cout << (json ? rampi::to_json_line(r) : rampi::to_text_line(r)) << "\n";
        if (r.status == rampi::CheckStatus::fail) ++fails;
        if (r.status == rampi::CheckStatus::flagged) ++flags;
    }
    if (!json) {
        std::cout << results.size() << " checks: " << (results.size() - fails - flags) << " pass, "
                  << flags << " flagged, " << fails << " fail\n";
    }
    return fails == 0 ? 0 : 1;
}

int cmd_inspect(const std::string &object, long precision) {
    using namespace rampi;
    Precision p(precision);
    if (object == "pell29") {
        PellSolution s = pell_fundamental(29);
        std::cout << "x=" << s.x.str() << " y=" << s.y.str() << "\n";
        return 0;
    }
    if (object == "g58") {
        SingularValueContext ctx = context58(p);
        std::cout << "exact:   sqrt((5 + sqrt(29))/2)\n";
        std::cout << "decimal: " << ctx.g.str(precision) << "\n";
        return 0;
    }
    if (object == "k58") {
        SingularValueContext ctx = context58(p);
        std::cout << "exact:   (sqrt(2)-1)^6 (13 sqrt(58) - 99) = " << ctx.k_exact->str() << "\n";
        std::cout << "decimal: " << ctx.k.k.str(precision) << "\n";
        return 0;
    }
    if (object == "x58") {
        SingularValueContext ctx = context58(p);
        std::cout << "exact:   " << ctx.x_exact->str() << "\n";
        std::cout << "decimal: " << ctx.x.str(precision) << "\n";
        return 0;
    }
    if (object == "alpha58") {
        SingularValueContext ctx = context58(p);
        std::cout << "exact:   3 g58^6 k58 (33 sqrt(29) - 148) = " << ctx.alpha_exact->str() << "\n";
        std::cout << "decimal: " << ctx.alpha.str(precision) << "\n";
        return 0;
    }
    if (object == "L-8") {
        std::cout << "closed:  pi/(4 sqrt(2))  [m = 32 table; series value is twice this]\n";
        std::cout << "decimal: " << l_negative(-8, p).value.str(precision) << "\n";
        return 0;
    }
    if (object == "L29") {
        std::cout << "closed:  2 log((5 + sqrt(29))/2) / sqrt(29)\n";
        std::cout << "decimal: " << l_class_number(29, 1, p).value.str(precision) << "\n";
        return 0;
    }
    std::cerr << "unknown object '" << object
              << "' (known: g58 k58 x58 alpha58 pell29 L-8 L29)\n";
    return 2;
}

int cmd_pell(long D) {
    rampi::PellSolution s = rampi::pell_fundamental(D);
    std::cout << "x=" << s.x.str() << " y=" << s.y.str() << "\n";
    rampi::NegativePell n = rampi::pell_negative(D);
    if (n.exists)
        std::cout << "negative: x=" << n.sol.x.str() << " y=" << n.sol.y.str() << "\n";
    return 0;
}

int cmd_lseries(long d, long precision) {
    using namespace rampi;
    Precision p(precision);
    if (d < 0) {
        std::cout << "closed (m=|4d| table): " << l_negative(d, p).value.str(precision) << "\n";
    } else {
        long rem = ((d % 4) + 4) % 4;
        if (rem == 1) {
            std::cout << "class-number route: " << l_class_number(d, 1, p).value.str(precision)
                      << "  (h = 1 assumed)\n";
        }
        std::cout << "sine-product route: " << l_trig_product(d, p).value.str(precision) << "\n";
    }
    std::cout << "series (1e6 terms): " << l_partial_sum(d, 1000000) << "\n";
    return 0;
}

int cmd_lattice(long r, long radius, long precision) {
    using namespace rampi;
    Real csch = s1_csch(Rat(r), Precision(precision));
    std::cout << "csch route:          " << csch.str(precision) << "\n";
    TruncatedSum t = s1_truncated({1, 0, r}, radius);
    std::cout << "truncated (R=" << radius << "): " << t.sum << "  (tail estimate "
              << t.tail_estimate << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"pi from the 26390n + 1103 series, with a verified derivation"};
    app.require_subcommand(1);

    long digits = 1000;
    std::string method = "ramanujan";
    auto *pi = app.add_subcommand("pi", "print pi to a number of significant digits");
    pi->add_option("--digits", digits, "significant digits, 1..100000");
    pi->add_option("--method", method, "ramanujan | oracle")
        ->check(CLI::IsMember({"ramanujan", "oracle"}));

    std::string filter;
    long precision = default_precision();
    bool json = false;
    auto *verify = app.add_subcommand("verify", "run the derivation checks");
    verify->add_option("--filter", filter, "run only checks whose id starts with this prefix");
    verify->add_option("--precision", precision, "working precision in digits");
    verify->add_flag("--json", json, "machine-readable JSON lines");

    std::string object;
    long inspect_precision = default_precision();
    auto *inspect = app.add_subcommand("inspect", "print an exact constant and its expansion");
    inspect->add_option("object", object, "g58 | k58 | x58 | alpha58 | pell29 | L-8 | L29")
        ->required();
    inspect->add_option("--precision", inspect_precision, "digits for the decimal expansion");

    long pell_d = 0;
    auto *pell = app.add_subcommand("pell", "fundamental solution of x^2 - D y^2 = 1");
    pell->add_option("D", pell_d, "non-square D >= 2")->required();

    long ls_d = 0;
    long ls_precision = default_precision();
    auto *lseries = app.add_subcommand("lseries", "L_d(1) by every applicable route");
    lseries->add_option("d", ls_d, "character label d (e.g. -8, -4, 29)")->required();
    lseries->add_option("--precision", ls_precision, "working precision in digits");

    long lat_r = 58;
    long lat_radius = 200;
    long lat_precision = default_precision();
    auto *lattice = app.add_subcommand("lattice", "alternating lattice sum S1(1,0,r;1)");
    lattice->add_option("r", lat_r, "level r >= 1")->required();
    lattice->add_option("--radius", lat_radius, "truncation radius for the direct double sum");
    lattice->add_option("--precision", lat_precision, "working precision in digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (pi->parsed()) {
            if (digits < 1 || digits > 100000) {
                std::cerr << "pi: --digits must lie in [1, 100000]\n";
                return 2;
            }
            return cmd_pi(digits, method);
        }
        if (verify->parsed()) return cmd_verify(filter, precision, json);
        if (inspect->parsed()) return cmd_inspect(object, inspect_precision);
        if (pell->parsed()) return cmd_pell(pell_d);
        if (lseries->parsed()) return cmd_lseries(ls_d, ls_precision);
        if (lattice->parsed()) return cmd_lattice(lat_r, lat_radius, lat_precision);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
