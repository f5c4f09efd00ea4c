#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gln/errors.hpp"
#include "gln/exactmat.hpp"
#include "gln/infchar.hpp"
#include "gln/jsonio.hpp"
#include "gln/orbits.hpp"
#include "gln/partitions.hpp"
#include "gln/reps.hpp"
#include "gln/segring.hpp"
#include "gln/verify.hpp"

namespace {

using namespace gln;
using partitions::Composition;
using partitions::Partition;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Args {
    std::vector<std::string> positional;
    bool json = false;
    long long trials = 200;
    std::uint64_t seed = 20260808;
    int max_n = -1;
};

Args parse_args(int argc, char** argv) {
    Args args;
    if (const char* env_seed = std::getenv("GLN_SEED")) args.seed = std::strtoull(env_seed, nullptr, 10);
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        auto next = [&](const char* what) -> std::string {
            if (i + 1 >= argc) throw std::invalid_argument(std::string("missing value for ") + what);
            return argv[++i];
        };
        if (a == "--json")
            args.json = true;
        else if (a == "--trials")
            args.trials = std::stoll(next("--trials"));
        else if (a == "--seed")
            args.seed = std::strtoull(next("--seed").c_str(), nullptr, 10);
        else if (a == "--max-n")
            args.max_n = std::stoi(next("--max-n"));
        else if (a.rfind("--", 0) == 0)
            throw std::invalid_argument("unknown flag " + a);
        else
            args.positional.push_back(a);
    }
    return args;
}

void usage(std::ostream& os) {
    os << "usage: gln <command> [args] [--json]\n\n"
          "commands:\n"
          "  orbit dim <partition>             orbit dimension\n"
          "  orbit dominates <lambda> <mu>     closure order test\n"
          "  orbit induce <lambda> <mu>        induced orbit\n"
          "  rep ap|dc|rank|gk|howe|adduce|infchar <rep-expr>\n"
          "  rep whittaker <rep-expr> <alpha>  three-valued verdict\n"
          "  padic eval <poly-expr>            normalize a segment polynomial\n"
          "  padic dword <poly-expr> <alpha>   iterated derivative multiplicity\n"
          "  padic dc <monomial>               depth composition\n"
          "  padic wf <monomial>               wave-front partition\n"
          "  matrix jordan <alpha>             Jordan matrix\n"
          "  matrix partition <matrix-file>    Jordan type of a nilpotent matrix (JSON file)\n"
          "  matrix verify-geo <lambda> [--trials N] [--seed S]\n"
          "  catalog --max-n N                 stream all classification shapes\n"
          "  verify <suite> [--max-n N] [--seed S]   run named checks; nonzero exit on failure\n\n"
          "partitions accept exponential (2^2) or comma (2,2) form; rep-exprs use\n"
          "chi/stein/speh/spehcs joined by 'x'; GLN_SEED sets the default seed.\n";
}

void print_matrix(const exactmat::RationalMatrix& m) {
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) std::cout << ' ';
            std::cout << m.at(i, j).str();
        }
        std::cout << '\n';
    }
}

int cmd_orbit(const Args& args) {
    const auto& p = args.positional;
    if (p.size() < 3) {
        usage(std::cerr);
        return kExitUsage;
    }
    const std::string& verb = p[1];
    if (verb == "dim") {
        orbits::NilpotentOrbit o{partitions::parse_flexible(p[2])};
        std::cout << orbits::dimension(o) << '\n';
        return kExitOk;
    }
    if (p.size() < 4) {
        usage(std::cerr);
        return kExitUsage;
    }
    Partition lambda = Partition::sorted_from(partitions::parse_flexible(p[2]));
    Partition mu = Partition::sorted_from(partitions::parse_flexible(p[3]));
    if (verb == "dominates") {
        std::cout << (dominates(lambda, mu) ? "true" : "false") << '\n';
        return kExitOk;
    }
    if (verb == "induce") {
        orbits::NilpotentOrbit o = orbits::induce(orbits::NilpotentOrbit(lambda), orbits::NilpotentOrbit(mu));
        if (args.json)
            std::cout << jsonio::to_json(o).dump() << '\n';
        else
            std::cout << partitions::tuple_str(o.partition()) << " in gl(" << o.ambient_n() << ")\n";
        return kExitOk;
    }
    usage(std::cerr);
    return kExitUsage;
}

int cmd_rep(const Args& args) {
    const auto& p = args.positional;
    if (p.size() < 3) {
        usage(std::cerr);
        return kExitUsage;
    }
    const std::string& verb = p[1];
    reps::UnitaryRep pi = reps::parse_rep(p[2]);
    if (verb == "ap") {
        Partition ap = reps::associated_partition(pi);
        std::cout << (args.json ? jsonio::to_json(ap).dump() : partitions::tuple_str(ap)) << '\n';
    } else if (verb == "dc") {
        auto dc = reps::depth_composition(pi);
        if (dc.ambiguity_encountered)
            std::cerr << "note: adduction ambiguous for a k=m Speh-CS factor; DC is unaffected\n";
        std::cout << (args.json ? jsonio::to_json(dc.dc).dump() : partitions::tuple_str(dc.dc))
                  << '\n';
    } else if (verb == "rank") {
        std::cout << reps::rank(pi) << '\n';
    } else if (verb == "gk") {
        std::cout << reps::gk_dimension(pi) << '\n';
    } else if (verb == "howe") {
        std::cout << reps::howe_rank(pi) << '\n';
    } else if (verb == "adduce") {
        auto res = reps::adduce(pi);
        if (args.json) {
            jsonio::json j{{"primary", jsonio::to_json(res.primary)},
                           {"depth", res.depth},
                           {"ambiguous", res.ambiguous}};
            j["alternates"] = jsonio::json::array();
            for (const auto& alt : res.alternates) j["alternates"].push_back(jsonio::to_json(alt));
            std::cout << j.dump() << '\n';
        } else {
            std::cout << reps::format_rep(res.primary) << "   (depth " << res.depth << ")\n";
            for (const auto& alt : res.alternates)
                std::cout << "alternate: " << reps::format_rep(alt) << '\n';
        }
    } else if (verb == "infchar") {
        infchar::InfChar xi = infchar::inf_char(pi);
        std::cout << (args.json ? jsonio::to_json(xi).dump() : xi.str()) << '\n';
    } else if (verb == "whittaker") {
        if (p.size() < 4) {
            usage(std::cerr);
            return kExitUsage;
        }
        Composition alpha = partitions::parse_flexible(p[3]);
        std::cout << reps::to_string(reps::whittaker_nonvanishing(pi, alpha)) << '\n';
    } else {
        usage(std::cerr);
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_padic(const Args& args) {
    const auto& p = args.positional;
    if (p.size() < 3) {
        usage(std::cerr);
        return kExitUsage;
    }
    const std::string& verb = p[1];
    if (verb == "eval") {
        segring::SegmentPoly poly = segring::parse_poly(p[2]);
        std::cout << (args.json ? jsonio::to_json(poly).dump() : poly.str()) << '\n';
        return kExitOk;
    }
    if (verb == "dword") {
        if (p.size() < 4) {
            usage(std::cerr);
            return kExitUsage;
        }
        segring::SegmentPoly poly = segring::parse_poly(p[2]);
        Composition alpha = partitions::parse_flexible(p[3]);
        std::cout << segring::derivative_word(poly, alpha) << '\n';
        return kExitOk;
    }
    segring::Monomial mono = segring::parse_monomial(p[2]);
    if (verb == "dc") {
        Composition dc = segring::depth_composition_padic(mono);
        std::cout << (args.json ? jsonio::to_json(dc).dump() : partitions::tuple_str(dc)) << '\n';
        return kExitOk;
    }
    if (verb == "wf") {
        Partition wf = segring::wf_partition(mono);
        std::cout << (args.json ? jsonio::to_json(wf).dump() : partitions::tuple_str(wf)) << '\n';
        return kExitOk;
    }
    usage(std::cerr);
    return kExitUsage;
}

int cmd_matrix(const Args& args) {
    const auto& p = args.positional;
    if (p.size() < 3) {
        usage(std::cerr);
        return kExitUsage;
    }
    const std::string& verb = p[1];
    if (verb == "jordan") {
        exactmat::RationalMatrix m = exactmat::jordan_matrix(partitions::parse_flexible(p[2]));
        if (args.json)
            std::cout << jsonio::to_json(m).dump() << '\n';
        else
            print_matrix(m);
        return kExitOk;
    }
    if (verb == "partition") {
        std::ifstream in(p[2]);
        if (!in) {
            std::cerr << "cannot open " << p[2] << '\n';
            return kExitUsage;
        }
        jsonio::json j;
        in >> j;
        exactmat::RationalMatrix m = jsonio::matrix_from_json(j);
        Partition lambda = exactmat::partition_of_nilpotent(m);
        std::cout << (args.json ? jsonio::to_json(lambda).dump() : partitions::tuple_str(lambda))
                  << '\n';
        return kExitOk;
    }
    if (verb == "verify-geo") {
        Partition lambda = Partition::sorted_from(partitions::parse_flexible(p[2]));
        auto report = exactmat::verify_projection_injectivity(lambda, args.trials, args.seed);
        if (args.json)
            std::cout << jsonio::to_json(report).dump() << '\n';
        else
            std::cout << "trials=" << report.trials << " u_hits=" << report.u_hits
                      << " violations=" << report.violations << " seed=" << report.seed << '\n';
        return report.violations == 0 ? kExitOk : kExitVerifyFail;
    }
    usage(std::cerr);
    return kExitUsage;
}

int cmd_catalog(const Args& args) {
    int max_n = args.max_n >= 0 ? args.max_n : 6;
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& pi : reps::catalog_of_size(n)) {
            if (args.json)
                std::cout << jsonio::to_json(pi).dump() << '\n';
            else
                std::cout << n << ": " << reps::format_rep(pi) << '\n';
        }
    }
    return kExitOk;
}

int cmd_verify(const Args& args) {
    const auto& p = args.positional;
    if (p.size() < 2) {
        usage(std::cerr);
        return kExitUsage;
    }
    verify::Options opt;
    opt.seed = args.seed;
    if (args.max_n >= 0) {
        opt.catalog_n = std::min(args.max_n, 12);
        opt.dims_n = args.max_n;
        opt.induction_lm = std::min(args.max_n, 10);
        opt.dimmu_n = args.max_n;
        opt.padic_word_size = std::min(args.max_n, 8);
        opt.padic_dc_size = std::min(args.max_n, 10);
        opt.oracle_n = std::min(args.max_n, 7);
        opt.geo_n = std::min(args.max_n, 5);
    }
    std::vector<verify::CheckResult> results = verify::run_suite(p[1], opt);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        if (args.json) {
            jsonio::json j{{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}};
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  [" << r.cases << " cases]";
            if (!r.detail.empty()) std::cout << "\n     " << r.detail;
            std::cout << '\n';
        }
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        Args args = parse_args(argc, argv);
        if (args.positional.empty()) {
            usage(std::cerr);
            return kExitUsage;
        }
        const std::string& cmd = args.positional[0];
        if (cmd == "help" || cmd == "--help") {
            usage(std::cout);
            return kExitOk;
        }
        if (cmd == "orbit") return cmd_orbit(args);
        if (cmd == "rep") return cmd_rep(args);
        if (cmd == "padic") return cmd_padic(args);
        if (cmd == "matrix") return cmd_matrix(args);
        if (cmd == "catalog") return cmd_catalog(args);
        if (cmd == "verify") return cmd_verify(args);
        usage(std::cerr);
        return kExitUsage;
    } catch (const gln::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
