// Command-line front end: every library operation behind one subcommand.
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "g1fib/serialize.hpp"

using namespace g1fib;

namespace {

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        long long v = std::stoll(item, &pos);
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size()) throw std::invalid_argument("bad integer list entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

EvenLattice load_lattice(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open lattice file: " + path);
    json j;
    in >> j;
    return lattice_from_json(j);
}

struct Options {
    std::string format = "text";
};

int cmd_enumerate(long long n, long long d, long long delta, const Options& opt) {
    auto types = enumerate_admissible(n, d, delta);
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& t : types) arr.push_back(to_json(t));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& t : types) {
            std::string sep;
            for (long long a : t.twists()) {
                std::cout << sep << a;
                sep = (opt.format == "tsv") ? "\t" : ",";
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_check(const std::string& type_str, long long d, const Options& opt) {
    auto twists = parse_int_list(type_str);
    if (!std::is_sorted(twists.begin(), twists.end()))
        std::cerr << "warning: --type was not in ascending order; sorting\n";
    SplittingType s(twists);
    bool ok = is_admissible(s, d);
    if (opt.format == "json")
        std::cout << json{{"type", to_json(s)}, {"d", d}, {"admissible", ok}}.dump() << "\n";
    else
        std::cout << (ok ? "pass" : "fail") << "\n";
    if (ok) return 0;
    // Name the first violated bound.
    long long n = s.rank();
    for (long long r = 1; r < n; ++r) {
        if (s.subbundle_slope_gap(r) > admissibility_bound(n, r, d, Side::Sub, true)) {
            std::cerr << "violated: rank-" << r << " subbundle slope-gap bound\n";
            return 1;
        }
        if (s.quotient_slope_gap(r) > admissibility_bound(n, r, d, Side::Quot, true)) {
            std::cerr << "violated: rank-" << r << " quotient slope-gap bound\n";
            return 1;
        }
    }
    auto rb = remark_bounds(s, d);
    if (!rb.top_gap_ok) std::cerr << "violated: top twist-gap display\n";
    if (!rb.bottom_gap_ok) std::cerr << "violated: bottom twist-gap display\n";
    return 1;
}

int cmd_bounds(long long n, long long d, bool p1, const Options& opt) {
    if (opt.format == "json") {
        json arr = json::array();
        for (long long r = 1; r < n; ++r)
            arr.push_back({{"r", r},
                           {"sub", to_string(admissibility_bound(n, r, d, Side::Sub, p1))},
                           {"quot", to_string(admissibility_bound(n, r, d, Side::Quot, p1))}});
        std::cout << arr.dump() << "\n";
        return 0;
    }
    const char* sep = (opt.format == "tsv") ? "\t" : "  ";
    std::cout << "r" << sep << "sub" << sep << "quot\n";
    for (long long r = 1; r < n; ++r)
        std::cout << r << sep << to_string(admissibility_bound(n, r, d, Side::Sub, p1)) << sep
                  << to_string(admissibility_bound(n, r, d, Side::Quot, p1)) << "\n";
    return 0;
}

int cmd_thresholds(long long n, long long d, long long g, const Options& opt) {
    auto t = d2_thresholds(n, d, g);
    if (opt.format == "json")
        std::cout << json{{"h1_bound", t.h1_bound}, {"basepoint_bound", t.basepoint_bound}}.dump()
                  << "\n";
    else
        std::cout << "h1_bound " << t.h1_bound << "\nbasepoint_bound " << t.basepoint_bound << "\n";
    return 0;
}

int cmd_components(long long d, long long n, const Options& opt) {
    long long c = component_count(d, n);
    if (opt.format == "json")
        std::cout << json{{"d", d}, {"n", n}, {"components", c}}.dump() << "\n";
    else
        std::cout << c << "\n";
    return 0;
}

int cmd_pontrjagin(const std::string& lattice_path, long long n, const std::string& class_str,
                   const Options& opt) {
    EvenLattice lat = load_lattice(lattice_path);
    ModClass cls(n, parse_int_list(class_str));
    long long p = pontrjagin(lat, cls);
    if (opt.format == "json")
        std::cout << json{{"n", n},
                          {"pontrjagin", p},
                          {"divisibility", divisibility(cls)},
                          {"primitive", is_primitive(cls)}}
                         .dump()
                  << "\n";
    else
        std::cout << p << "\n";
    return 0;
}

int cmd_orbit(const std::string& lattice_path, long long n, long long root_bound,
              const Options& opt) {
    EvenLattice lat = load_lattice(lattice_path);
    auto part = orbit_partition(lat, n, root_bound);
    if (opt.format == "json") {
        json arr = json::array();
        long long id = 0;
        for (const auto& o : part.orbits) {
            json members = json::array();
            for (const auto& m : o.members) members.push_back(m.coords);
            arr.push_back({{"orbit", id++},
                           {"pontrjagin", o.pontrjagin},
                           {"divisibility", o.divisibility},
                           {"members", members}});
        }
        std::cout << json{{"roots_used", part.roots_used}, {"orbits", arr}}.dump() << "\n";
        return 0;
    }
    // TSV: coords, divisibility, pontrjagin, orbit-id
    long long id = 0;
    for (const auto& o : part.orbits) {
        for (const auto& m : o.members) {
            std::string sep;
            for (long long c : m.coords) {
                std::cout << sep << c;
                sep = ",";
            }
            std::cout << "\t" << o.divisibility << "\t" << o.pontrjagin << "\t" << id << "\n";
        }
        ++id;
    }
    return 0;
}

void print_cover_text(const CoverNumerology& c) {
    std::cout << "d " << c.d << "\ncanonical_coeff " << c.canonical_coeff << "\nh1_threshold "
              << c.h1_threshold << "\nbasepoint_threshold " << c.basepoint_threshold
              << "\nD_0^2 " << c.d_t_squared(0) << "\n";
}

int cmd_cover2(long long a, long long N, const Options& opt) {
    auto c = double_cover(a, N);
    if (opt.format == "json")
        std::cout << to_json(c).dump() << "\n";
    else
        print_cover_text(c);
    return 0;
}

int cmd_cover3(long long a, long long b, long long N, const Options& opt) {
    auto c = triple_cover(a, b, N);
    if (opt.format == "json")
        std::cout << to_json(c).dump() << "\n";
    else
        print_cover_text(c);
    return 0;
}

int cmd_ratsurf(long long n, const Options& opt) {
    auto r = rational_surface_divisor(n);
    if (opt.format == "json") {
        std::cout << to_json(r).dump() << "\n";
    } else {
        std::cout << "hirzebruch_index " << r.hirzebruch_index << "\nclass sigma+"
                  << r.divisor_class.y << "F (x=" << r.divisor_class.x << ")\nD^2 " << r.d_squared
                  << "\nD.F " << r.fiber_degree << "\nchi " << r.chi << "\n";
    }
    return 0;
}

int cmd_tables(const std::string& which, long long dmax, const Options& opt) {
    const char* sep = (opt.format == "tsv") ? "\t" : "  ";
    json arr = json::array();
    if (which == "n2") {
        if (opt.format != "json")
            std::cout << "d" << sep << "a_max = d-1" << sep << "D^2_h1 = 2d-10" << sep
                      << "D^2_bp = 2d-6\n";
        for (long long d = 2; d <= dmax; ++d) {
            auto t = d2_thresholds(2, d, 0);
            if (opt.format == "json")
                arr.push_back({{"d", d}, {"a_max", d - 1}, {"d2_h1", t.h1_bound},
                               {"d2_bp", t.basepoint_bound}});
            else
                std::cout << d << sep << d - 1 << sep << t.h1_bound << sep << t.basepoint_bound
                          << "\n";
        }
    } else {  // n3
        if (opt.format != "json")
            std::cout << "d" << sep << "region: 2b-a <= d, a+b <= 2d-2" << sep
                      << "D^2_h1 = 3d-12" << sep << "D^2_bp = 3d-8\n";
        for (long long d = 2; d <= dmax; ++d) {
            auto t = d2_thresholds(3, d, 0);
            long long count = 0;
            for (long long a = 0; a <= 2 * d; ++a)
                for (long long b = a; b <= 2 * d; ++b)
                    if (2 * b - a <= d && a + b <= 2 * d - 2) ++count;
            if (opt.format == "json")
                arr.push_back({{"d", d}, {"admissible_pairs", count}, {"d2_h1", t.h1_bound},
                               {"d2_bp", t.basepoint_bound}});
            else
                std::cout << d << sep << count << " pairs" << sep << t.h1_bound << sep
                          << t.basepoint_bound << "\n";
        }
    }
    if (opt.format == "json") std::cout << arr.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact numerics for genus-one fibrations over P^1"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "text"}))
        ->capture_default_str();

    long long n = 2, d = 1, g = 0, delta = 0, a = 0, b = 0, N = 0, root_bound = 2, dmax = 6;
    bool p1 = false;
    std::string type_str, lattice_path, class_str, corollary;

    auto* enumerate = app.add_subcommand("enumerate", "admissible splitting types of fixed degree");
    enumerate->add_option("--n", n, "rank")->required();
    enumerate->add_option("--d", d, "chi(O_Y)")->required();
    enumerate->add_option("--delta", delta, "total degree")->required();

    auto* check = app.add_subcommand("check", "test one splitting type for admissibility");
    check->add_option("--type", type_str, "comma-separated twists, ascending")->required();
    check->add_option("--d", d, "chi(O_Y)")->required();

    auto* bounds = app.add_subcommand("bounds", "slope-gap bounds for every subbundle rank");
    bounds->add_option("--n", n, "rank")->required();
    bounds->add_option("--d", d, "chi(O_Y)")->required();
    bounds->add_flag("--p1", p1, "use the sharper bounds over P^1");

    auto* thresholds = app.add_subcommand("thresholds", "D^2 thresholds for h1 and base points");
    thresholds->add_option("--n", n, "fiber degree")->required();
    thresholds->add_option("--d", d, "chi(O_Y)")->required();
    thresholds->add_option("--g", g, "base genus")->required();

    auto* components = app.add_subcommand("components", "moduli component count");
    components->add_option("--d", d, "chi(O_Y)")->required();
    components->add_option("--n", n, "fiber degree")->required();

    auto* pont = app.add_subcommand("pontrjagin", "Pontrjagin square of a class mod n");
    pont->add_option("--lattice", lattice_path, "JSON Gram matrix file")->required();
    pont->add_option("--n", n, "modulus")->required();
    pont->add_option("--class", class_str, "comma-separated coordinates")->required();

    auto* orbit = app.add_subcommand("orbit",
                                     "reflection orbits of primitive classes mod n; TSV columns: "
                                     "coords, divisibility, pontrjagin, orbit-id");
    orbit->add_option("--lattice", lattice_path, "JSON Gram matrix file")->required();
    orbit->add_option("--n", n, "modulus")->required();
    orbit->add_option("--root-bound", root_bound, "coordinate bound for roots")->required();

    auto* cover2 = app.add_subcommand("cover2", "double-cover numerology (n=2)");
    cover2->add_option("--a", a, "Hirzebruch index")->required();
    cover2->add_option("--N", N, "branch-class fiber coefficient")->required();

    auto* cover3 = app.add_subcommand("cover3", "cubic-surface numerology (n=3)");
    cover3->add_option("--a", a, "first drop")->required();
    cover3->add_option("--b", b, "second drop")->required();
    cover3->add_option("--N", N, "surface-class fiber coefficient")->required();

    auto* ratsurf = app.add_subcommand("ratsurf", "rational-surface divisor data");
    ratsurf->add_option("--n", n, "fiber degree")->required();

    auto* tables = app.add_subcommand("tables", "sharpness tables over a d-range");
    tables->add_option("--corollary", corollary, "which table")
        ->check(CLI::IsMember({"n2", "n3"}))
        ->required();
    tables->add_option("--dmax", dmax, "largest d")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*enumerate) return cmd_enumerate(n, d, delta, opt);
        if (*check) return cmd_check(type_str, d, opt);
        if (*bounds) return cmd_bounds(n, d, p1, opt);
        if (*thresholds) return cmd_thresholds(n, d, g, opt);
        if (*components) return cmd_components(d, n, opt);
        if (*pont) return cmd_pontrjagin(lattice_path, n, class_str, opt);
        if (*orbit) return cmd_orbit(lattice_path, n, root_bound, opt);
        if (*cover2) return cmd_cover2(a, N, opt);
        if (*cover3) return cmd_cover3(a, b, N, opt);
        if (*ratsurf) return cmd_ratsurf(n, opt);
        if (*tables) return cmd_tables(corollary, dmax, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
