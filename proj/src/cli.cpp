#include "plint/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "plint/io.hpp"

namespace plint {

namespace {

using io::json;

struct Options {
    std::string out = "-";
    bool decimal = false;
    unsigned threads = 1;

    std::string divisor, pencil, endo, spec, points_file, point, s_text, mode = "third-type", lines;
    long bound = 10, n = 10, count = 5, exp_bound = 4, cap_digits = 10000;
    long alpha = 2, m = 1, b = 2, max_exponent = 64;
    std::string a = "1";
    bool json_output = false;
};

PlaceSet places(const std::string& text) { return PlaceSet::parse(text); }

Int height_cap(long digits) {
    if (digits < 1) throw Error(ErrorKind::InvalidInput, "--cap-digits must be positive");
    return pow(Int(10), static_cast<unsigned long>(digits));
}

ConstructionMode parse_mode(const std::string& m) {
    if (m == "third-type") return ConstructionMode::ThirdType;
    if (m == "congruence") return ConstructionMode::Congruence;
    if (m == "line-curve") return ConstructionMode::LineCurve;
    if (m == "general-congruence") return ConstructionMode::GeneralCongruence;
    throw Error(ErrorKind::InvalidInput, "unknown construction mode \"" + m + "\"");
}

std::vector<Form> parse_lines(const std::string& text) {
    std::vector<Form> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(parse_form(part));
    return out;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Each subcommand renders into a buffer; the buffer is written only when the
// command succeeds, so a failed run never leaves a partial output file.
using Runner = std::function<void(const Options&, std::ostream&)>;

void cmd_height(const Options& o, std::ostream& out) {
    auto d = io::divisor_from_json(io::read_json_file(o.divisor));
    emit_json(out, io::to_json(height_report(d, io::parse_point(o.point), places(o.s_text)), o.decimal));
}

void cmd_integral_check(const Options& o, std::ostream& out) {
    auto d = io::divisor_from_json(io::read_json_file(o.divisor));
    ProjPoint p = io::parse_point(o.point);
    if (d.on_support(p)) throw Error(ErrorKind::OnDivisor, p.to_string() + " lies on the divisor");
    out << (is_s_integral(d, p, places(o.s_text)) ? "true" : "false") << '\n';
}

void cmd_enumerate(const Options& o, std::ostream& out) {
    auto d = io::divisor_from_json(io::read_json_file(o.divisor));
    io::write_points_csv(out, enumerate_integral_points(d, places(o.s_text), o.bound, o.threads));
}

void cmd_fibers(const Options& o, std::ostream& out) {
    Pencil pencil = io::pencil_from_json(io::read_json_file(o.pencil));
    std::ifstream in(o.points_file);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + o.points_file);
    emit_json(out, io::fibers_to_json(fibers_hit(io::read_points_csv(in), pencil)));
}

void cmd_weight(const Options& o, std::ostream& out) {
    Pencil pencil = io::pencil_from_json(io::read_json_file(o.pencil));
    auto d = io::divisor_from_json(io::read_json_file(o.divisor));
    emit_json(out, io::to_json(weight_report(pencil, d)));
}

void cmd_family(const Options& o, std::ostream& out) {
    FamilySpec spec = io::family_spec_from_json(io::read_json_file(o.spec));
    emit_json(out, io::to_json(generate_family(spec)));
}

void cmd_construct(const Options& o, std::ostream& out) {
    StreamParams params;
    params.mode = parse_mode(o.mode);
    params.alpha = o.alpha;
    params.m = o.m;
    params.a = parse_rat(o.a);
    params.b = o.b;
    params.max_exponent = o.max_exponent;
    if (o.count < 0) throw Error(ErrorKind::InvalidInput, "--count must be nonnegative");
    auto pts = generalized_unit_stream(params, places(o.s_text), static_cast<std::size_t>(o.count));
    if (o.json_output) {
        json certs = json::array();
        for (const auto& c : pts) certs.push_back(io::to_json(c));
        emit_json(out, {{"divisor", io::to_json(stream_divisor(params))}, {"points", certs}});
        return;
    }
    out << "x,y,z,u,t,value\n";
    for (const auto& c : pts)
        out << c.point.to_csv() << ',' << to_string(c.u) << ',' << to_string(c.t) << ',' << to_string(c.value) << '\n';
}

void cmd_orbit(const Options& o, std::ostream& out) {
    Endo phi = io::endo_from_json(io::read_json_file(o.endo));
    Orbit orbit = iterate_orbit(phi, io::parse_point(o.point), o.n, height_cap(o.cap_digits));
    io::write_orbit_csv(out, orbit);
    if (orbit.truncated) out << "# truncated at index " << orbit.truncated_at << '\n';
}

void cmd_orbit_scan(const Options& o, std::ostream& out) {
    Endo phi = io::endo_from_json(io::read_json_file(o.endo));
    auto d = io::divisor_from_json(io::read_json_file(o.divisor));
    Orbit orbit = scan_orbit_integrality(phi, io::parse_point(o.point), d, places(o.s_text), o.n,
                                         height_cap(o.cap_digits), o.threads);
    io::write_orbit_csv(out, orbit);
    if (orbit.truncated) out << "# truncated at index " << orbit.truncated_at << '\n';
}

void cmd_invariant_lines(const Options& o, std::ostream& out) {
    Endo phi = io::endo_from_json(io::read_json_file(o.endo));
    std::vector<Form> lines = parse_lines(o.lines);
    json per = json::array();
    for (const auto& l : lines) per.push_back({{"line", l.to_string()}, {"invariant", is_invariant_line(phi, l)}});
    emit_json(out, {{"lines", per}, {"completely_invariant", is_completely_invariant_line_set(phi, lines)}});
}

void cmd_sunit(const Options& o, std::ostream& out) {
    emit_json(out, io::s_unit_solutions_to_json(solve_s_unit_bounded(places(o.s_text), o.exp_bound), o.exp_bound));
}

void error_json(std::ostream& err, const std::string& kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Integral points, heights and pencils on the projective plane", "plint"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--out", o.out, "Output file, '-' for standard output");
    app.add_flag("--decimal", o.decimal, "Add approximate decimal renderings of logarithmic heights");
    app.add_option("--threads", o.threads, "Worker threads for enumeration and scans")->check(CLI::Range(1u, 256u));

    Runner runner;
    auto sub = [&](const char* name, const char* help, Runner r) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&runner, r] { runner = r; });
        return s;
    };
    auto divisor = [&](CLI::App* s) { s->add_option("--divisor", o.divisor, "Divisor JSON file")->required(); };
    auto point = [&](CLI::App* s) { s->add_option("--point", o.point, "Point x,y,z")->required(); };
    auto primes = [&](CLI::App* s, bool required) {
        auto opt = s->add_option("--S", o.s_text, "Comma-separated primes (may be empty)");
        if (required) opt->required();
    };
    auto endo = [&](CLI::App* s) { s->add_option("--endo", o.endo, "Endomorphism JSON file")->required(); };

    auto* height = sub("height", "Local and global heights of a point relative to a divisor", cmd_height);
    divisor(height);
    point(height);
    primes(height, false);

    auto* check = sub("integral-check", "Whether a point is S-integral for a divisor", cmd_integral_check);
    divisor(check);
    point(check);
    primes(check, true);

    auto* enumerate = sub("enumerate", "S-integral points of bounded height", cmd_enumerate);
    divisor(enumerate);
    primes(enumerate, true);
    enumerate->add_option("--bound", o.bound, "Largest absolute coordinate")->required();

    auto* fibers = sub("fibers", "Members of a pencil through a list of points", cmd_fibers);
    fibers->add_option("--pencil", o.pencil, "Pencil JSON file")->required();
    fibers->add_option("--points", o.points_file, "Points CSV file")->required();

    auto* weight = sub("weight", "Campana and gcd weights of a divisor and pencil", cmd_weight);
    weight->add_option("--pencil", o.pencil, "Pencil JSON file")->required();
    divisor(weight);

    auto* family = sub("family", "Generate a curve family member and its pencil", cmd_family);
    std::string family_action = "generate";
    family->add_option("action", family_action, "generate")->check(CLI::IsMember({"generate"}));
    family->add_option("--spec", o.spec, "Family spec JSON file")->required();

    auto* construct = sub("construct", "Explicit S-integral points from S-units", cmd_construct);
    construct->add_option("--mode", o.mode, "third-type, congruence, line-curve or general-congruence")
        ->check(CLI::IsMember({"third-type", "congruence", "line-curve", "general-congruence"}));
    primes(construct, true);
    construct->add_option("--count", o.count, "Number of points");
    construct->add_option("--alpha", o.alpha, "Third-type exponent alpha");
    construct->add_option("--m", o.m, "Third-type exponent m");
    construct->add_option("--a", o.a, "Congruence parameter a");
    construct->add_option("--b", o.b, "Congruence exponent b");
    construct->add_option("--max-exponent", o.max_exponent, "Largest unit exponent tried");
    construct->add_flag("--json", o.json_output, "Emit certificates as JSON");

    auto* orbit = sub("orbit", "Orbit of a point under an endomorphism", cmd_orbit);
    endo(orbit);
    point(orbit);
    orbit->add_option("--n", o.n, "Last orbit index");
    orbit->add_option("--cap-digits", o.cap_digits, "Stop once a coordinate exceeds 10^digits");

    auto* scan = sub("orbit-scan", "S-integrality along an orbit", cmd_orbit_scan);
    endo(scan);
    point(scan);
    divisor(scan);
    primes(scan, true);
    scan->add_option("--n", o.n, "Last orbit index");
    scan->add_option("--cap-digits", o.cap_digits, "Stop once a coordinate exceeds 10^digits");

    auto* inv = sub("invariant-lines", "Invariance of lines under an endomorphism", cmd_invariant_lines);
    endo(inv);
    inv->add_option("--lines", o.lines, "Comma-separated linear forms, e.g. X,Y,Z")->required();

    auto* sunit = sub("sunit", "Bounded search for solutions of u + v = 1 in S-units", cmd_sunit);
    primes(sunit, true);
    sunit->add_option("--exp-bound", o.exp_bound, "Largest absolute exponent")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        std::ostringstream buffer;
        runner(o, buffer);
        if (o.out == "-") {
            out << buffer.str();
        } else {
            std::ofstream file(o.out);
            if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + o.out);
            file << buffer.str();
        }
        return 0;
    } catch (const Error& e) {
        error_json(err, std::string(to_string(e.kind())), e.what());
        return 1;
    }
}

}  // namespace plint
