#include "borelres/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "borelres/borel.hpp"
#include "borelres/builders.hpp"
#include "borelres/io.hpp"
#include "borelres/koszul.hpp"
#include "borelres/lattice.hpp"
#include "borelres/resolution.hpp"

namespace borelres {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::size_t>& v)
{
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s << (i ? ", " : "") << v[i];
    s << ")";
    return s.str();
}

Json indexed_list(std::span<const Monomial> ms)
{
    Json a = Json::array();
    for (const auto& m : ms)
        a.push_back(indexed(m));
    return a;
}

Json header(const RunConfig& cfg)
{
    Json j;
    j["tool"] = "borelres";
    j["version"] = kToolVersion;
    j["config_hash"] = config_hash(cfg);
    j["command"] = cfg.command;
    return j;
}

void emit(const std::string& path, const Json& j)
{
    if (!path.empty())
        write_text_file(path, j.dump(2) + "\n");
}

std::size_t require_vars(const RunConfig& cfg)
{
    if (cfg.vars == 0)
        throw InputError("--vars must be at least 1");
    return cfg.vars;
}

bool has_ideal(const RunConfig& cfg)
{
    return !cfg.borel.empty() || cfg.degree.has_value();
}

BorelIdeal ideal_from(const RunConfig& cfg)
{
    const std::size_t n = require_vars(cfg);
    if (cfg.borel.empty()) {
        if (!cfg.degree || *cfg.degree == 0)
            throw InputError("an ideal needs --borel or --degree >= 1");
        const std::vector<Monomial> top{Monomial::power_of(n, n, *cfg.degree)};
        return BorelIdeal::from_borel_generators(n, top);
    }
    IdealSpec spec = parse_ideal_spec(cfg.borel, n);
    for (const auto& g : spec.gens)
        if (g.degree() != spec.gens.front().degree())
            throw InputError("generators must share one degree (use `lattice` for mixed degrees)");
    return spec.kind == IdealSpec::Kind::Borel ? BorelIdeal::from_borel_generators(n, spec.gens)
                                               : BorelIdeal::from_generating_set(n, spec.gens);
}

int cmd_gen(const RunConfig& cfg, std::ostream& out)
{
    const std::size_t n = require_vars(cfg);
    BorelIdeal ideal = [&] {
        if (!cfg.random)
            return ideal_from(cfg);
        if (!cfg.degree || *cfg.degree == 0 || cfg.gens == 0)
            throw InputError("--random needs --degree >= 1 and --gens >= 1");
        return random_borel_minimal(n, *cfg.degree, cfg.gens, cfg.seed);
    }();
    out << "I = <" << to_string(ideal.borel_generators()) << "> in " << n << " variables, degree "
        << ideal.degree() << "\n";
    out << "|G(I)| = " << ideal.generators().size() << "\n";
    out << to_string(ideal.generators()) << "\n";

    Json j = header(cfg);
    j["vars"] = n;
    j["degree"] = ideal.degree();
    j["borel_generators"] = indexed_list(ideal.borel_generators());
    j["generators"] = indexed_list(ideal.generators());
    emit(cfg.out_path, j);
    return 0;
}

int cmd_min(const RunConfig& cfg, std::ostream& out)
{
    const std::size_t n = require_vars(cfg);
    const auto ms = parse_ideal_spec(cfg.borel, n).gens;
    Json j = header(cfg);
    j["vars"] = n;
    if (cfg.with.empty()) {
        if (ms.size() < 2)
            throw InputError("min needs two monomials in --borel, or --with");
        Monomial acc = ms.front();
        for (std::size_t i = 1; i < ms.size(); ++i)
            acc = min_monomial(acc, ms[i]);
        out << "MIN(" << to_string(ms) << ") = " << to_string(acc) << "\n";
        out << "|G(<MIN>)| = " << expand_principal(acc).size() << "\n";
        j["inputs"] = indexed_list(ms);
        j["min"] = indexed(acc);
    }
    else {
        if (ms.size() != 1)
            throw InputError("--with needs exactly one monomial in --borel");
        const auto others = parse_ideal_spec(cfg.with, n).gens;
        const BorelIdeal other = BorelIdeal::from_borel_generators(n, others);
        const BorelIdeal result = intersect_borel(ms.front(), other);
        Json mins = Json::array();
        for (const auto& g : other.borel_generators()) {
            Monomial m = min_monomial(ms.front(), g);
            out << "MIN(" << to_string(ms.front()) << ", " << to_string(g) << ") = " << to_string(m) << "\n";
            mins.push_back(indexed(m));
        }
        out << "<" << to_string(ms.front()) << "> ∩ <" << to_string(other.borel_generators()) << "> = <"
            << to_string(result.borel_generators()) << ">\n";
        out << "|G| = " << result.generators().size() << "\n";
        j["monomial"] = indexed(ms.front());
        j["with"] = indexed_list(other.borel_generators());
        j["mins"] = std::move(mins);
        j["borel_generators"] = indexed_list(result.borel_generators());
        j["generators"] = indexed_list(result.generators());
    }
    emit(cfg.out_path, j);
    return 0;
}

void describe(std::ostream& out, const std::string& name, const LabeledComplex& x)
{
    out << name << ": " << x.vertex_count() << " vertices, dimension " << x.dimension() << ", f = "
        << join(f_vector(x)) << "\n";
}

int cmd_complex(const RunConfig& cfg, std::ostream& out)
{
    const std::size_t n = require_vars(cfg);
    const std::string method = cfg.method.empty() ? "recursive" : cfg.method;
    if (method != "recursive" && method != "extract" && method != "both")
        throw InputError("--method must be recursive, extract or both");
    LabeledComplex x;
    int status = 0;
    if (cfg.target == "P") {
        if (!cfg.degree || *cfg.degree == 0)
            throw InputError("complex P needs --degree >= 1");
        x = build_P(n, VarRange(1, n), *cfg.degree);
        describe(out, "P_" + std::to_string(*cfg.degree), x);
    }
    else if (cfg.target == "Q") {
        if (cfg.borel.empty())
            throw InputError("complex Q needs --borel");
        const BorelIdeal ideal = ideal_from(cfg);
        if (method == "extract") {
            x = extract_Q(ideal);
            describe(out, "Q (extracted)", x);
        }
        else {
            x = build_Q_union(ideal);
            describe(out, "Q (recursive)", x);
            if (method == "both") {
                LabeledComplex e = extract_Q(ideal);
                describe(out, "Q (extracted)", e);
                const bool same = x.same_cells(e);
                out << (same ? "recursive and extracted complexes agree cell for cell\n"
                             : "MISMATCH between recursive and extracted complexes\n");
                status = same ? 0 : 1;
            }
        }
    }
    else {
        throw InputError("complex target must be P or Q");
    }
    if (!cfg.out_path.empty())
        write_text_file(cfg.out_path, export_json(x));
    return status;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const Field field = Field::parse(cfg.field);
    LabeledComplex x;
    std::vector<Monomial> gens;
    if (!cfg.complex_path.empty()) {
        x = import_json(read_text_file(cfg.complex_path));
        if (cfg.vars != 0 && cfg.vars != x.vars())
            throw InputError("--vars differs from the complex file");
        gens = has_ideal(cfg) ? [&] {
            RunConfig c = cfg;
            c.vars = x.vars();
            return ideal_from(c).generators();
        }()
                              : x.vertex_labels();
    }
    else {
        const BorelIdeal ideal = ideal_from(cfg);
        x = cfg.borel.empty() ? build_P(ideal.vars(), VarRange(1, ideal.vars()), ideal.degree())
                              : build_Q_union(ideal);
        gens = ideal.generators();
    }

    VerificationReport report;
    try {
        report = verify_resolution(x, gens, field, cfg.jobs);
    }
    catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    report.checks.push_back({"minimal", check_minimal(x), std::nullopt, {}, ""});

    std::size_t failed = 0;
    for (const auto& c : report.checks)
        failed += !c.passed;
    describe(out, "complex", x);
    out << "field " << field.to_string() << ": " << report.checks.size() << " checks, " << failed
        << " failed\n";
    std::size_t shown = 0;
    for (const auto& c : report.checks) {
        if (c.passed || shown++ >= 10)
            continue;
        out << "  FAIL " << c.name;
        if (c.degree)
            out << " at " << to_string(*c.degree);
        for (std::size_t k = 0; k < c.homology.size(); ++k)
            if (c.homology[k])
                out << "  H~_" << static_cast<long>(k) - 1 << " = " << c.homology[k];
        out << "\n";
    }
    out << (report.passed() ? "PASS\n" : "FAIL\n");

    Json j = header(cfg);
    j.update(report_to_json(report));
    emit(cfg.report_path, j);
    return report.passed() ? 0 : 1;
}

Json betti_json(const BettiTable& t)
{
    Json a = Json::array();
    for (const auto& [i, row] : t.rows())
        for (const auto& [b, count] : row)
            a.push_back({{"i", i}, {"degree", indexed(b)}, {"beta", count}});
    return a;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out)
{
    const Field field = Field::parse(cfg.field);
    const std::string method = cfg.method.empty() ? "all" : cfg.method;
    if (method != "cellular" && method != "koszul" && method != "ek" && method != "all")
        throw InputError("--method must be cellular, koszul, ek or all");
    const BorelIdeal ideal = ideal_from(cfg);
    Json j = header(cfg);
    j["field"] = field.to_string();
    int status = 0;

    std::optional<BettiTable> cellular, koszul;
    std::optional<std::vector<std::size_t>> ek;
    if (method == "cellular" || method == "all") {
        try {
            auto res = CertifiedResolution::certify(build_Q_union(ideal), ideal.generators(), field, cfg.jobs);
            cellular = betti_from_cells(res);
        }
        catch (const std::runtime_error& e) {
            out << "cellular: " << e.what() << "\n";
            status = 1;
        }
    }
    if (method == "koszul" || method == "all") {
        const LcmLattice lattice = LcmLattice::build(ideal.generators());
        koszul = betti_via_koszul(ideal.generators(), lattice.elements(), field, cfg.jobs);
    }
    if (method == "ek" || method == "all") {
        auto raw = ek_betti(ideal);
        ek = trim_zeros(std::vector<std::size_t>(raw.begin(), raw.end()));
    }

    Json totals;
    auto row = [&](const char* name, const std::vector<std::size_t>& v) {
        out << std::left << std::setw(10) << name << join(v) << "\n";
        totals[name] = v;
    };
    if (cellular)
        row("cellular", cellular->totals());
    if (koszul)
        row("koszul", koszul->totals());
    if (ek)
        row("ek", *ek);
    j["totals"] = totals;

    if (method == "all" && status == 0) {
        const bool agree = cellular->totals() == koszul->totals() && koszul->totals() == *ek &&
                           *cellular == *koszul;
        out << (agree ? "all three methods agree (multigraded cellular = koszul)\n"
                      : "DISAGREEMENT between methods\n");
        j["agree"] = agree;
        status = agree ? 0 : 1;
    }
    if (koszul)
        j["multigraded"] = betti_json(*koszul);
    else if (cellular)
        j["multigraded"] = betti_json(*cellular);
    emit(cfg.out_path, j);
    return status;
}

int cmd_lattice(const RunConfig& cfg, std::ostream& out)
{
    const std::size_t n = require_vars(cfg);
    if (cfg.borel.empty())
        throw InputError("lattice needs --borel");
    const IdealSpec spec = parse_ideal_spec(cfg.borel, n);
    const std::vector<Monomial> gens =
        spec.kind == IdealSpec::Kind::Borel ? borel_closure(spec.gens) : minimalize(spec.gens);
    const LcmLattice lattice = LcmLattice::build(gens);
    out << "|G(I)| = " << gens.size() << ": " << to_string(gens) << "\n";
    out << "|L_I| = " << lattice.size() << ", covers = " << lattice.covers().size() << "\n";

    Json j = header(cfg);
    j["vars"] = n;
    j["generators"] = indexed_list(gens);
    j["elements"] = indexed_list(lattice.elements());
    Json covers = Json::array();
    for (const auto& [a, b] : lattice.covers())
        covers.push_back(Json::array({indexed(lattice.elements()[a]), indexed(lattice.elements()[b])}));
    j["covers"] = std::move(covers);

    int status = 0;
    const std::string check = cfg.check.empty() ? "ranked" : cfg.check;
    if (check == "ranked") {
        const RankReport r = is_ranked(lattice);
        out << (r.ranked ? "ranked\n" : "NOT ranked\n");
        Json rj;
        rj["ranked"] = r.ranked;
        rj["equigenerated"] = r.equigenerated;
        if (r.witness_element) {
            out << "  maximal chains of different lengths below " << to_string(*r.witness_element) << "\n";
            rj["witness_element"] = indexed(*r.witness_element);
        }
        if (r.witness_cover) {
            const auto& [a, b] = *r.witness_cover;
            out << "  witness cover " << to_string(a) << " -> " << to_string(b) << " (degree " << a.degree()
                << " -> " << b.degree() << ")\n";
            rj["witness_cover"] = Json::array({indexed(a), indexed(b)});
        }
        j["ranked"] = std::move(rj);
        status = r.ranked ? 0 : 1;
    }
    else if (check == "labels") {
        Monomial lo = lattice.bottom(), hi = lattice.top();
        if (!cfg.interval.empty()) {
            const auto sep = cfg.interval.find("..");
            if (sep == std::string::npos)
                throw InputError("--interval must look like m..n");
            lo = parse_monomial(cfg.interval.substr(0, sep), n);
            hi = parse_monomial(cfg.interval.substr(sep + 2), n);
        }
        const NaturalLabelReport r = natural_label_check(lattice, lo, hi);
        out << "interval [" << to_string(lo) << ", " << to_string(hi) << "]: " << r.chains.size()
            << " maximal chains\n";
        Json chains = Json::array();
        for (const auto& c : r.chains) {
            std::ostringstream line;
            for (std::size_t k = 0; k < c.elements.size(); ++k) {
                line << to_string(c.elements[k]);
                if (k < c.labels.size())
                    line << " -" << c.labels[k] << "- ";
            }
            if (chains.size() < 50)
                out << "  " << line.str() << "\n";
            chains.push_back({{"elements", indexed_list(c.elements)}, {"labels", c.labels}});
        }
        out << "increasing chain (bottom-up): " << (r.has_increasing ? "yes" : "no") << "\n";
        out << "decreasing chain (top-down): " << (r.has_decreasing ? "yes" : "no") << "\n";
        j["labels"] = {{"interval", Json::array({indexed(lo), indexed(hi)})},
                       {"chains", std::move(chains)},
                       {"has_increasing", r.has_increasing},
                       {"has_decreasing", r.has_decreasing}};
    }
    else {
        throw InputError("--check must be ranked or labels");
    }
    emit(cfg.out_path, j);
    return status;
}

// An input complex is identified by its contents, so relocated copies hash alike.
std::string complex_key(const std::string& path)
{
    if (path.empty())
        return "-";
    try {
        return read_text_file(path);
    }
    catch (const std::exception&) {
        return path;
    }
}

}  // namespace

std::string config_hash(const RunConfig& cfg)
{
    std::ostringstream key;
    key << cfg.command << '\x1f' << cfg.target << '\x1f' << cfg.vars << '\x1f'
        << (cfg.degree ? std::to_string(*cfg.degree) : "-") << '\x1f' << cfg.borel << '\x1f' << cfg.with
        << '\x1f' << cfg.field << '\x1f' << cfg.method << '\x1f' << cfg.check << '\x1f' << cfg.interval
        << '\x1f' << complex_key(cfg.complex_path) << '\x1f' << cfg.random << '\x1f' << cfg.gens << '\x1f' << cfg.seed;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : key.str()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    return hex.str();
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        if (cfg.command == "gen")
            return cmd_gen(cfg, out);
        if (cfg.command == "min")
            return cmd_min(cfg, out);
        if (cfg.command == "complex")
            return cmd_complex(cfg, out);
        if (cfg.command == "verify")
            return cmd_verify(cfg, out);
        if (cfg.command == "betti")
            return cmd_betti(cfg, out);
        if (cfg.command == "lattice")
            return cmd_lattice(cfg, out);
        err << "error: unknown command '" << cfg.command << "'\n";
        return 2;
    }
    catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cellular resolutions of Borel fixed ideals generated in one degree", "borelres"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    RunConfig cfg;
    bool field_given = false;
    std::string target;

    auto common = [&](CLI::App* sub, bool ideal) {
        sub->add_option("--vars", cfg.vars, "number of variables");
        if (ideal) {
            sub->add_option("--borel", cfg.borel, "ideal: 'borel: m1, ...' or 'mono: m1, ...'");
            sub->add_option("--degree", cfg.degree, "degree d (ideal <x_n^d> if --borel is absent)");
        }
    };
    auto field_opt = [&](CLI::App* sub) {
        sub->add_option_function<std::string>(
            "--field", [&](const std::string& f) { cfg.field = f; field_given = true; }, "q or p:<prime>");
        sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    };

    auto* gen = app.add_subcommand("gen", "expand an ideal to G(I)");
    common(gen, true);
    gen->add_flag("--random", cfg.random, "draw a random ideal");
    gen->add_option("--gens", cfg.gens, "number of random draws");
    gen->add_option("--seed", cfg.seed, "random seed");
    gen->add_option("--out", cfg.out_path, "JSON output");

    auto* min = app.add_subcommand("min", "MIN of monomials, or <m> ∩ J");
    common(min, false);
    min->add_option("--borel", cfg.borel, "monomials")->required();
    min->add_option("--with", cfg.with, "Borel generators of J");
    min->add_option("--out", cfg.out_path, "JSON output");

    auto* cx = app.add_subcommand("complex", "build P_d or Q(I)");
    cx->add_option("target", target, "P or Q")->required();
    common(cx, true);
    cx->add_option("--method", cfg.method, "recursive | extract | both");
    cx->add_option("--out", cfg.out_path, "JSON output");

    auto* verify = app.add_subcommand("verify", "check that a complex supports a minimal resolution");
    common(verify, true);
    field_opt(verify);
    verify->add_option("--complex", cfg.complex_path, "complex JSON file");
    verify->add_option("--report", cfg.report_path, "JSON report");

    auto* betti = app.add_subcommand("betti", "Betti numbers by cells, Koszul oracle and EK count");
    common(betti, true);
    field_opt(betti);
    betti->add_option("--method", cfg.method, "cellular | koszul | ek | all");
    betti->add_option("--out", cfg.out_path, "JSON output");

    auto* lattice = app.add_subcommand("lattice", "lcm-lattice rankedness and natural labels");
    common(lattice, false);
    lattice->add_option("--borel", cfg.borel, "generators (mixed degrees allowed)");
    lattice->add_option("--check", cfg.check, "ranked | labels");
    lattice->add_option("--interval", cfg.interval, "m..n");
    lattice->add_option("--out", cfg.out_path, "JSON output");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    for (auto* sub : app.get_subcommands())
        cfg.command = sub->get_name();
    cfg.target = target;
    if (!field_given)
        if (const char* env = std::getenv(kFieldEnv); env && *env)
            cfg.field = env;
    return run_command(cfg, out, err);
}

}  // namespace borelres
