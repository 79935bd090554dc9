// Command-line front end: ad-hoc tau / pi / symmetric-function computations,
// batch theorem verification, and universal-ring construction.

#include "dpinv/gamma.hpp"
#include "dpinv/invariants.hpp"
#include "dpinv/report.hpp"
#include "dpinv/symfunc.hpp"
#include "dpinv/theorems.hpp"
#include "dpinv/universal.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace dpinv;

namespace {

/// Prints a parse error with a caret under the offending position.
int report_parse_error(const std::string& input, const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n  " << input << "\n  "
              << std::string(std::min(e.position(), input.size()), ' ') << "^\n";
    return 2;
}

std::vector<unsigned> parse_levels(const std::string& text) {
    std::vector<unsigned> out;
    auto number = [&](const std::string& s) -> unsigned {
        if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit) || s.size() > 4)
            throw CLI::ValidationError("--n", "expected a level such as 2, 1..3 or 1,3");
        unsigned v = static_cast<unsigned>(std::stoul(s));
        if (v == 0)
            throw CLI::ValidationError("--n", "levels start at 1");
        return v;
    };
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (auto dots = item.find(".."); dots != std::string::npos) {
            unsigned lo = number(item.substr(0, dots)), hi = number(item.substr(dots + 2));
            for (unsigned n = lo; n <= hi; ++n)
                out.push_back(n);
        } else {
            out.push_back(number(item));
        }
    }
    if (out.empty())
        throw CLI::ValidationError("--n", "no levels given");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GammaElement at_level(GammaElement g, std::optional<unsigned> n) {
    if (!n || !g.level().is_limit())
        return g;
    return sigma_n(g, *n);
}

int cmd_tau(const std::string& lhs_text, const std::string& rhs_text, std::optional<unsigned> n,
            const Alphabet& alphabet) {
    GammaElement lhs, rhs;
    try {
        lhs = GammaElement::parse(lhs_text, alphabet);
    } catch (const ParseError& e) {
        return report_parse_error(lhs_text, e);
    }
    try {
        rhs = GammaElement::parse(rhs_text, alphabet);
    } catch (const ParseError& e) {
        return report_parse_error(rhs_text, e);
    }
    std::cout << tau(at_level(lhs, n), at_level(rhs, n)).to_string(alphabet) << "\n";
    return 0;
}

int cmd_pi(const std::string& text, std::optional<unsigned> n, const Alphabet& alphabet) {
    GammaElement g;
    try {
        g = GammaElement::parse(text, alphabet);
    } catch (const ParseError& e) {
        return report_parse_error(text, e);
    }
    if (g.level().is_limit() && !n)
        throw ContextMismatch("pi needs an element of Gamma_n; give a level inside the brackets or --n");
    g = at_level(g, n);
    const unsigned level = g.level().n();
    if (n && *n != level)
        throw ContextMismatch("element lives at level " + g.level().to_string() + " but --n is " +
                              std::to_string(*n));
    std::cout << pi_n_eval(g, level).to_string(alphabet) << "\n";
    return 0;
}

int cmd_sym(const std::string& text, const std::string& target) {
    SymPoly f(SymBasis::monomial, 1);
    try {
        f = SymPoly::parse(text);
    } catch (const ParseError& e) {
        return report_parse_error(text, e);
    }
    SymBasis to = f.basis() == SymBasis::monomial ? SymBasis::elementary : SymBasis::monomial;
    if (target == "e")
        to = SymBasis::elementary;
    else if (target == "m")
        to = SymBasis::monomial;
    const Partition& alpha = f.terms().empty() ? Partition() : f.terms().begin()->first;
    if (f.basis() == SymBasis::monomial && alpha.length() > f.nvars())
        throw std::invalid_argument("m" + alpha.to_string() + " vanishes with only " + std::to_string(f.nvars()) +
                                    " variables");
    SymPoly out = to == SymBasis::elementary ? to_elementary(f) : to_monomial(f);
    std::cout << f.to_string() << " = " << out.to_string() << "  (" << f.nvars() << " variables)\n";
    return 0;
}

struct VerifyConfig {
    std::string theorem = "2.2.2";
    std::string levels = "2";
    std::size_t letters = 2;
    unsigned maxdeg = 4;
    bool strict_z = false;
    std::uint64_t seed = 0;
    std::string out;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    bool timing = false;
};

std::vector<Report> run_verification(const VerifyConfig& cfg) {
    const auto levels = parse_levels(cfg.levels);
    const Alphabet alphabet = Alphabet::standard(cfg.letters);
    RunOptions options;
    options.workers = cfg.workers;
    options.seed = cfg.seed;
    options.strict_z = cfg.strict_z;
    options.timing = cfg.timing;

    // sample elements, kept only if they fit the alphabet and the degree bound
    auto sample = [&](std::initializer_list<const char*> texts) {
        std::vector<FreePoly> out;
        for (const char* t : texts) {
            std::string s(t);
            bool fits = std::all_of(s.begin(), s.end(), [&](char c) { return !std::isalpha(c) || alphabet.find(c); });
            if (!fits)
                continue;
            FreePoly f = FreePoly::parse(s, alphabet);
            if (f.degree() <= cfg.maxdeg)
                out.push_back(std::move(f));
        }
        return out;
    };

    std::vector<Report> reports;
    auto append = [&](std::vector<Report> more) { reports.insert(reports.end(), more.begin(), more.end()); };
    if (cfg.theorem == "2.2.2") {
        for (unsigned n : levels)
            append(verify_thm_2_2_2(n, cfg.letters, cfg.maxdeg, options));
    } else if (cfg.theorem == "zubkov") {
        for (unsigned n : levels)
            append(verify_zubkov(n, cfg.letters, cfg.maxdeg, options));
    } else if (cfg.theorem == "tau-axioms") {
        append(verify_tau_axioms(cfg.letters, cfg.maxdeg, levels.back(), options));
    } else if (cfg.theorem == "plethysm") {
        append(verify_plethysm(sample({"x", "xy", "x+y"}), levels, {1, 2}, alphabet, options));
    } else if (cfg.theorem == "ch") {
        const auto fs = sample({"x", "xy", "x+y", "x+xy"});
        std::vector<std::function<Report()>> jobs;
        for (unsigned n : levels)
            for (const auto& f : fs)
                jobs.push_back([f, n, alphabet] { return verify_cayley_hamilton(f, n, alphabet); });
        append(run_ordered(jobs, options));
    }
    return reports;
}

int cmd_verify(const VerifyConfig& cfg) {
    const auto reports = run_verification(cfg);
    const std::string json = reports_to_json(reports);
    std::ostream& log = cfg.out.empty() ? std::cerr : std::cout;
    if (cfg.out.empty()) {
        std::cout << json;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot write " + cfg.out);
        file << json;
    }
    for (const auto& r : reports) {
        log << (r.pass ? "PASS " : "FAIL ") << r.theorem;
        if (!r.label.empty())
            log << " " << r.label;
        log << " n=" << r.n << " d=[";
        for (std::size_t k = 0; k < r.multidegree.size(); ++k)
            log << (k ? "," : "") << r.multidegree[k];
        log << "] lhs=" << r.lhs_rank << " rhs=" << r.rhs_rank << " kernel=" << r.kernel_rank << "\n";
    }
    log << reports.size() << " checks, " << std::count_if(reports.begin(), reports.end(), [](const Report& r) {
        return !r.pass;
    }) << " failed\n";
    return all_pass(reports) ? 0 : 1;
}

nlohmann::ordered_json matrix_json(const MatrixPoly& m, const Alphabet& alphabet) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.order(); ++j)
            row.push_back(m(i, j).to_string(alphabet));
        rows.push_back(row);
    }
    return rows;
}

int cmd_universal(const std::string& path, unsigned n, const std::string& member, std::optional<unsigned> degree) {
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot read " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    const Presentation p = Presentation::parse_json(buffer.str());
    const UniversalRing ring = build_An(p, n);

    nlohmann::ordered_json out;
    out["n"] = n;
    out["generators"] = nlohmann::ordered_json::array();
    for (char c : p.generators.symbols())
        out["generators"].push_back(std::string(1, c));
    out["ideal"] = nlohmann::ordered_json::array();
    for (const auto& g : ring.ideal)
        out["ideal"].push_back(g.to_string(p.generators));
    out["images"] = nlohmann::ordered_json::object();
    for (std::size_t s = 0; s < ring.images.size(); ++s)
        out["images"][std::string(1, p.generators.symbol(static_cast<Letter>(s)))] =
            matrix_json(ring.images[s], p.generators);

    if (!member.empty()) {
        FreePoly f;
        try {
            f = FreePoly::parse(member, p.generators);
        } catch (const ParseError& e) {
            return report_parse_error(member, e);
        }
        const MatrixPoly image = jnr_image(p, n, f);
        unsigned bound = 0;
        for (const auto& e : image.entries())
            bound = std::max(bound, e.total_degree());
        if (degree)
            bound = *degree;
        nlohmann::ordered_json m;
        m["element"] = f.to_string(p.generators);
        m["degree"] = bound;
        m["image"] = matrix_json(image, p.generators);
        auto entries = nlohmann::ordered_json::array();
        bool all_in = true;
        for (std::size_t i = 0; i < image.order(); ++i)
            for (std::size_t j = 0; j < image.order(); ++j) {
                nlohmann::ordered_json entry;
                entry["row"] = i + 1;
                entry["col"] = j + 1;
                auto cert = ideal_membership(ring.ideal, image(i, j), n, p.generators.size(), bound);
                entry["in_ideal"] = cert.has_value();
                all_in = all_in && cert.has_value();
                if (cert) {
                    auto terms = nlohmann::ordered_json::array();
                    for (const auto& t : *cert) {
                        nlohmann::ordered_json term;
                        term["coefficient"] = t.coefficient.get_str();
                        term["monomial"] = t.monomial.is_one() ? std::string("1") : t.monomial.to_string(p.generators);
                        term["generator"] = t.generator;
                        terms.push_back(term);
                    }
                    entry["certificate"] = terms;
                }
                entries.push_back(entry);
            }
        m["entries"] = entries;
        m["in_ideal"] = all_in;
        out["membership"] = m;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Divided powers of the free ring and invariants of generic matrices"};
    app.require_subcommand(1);

    std::string alphabet_symbols = "xyzwvu";
    std::optional<unsigned> level;

    auto* tau_cmd = app.add_subcommand("tau", "product of two elements of P_S or Gamma_n");
    std::string lhs, rhs;
    tau_cmd->add_option("lhs", lhs, "e.g. \"[x^(1)|lim]\"")->required();
    tau_cmd->add_option("rhs", rhs)->required();
    tau_cmd->add_option("--n", level, "project limit operands to Gamma_n first");
    tau_cmd->add_option("--alphabet", alphabet_symbols, "ordered letters");

    auto* pi_cmd = app.add_subcommand("pi", "evaluate pi_n on an element of Gamma_n");
    std::string element;
    pi_cmd->add_option("element", element, "e.g. \"[x^(2)|n=2]\"")->required();
    pi_cmd->add_option("--n", level, "level (projects a limit element)");
    pi_cmd->add_option("--alphabet", alphabet_symbols, "ordered letters");

    auto* verify_cmd = app.add_subcommand("verify", "degree-bounded theorem verification");
    VerifyConfig cfg;
    verify_cmd->add_option("--thm", cfg.theorem, "theorem to check")
        ->check(CLI::IsMember({"2.2.2", "ch", "plethysm", "zubkov", "tau-axioms"}))
        ->capture_default_str();
    verify_cmd->add_option("--n", cfg.levels, "levels: 2, 1..3 or 1,3")->capture_default_str();
    verify_cmd->add_option("--letters", cfg.letters, "alphabet size")
        ->check(CLI::Range(1, 6))
        ->capture_default_str();
    verify_cmd->add_option("--maxdeg", cfg.maxdeg, "maximal total degree")->capture_default_str();
    verify_cmd->add_flag("--strict-z", cfg.strict_z, "also require torsion-free relation lattices (Smith form)");
    verify_cmd->add_option("--seed", cfg.seed, "seed for random conjugation checks")->capture_default_str();
    verify_cmd->add_option("--out", cfg.out, "write the JSON report here instead of standard output");
    verify_cmd->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--timing", cfg.timing, "record wall time per check (output then varies between runs)");

    auto* universal_cmd = app.add_subcommand("universal", "ideal and generator images of A_n(R)");
    std::string presentation;
    unsigned universal_n = 1;
    std::string member;
    std::optional<unsigned> member_degree;
    universal_cmd->add_option("presentation", presentation, "JSON presentation file")->required();
    universal_cmd->add_option("--n", universal_n, "matrix order")->check(CLI::PositiveNumber)->capture_default_str();
    universal_cmd->add_option("--member", member, "certify that the image of this element lies in the ideal");
    universal_cmd->add_option("--degree", member_degree, "degree bound for the membership search");

    auto* sym_cmd = app.add_subcommand("sym", "convert between the m- and e-bases");
    std::string sym_text, sym_target;
    sym_cmd->add_option("expr", sym_text, "e.g. \"m[3,1,1]@5\" or \"e[2,1]\"")->required();
    sym_cmd->add_option("--to", sym_target, "target basis (default: the other one)")->check(CLI::IsMember({"e", "m"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (level && *level == 0)
            throw std::invalid_argument("--n must be positive");
        if (*tau_cmd)
            return cmd_tau(lhs, rhs, level, Alphabet(alphabet_symbols));
        if (*pi_cmd)
            return cmd_pi(element, level, Alphabet(alphabet_symbols));
        if (*verify_cmd)
            return cmd_verify(cfg);
        if (*universal_cmd)
            return cmd_universal(presentation, universal_n, member, member_degree);
        if (*sym_cmd)
            return cmd_sym(sym_text, sym_target);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
