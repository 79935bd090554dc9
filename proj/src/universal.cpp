#include "dpinv/universal.hpp"

#include "json.hpp"

#include <functional>
#include <stdexcept>

namespace dpinv {

Presentation Presentation::parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed presentation JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
        throw std::invalid_argument("presentation needs a \"generators\" array");
    std::string symbols;
    for (const auto& g : doc["generators"]) {
        if (!g.is_string() || g.get<std::string>().size() != 1)
            throw std::invalid_argument("each generator must be a one-letter string");
        symbols += g.get<std::string>();
    }
    Presentation p{Alphabet(symbols), {}};
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array())
            throw std::invalid_argument("\"relations\" must be an array");
        for (const auto& r : doc["relations"]) {
            if (!r.is_string())
                throw std::invalid_argument("each relation must be a string");
            const std::string rel = r.get<std::string>();
            try {
                p.relations.push_back(FreePoly::parse(rel, p.generators));
            } catch (const ParseError& e) {
                throw std::invalid_argument("relation \"" + rel + "\" at position " + std::to_string(e.position()) +
                                            ": " + e.what());
            }
        }
    }
    return p;
}

UniversalRing build_An(const Presentation& p, unsigned n) {
    UniversalRing ring;
    ring.n = n;
    for (const auto& r : p.relations) {
        const MatrixPoly image = jn_eval(r, n);
        for (const auto& e : image.entries())
            if (!e.is_zero())
                ring.ideal.push_back(e);
    }
    for (std::size_t s = 0; s < p.generators.size(); ++s)
        ring.images.push_back(generic_matrix(static_cast<Letter>(s), n));
    return ring;
}

MatrixPoly jnr_image(const Presentation& p, unsigned n, const FreePoly& f) {
    for (const auto& [w, c] : f.terms())
        for (Letter l : w.letters())
            if (l >= p.generators.size())
                throw std::invalid_argument("element uses a letter that is not a generator of the presentation");
    return jn_eval(f, n);
}

namespace {

/// All monomials of total degree <= max_degree in the given variables.
std::vector<Monomial> monomials_up_to(const std::vector<Variable>& vars, unsigned max_degree) {
    std::vector<Monomial> out;
    std::vector<Monomial::Power> powers;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
        if (k == vars.size()) {
            out.push_back(Monomial::from_powers(powers));
            return;
        }
        rec(k + 1, left);
        for (unsigned e = 1; e <= left; ++e) {
            powers.emplace_back(vars[k].code(), e);
            rec(k + 1, left - e);
            powers.pop_back();
        }
    };
    rec(0, max_degree);
    return out;
}

std::vector<Variable> entry_variables(unsigned n, std::size_t letters) {
    std::vector<Variable> vars;
    for (std::size_t s = 0; s < letters; ++s)
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                vars.push_back(Variable::entry(static_cast<Letter>(s), i, j));
    return vars;
}

struct Product {
    Monomial monomial;
    std::size_t generator;
    CommPoly value;
};

std::vector<Product> truncated_products(const std::vector<CommPoly>& ideal, unsigned n, std::size_t letters,
                                        unsigned degree) {
    const auto vars = entry_variables(n, letters);
    std::vector<Product> out;
    for (std::size_t g = 0; g < ideal.size(); ++g) {
        const unsigned dg = ideal[g].total_degree();
        if (dg > degree)
            continue;
        for (const auto& m : monomials_up_to(vars, degree - dg))
            out.push_back({m, g, CommPoly::monomial(m) * ideal[g]});
    }
    return out;
}

} // namespace

std::optional<MembershipCertificate> ideal_membership(const std::vector<CommPoly>& ideal, const CommPoly& target,
                                                      unsigned n, std::size_t letters, unsigned max_degree) {
    if (target.is_zero())
        return MembershipCertificate{};
    const auto products = truncated_products(ideal, n, letters, max_degree);
    std::vector<CommPoly> polys;
    for (const auto& p : products)
        polys.push_back(p.value);
    polys.push_back(target);
    const ExactMatrix m = coefficient_matrix(polys);
    std::vector<std::vector<Rational>> vectors;
    for (std::size_t r = 0; r + 1 < m.rows(); ++r)
        vectors.emplace_back(m.row(r).begin(), m.row(r).end());
    std::vector<Rational> goal(m.row(m.rows() - 1).begin(), m.row(m.rows() - 1).end());
    auto coeffs = in_span(vectors, goal);
    if (!coeffs)
        return std::nullopt;
    MembershipCertificate cert;
    for (std::size_t k = 0; k < coeffs->size(); ++k)
        if ((*coeffs)[k] != 0)
            cert.push_back({(*coeffs)[k], products[k].monomial, products[k].generator});
    return cert;
}

bool check_certificate(const MembershipCertificate& cert, const std::vector<CommPoly>& ideal, const CommPoly& target) {
    Integer denominators = 1;
    for (const auto& t : cert)
        mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), t.coefficient.get_den_mpz_t());
    CommPoly sum;
    for (const auto& t : cert) {
        if (t.generator >= ideal.size())
            return false;
        const Rational scaled = t.coefficient * denominators;
        sum += CommPoly::monomial(t.monomial, scaled.get_num()) * ideal[t.generator];
    }
    CommPoly goal = target;
    goal *= denominators;
    return sum == goal;
}

std::size_t ideal_piece_rank(const std::vector<CommPoly>& ideal, unsigned n, std::size_t letters, unsigned degree) {
    std::vector<CommPoly> polys;
    for (auto& p : truncated_products(ideal, n, letters, degree))
        polys.push_back(std::move(p.value));
    return rank(coefficient_matrix(polys));
}

} // namespace dpinv
