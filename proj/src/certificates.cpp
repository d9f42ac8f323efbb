#include "ajpoly/elimination.hpp"

#include <cstdlib>
#include <fstream>

namespace ajpoly {

namespace {

// scalar strings in the recipe: "?" = solve, otherwise a VLaurent monomial
// expression like "q", "-1", "q^(9/2)"
std::optional<VLaurent> parse_scalar(const std::string& s) {
    if (s == "?") return std::nullopt;
    NCPoly p = nc_parse(s);
    if (p.is_zero()) return VLaurent{};
    if (p.term_count() != 1 || !p.terms().begin()->first.is_one())
        throw std::runtime_error("recipe scalar is not a scalar: " + s);
    return p.terms().begin()->second;
}

std::pair<int, long> parse_unit(const std::string& s) {
    NCPoly p = nc_parse(s);
    if (p.term_count() != 1 || !p.terms().begin()->first.is_one())
        throw std::runtime_error("not a scalar unit: " + s);
    const VLaurent& c = p.terms().begin()->second;
    if (!c.is_unit()) throw std::runtime_error("not a unit +-v^k: " + s);
    long e = c.lo_exp();
    int sign = c.terms().begin()->second > 0 ? 1 : -1;
    return {sign, e};
}

}  // namespace

std::string default_data_dir() {
    if (const char* env = std::getenv("AJPOLY_DATA_DIR")) return env;
#ifdef AJPOLY_DEFAULT_DATA_DIR
    return AJPOLY_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

Certificate load_certificate(const std::string& knot, const std::string& data_dir) {
    std::string path = data_dir + "/cert_" + knot + ".json";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open certificate file " + path);
    nlohmann::json j = nlohmann::json::parse(in);

    Certificate c;
    c.knot = j.at("knot").get<std::string>();
    c.g1 = nc_parse(j.at("g1").get<std::string>());
    c.g2 = nc_parse(j.at("g2").get<std::string>());
    c.a1 = nc_parse(j.at("a1").get<std::string>());
    c.a2 = nc_parse(j.at("a2").get<std::string>());
    c.ahat = nc_parse(j.at("ahat").get<std::string>());
    c.expected_prefix = nc_parse(j.at("expected_prefix").get<std::string>());
    for (auto& recipe : j.at("recipes")) {
        std::vector<RecipeTerm> terms;
        for (auto& t : recipe) {
            RecipeTerm rt;
            rt.scalar = parse_scalar(t.at("scalar").get<std::string>());
            if (t.contains("pre")) rt.pre = nc_parse(t.at("pre").get<std::string>());
            if (t.contains("post")) rt.post = nc_parse(t.at("post").get<std::string>());
            std::string m = t.at("multiplier").get<std::string>();
            std::string g = t.at("generator").get<std::string>();
            rt.multiplier = m == "a1" ? 0 : 1;
            rt.generator = g == "g1" ? 0 : 1;
            terms.push_back(std::move(rt));
        }
        c.recipes.push_back(std::move(terms));
    }
    auto [ls, lv] = parse_unit(j.at("lambda").get<std::string>());
    c.lambda_sign = ls;
    c.lambda_vpow = lv;
    auto [gs, gv] = parse_unit(j.at("global").get<std::string>());
    c.global_sign = gs;
    c.global_vpow = gv;
    c.known_nh = nc_parse(j.at("known_nh").get<std::string>());
    c.classical = CommPoly2::from_json(j.at("classical"));
    return c;
}

}  // namespace ajpoly
