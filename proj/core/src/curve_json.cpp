#include "legendrian/curve_json.hpp"

#include <fstream>

#include <json.hpp>

#include "legendrian/expr_parser.hpp"

namespace legendrian {

namespace {

nlohmann::ordered_json poly_to_json(const Polynomial& p) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : p.coeffs())
        arr.push_back({rational_to_string(c.re()), rational_to_string(c.im())});
    return arr;
}

Polynomial poly_from_json(const nlohmann::json& arr) {
    std::vector<GaussianRational> coeffs;
    for (const auto& c : arr) {
        if (!c.is_array() || c.size() != 2)
            throw InvalidInput("coefficient must be a [re, im] pair of strings");
        coeffs.push_back(gaussian_from_strings(c[0].get<std::string>(), c[1].get<std::string>()));
    }
    return Polynomial(std::move(coeffs));
}

nlohmann::ordered_json gaussian_to_json(const GaussianRational& c) {
    return {rational_to_string(c.re()), rational_to_string(c.im())};
}

GaussianRational gaussian_from_json(const nlohmann::json& c) {
    return gaussian_from_strings(c[0].get<std::string>(), c[1].get<std::string>());
}

}  // namespace

std::string curve_to_json(const ProjectiveCurve& C) {
    nlohmann::ordered_json doc;
    auto& comps = doc["components"] = nlohmann::ordered_json::array();
    for (const auto& p : C.components()) comps.push_back(poly_to_json(p));

    const CurveProvenance& prov = C.provenance();
    nlohmann::ordered_json pj;
    pj["kind"] = prov.kind_name();
    if (prov.f) pj["f"] = print_expression(*prov.f);
    if (prov.g) pj["g"] = print_expression(*prov.g);
    if (prov.h) pj["h"] = print_expression(*prov.h);
    if (prov.kind == CurveProvenance::Kind::fcurve) pj["c"] = gaussian_to_json(prov.c);
    if (prov.kind == CurveProvenance::Kind::exceptional) {
        pj["a"] = gaussian_to_json(prov.a);
        pj["b"] = gaussian_to_json(prov.b);
    }
    pj["cleared"] = poly_to_json(C.cleared_factor());
    doc["provenance"] = pj;
    return doc.dump(1) + "\n";
}

ProjectiveCurve curve_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad curve json: ") + e.what());
    }
    if (!doc.contains("components") || !doc["components"].is_array() ||
        doc["components"].size() != 4)
        throw InvalidInput("curve json needs 4 component polynomials");
    PolyTuple4 tuple;
    for (int i = 0; i < 4; ++i)
        tuple[static_cast<std::size_t>(i)] = poly_from_json(doc["components"][static_cast<std::size_t>(i)]);

    CurveProvenance prov;
    Polynomial cleared = Polynomial::one();
    if (doc.contains("provenance")) {
        const auto& pj = doc["provenance"];
        std::string kind = pj.value("kind", "raw");
        if (kind == "bryant") prov.kind = CurveProvenance::Kind::bryant;
        else if (kind == "fcurve") prov.kind = CurveProvenance::Kind::fcurve;
        else if (kind == "exceptional") prov.kind = CurveProvenance::Kind::exceptional;
        else prov.kind = CurveProvenance::Kind::raw;
        if (pj.contains("f")) prov.f = parse_expression(pj["f"].get<std::string>());
        if (pj.contains("g")) prov.g = parse_expression(pj["g"].get<std::string>());
        if (pj.contains("h")) prov.h = parse_expression(pj["h"].get<std::string>());
        if (pj.contains("c")) prov.c = gaussian_from_json(pj["c"]);
        if (pj.contains("a")) prov.a = gaussian_from_json(pj["a"]);
        if (pj.contains("b")) prov.b = gaussian_from_json(pj["b"]);
        if (pj.contains("cleared")) cleared = poly_from_json(pj["cleared"]);
    }
    return ProjectiveCurve::restore(std::move(tuple), std::move(prov), std::move(cleared));
}

void save_curve(const ProjectiveCurve& C, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
    out << curve_to_json(C);
}

ProjectiveCurve load_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return curve_from_json(text);
}

}  // namespace legendrian
