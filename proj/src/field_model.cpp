#include "hrbound/field_model.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "hrbound/errors.hpp"

namespace hrb {

Signature signature_of(const IntPoly& f) {
    if (f.degree() < 1 || poly_discriminant(f) == 0)
        throw DomainError("signature_of: polynomial is not squarefree");
    const int r1 = real_root_count(f);
    return {r1, (f.degree() - r1) / 2};
}

Kappa kappa_from_invariants(const NumberFieldSpec& spec) {
    if (!spec.class_number || !spec.regulator)
        throw PreconditionError("kappa_from_invariants: class number and regulator are required");
    const double log_kappa = log_abs(*spec.class_number) + std::log(*spec.regulator) +
                             spec.degree * std::numbers::ln2 +
                             spec.signature.r2 * std::log(std::numbers::pi / 2.0) -
                             std::log(static_cast<double>(spec.roots_of_unity)) - 0.5 * spec.log_discriminant();
    return {std::exp(log_kappa), 0.0};
}

double log_hr_from_log_kappa(double log_kappa, int n, int r2, int w, double log_d) {
    return std::log(static_cast<double>(w)) - n * std::numbers::ln2 + r2 * std::log(2.0 / std::numbers::pi) +
           0.5 * log_d + log_kappa;
}

double hr_from_kappa(const Kappa& kappa, const NumberFieldSpec& spec) {
    if (kappa.value <= 0.0) return 0.0;
    return std::exp(log_hr_from_log_kappa(std::log(kappa.value), spec.degree, spec.signature.r2,
                                          spec.roots_of_unity, spec.log_discriminant()));
}

BigInt index_witness(const NumberFieldSpec& spec) {
    const BigInt disc = poly_discriminant(spec.poly);
    if (spec.abs_discriminant <= 0) throw ValidationError("index_witness: discriminant must be positive");
    const BigInt signed_d = (spec.signature.r2 % 2 == 0) ? spec.abs_discriminant : BigInt(-spec.abs_discriminant);
    if (disc % signed_d != 0)
        throw ValidationError("discriminant-polynomial mismatch: disc(f) = " + disc.str() +
                              " is not a multiple of " + signed_d.str());
    const BigInt q = exact_sqrt_or_negative(disc / signed_d);
    if (q < 0)
        throw ValidationError("discriminant-polynomial mismatch: disc(f) / d_K = " + BigInt(disc / signed_d).str() +
                              " is not a perfect square");
    return q;
}

std::vector<Violation> validate_spec(const NumberFieldSpec& spec) {
    std::vector<Violation> out;
    const int n = spec.degree;
    const auto [r1, r2] = spec.signature;

    if (n < 1) out.push_back({"degree-range", "degree must be positive"});
    if (spec.poly.degree() != n)
        out.push_back({"degree-polynomial mismatch",
                       "deg f = " + std::to_string(spec.poly.degree()) + " but degree = " + std::to_string(n)});
    if (!spec.poly.is_monic()) out.push_back({"monic", "defining polynomial must be monic"});
    if (r1 < 0 || r2 < 0 || r1 + 2 * r2 != n)
        out.push_back({"signature-degree mismatch", "r1 + 2 r2 must equal the degree"});
    if (spec.abs_discriminant < 3) out.push_back({"discriminant floor", "|d_K| must be at least 3"});
    if (spec.roots_of_unity < 2 || spec.roots_of_unity % 2 != 0)
        out.push_back({"roots-of-unity violation", "w_K must be an even integer >= 2"});
    else if (r1 >= 1 && spec.roots_of_unity != 2)
        out.push_back({"roots-of-unity violation", "a field with a real embedding has w_K = 2"});
    if (spec.class_number && *spec.class_number < 1)
        out.push_back({"invariant positivity", "class number must be positive"});
    if (spec.regulator && !(*spec.regulator > 0.0))
        out.push_back({"invariant positivity", "regulator must be positive"});

    if (spec.poly.degree() >= 1 && spec.poly.is_monic()) {
        if (poly_discriminant(spec.poly) == 0) {
            out.push_back({"squarefree", "defining polynomial has a repeated root"});
        } else {
            const Signature sturm = signature_of(spec.poly);
            if (sturm != spec.signature)
                out.push_back({"signature-polynomial mismatch",
                               "Sturm count gives (" + std::to_string(sturm.r1) + ", " + std::to_string(sturm.r2) +
                                   ")"});
            else if (spec.abs_discriminant > 0) {
                try {
                    (void)index_witness(spec);
                } catch (const ValidationError& e) {
                    out.push_back({"discriminant-polynomial mismatch", e.what()});
                }
            }
        }
    }
    return out;
}

std::vector<std::string> spec_warnings(const NumberFieldSpec& spec) {
    // Smallest |d_K| per degree 3..8.
    static const long long minima[] = {23, 117, 1609, 9747, 184607, 1257728};
    std::vector<std::string> out;
    if (spec.degree >= 3 && spec.degree <= 8 && spec.abs_discriminant < minima[spec.degree - 3])
        out.push_back("|d_K| = " + spec.abs_discriminant.str() + " is below the smallest known discriminant " +
                      std::to_string(minima[spec.degree - 3]) + " of degree " + std::to_string(spec.degree));
    return out;
}

namespace {

BigInt parse_bigint(const nlohmann::json& v, const char* key) {
    try {
        if (v.is_string()) {
            const auto& s = v.get_ref<const std::string&>();
            if (s.empty() || s.find_first_not_of("+-0123456789") != std::string::npos ||
                s.find_first_of("0123456789") == std::string::npos)
                throw ValidationError(std::string("field spec: '") + key + "' is not a decimal integer: " + s);
            return BigInt(s);
        }
        if (v.is_number_integer()) return BigInt(v.get<long long>());
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("field spec: '") + key + "' must be a decimal integer string");
}

}  // namespace

NumberFieldSpec parse_field_spec(const nlohmann::json& doc) {
    static const std::set<std::string> allowed{"name",  "degree", "signature", "abs_discriminant",
                                               "w",     "poly",   "h",         "regulator"};
    if (!doc.is_object()) throw ValidationError("field spec: top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (!allowed.count(key)) throw ValidationError("field spec: unknown key '" + key + "'");
    for (const char* key : {"degree", "signature", "abs_discriminant", "poly"})
        if (!doc.contains(key)) throw ValidationError(std::string("field spec: missing key '") + key + "'");

    NumberFieldSpec spec;
    try {
        if (doc.contains("name")) spec.name = doc.at("name").get<std::string>();
        spec.degree = doc.at("degree").get<int>();
        const auto& sig = doc.at("signature");
        if (!sig.is_array() || sig.size() != 2) throw ValidationError("field spec: 'signature' must be a 2-array");
        spec.signature = {sig[0].get<int>(), sig[1].get<int>()};
        spec.abs_discriminant = parse_bigint(doc.at("abs_discriminant"), "abs_discriminant");
        std::vector<BigInt> coeffs;
        if (!doc.at("poly").is_array()) throw ValidationError("field spec: 'poly' must be an array");
        for (const auto& c : doc.at("poly")) coeffs.push_back(parse_bigint(c, "poly"));
        spec.poly = IntPoly(std::move(coeffs));
        if (doc.contains("w")) {
            spec.roots_of_unity = doc.at("w").get<int>();
        } else if (spec.signature.r1 == 0) {
            throw ValidationError("field spec: 'w' is required for totally imaginary fields");
        }
        if (doc.contains("h")) spec.class_number = parse_bigint(doc.at("h"), "h");
        if (doc.contains("regulator")) spec.regulator = doc.at("regulator").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("field spec: ") + e.what());
    }
    return spec;
}

NumberFieldSpec load_field_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open field spec '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("field spec '" + path + "': " + e.what());
    }
    return parse_field_spec(doc);
}

nlohmann::json field_spec_to_json(const NumberFieldSpec& spec) {
    nlohmann::json j;
    if (!spec.name.empty()) j["name"] = spec.name;
    j["degree"] = spec.degree;
    j["signature"] = {spec.signature.r1, spec.signature.r2};
    j["abs_discriminant"] = spec.abs_discriminant.str();
    j["w"] = spec.roots_of_unity;
    auto poly = nlohmann::json::array();
    for (const auto& c : spec.poly.coeffs()) poly.push_back(c.str());
    j["poly"] = poly;
    if (spec.class_number) j["h"] = spec.class_number->str();
    if (spec.regulator) j["regulator"] = *spec.regulator;
    return j;
}

}  // namespace hrb
