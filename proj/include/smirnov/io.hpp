#ifndef SMIRNOV_IO_HPP
#define SMIRNOV_IO_HPP

#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "polynomial.hpp"

namespace smirnov
{

using json = nlohmann::json;

inline json to_json(cplx c) { return json::array({c.real(), c.imag()}); }

inline cplx complex_from_json(const json& j)
{
    if (j.is_number())
        return cplx{j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw DomainError("complex value must be a [re, im] pair");
    return cplx{j[0].get<double>(), j[1].get<double>()};
}

/// Polynomial literal: array of [re, im] pairs in ascending powers.
inline json to_json(const Polynomial& p)
{
    json arr = json::array();
    for (const cplx c : p.coeffs())
        arr.push_back(to_json(c));
    return arr;
}

inline Polynomial polynomial_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw DomainError("polynomial literal must be a non-empty array of [re, im] pairs");
    std::vector<cplx> c;
    c.reserve(j.size());
    for (const auto& e : j)
        c.push_back(complex_from_json(e));
    return Polynomial(std::move(c));
}

inline Polynomial parse_polynomial(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed polynomial literal: ") + e.what());
    }
    return polynomial_from_json(j);
}

/// A literal when the argument starts with '[', otherwise a file holding one.
inline Polynomial load_polynomial(const std::string& literal_or_path)
{
    const auto first = literal_or_path.find_first_not_of(" \t\n");
    if (first != std::string::npos && literal_or_path[first] == '[')
        return parse_polynomial(literal_or_path);
    std::ifstream in(literal_or_path);
    if (!in)
        throw DomainError("cannot open polynomial file: " + literal_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_polynomial(ss.str());
}

inline json to_json(const InequalityInstance& in)
{
    json j{{"entry", in.entry}, {"p", to_json(in.p)},   {"n", in.n},    {"a", to_json(in.a)},
           {"alpha", to_json(in.alpha)}, {"beta", to_json(in.beta)}, {"R", in.R}, {"z", to_json(in.z)},
           {"k", in.k}};
    if (in.f)
        j["f"] = to_json(*in.f);
    return j;
}

inline InequalityInstance instance_from_json(const json& j)
{
    InequalityInstance in;
    in.entry = j.at("entry").get<std::string>();
    in.p = polynomial_from_json(j.at("p"));
    if (j.contains("f"))
        in.f = polynomial_from_json(j.at("f"));
    in.n = j.value("n", in.f ? in.f->degree() : in.p.degree());
    if (j.contains("a"))
        in.a = complex_from_json(j["a"]);
    if (j.contains("alpha"))
        in.alpha = complex_from_json(j["alpha"]);
    if (j.contains("beta"))
        in.beta = complex_from_json(j["beta"]);
    in.R = j.value("R", 1.0);
    if (j.contains("z"))
        in.z = complex_from_json(j["z"]);
    in.k = j.value("k", 1.0);
    return in;
}

inline json to_json(const Verdict& v)
{
    return json{{"lhs", v.lhs},     {"rhs", v.rhs},   {"slack", v.slack},
                {"scale", v.scale}, {"certificate", v.certificate}, {"pass", v.pass}};
}

/// "re,im" or "re".
inline cplx parse_complex_arg(const std::string& s)
{
    std::stringstream ss(s);
    std::string re, im;
    std::getline(ss, re, ',');
    std::getline(ss, im);
    try {
        std::size_t pos = 0;
        const double r = std::stod(re, &pos);
        if (pos != re.size())
            throw DomainError("bad number");
        double i = 0.0;
        if (!im.empty()) {
            i = std::stod(im, &pos);
            if (pos != im.size())
                throw DomainError("bad number");
        }
        return cplx{r, i};
    } catch (const std::logic_error&) {
        throw DomainError("expected RE,IM but got '" + s + "'");
    }
}

} // namespace smirnov

#endif
