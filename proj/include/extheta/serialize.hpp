#pragma once

#include <string>

#include <json.hpp>

#include "extheta/bipoly.hpp"
#include "extheta/f4.hpp"
#include "extheta/freudenthal.hpp"
#include "extheta/qlift.hpp"
#include "extheta/siegel.hpp"

namespace extheta {

using Json = nlohmann::ordered_json;

inline std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Json octonion_to_json(const Octonion& x) {
    Json arr = Json::array();
    for (const auto& c : to_coxeter(x)) arr.push_back(c.str());
    return arr;
}

inline Octonion octonion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8) throw std::invalid_argument("octonion: expected 8 coordinates");
    std::array<Scalar, 8> coords;
    for (int k = 0; k < 8; ++k) coords[k] = Scalar::parse(j[k].get<std::string>());
    return from_coxeter(coords);
}

inline Json jordan_to_json(const JordanElement& t) {
    Json j;
    j["diag"] = Json::array();
    for (const auto& c : t.c) j["diag"].push_back(c.str());
    j["off"] = Json::array();
    for (const auto& a : t.a) j["off"].push_back(octonion_to_json(a));
    return j;
}

inline JordanElement jordan_from_json(const Json& j) {
    JordanElement t;
    for (int k = 0; k < 3; ++k) t.c[k] = Scalar::parse(j.at("diag")[k].get<std::string>());
    for (int k = 0; k < 3; ++k) t.a[k] = octonion_from_json(j.at("off")[k]);
    return t;
}

inline Json freudenthal_to_json(const FreudenthalElement& w) {
    Json j;
    j["a"] = w.a.str();
    j["b"] = jordan_to_json(w.b);
    j["c"] = jordan_to_json(w.c);
    j["d"] = w.d.str();
    return j;
}

inline FreudenthalElement freudenthal_from_json(const Json& j) {
    return FreudenthalElement(Scalar::parse(j.at("a").get<std::string>()), jordan_from_json(j.at("b")),
                              jordan_from_json(j.at("c")), Scalar::parse(j.at("d").get<std::string>()));
}

inline Json cubic_to_json(const BinaryCubic& w0) {
    Json arr = Json::array();
    for (int k = 0; k < 4; ++k) arr.push_back(rational_str(w0.coeff[k]));
    return arr;
}

inline BinaryCubic cubic_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("binary cubic: expected [A,B,C,D]");
    BinaryCubic c;
    for (int k = 0; k < 4; ++k) c.coeff[k] = parse_rational(j[k].get<std::string>());
    return c;
}

// Monomial keys "a,b,c,d,e,f" for exponents of (w1,w2,w3,z23,z31,z12); the
// map iterates in the canonical lexicographic order.
inline Json bipoly_to_json(const BiPolynomial& p) {
    Json j;
    j["degw"] = p.degw;
    j["degz"] = p.degz;
    Json terms;
    for (const auto& [k, v] : p.terms) {
        std::string key;
        for (int i = 0; i < 6; ++i) key += (i ? "," : "") + std::to_string(k[i]);
        terms[key] = v.str();
    }
    j["terms"] = std::move(terms);
    return j;
}

inline BiPolynomial bipoly_from_json(const Json& j) {
    BiPolynomial p;
    p.degw = j.at("degw").get<int>();
    p.degz = j.at("degz").get<int>();
    for (const auto& [key, val] : j.at("terms").items()) {
        std::array<int, 6> k{};
        std::size_t pos = 0;
        for (int i = 0; i < 6; ++i) {
            auto next = key.find(',', pos);
            k[i] = std::stoi(key.substr(pos, next - pos));
            pos = next == std::string::npos ? key.size() : next + 1;
        }
        p.add_term(k, Scalar::parse(val.get<std::string>()));
    }
    return p;
}

inline Json wedge_to_json(const WedgeTensor& t) {
    Json j;
    j["degree"] = t.degree;
    j["terms"] = Json::array();
    for (const auto& term : t.terms) {
        Json jt;
        jt["coeff"] = term.coeff.str();
        jt["factors"] = Json::array();
        for (const auto& [b, c] : term.factors) jt["factors"].push_back(Json::array({jordan_to_json(b), jordan_to_json(c)}));
        j["terms"].push_back(std::move(jt));
    }
    return j;
}

inline WedgeTensor wedge_from_json(const Json& j) {
    WedgeTensor t;
    t.degree = j.at("degree").get<int>();
    for (const auto& jt : j.at("terms")) {
        WedgeTensor::Term term;
        term.coeff = Scalar::parse(jt.at("coeff").get<std::string>());
        for (const auto& f : jt.at("factors"))
            term.factors.emplace_back(jordan_from_json(f[0]), jordan_from_json(f[1]));
        if (static_cast<int>(term.factors.size()) != t.degree) throw std::invalid_argument("wedge tensor: degree mismatch");
        t.terms.push_back(std::move(term));
    }
    return t;
}

inline Json g2tensor_to_json(const G2Tensor& t) {
    Json j;
    j["k1"] = t.k1;
    j["k2"] = t.k2;
    j["terms"] = Json::array();
    for (const auto& [key, coeff] : t.terms) {
        Json jt;
        jt["coeff"] = coeff.str();
        jt["key"] = key;
        j["terms"].push_back(std::move(jt));
    }
    return j;
}

inline G2Tensor g2tensor_from_json(const Json& j) {
    G2Tensor t;
    t.k1 = j.at("k1").get<int>();
    t.k2 = j.at("k2").get<int>();
    for (const auto& jt : j.at("terms")) {
        std::vector<int> key = jt.at("key").get<std::vector<int>>();
        if (static_cast<int>(key.size()) != t.k1 + t.k2) throw std::invalid_argument("g2 tensor: bad key length");
        t.add_term(std::move(key), Scalar::parse(jt.at("coeff").get<std::string>()));
    }
    return t;
}

inline Json t0_to_json(const HalfIntegralMatrix& t0) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int k = 0; k < 3; ++k) row.push_back(rational_str(t0.m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline HalfIntegralMatrix t0_from_json(const Json& j) {
    Mat<Rational> m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) m.at(i, k) = parse_rational(j.at(i).at(k).get<std::string>());
    return HalfIntegralMatrix(std::move(m));
}

inline Json detect_entry_to_json(const DetectEntry& e) {
    Json j;
    j["T0"] = t0_to_json(e.t0);
    j["coeff"] = bipoly_to_json(e.coeff);
    return j;
}

struct DetectInput {
    SiegelWeight lambda;
    std::vector<DetectEntry> entries;
};

inline Json detect_input_to_json(const DetectInput& in) {
    Json j;
    j["lambda"] = Json::array({in.lambda.l1, in.lambda.l2, in.lambda.l3});
    j["entries"] = Json::array();
    for (const auto& e : in.entries) j["entries"].push_back(detect_entry_to_json(e));
    return j;
}

inline DetectInput detect_input_from_json(const Json& j) {
    DetectInput in;
    in.lambda = {j.at("lambda")[0].get<long>(), j.at("lambda")[1].get<long>(), j.at("lambda")[2].get<long>()};
    for (const auto& je : j.at("entries"))
        in.entries.push_back({t0_from_json(je.at("T0")), bipoly_from_json(je.at("coeff"))});
    return in;
}

inline EData edata_from_json(const Json& j) {
    EData d;
    d.e = jordan_from_json(j.at("E"));
    if (j.contains("delta")) {
        Mat<Rational> m(27, 27);
        for (int r = 0; r < 27; ++r)
            for (int c = 0; c < 27; ++c) m.at(r, c) = parse_rational(j.at("delta").at(r).at(c).get<std::string>());
        d.delta = std::move(m);
    }
    return d;
}

}  // namespace extheta
