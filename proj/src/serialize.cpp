#include "quintic/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace qk {

namespace {

Json poly_to_json(const QPoly& p) {
    Json a = Json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(rat_to_string(p.coeff(i)));
    return a;
}

QPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial record must be an array");
    QPoly p;
    for (size_t i = 0; i < j.size(); ++i)
        p.set_coeff(static_cast<int>(i), rat_from_string(j[i].get<std::string>()));
    return p;
}

KElem kelem_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("K-ring record must be a 4-tuple");
    KElem e;
    for (int a = 0; a < 4; ++a) e.coords[a] = ratfun_from_json(j[a]);
    return e;
}

}  // namespace

Json ratfun_to_json(const QRatFun& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den_expanded())}};
}

QRatFun ratfun_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational-function record must have num and den");
    QPoly den = poly_from_json(j["den"]);
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    return QRatFun(poly_from_json(j["num"]), den);
}

Json series_to_json(const QSeries& s) {
    Json a = Json::array();
    for (int n = 0; n <= s.order(); ++n) a.push_back(ratfun_to_json(s.coeff(n)));
    return a;
}

QSeries series_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("series record must be a nonempty array");
    QSeries s(static_cast<int>(j.size()) - 1);
    for (size_t n = 0; n < j.size(); ++n) s.set_coeff(static_cast<int>(n), ratfun_from_json(j[n]));
    return s;
}

Json kseries_to_json(const KSeries& s) {
    Json a = Json::array();
    for (int n = 0; n <= s.order(); ++n) {
        Json tuple = Json::array();
        for (int c = 0; c < 4; ++c) tuple.push_back(ratfun_to_json(s.coeff(n).coords[c]));
        a.push_back(tuple);
    }
    return a;
}

KSeries kseries_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("K-series record must be a nonempty array");
    KSeries s(static_cast<int>(j.size()) - 1);
    for (size_t n = 0; n < j.size(); ++n) s.set_coeff(static_cast<int>(n), kelem_from_json(j[n]));
    return s;
}

Json matrix_to_json(const Matrix4Series& m) {
    Json a = Json::array();
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) a.push_back(series_to_json(m.at(i, c)));
    return a;
}

Matrix4Series matrix_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 16)
        throw std::invalid_argument("matrix record must have 16 row-major entries");
    QSeries first = series_from_json(j[0]);
    Matrix4Series m(first.order());
    for (int i = 0; i < 4; ++i)
        for (int c = 0; c < 4; ++c) m.at(i, c) = series_from_json(j[4 * i + c]);
    return m;
}

Json gv_to_json(const GVTable& t) {
    Json entries = Json::object();
    for (int d = 1; d <= t.max_degree(); ++d)
        entries[std::to_string(d)] = t.at(d).get_str(10);
    return Json{{"gv", entries}};
}

GVTable gv_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gv") || !j["gv"].is_object())
        throw std::invalid_argument("curve-count file must be an object with a gv record");
    GVTable t;
    int count = 0;
    for (const auto& [key, value] : j["gv"].items()) {
        size_t used = 0;
        int d = std::stoi(key, &used);
        if (used != key.size() || d < 1)
            throw std::invalid_argument("bad curve-count degree key: " + key);
        Integer v;
        if (v.set_str(value.get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad curve-count value at degree " + key);
        t.set(d, std::move(v));
        ++count;
    }
    if (t.max_degree() != count)
        throw std::invalid_argument("curve-count degrees must be contiguous from 1");
    return t;
}

GVTable load_gv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read curve-count file: " + path);
    Json j = Json::parse(in);
    return gv_from_json(j);
}

std::string ratfun_text(const QRatFun& f) {
    if (f.is_zero() || f.is_polynomial()) return f.num().str();
    const DenFactors& d = f.den();
    const bool pure = d.q_exp == 0 && d.rest == QPoly::one() && d.cyc.size() == 1 &&
                      d.cyc.begin()->first == 1;
    QPoly shown = f.num();
    std::string den;
    if (pure) {
        /* the canonical factor is monic q-1; fold (-1)^m into the numerator
           to display over (1-q)^m */
        int m = d.cyc.begin()->second;
        if (m % 2) shown = shown.scaled(Rational(-1));
        den = "(1-q)" + (m > 1 ? "^" + std::to_string(m) : std::string());
    } else {
        den = "(" + f.den_expanded().str() + ")";
    }
    std::string num = shown.str();
    if (num.find(' ') != std::string::npos) num = "(" + num + ")";
    return num + "/" + den;
}

}  // namespace qk
