#include "heatsym/io.hpp"

#include <bit>
#include <fstream>

namespace heatsym::io {

namespace {

void reject_unknown_fields(const json& j, std::initializer_list<const char*> allowed,
                           const char* where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok)
            fail(ErrorKind::validation,
                 std::string("unknown field '") + key + "' in " + where);
    }
}

ExtScalar scalar_from_mantissa(const json& j) {
    if (!j.is_array() || (j.size() != 4 && j.size() != 5))
        fail(ErrorKind::validation, "mantissa must be 4 rational strings (+ optional grade)");
    ExtScalar v;
    for (int k = 0; k < 4; ++k)
        v += ExtScalar::rational(parse_rational(j[k].get<std::string>())) * ExtScalar::zeta(k);
    if (j.size() == 5) v *= ExtScalar::pi_pow(j[4].get<int>());
    return v;
}

} // namespace

CurvatureData curvature_from_json(const json& j) {
    reject_unknown_fields(j, {"n", "riemann", "twist"}, "curvature");
    if (!j.contains("n")) fail(ErrorKind::validation, "curvature needs the dimension 'n'");
    int n = j["n"].get<int>();
    int p = 1;
    if (j.contains("twist")) {
        reject_unknown_fields(j["twist"], {"rank", "F"}, "twist");
        p = j["twist"].value("rank", 1);
    }
    CurvatureData R(n, p);

    std::vector<std::array<int, 4>> seen_idx;
    std::vector<Rational> seen_val;
    if (j.contains("riemann")) {
        for (const auto& entry : j["riemann"]) {
            if (!entry.is_array() || entry.size() != 5)
                fail(ErrorKind::validation, "riemann entry must be [i,j,k,l,\"num/den\"]");
            int i = entry[0].get<int>(), jj = entry[1].get<int>(), k = entry[2].get<int>(),
                l = entry[3].get<int>();
            Rational v = parse_rational(entry[4].get<std::string>());
            R.set_riemann(i, jj, k, l, v);
            seen_idx.push_back({i, jj, k, l});
            seen_val.push_back(v);
        }
        // contradictory duplicates (directly or through a symmetry image)
        for (size_t t = 0; t < seen_idx.size(); ++t) {
            const auto& [i, jj, k, l] = seen_idx[t];
            if (R.riemann(i, jj, k, l) != seen_val[t])
                fail(ErrorKind::validation,
                     "riemann entries contradict each other through the symmetries at (" +
                         std::to_string(i) + "," + std::to_string(jj) + "," + std::to_string(k) +
                         "," + std::to_string(l) + ")");
        }
    }
    if (j.contains("twist") && j["twist"].contains("F")) {
        for (const auto& entry : j["twist"]["F"]) {
            if (!entry.is_array() || entry.size() != 3)
                fail(ErrorKind::validation, "twist entry must be [k,l,matrix]");
            int k = entry[0].get<int>(), l = entry[1].get<int>();
            const json& mat = entry[2];
            if (!mat.is_array() || mat.size() != static_cast<size_t>(p) * p)
                fail(ErrorKind::validation, "twist matrix must list p*p entries row major");
            ScalarMatrix m(p);
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c) {
                    const json& e = mat[static_cast<size_t>(r) * p + c];
                    if (!e.is_array() || e.size() != 2)
                        fail(ErrorKind::validation, "twist matrix entry must be [\"re\",\"im\"]");
                    m.at(r, c) = ExtScalar::rational(parse_rational(e[0].get<std::string>())) +
                                 ExtScalar::rational(parse_rational(e[1].get<std::string>())) *
                                     ExtScalar::i();
                }
            R.set_twist(k, l, m);
        }
    }
    R.validate();
    return R;
}

TrigPoly trig_from_json(const json& j) {
    reject_unknown_fields(j, {"dim", "terms"}, "trig function");
    if (!j.contains("dim")) fail(ErrorKind::validation, "trig function needs 'dim'");
    int d = j["dim"].get<int>();
    TrigPoly f(d);
    if (j.contains("terms"))
        for (const auto& t : j["terms"]) {
            if (!t.is_array() || t.size() != 2)
                fail(ErrorKind::validation, "trig term must be [[m...], mantissa]");
            std::vector<int> m = t[0].get<std::vector<int>>();
            if (static_cast<int>(m.size()) != d)
                fail(ErrorKind::validation, "frequency length mismatch");
            f.add_term(m, scalar_from_mantissa(t[1]));
        }
    return f;
}

TrigMatrix trig_matrix_from_json(const json& j) {
    reject_unknown_fields(j, {"dim", "rank", "entries"}, "trig matrix");
    int d = j["dim"].get<int>();
    int q = j.value("rank", 1);
    TrigMatrix m(d, q);
    if (j.contains("entries"))
        for (const auto& e : j["entries"]) {
            if (!e.is_array() || e.size() != 3)
                fail(ErrorKind::validation, "matrix entry must be [row, col, function]");
            int r = e[0].get<int>(), c = e[1].get<int>();
            if (r < 0 || c < 0 || r >= q || c >= q)
                fail(ErrorKind::validation, "matrix position out of range");
            json cell = e[2];
            if (!cell.contains("dim")) cell["dim"] = d;
            m.at(r, c) = trig_from_json(cell);
        }
    return m;
}

json scalar_to_json(const ExtScalar& v) {
    json out;
    json zeta = json::array();
    for (int k = 0; k < 4; ++k) zeta.push_back(to_string(v.coeffs()[k]));
    out["zeta"] = zeta;
    out["piHalf"] = v.pi_half();
    out["str"] = v.str();
    auto a = v.approx();
    out["approx"] = {{"re", a.real()}, {"im", a.imag()}};
    return out;
}

json form_to_json(const FormElement& f) {
    json terms = json::array();
    for (const auto& [mask, m] : f.terms()) {
        json idx = json::array();
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            idx.push_back(std::countr_zero(rest) + 1);
        json mat = json::array();
        for (int i = 0; i < f.rank(); ++i)
            for (int j = 0; j < f.rank(); ++j) mat.push_back(scalar_to_json(m.at(i, j)));
        terms.push_back({{"indices", idx}, {"matrix", mat}});
    }
    return json{{"n", f.dim()},
                {"rank", f.rank()},
                {"algebra", f.algebra() == Algebra::clifford ? "clifford" : "exterior"},
                {"terms", terms}};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::validation, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        fail(ErrorKind::validation, "JSON parse error in '" + path + "': " + e.what());
    }
    return j;
}

CurvatureData load_curvature(const std::string& path) {
    return curvature_from_json(load_json(path));
}

} // namespace heatsym::io
