#include "hopf/io.hpp"

#include <fstream>
#include <sstream>

namespace hopf::io {

namespace {

constexpr int kFormatVersion = 1;

void requireVersion(const Json& j) {
    if (!j.contains("format_version") || !j["format_version"].is_number_integer())
        throw CodecError("missing format_version");
    if (j["format_version"].get<int>() != kFormatVersion)
        throw CodecError("unsupported format_version");
}

int checkedIndex(const Json& j, int dim, const char* what) {
    if (!j.is_number_integer()) throw CodecError(std::string("non-integer index in ") + what);
    int v = j.get<int>();
    if (v < 0 || v >= dim) throw CodecError(std::string("index out of range in ") + what);
    return v;
}

} // namespace

std::string encodeScalar(const Cyc& c, long fieldOrder) {
    Cyc v = c.coerced(fieldOrder);
    std::string s;
    for (size_t i = 0; i < v.coeffs().size(); ++i) {
        if (i) s += ",";
        s += ratToString(v.coeffs()[i]);
    }
    return s;
}

Cyc decodeScalar(const std::string& s, long fieldOrder) {
    std::vector<Rat> coeffs;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) {
        try {
            coeffs.push_back(parseRat(cur));
        } catch (const std::invalid_argument& e) {
            throw CodecError(e.what());
        }
    }
    if (coeffs.empty()) throw CodecError("empty scalar literal");
    if (static_cast<long>(coeffs.size()) > eulerPhi(fieldOrder))
        throw CodecError("scalar has more components than phi(field_order)");
    return Cyc::fromCoeffs(fieldOrder, std::move(coeffs));
}

namespace {

Json encodeVecEntries(const Vec& v, long fieldOrder) {
    Json arr = Json::array();
    for (const auto& [i, c] : v) arr.push_back(Json::array({i, encodeScalar(c, fieldOrder)}));
    return arr;
}

Vec decodeVecEntries(const Json& j, int dim, long fieldOrder, const char* what) {
    Vec v;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw CodecError(std::string("malformed entry in ") + what);
        int i = checkedIndex(e[0], dim, what);
        addTo(v, i, decodeScalar(e[1].get<std::string>(), fieldOrder));
    }
    return v;
}

} // namespace

Json encodePresentation(const Presentation& p) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "algebra";
    j["name"] = p.name;
    j["field_order"] = p.fieldOrder;
    j["basis"] = p.basis;
    j["unit"] = encodeVecEntries(p.unit, p.fieldOrder);
    Json counit = Json::array();
    for (int i = 0; i < p.dim(); ++i)
        if (!p.counit[i].isZero())
            counit.push_back(Json::array({i, encodeScalar(p.counit[i], p.fieldOrder)}));
    j["counit"] = std::move(counit);
    Json mult = Json::array();
    for (int i = 0; i < p.dim(); ++i)
        for (int k = 0; k < p.dim(); ++k)
            for (const auto& [t, c] : p.mult[i][k])
                mult.push_back(Json::array({i, k, t, encodeScalar(c, p.fieldOrder)}));
    j["mult"] = std::move(mult);
    Json comult = Json::array();
    for (int i = 0; i < p.dim(); ++i)
        for (const auto& [jk, c] : p.comult[i])
            comult.push_back(
                Json::array({i, jk / p.dim(), jk % p.dim(), encodeScalar(c, p.fieldOrder)}));
    j["comult"] = std::move(comult);
    if (p.antipode) {
        Json anti = Json::array();
        for (int i = 0; i < p.dim(); ++i)
            for (const auto& [t, c] : (*p.antipode)[i])
                anti.push_back(Json::array({i, t, encodeScalar(c, p.fieldOrder)}));
        j["antipode"] = std::move(anti);
    }
    return j;
}

std::shared_ptr<Presentation> decodePresentation(const Json& j) {
    requireVersion(j);
    if (!j.contains("kind") || j["kind"] != "algebra") throw CodecError("not an algebra file");
    auto p = std::make_shared<Presentation>();
    p->name = j.value("name", std::string("algebra"));
    if (!j.contains("field_order") || !j["field_order"].is_number_integer())
        throw CodecError("missing field_order");
    p->fieldOrder = j["field_order"].get<long>();
    if (p->fieldOrder < 1) throw CodecError("field_order must be positive");
    if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
        throw CodecError("missing basis");
    for (const auto& b : j["basis"]) p->basis.push_back(b.get<std::string>());
    int d = p->dim();
    p->initEmpty(d);
    p->unit = decodeVecEntries(j.at("unit"), d, p->fieldOrder, "unit");
    for (const auto& e : j.at("counit")) {
        if (!e.is_array() || e.size() != 2) throw CodecError("malformed counit entry");
        p->counit[checkedIndex(e[0], d, "counit")] =
            decodeScalar(e[1].get<std::string>(), p->fieldOrder);
    }
    for (const auto& e : j.at("mult")) {
        if (!e.is_array() || e.size() != 4) throw CodecError("malformed mult entry");
        int i = checkedIndex(e[0], d, "mult"), k = checkedIndex(e[1], d, "mult"),
            t = checkedIndex(e[2], d, "mult");
        addTo(p->mult[i][k], t, decodeScalar(e[3].get<std::string>(), p->fieldOrder));
    }
    for (const auto& e : j.at("comult")) {
        if (!e.is_array() || e.size() != 4) throw CodecError("malformed comult entry");
        int i = checkedIndex(e[0], d, "comult"), a = checkedIndex(e[1], d, "comult"),
            b = checkedIndex(e[2], d, "comult");
        addTo(p->comult[i], a * d + b, decodeScalar(e[3].get<std::string>(), p->fieldOrder));
    }
    if (j.contains("antipode")) {
        p->antipode.emplace(d);
        for (const auto& e : j.at("antipode")) {
            if (!e.is_array() || e.size() != 3) throw CodecError("malformed antipode entry");
            int i = checkedIndex(e[0], d, "antipode"), t = checkedIndex(e[1], d, "antipode");
            addTo((*p->antipode)[i], t, decodeScalar(e[2].get<std::string>(), p->fieldOrder));
        }
    }
    return p;
}

Json encodeBilForm(const BilForm& f, const std::string& baseName, long fieldOrder) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "cocycle";
    j["base"] = baseName;
    j["field_order"] = fieldOrder;
    j["basis_size"] = f.dim;
    Json entries = Json::array();
    for (const auto& [key, c] : f.entries)
        entries.push_back(Json::array({key.first, key.second, encodeScalar(c, fieldOrder)}));
    j["entries"] = std::move(entries);
    return j;
}

BilForm decodeBilForm(const Json& j, int expectedDim) {
    requireVersion(j);
    if (!j.contains("kind") || j["kind"] != "cocycle") throw CodecError("not a cocycle file");
    long fieldOrder = j.at("field_order").get<long>();
    int dim = j.at("basis_size").get<int>();
    if (expectedDim > 0 && dim != expectedDim)
        throw CodecError("cocycle basis size does not match the algebra");
    BilForm f(dim);
    for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) throw CodecError("malformed cocycle entry");
        int a = checkedIndex(e[0], dim, "entries"), b = checkedIndex(e[1], dim, "entries");
        f.accum(a, b, decodeScalar(e[2].get<std::string>(), fieldOrder));
    }
    return f;
}

Json encodeSplitting(const SplittingDatum& d) {
    Json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "splitting";
    j["hopf"] = encodePresentation(*d.H);
    long n = d.H->fieldOrder;
    Json pi = Json::array();
    for (int i = 0; i < d.pi.dom; ++i)
        for (const auto& [t, c] : d.pi.col[i]) pi.push_back(Json::array({i, t, encodeScalar(c, n)}));
    j["pi"] = std::move(pi);
    Json sigma = Json::array();
    for (int i = 0; i < d.sigma.dom; ++i)
        for (const auto& [t, c] : d.sigma.col[i])
            sigma.push_back(Json::array({i, t, encodeScalar(c, n)}));
    j["sigma"] = std::move(sigma);
    return j;
}

SplittingDatum decodeSplitting(const Json& j, PresPtr a) {
    requireVersion(j);
    if (!j.contains("kind") || j["kind"] != "splitting") throw CodecError("not a splitting file");
    SplittingDatum d;
    d.A = a;
    d.H = decodePresentation(j.at("hopf"));
    long n = d.H->fieldOrder;
    d.pi = LinMap(a->dim(), d.H->dim());
    for (const auto& e : j.at("pi")) {
        if (!e.is_array() || e.size() != 3) throw CodecError("malformed pi entry");
        int i = checkedIndex(e[0], a->dim(), "pi"), t = checkedIndex(e[1], d.H->dim(), "pi");
        addTo(d.pi.col[i], t, decodeScalar(e[2].get<std::string>(), n));
    }
    d.sigma = LinMap(d.H->dim(), a->dim());
    for (const auto& e : j.at("sigma")) {
        if (!e.is_array() || e.size() != 3) throw CodecError("malformed sigma entry");
        int i = checkedIndex(e[0], d.H->dim(), "sigma"), t = checkedIndex(e[1], a->dim(), "sigma");
        addTo(d.sigma.col[i], t, decodeScalar(e[2].get<std::string>(), n));
    }
    return d;
}

Json encodePreBialgebra(const PreBialgebra& p) {
    const Presentation& h = p.H();
    long n = h.fieldOrder;
    int d = p.dim();
    Json j;
    j["format_version"] = kFormatVersion;
    j["kind"] = "prebialgebra";
    j["field_order"] = n;
    j["basis"] = p.R.yd.labels;
    j["hopf"] = encodePresentation(h);
    j["unit"] = encodeVecEntries(p.R.unit, n);
    Json counit = Json::array();
    for (int i = 0; i < d; ++i)
        if (!p.R.counit[i].isZero()) counit.push_back(Json::array({i, encodeScalar(p.R.counit[i], n)}));
    j["counit"] = std::move(counit);
    Json comult = Json::array();
    for (int i = 0; i < d; ++i)
        for (const auto& [jk, c] : p.R.comult[i])
            comult.push_back(Json::array({i, jk / d, jk % d, encodeScalar(c, n)}));
    j["comult"] = std::move(comult);
    Json mult = Json::array();
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (const auto& [t, c] : p.mult[i][k])
                mult.push_back(Json::array({i, k, t, encodeScalar(c, n)}));
    j["mult"] = std::move(mult);
    Json action = Json::array();
    for (int hh = 0; hh < h.dim(); ++hh)
        for (int v = 0; v < d; ++v)
            for (const auto& [w, c] : p.R.yd.action[hh][v])
                action.push_back(Json::array({hh, v, w, encodeScalar(c, n)}));
    j["action"] = std::move(action);
    Json coaction = Json::array();
    for (int v = 0; v < d; ++v)
        for (const auto& [hw, c] : p.R.yd.coaction[v])
            coaction.push_back(Json::array({v, hw / d, hw % d, encodeScalar(c, n)}));
    j["coaction"] = std::move(coaction);
    Json xi = Json::array();
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            for (const auto& [hh, c] : p.xi[i * d + k])
                xi.push_back(Json::array({i, k, hh, encodeScalar(c, n)}));
    j["xi"] = std::move(xi);
    return j;
}

PreBialgebra decodePreBialgebra(const Json& j) {
    requireVersion(j);
    if (!j.contains("kind") || j["kind"] != "prebialgebra") throw CodecError("not a prebialgebra file");
    PreBialgebra p;
    long n = j.at("field_order").get<long>();
    p.R.yd.H = decodePresentation(j.at("hopf"));
    for (const auto& b : j.at("basis")) p.R.yd.labels.push_back(b.get<std::string>());
    int d = p.dim(), dh = p.R.yd.H->dim();
    p.R.comult.assign(d, Vec{});
    p.R.counit.assign(d, Cyc(0));
    p.R.yd.action.assign(dh, std::vector<Vec>(d));
    p.R.yd.coaction.assign(d, Vec{});
    p.mult.assign(d, std::vector<Vec>(d));
    p.xi.assign(d * d, Vec{});
    p.R.unit = decodeVecEntries(j.at("unit"), d, n, "unit");
    for (const auto& e : j.at("counit"))
        p.R.counit[checkedIndex(e[0], d, "counit")] = decodeScalar(e[1].get<std::string>(), n);
    for (const auto& e : j.at("comult")) {
        int i = checkedIndex(e[0], d, "comult"), a = checkedIndex(e[1], d, "comult"),
            b = checkedIndex(e[2], d, "comult");
        addTo(p.R.comult[i], a * d + b, decodeScalar(e[3].get<std::string>(), n));
    }
    for (const auto& e : j.at("mult")) {
        int i = checkedIndex(e[0], d, "mult"), k = checkedIndex(e[1], d, "mult"),
            t = checkedIndex(e[2], d, "mult");
        addTo(p.mult[i][k], t, decodeScalar(e[3].get<std::string>(), n));
    }
    for (const auto& e : j.at("action")) {
        int hh = checkedIndex(e[0], dh, "action"), v = checkedIndex(e[1], d, "action"),
            w = checkedIndex(e[2], d, "action");
        addTo(p.R.yd.action[hh][v], w, decodeScalar(e[3].get<std::string>(), n));
    }
    for (const auto& e : j.at("coaction")) {
        int v = checkedIndex(e[0], d, "coaction"), hh = checkedIndex(e[1], dh, "coaction"),
            w = checkedIndex(e[2], d, "coaction");
        addTo(p.R.yd.coaction[v], hh * d + w, decodeScalar(e[3].get<std::string>(), n));
    }
    for (const auto& e : j.at("xi")) {
        int i = checkedIndex(e[0], d, "xi"), k = checkedIndex(e[1], d, "xi"),
            hh = checkedIndex(e[2], dh, "xi");
        addTo(p.xi[i * d + k], hh, decodeScalar(e[3].get<std::string>(), n));
    }
    return p;
}

void writeJsonFile(const std::string& path, const Json& j) {
    std::ofstream os(path);
    if (!os) throw CodecError("cannot open for writing: " + path);
    os << j.dump(1) << "\n";
}

Json readJsonFile(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw CodecError("cannot open: " + path);
    Json j = Json::parse(is, nullptr, false);
    if (j.is_discarded()) throw CodecError("malformed JSON in " + path);
    return j;
}

} // namespace hopf::io
