#include "hopf/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hopf {

using Json = nlohmann::json;

std::string to_string(ObjectKind k) {
    switch (k) {
        case ObjectKind::hopf: return "hopf";
        case ObjectKind::yd: return "yd";
        case ObjectKind::braided: return "braided";
    }
    return "?";
}

namespace {

// ---- writing

Json element_json(const CycloField& f, const FieldElement& x) {
    Json out = Json::array();
    for (unsigned i = 0; i < f.degree(); ++i) out.push_back(to_string(x.coeff(i)));
    return out;
}

Json vector_json(const CycloField& f, const Vector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(element_json(f, x));
    return out;
}

Json matrix_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.field(), m.row(r)));
    return out;
}

Json tensor_json(const Tensor3& t) {
    auto [d1, d2, d3] = t.dims();
    Json entries = Json::array();
    for (const auto& [i, j, k, x] : t.entries()) entries.push_back(Json::array({i, j, k, element_json(t.field(), x)}));
    return Json{{"dims", {d1, d2, d3}}, {"entries", entries}};
}

Json hopf_json(const HopfAlgebra& h) {
    const CycloField& f = h.field();
    Json out{{"field", f.order()},
             {"dim", h.dim()},
             {"mult", tensor_json(h.algebra.mult)},
             {"unit", vector_json(f, h.unit())},
             {"comult", tensor_json(h.comult)},
             {"counit", vector_json(f, h.counit)}};
    if (h.antipode) out["antipode"] = matrix_json(*h.antipode);
    return out;
}

Json yd_json(const YDModule& v) {
    Json action = Json::array();
    for (const auto& m : v.action) action.push_back(matrix_json(m));
    return Json{{"base", hopf_json(*v.base)}, {"dim", v.dim}, {"action", action}, {"coaction", tensor_json(v.coaction)}};
}

Json braided_json(const BraidedHopf& r) {
    Json out = yd_json(r.yd);
    out["mult"] = tensor_json(r.mult);
    out["unit"] = vector_json(r.field(), r.unit);
    out["comult"] = tensor_json(r.comult);
    out["counit"] = vector_json(r.field(), r.counit);
    out["antipode"] = matrix_json(r.antipode);
    return out;
}

// ---- reading

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field_of(const Json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path + "." + key, "missing");
    return *it;
}

std::size_t read_index(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) fail(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

Rational read_rational(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a rational string \"num/den\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

FieldElement read_element(const CycloField& f, const Json& j, const std::string& path) {
    if (!j.is_array() || j.size() != f.degree())
        fail(path, "expected an array of " + std::to_string(f.degree()) + " rational strings");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(read_rational(j[i], path + "[" + std::to_string(i) + "]"));
    return FieldElement(f, std::move(c));
}

Vector read_vector(const CycloField& f, const Json& j, std::size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n) fail(path, "expected an array of length " + std::to_string(n));
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(read_element(f, j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix read_matrix(const CycloField& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
    if (!j.is_array() || j.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        Vector row = read_vector(f, j[r], cols, path + "[" + std::to_string(r) + "]");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

Tensor3 read_tensor(const CycloField& f, const Json& j, std::array<std::size_t, 3> dims, const std::string& path) {
    const Json& d = field_of(j, "dims", path);
    if (!d.is_array() || d.size() != 3) fail(path + ".dims", "expected three dimensions");
    for (std::size_t a = 0; a < 3; ++a)
        if (read_index(d[a], path + ".dims[" + std::to_string(a) + "]") != dims[a])
            fail(path + ".dims", "expected [" + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
                                     std::to_string(dims[2]) + "]");
    Tensor3 t(f, dims[0], dims[1], dims[2]);
    const Json& entries = field_of(j, "entries", path);
    if (!entries.is_array()) fail(path + ".entries", "expected an array");
    for (std::size_t n = 0; n < entries.size(); ++n) {
        std::string p = path + ".entries[" + std::to_string(n) + "]";
        const Json& e = entries[n];
        if (!e.is_array() || e.size() != 4) fail(p, "expected [i, j, k, coefficient]");
        std::size_t idx[3];
        for (std::size_t a = 0; a < 3; ++a) {
            idx[a] = read_index(e[a], p + "[" + std::to_string(a) + "]");
            if (idx[a] >= dims[a]) fail(p + "[" + std::to_string(a) + "]", "index out of range");
        }
        t.add(idx[0], idx[1], idx[2], read_element(f, e[3], p + "[3]"));
    }
    return t;
}

HopfAlgebra read_hopf(const Json& j, const std::string& path) {
    const Json& fj = field_of(j, "field", path);
    if (!fj.is_number_unsigned() || fj.get<unsigned>() == 0) fail(path + ".field", "expected a positive integer");
    const CycloField& f = make_field(fj.get<unsigned>());
    std::size_t d = read_index(field_of(j, "dim", path), path + ".dim");
    if (d == 0) fail(path + ".dim", "must be positive");
    HopfAlgebra h{{&f, d, read_tensor(f, field_of(j, "mult", path), {d, d, d}, path + ".mult"),
                   read_vector(f, field_of(j, "unit", path), d, path + ".unit")},
                  read_tensor(f, field_of(j, "comult", path), {d, d, d}, path + ".comult"),
                  read_vector(f, field_of(j, "counit", path), d, path + ".counit"),
                  std::nullopt};
    if (j.contains("antipode") && !j["antipode"].is_null())
        h.antipode = read_matrix(f, j["antipode"], d, d, path + ".antipode");
    return h;
}

YDModule read_yd(const Json& j, const std::string& path) {
    auto base = std::make_shared<const HopfAlgebra>(read_hopf(field_of(j, "base", path), path + ".base"));
    const CycloField& f = base->field();
    std::size_t d = read_index(field_of(j, "dim", path), path + ".dim");
    if (d == 0) fail(path + ".dim", "must be positive");
    const Json& action = field_of(j, "action", path);
    if (!action.is_array() || action.size() != base->dim())
        fail(path + ".action", "expected one matrix per base basis element");
    YDModule v{base, d, {}, Tensor3(f, d, base->dim(), d)};
    for (std::size_t b = 0; b < base->dim(); ++b)
        v.action.push_back(read_matrix(f, action[b], d, d, path + ".action[" + std::to_string(b) + "]"));
    v.coaction = read_tensor(f, field_of(j, "coaction", path), {d, base->dim(), d}, path + ".coaction");
    return v;
}

BraidedHopf read_braided(const Json& j, const std::string& path) {
    YDModule v = read_yd(j, path);
    const CycloField& f = v.field();
    std::size_t d = v.dim;
    BraidedHopf r{v,
                  read_tensor(f, field_of(j, "mult", path), {d, d, d}, path + ".mult"),
                  read_vector(f, field_of(j, "unit", path), d, path + ".unit"),
                  read_tensor(f, field_of(j, "comult", path), {d, d, d}, path + ".comult"),
                  read_vector(f, field_of(j, "counit", path), d, path + ".counit"),
                  read_matrix(f, field_of(j, "antipode", path), d, d, path + ".antipode")};
    return r;
}

}  // namespace

Manifest parse_manifest(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    const Json& version = field_of(j, "schema_version", "$");
    if (!version.is_string()) fail("$.schema_version", "expected a string");
    if (version.get<std::string>() != "1")
        throw SchemaVersionMismatch("unsupported schema_version \"" + version.get<std::string>() + "\", expected \"1\"");
    const Json& kind = field_of(j, "object_kind", "$");
    if (!kind.is_string()) fail("$.object_kind", "expected a string");
    const Json& payload = field_of(j, "payload", "$");
    std::string k = kind.get<std::string>();
    Manifest m;
    if (k == "hopf")
        m.payload = read_hopf(payload, "$.payload");
    else if (k == "yd")
        m.payload = read_yd(payload, "$.payload");
    else if (k == "braided")
        m.payload = read_braided(payload, "$.payload");
    else
        fail("$.object_kind", "unknown kind \"" + k + "\"");
    return m;
}

std::string serialize_manifest(const Manifest& m) {
    Json payload = std::visit(
        [](const auto& obj) -> Json {
            using T = std::decay_t<decltype(obj)>;
            if constexpr (std::is_same_v<T, HopfAlgebra>)
                return hopf_json(obj);
            else if constexpr (std::is_same_v<T, YDModule>)
                return yd_json(obj);
            else
                return braided_json(obj);
        },
        m.payload);
    Json j{{"schema_version", m.schema_version}, {"object_kind", to_string(m.kind())}, {"payload", payload}};
    return j.dump(1) + "\n";
}

Manifest read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str());
}

void write_manifest(const std::string& path, const Manifest& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << serialize_manifest(m);
    if (!out) throw ParseError(path + ": write failed");
}

}  // namespace hopf
