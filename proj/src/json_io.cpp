#include "ddt/json_io.hpp"

#include <sstream>

namespace ddt {

Json scalar_to_json(const Scalar& s) {
    const mpq_class& q = s.rational();
    if (q.get_den() == 1 && q.get_num() >= -(1l << 40) && q.get_num() <= (1l << 40))
        return Json(q.get_num().get_si());
    return Json(s.str());
}

Scalar scalar_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return Scalar(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw validation_error("expected an integer or a rational string, got " + j.dump());
}

Json field_to_json(const Field& f) {
    if (f.is_rationals()) return Json("Q");
    Json j;
    j["Fp"] = f.p;
    return j;
}

Field field_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object() && j.contains("Fp")) return Field::prime(j.at("Fp").get<long>());
    throw validation_error("field must be \"Q\" or {\"Fp\": p}, got " + j.dump());
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (long i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (long j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) throw validation_error("matrix must be an array of rows");
    long rows = static_cast<long>(j.size());
    long cols = rows == 0 ? 0 : static_cast<long>(j.at(0).size());
    Matrix m(f, rows, cols);
    for (long i = 0; i < rows; ++i) {
        if (static_cast<long>(j.at(static_cast<size_t>(i)).size()) != cols)
            throw validation_error("ragged matrix rows");
        for (long c = 0; c < cols; ++c)
            m.set(i, c, scalar_from_json(f, j.at(static_cast<size_t>(i)).at(static_cast<size_t>(c))));
    }
    return m;
}

Json complex_to_json(const GradedComplex& c) {
    Json j;
    j["field"] = field_to_json(c.field);
    j["grading"] = c.grading == Grading::Cochain ? "cochain" : "chain";
    Json dims = Json::object();
    for (auto& [n, d] : c.dims)
        if (d > 0) dims[std::to_string(n)] = d;
    j["dims"] = dims;
    Json diff = Json::object();
    for (auto& [n, m] : c.diff)
        if (!m.is_zero()) diff[std::to_string(n)] = matrix_to_json(m);
    j["diff"] = diff;
    return j;
}

GradedComplex complex_from_json(const Json& j) {
    GradedComplex c;
    c.field = field_from_json(j.at("field"));
    std::string g = j.value("grading", "cochain");
    if (g != "cochain" && g != "chain") throw validation_error("grading must be \"chain\" or \"cochain\"");
    c.grading = g == "cochain" ? Grading::Cochain : Grading::Chain;
    for (auto& [key, val] : j.at("dims").items()) {
        long d = val.get<long>();
        if (d > 0) c.dims[std::stoi(key)] = d;
    }
    if (j.contains("diff"))
        for (auto& [key, val] : j.at("diff").items()) c.diff[std::stoi(key)] = matrix_from_json(c.field, val);
    c.validate();
    return c;
}

Json graded_space_to_json(const GradedVectorSpace& v) {
    Json dims = Json::object();
    for (auto& [n, d] : v.dims)
        if (d > 0) dims[std::to_string(n)] = d;
    return dims;
}

Json bicomplex_to_json(const Bicomplex& b) {
    Json j;
    j["field"] = field_to_json(b.field);
    Json dims = Json::object(), dc = Json::object(), ds = Json::object();
    auto key = [](Spot s) { return std::to_string(s.first) + "," + std::to_string(s.second); };
    for (auto& [s, d] : b.dims)
        if (d > 0) dims[key(s)] = d;
    for (auto& [s, m] : b.dc)
        if (!m.is_zero()) dc[key(s)] = matrix_to_json(m);
    for (auto& [s, m] : b.ds)
        if (!m.is_zero()) ds[key(s)] = matrix_to_json(m);
    j["dims"] = dims;
    j["dc"] = dc;
    j["ds"] = ds;
    return j;
}

Bicomplex bicomplex_from_json(const Json& j) {
    Bicomplex b;
    b.field = field_from_json(j.at("field"));
    auto parse_key = [](const std::string& k) {
        auto comma = k.find(',');
        if (comma == std::string::npos) throw validation_error("bicomplex keys have the form \"c,r\"");
        return Spot{std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))};
    };
    for (auto& [key, val] : j.at("dims").items()) {
        long d = val.get<long>();
        if (d > 0) b.dims[parse_key(key)] = d;
    }
    if (j.contains("dc"))
        for (auto& [key, val] : j.at("dc").items()) b.dc[parse_key(key)] = matrix_from_json(b.field, val);
    if (j.contains("ds"))
        for (auto& [key, val] : j.at("ds").items()) b.ds[parse_key(key)] = matrix_from_json(b.field, val);
    b.validate();
    return b;
}

Json simplicial_to_json(const SimplicialVS& v) {
    Json j;
    j["field"] = field_to_json(v.field);
    j["levels"] = v.levels;
    Json faces = Json::object();
    for (int n = 1; n <= v.n_max; ++n) {
        Json list = Json::array();
        for (int i = 0; i <= n; ++i) list.push_back(matrix_to_json(v.face(n, i)));
        faces[std::to_string(n)] = list;
    }
    Json degen = Json::object();
    for (int n = 0; n < v.n_max; ++n) {
        Json list = Json::array();
        for (int i = 0; i <= n; ++i) list.push_back(matrix_to_json(v.degeneracy(n, i)));
        degen[std::to_string(n)] = list;
    }
    j["faces"] = faces;
    j["degeneracies"] = degen;
    return j;
}

SimplicialVS simplicial_from_json(const Json& j) {
    SimplicialVS v;
    v.field = field_from_json(j.at("field"));
    for (auto& d : j.at("levels")) v.levels.push_back(d.get<long>());
    v.n_max = static_cast<int>(v.levels.size()) - 1;
    v.faces.resize(static_cast<size_t>(v.n_max) + 1);
    v.degen.resize(static_cast<size_t>(v.n_max) + 1);
    for (int n = 1; n <= v.n_max; ++n) {
        auto& list = j.at("faces").at(std::to_string(n));
        for (auto& m : list) v.faces[static_cast<size_t>(n)].push_back(matrix_from_json(v.field, m));
    }
    for (int n = 0; n < v.n_max; ++n) {
        auto& list = j.at("degeneracies").at(std::to_string(n));
        for (auto& m : list) v.degen[static_cast<size_t>(n)].push_back(matrix_from_json(v.field, m));
    }
    v.validate();
    return v;
}

namespace {

std::vector<Scalar> named_vector(const Field& f, const Json& value, const std::vector<std::string>& names) {
    std::vector<Scalar> v(names.size(), Scalar::zero(f));
    for (auto& term : value) {
        if (!term.is_array() || term.size() != 2) throw validation_error("values are lists of [name, coeff] pairs");
        std::string nm = term.at(0).get<std::string>();
        auto it = std::find(names.begin(), names.end(), nm);
        if (it == names.end()) throw validation_error("unknown basis element '" + nm + "'");
        v[static_cast<size_t>(it - names.begin())] = scalar_from_json(f, term.at(1));
    }
    return v;
}

}  // namespace

Json artinian_to_json(const ArtinianDGAlgebra& a) {
    Json j;
    j["field"] = field_to_json(a.field());
    Json basis = Json::array();
    for (long i = 0; i < a.dim(); ++i) {
        Json b;
        b["name"] = a.name(i);
        b["degree"] = a.degree(i);
        basis.push_back(b);
    }
    j["basis"] = basis;
    j["unit"] = a.name(a.unit_index());
    Json products = Json::array();
    for (long i : a.ideal())
        for (long k : a.ideal()) {
            if (k < i) continue;
            auto v = a.mul_basis(i, k);
            Json terms = Json::array();
            for (long t = 0; t < a.dim(); ++t)
                if (!v[static_cast<size_t>(t)].is_zero())
                    terms.push_back(Json::array({a.name(t), scalar_to_json(v[static_cast<size_t>(t)])}));
            if (!terms.empty())
                products.push_back(Json{{"a", a.name(i)}, {"b", a.name(k)}, {"value", terms}});
        }
    j["products"] = products;
    Json diff = Json::array();
    for (long i = 0; i < a.dim(); ++i) {
        auto v = a.d_basis(i);
        Json terms = Json::array();
        for (long t = 0; t < a.dim(); ++t)
            if (!v[static_cast<size_t>(t)].is_zero())
                terms.push_back(Json::array({a.name(t), scalar_to_json(v[static_cast<size_t>(t)])}));
        if (!terms.empty()) diff.push_back(Json{{"on", a.name(i)}, {"value", terms}});
    }
    j["diff"] = diff;
    Json ideal = Json::array();
    for (long i : a.ideal()) ideal.push_back(a.name(i));
    j["maximal_ideal"] = ideal;
    return j;
}

ArtinianDGAlgebra artinian_from_json(const Json& j) {
    ArtinianDGAlgebra::Raw raw;
    raw.field = field_from_json(j.at("field"));
    for (auto& b : j.at("basis")) {
        raw.names.push_back(b.at("name").get<std::string>());
        raw.degrees.push_back(b.at("degree").get<int>());
    }
    std::string unit_name = j.value("unit", "1");
    auto it = std::find(raw.names.begin(), raw.names.end(), unit_name);
    if (it == raw.names.end()) throw validation_error("unit '" + unit_name + "' is not a basis element");
    raw.unit = it - raw.names.begin();
    auto index_of = [&](const std::string& nm) {
        auto i = std::find(raw.names.begin(), raw.names.end(), nm);
        if (i == raw.names.end()) throw validation_error("unknown basis element '" + nm + "'");
        return static_cast<long>(i - raw.names.begin());
    };
    if (j.contains("products"))
        for (auto& p : j.at("products"))
            raw.products[{index_of(p.at("a").get<std::string>()), index_of(p.at("b").get<std::string>())}] =
                named_vector(raw.field, p.at("value"), raw.names);
    if (j.contains("diff"))
        for (auto& d : j.at("diff"))
            raw.diff[index_of(d.at("on").get<std::string>())] = named_vector(raw.field, d.at("value"), raw.names);
    ArtinianDGAlgebra a = ArtinianDGAlgebra::validate(raw);
    if (j.contains("maximal_ideal")) {
        std::vector<std::string> listed;
        for (auto& nm : j.at("maximal_ideal")) listed.push_back(nm.get<std::string>());
        std::vector<std::string> actual;
        for (long i : a.ideal()) actual.push_back(a.name(i));
        std::sort(listed.begin(), listed.end());
        std::sort(actual.begin(), actual.end());
        if (listed != actual) throw validation_error("maximal_ideal does not match the non-unit basis");
    }
    return a;
}

DGLA dgla_from_json(const Json& j) {
    DGLA::Raw raw;
    raw.field = field_from_json(j.at("field"));
    for (auto& b : j.at("generators")) {
        raw.names.push_back(b.at("name").get<std::string>());
        raw.degrees.push_back(b.at("degree").get<int>());
    }
    auto index_of = [&](const std::string& nm) {
        auto i = std::find(raw.names.begin(), raw.names.end(), nm);
        if (i == raw.names.end()) throw validation_error("unknown generator '" + nm + "'");
        return static_cast<long>(i - raw.names.begin());
    };
    if (j.contains("brackets"))
        for (auto& p : j.at("brackets"))
            raw.brackets[{index_of(p.at("a").get<std::string>()), index_of(p.at("b").get<std::string>())}] =
                named_vector(raw.field, p.at("value"), raw.names);
    if (j.contains("diff"))
        for (auto& d : j.at("diff"))
            raw.diff[index_of(d.at("on").get<std::string>())] = named_vector(raw.field, d.at("value"), raw.names);
    return DGLA::validate(raw);
}

DGAlgebra dgalgebra_from_json(const Json& j) {
    DGAlgebra a;
    a.field = field_from_json(j.at("field"));
    std::vector<std::string> names;
    std::vector<int> degrees;
    for (auto& b : j.at("basis")) {
        names.push_back(b.at("name").get<std::string>());
        degrees.push_back(b.at("degree").get<int>());
        if (degrees.back() < 0) throw validation_error("cochain DG algebras are non-negatively graded");
    }
    int top = 0;
    for (int d : degrees) top = std::max(top, d);
    a.dims.assign(static_cast<size_t>(top) + 1, 0);
    a.names.resize(static_cast<size_t>(top) + 1);
    std::vector<std::pair<int, long>> pos(names.size());
    for (size_t i = 0; i < names.size(); ++i) {
        int d = degrees[i];
        pos[i] = {d, a.dims[static_cast<size_t>(d)]++};
        a.names[static_cast<size_t>(d)].push_back(names[i]);
    }
    auto index_of = [&](const std::string& nm) {
        auto i = std::find(names.begin(), names.end(), nm);
        if (i == names.end()) throw validation_error("unknown basis element '" + nm + "'");
        return pos[static_cast<size_t>(i - names.begin())];
    };

    std::string unit_name = j.value("unit", "1");
    auto [ud, ui] = index_of(unit_name);
    if (ud != 0) throw validation_error("unit must sit in degree 0");
    a.unit.assign(static_cast<size_t>(a.dim(0)), Scalar::zero(a.field));
    a.unit[static_cast<size_t>(ui)] = Scalar::one(a.field);

    for (int p = 0; p <= top; ++p)
        for (int q = 0; p + q <= top; ++q) a.product[{p, q}] = Matrix(a.field, a.dim(p + q), a.dim(p) * a.dim(q));
    // unit products
    for (int d = 0; d <= top; ++d)
        for (long i = 0; i < a.dim(d); ++i) {
            Matrix& left = a.product.at({0, d});
            left.set(i, ui * a.dim(d) + i, Scalar::one(a.field));
            Matrix& right = a.product.at({d, 0});
            right.set(i, i * a.dim(0) + ui, Scalar::one(a.field));
        }
    if (j.contains("products"))
        for (auto& prod : j.at("products")) {
            auto [pa, ia] = index_of(prod.at("a").get<std::string>());
            auto [pb, ib] = index_of(prod.at("b").get<std::string>());
            if (pa + pb > top) throw validation_error("product lands beyond the top degree");
            std::vector<Scalar> v(static_cast<size_t>(a.dim(pa + pb)), Scalar::zero(a.field));
            for (auto& term : prod.at("value")) {
                auto [pt, itx] = index_of(term.at(0).get<std::string>());
                if (pt != pa + pb) throw validation_error("product value has the wrong degree");
                v[static_cast<size_t>(itx)] = scalar_from_json(a.field, term.at(1));
            }
            Matrix& m = a.product.at({pa, pb});
            for (long r = 0; r < a.dim(pa + pb); ++r) m.set(r, ia * a.dim(pb) + ib, v[static_cast<size_t>(r)]);
            // derive the other order from graded commutativity unless given
            Matrix& m2 = a.product.at({pb, pa});
            Scalar sign = Scalar(a.field, (pa % 2) && (pb % 2) ? -1 : 1);
            for (long r = 0; r < a.dim(pa + pb); ++r) m2.set(r, ib * a.dim(pa) + ia, sign * v[static_cast<size_t>(r)]);
        }
    for (int d = 0; d < top; ++d) a.diff.push_back(Matrix(a.field, a.dim(d + 1), a.dim(d)));
    if (j.contains("diff"))
        for (auto& dd : j.at("diff")) {
            auto [pd, id] = index_of(dd.at("on").get<std::string>());
            if (pd >= top) continue;
            for (auto& term : dd.at("value")) {
                auto [pt, itx] = index_of(term.at(0).get<std::string>());
                if (pt != pd + 1) throw validation_error("differential value has the wrong degree");
                a.diff[static_cast<size_t>(pd)].set(itx, id, scalar_from_json(a.field, term.at(1)));
            }
        }
    a.validate();
    return a;
}

SurjectionSpec surjection_from_json(const Json& j) {
    SurjectionSpec s{artinian_from_json(j.at("source")), artinian_from_json(j.at("target")),
                     Matrix(Field::rationals(), 0, 0)};
    const Field& f = s.source.field();
    Matrix m(f, s.target.dim(), s.source.dim());
    if (j.contains("map")) {
        std::vector<std::string> tnames;
        for (long i = 0; i < s.target.dim(); ++i) tnames.push_back(s.target.name(i));
        for (auto& entry : j.at("map")) {
            long src = s.source.find(entry.at("on").get<std::string>());
            auto v = named_vector(f, entry.at("value"), tnames);
            for (long r = 0; r < s.target.dim(); ++r) m.set(r, src, v[static_cast<size_t>(r)]);
        }
    } else {
        // match by basis name; names absent from the target map to zero
        for (long i = 0; i < s.source.dim(); ++i)
            for (long r = 0; r < s.target.dim(); ++r)
                if (s.target.name(r) == s.source.name(i)) m.set(r, i, Scalar::one(f));
    }
    s.map = m;
    return s;
}

std::string content_hash(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << "fnv1a:" << std::hex << h;
    return out.str();
}

}  // namespace ddt
