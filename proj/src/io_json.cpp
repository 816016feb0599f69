#include "bchkit/io_json.hpp"

#include <fstream>
#include <sstream>

namespace bchkit {

namespace {

Rational rational_field(const Json& v, const std::string& what)
{
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw ParseError(what + ": expected a rational string \"p/q\" or an integer");
}

int int_field(const Json& obj, const char* key)
{
    if (!obj.contains(key) || !obj[key].is_number_integer())
        throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
    return obj[key].get<int>();
}

Json rational_matrix_json(const RationalMatrix& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json optional_rational(const std::optional<Rational>& q)
{
    return q ? Json(to_string(*q)) : Json(nullptr);
}

} // namespace

Json load_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

StructureConstants algebra_from_json(const Json& doc)
{
    if (!doc.is_object()) throw ParseError("algebra document must be a JSON object");
    const int dim = int_field(doc, "dim");
    if (dim < 1) throw ParseError("algebra dim must be at least 1");
    std::vector<std::string> names;
    if (doc.contains("basis_names")) {
        if (!doc["basis_names"].is_array()) throw ParseError("basis_names must be an array");
        for (const auto& n : doc["basis_names"]) {
            if (!n.is_string()) throw ParseError("basis_names must hold strings");
            names.push_back(n.get<std::string>());
        }
        if (static_cast<int>(names.size()) != dim) throw ParseError("basis_names must have dim entries");
    }
    std::vector<StructureConstants::Entry> entries;
    if (doc.contains("f")) {
        if (!doc["f"].is_array()) throw ParseError("\"f\" must be an array");
        for (const auto& e : doc["f"]) {
            if (!e.is_object() || !e.contains("v")) throw ParseError("each \"f\" entry needs a, b, c and v");
            entries.push_back({int_field(e, "a"), int_field(e, "b"), int_field(e, "c"), rational_field(e["v"], "v")});
        }
    }
    return StructureConstants::validate(dim, entries, names);
}

Json to_json(const StructureConstants& alg)
{
    Json f = Json::array();
    for (const auto& e : alg.entries()) f.push_back({{"a", e.a}, {"b", e.b}, {"c", e.c}, {"v", to_string(e.value)}});
    return {{"dim", alg.dim()}, {"basis_names", alg.basis_names()}, {"f", std::move(f)}};
}

RationalVector element_from_json(const Json& doc, int dim)
{
    const Json* list = &doc;
    if (doc.is_object()) {
        if (!doc.contains("coords")) throw ParseError("element document needs \"coords\"");
        list = &doc["coords"];
    }
    if (!list->is_array()) throw ParseError("element coords must be an array");
    if (static_cast<int>(list->size()) != dim)
        throw ParseError("element has " + std::to_string(list->size()) + " coords, algebra has dim " +
                         std::to_string(dim));
    RationalVector x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rational_field((*list)[i], "coords");
    return x;
}

Json element_to_json(const RationalVector& x)
{
    Json coords = Json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) coords.push_back(to_string(x[i]));
    return {{"coords", std::move(coords)}};
}

MatrixRep rep_from_json(const Json& doc, const StructureConstants& alg)
{
    if (!doc.is_object()) throw ParseError("representation document must be a JSON object");
    const int n = int_field(doc, "dim_rep");
    if (n < 1) throw ParseError("dim_rep must be at least 1");
    if (!doc.contains("basis_images") || !doc["basis_images"].is_array())
        throw ParseError("representation needs \"basis_images\"");
    std::vector<Eigen::MatrixXd> images;
    for (const auto& img : doc["basis_images"]) {
        if (!img.is_array() || static_cast<int>(img.size()) != n)
            throw ParseError("each basis image must have dim_rep rows");
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i) {
            const auto& row = img[i];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw ParseError("each basis image row must have dim_rep entries");
            for (int j = 0; j < n; ++j) {
                if (row[j].is_number()) {
                    m(i, j) = row[j].get<double>();
                } else if (row[j].is_string()) {
                    m(i, j) = to_real<double>(parse_rational(row[j].get<std::string>()));
                } else {
                    throw ParseError("basis image entries must be numbers or rational strings");
                }
            }
        }
        images.push_back(std::move(m));
    }
    std::string faithful = doc.contains("faithful_on") && doc["faithful_on"].is_string()
                               ? doc["faithful_on"].get<std::string>()
                               : std::string{};
    return MatrixRep::validate(alg, std::move(images), std::move(faithful));
}

Json to_json(const MatrixRep& rep)
{
    Json images = Json::array();
    for (const auto& m : rep.basis_images()) {
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
            rows.push_back(std::move(row));
        }
        images.push_back(std::move(rows));
    }
    Json out = {{"dim_rep", rep.dim_rep()}, {"basis_images", std::move(images)}};
    if (!rep.faithful_on().empty()) out["faithful_on"] = rep.faithful_on();
    return out;
}

Json to_json(const Subspace& s)
{
    Json basis = Json::array();
    for (const auto& b : s.basis()) basis.push_back(element_to_json(b)["coords"]);
    return basis;
}

Json to_json(const CaseClassification& cls)
{
    const AlgebraFacts& facts = cls.facts;
    Json out;
    out["tag"] = to_string(cls.tag);
    out["u"] = optional_rational(cls.u);
    out["v"] = optional_rational(cls.v);
    out["derived_dim"] = facts.derived_dim;
    out["derived_abelian"] = facts.derived_abelian;
    out["nilpotent"] = facts.lower_central.nilpotent ? Json{{"class", facts.lower_central.nilpotency_class}}
                                                     : Json(nullptr);
    if (facts.rank_one) {
        out["rank_one"] = {{"omega", rational_matrix_json(facts.rank_one->omega)},
                           {"n", element_to_json(facts.rank_one->n)["coords"]},
                           {"omega_n", element_to_json(facts.rank_one->omega_n())["coords"]}};
    } else {
        out["rank_one"] = nullptr;
    }
    out["S_dim"] = cls.S ? Json(cls.S->dim()) : Json(nullptr);
    if (cls.S) out["S_basis"] = to_json(*cls.S);
    return out;
}

Json real_vector_json(const Eigen::VectorXd& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

Json to_json(const BchResult<double>& r)
{
    Json out;
    out["z"] = real_vector_json(r.z);
    if (r.z_exact) out["z_exact"] = element_to_json(*r.z_exact)["coords"];
    out["method"] = to_string(r.method);
    out["exact"] = r.exact;
    if (r.method == BchMethod::ScalarF) {
        out["u"] = optional_rational(r.u);
        out["v"] = optional_rational(r.v);
    }
    if (r.method == BchMethod::OperatorF) out["truncation_degree"] = r.truncation_degree;
    out["residual_bound"] = r.residual_bound ? Json(*r.residual_bound) : Json(nullptr);
    return out;
}

Json to_json(const ValidationError& e)
{
    Json out = {{"error", e.kind()}, {"message", e.what()}};
    if (auto* j = dynamic_cast<const JacobiViolation*>(&e)) {
        out["indices"] = {j->a, j->b, j->c, j->e};
        out["residual"] = j->residual;
    } else if (auto* a = dynamic_cast<const AntisymmetryViolation*>(&e)) {
        out["indices"] = {a->a, a->b, a->c};
    } else if (auto* i = dynamic_cast<const IndexOutOfRange*>(&e)) {
        out["indices"] = {i->a, i->b, i->c};
        out["dim"] = i->dim;
    }
    return out;
}

} // namespace bchkit
