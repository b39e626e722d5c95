#include "ppav/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace ppav {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("missing field '") + key + "'");
    return j.at(key);
}

long long_from_json(const Json& j)
{
    if (!j.is_number_integer())
        throw ValidationError("expected an integer");
    return j.get<long>();
}

Json optional_json(const std::optional<long>& v)
{
    return v ? Json(*v) : Json("unknown");
}

} // namespace

Json to_json(const Integer& x) { return x.get_str(); }

Json to_json(const Rational& x) { return x.get_str(); }

Json to_json(const RatMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const IntMatrix& m) { return to_json(to_rational(m)); }

Json to_json(const IntVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(const Lattice& l)
{
    return Json{{"ambient_dim", l.ambient_dim()}, {"basis", to_json(RatMatrix(l.basis().transpose()))}};
}

Json to_json(const PolarizedLattice& p)
{
    return Json{{"ambient_dim", p.ambient_dim()},
                {"basis", to_json(RatMatrix(p.lattice().basis().transpose()))},
                {"form", to_json(p.form())}};
}

Json to_json(const RibbonGraph& r) { return Json{{"edges", r.num_edges()}, {"rotation", r.rotation()}}; }

Json to_json(const VoltageAssignment& v) { return Json{{"m", v.m}, {"values", v.values}}; }

Json to_json(const LocusReport& r)
{
    return Json{{"g", r.g},
                {"m", r.m},
                {"r", r.r},
                {"dim_Ag", r.dim_Ag},
                {"dim_Mg", r.dim_Mg},
                {"dim_R_gmr", r.dim_R_gmr},
                {"dim_jacobian_quotient_locus", r.dim_jacobian_quotient_locus},
                {"dim_inverse_prym_locus", r.dim_inverse_prym_locus},
                {"dim_prym_quotient_bound", r.dim_prym_quotient_bound},
                {"prym_target_dim_index", r.prym_target_dim_index},
                {"cover_genus", r.cover_genus},
                {"prym_dim", r.prym_dim},
                {"genus_lower", r.genus_lower},
                {"genus_welters_upper", r.m == 2 ? optional_json(r.genus_welters_upper) : Json(nullptr)},
                {"genus_family_lower_bound", r.genus_family_lower_bound}};
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_string())
        throw ValidationError("expected a rational number as a string");
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos)
        throw ValidationError("malformed rational '" + s + "'");
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw ValidationError("malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

RatMatrix rat_matrix_from_json(const Json& j)
{
    if (!j.is_array())
        throw ValidationError("expected a matrix");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw ValidationError("matrix rows have different lengths");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = rational_from_json(j[i][k]);
    }
    return m;
}

Lattice lattice_from_json(const Json& j)
{
    long n = long_from_json(field(j, "ambient_dim"));
    RatMatrix rows = rat_matrix_from_json(field(j, "basis"));
    if (n < 0 || (rows.rows() > 0 && rows.cols() != static_cast<std::size_t>(n)))
        throw ValidationError("lattice basis does not match ambient_dim");
    if (rows.rows() == 0)
        return Lattice::zero(static_cast<std::size_t>(n));
    RatMatrix b = rows.transpose();
    if (rank(b) != b.cols())
        throw ValidationError("lattice basis is not linearly independent");
    return Lattice(b);
}

PolarizedLattice polarized_from_json(const Json& j)
{
    Lattice l = lattice_from_json(j);
    RatMatrix f = rat_matrix_from_json(field(j, "form"));
    try {
        return PolarizedLattice(l, f);
    } catch (const Error& e) {
        throw ValidationError(std::string("invalid polarized lattice: ") + e.what());
    }
}

RibbonGraph ribbon_from_json(const Json& j)
{
    long edges = long_from_json(field(j, "edges"));
    const Json& rot = field(j, "rotation");
    if (edges < 0 || !rot.is_array())
        throw ValidationError("malformed ribbon graph");
    std::vector<std::vector<std::size_t>> rotation;
    for (const auto& v : rot) {
        if (!v.is_array())
            throw ValidationError("malformed rotation");
        std::vector<std::size_t> hs;
        for (const auto& h : v) {
            long x = long_from_json(h);
            if (x < 0)
                throw ValidationError("negative half-edge");
            hs.push_back(static_cast<std::size_t>(x));
        }
        rotation.push_back(std::move(hs));
    }
    try {
        return RibbonGraph(static_cast<std::size_t>(edges), std::move(rotation));
    } catch (const DomainError& e) {
        throw ValidationError(std::string("invalid ribbon graph: ") + e.what());
    }
}

VoltageAssignment voltage_from_json(const Json& j)
{
    VoltageAssignment v;
    v.m = long_from_json(field(j, "m"));
    const Json& vals = field(j, "values");
    if (!vals.is_array() || v.m < 1)
        throw ValidationError("malformed voltage assignment");
    for (const auto& x : vals)
        v.values.push_back(long_from_json(x));
    return v;
}

Json cover_fixture(const CoverHomology& cov)
{
    return Json{{"schema", schema_version},
                {"kind", "cover"},
                {"ribbon", to_json(cov.base_graph)},
                {"voltage", to_json(cov.voltage)},
                {"base", to_json(cov.base())},
                {"total", to_json(cov.total())},
                {"sigma", to_json(cov.sigma.matrix())},
                {"pushforward", to_json(cov.pushforward.matrix())},
                {"transfer", to_json(cov.transfer.matrix())}};
}

CoverHomology cover_from_fixture(const Json& j)
{
    if (!j.is_object())
        throw ValidationError("fixture is not a JSON object");
    if (!j.contains("schema") || j.at("schema") != schema_version)
        throw ValidationError("fixture schema is not " + schema_version);
    if (!j.contains("kind") || j.at("kind") != "cover")
        throw ValidationError("fixture is not a cover");
    RibbonGraph r = ribbon_from_json(field(j, "ribbon"));
    VoltageAssignment v = voltage_from_json(field(j, "voltage"));
    CoverHomology cov = [&] {
        try {
            return cyclic_cover(r, v);
        } catch (const DomainError& e) {
            throw ValidationError(std::string("invalid cover data: ") + e.what());
        } catch (const CoverError& e) {
            throw ValidationError(std::string("invalid cover data: ") + e.what());
        }
    }();
    if (j.contains("total") && !(polarized_from_json(j.at("total")) == cov.total()))
        throw ValidationError("stored total homology does not match the ribbon data");
    if (j.contains("base") && !(polarized_from_json(j.at("base")) == cov.base()))
        throw ValidationError("stored base homology does not match the ribbon data");
    for (auto [key, map] : {std::pair{"sigma", &cov.sigma}, {"pushforward", &cov.pushforward}, {"transfer", &cov.transfer}})
        if (j.contains(key) && rat_matrix_from_json(j.at(key)) != map->matrix())
            throw ValidationError(std::string("stored ") + key + " does not match the ribbon data");
    return cov;
}

std::string locus_table(const LocusReport& r)
{
    Json j = to_json(r);
    std::vector<std::pair<std::string, std::string>> rows;
    std::size_t width = 0;
    for (const char* key : {"g", "m", "r", "dim_Ag", "dim_Mg", "dim_R_gmr", "dim_jacobian_quotient_locus",
                            "dim_inverse_prym_locus", "dim_prym_quotient_bound", "prym_target_dim_index",
                            "cover_genus", "prym_dim", "genus_lower", "genus_welters_upper",
                            "genus_family_lower_bound"}) {
        const Json& v = j.at(key);
        if (v.is_null())
            continue;
        rows.emplace_back(key, v.is_string() ? v.get<std::string>() : v.dump());
        width = std::max(width, rows.back().first.size());
    }
    std::ostringstream out;
    for (const auto& [k, v] : rows)
        out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
    return out.str();
}

} // namespace ppav
