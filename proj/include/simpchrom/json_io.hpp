#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "simpchrom/chromatic.hpp"
#include "simpchrom/complex.hpp"
#include "simpchrom/errors.hpp"
#include "simpchrom/graph.hpp"
#include "simpchrom/hodge.hpp"
#include "simpchrom/poly.hpp"
#include "simpchrom/polytope.hpp"
#include "simpchrom/report.hpp"

namespace simpchrom::io {

// Insertion-ordered so that serialized output is byte-stable and keys appear
// in the order they are documented.
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// scalars

// Integers are JSON numbers when they fit in 64 bits and decimal strings
// otherwise, in both directions.
inline Integer integer_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s.empty()) throw ParseError(where + ": empty string is not an integer");
        size_t k = (s[0] == '-') ? 1 : 0;
        if (k == s.size()) throw ParseError(where + ": '" + s + "' is not an integer");
        for (; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw ParseError(where + ": '" + s + "' is not a decimal integer");
        return Integer(s);
    }
    throw ParseError(where + ": expected an integer (number or decimal string)");
}

inline json integer_to_json(const Integer& v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return v.str();
}

inline json rational_to_json(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1)
        return integer_to_json(boost::multiprecision::numerator(q));
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

inline int int_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ParseError(where + ": expected an integer");
    auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ParseError(where + ": value out of range");
    return static_cast<int>(v);
}

// ---------------------------------------------------------------------------
// shared shapes

inline const json& require(const json& j, const char* key, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(what + ": missing field '" + key + "'");
    return *it;
}

inline std::vector<int> int_list_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::vector<std::vector<int>> int_lists_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of arrays");
    std::vector<std::vector<int>> out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(int_list_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline json int_lists_to_json(const std::vector<std::vector<int>>& lists) {
    json out = json::array();
    for (const auto& l : lists) out.push_back(l);
    return out;
}

// ---------------------------------------------------------------------------
// polynomials and rational functions

// A polynomial is the coefficient array [c0, c1, ...]; the zero polynomial
// serializes as [].
inline IntPolynomial polynomial_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a coefficient array");
    std::vector<Integer> coeffs;
    coeffs.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i)
        coeffs.push_back(integer_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return IntPolynomial(std::move(coeffs));
}

inline json polynomial_to_json(const IntPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(integer_to_json(c));
    return out;
}

inline json qpolynomial_to_json(const QPolynomial& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(rational_to_json(c));
    return out;
}

inline json integers_to_json(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(integer_to_json(c));
    return out;
}

inline json rationals_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const auto& c : v) out.push_back(rational_to_json(c));
    return out;
}

inline RationalFunction ratfun_from_json(const json& j, const std::string& where) {
    IntPolynomial num = polynomial_from_json(require(j, "num", where), where + ".num");
    IntPolynomial den = polynomial_from_json(require(j, "den", where), where + ".den");
    return RationalFunction(std::move(num), std::move(den));
}

inline json ratfun_to_json(const RationalFunction& f) {
    return json{{"num", polynomial_to_json(f.num())}, {"den", polynomial_to_json(f.den())}};
}

// ---------------------------------------------------------------------------
// domain objects

// {"n": int, "facets": [[int]]} or {"n": int, "minimal_nonfaces": [[int]]}
inline SimplicialComplex complex_from_json(const json& j, const std::string& where = "complex") {
    int n = int_from_json(require(j, "n", where), where + ".n");
    bool has_facets = j.is_object() && j.contains("facets");
    bool has_nonfaces = j.is_object() && j.contains("minimal_nonfaces");
    if (has_facets == has_nonfaces)
        throw ParseError(where + ": need exactly one of 'facets' or 'minimal_nonfaces'");
    if (has_facets)
        return SimplicialComplex::from_facets(
            n, int_lists_from_json(j["facets"], where + ".facets"));
    return SimplicialComplex::from_minimal_nonfaces(
        n, int_lists_from_json(j["minimal_nonfaces"], where + ".minimal_nonfaces"));
}

inline json complex_to_json(const SimplicialComplex& s) {
    return json{{"n", s.n()}, {"facets", int_lists_to_json(s.facet_sets())}};
}

// {"alphas": [[int]], "apex": int|null}
inline PropertyIWitness witness_from_json(const json& j, const std::string& where = "witness") {
    PropertyIWitness w;
    w.alphas = int_lists_from_json(require(j, "alphas", where), where + ".alphas");
    if (j.contains("apex") && !j["apex"].is_null())
        w.apex = int_from_json(j["apex"], where + ".apex");
    return w;
}

inline json witness_to_json(const PropertyIWitness& w) {
    json out{{"alphas", int_lists_to_json(w.alphas)}};
    out["apex"] = w.apex ? json(*w.apex) : json(nullptr);
    return out;
}

// {"n": int, "edges": [[u, v]]}
inline Graph graph_from_json(const json& j, const std::string& where = "graph") {
    int n = int_from_json(require(j, "n", where), where + ".n");
    auto lists = int_lists_from_json(require(j, "edges", where), where + ".edges");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(lists.size());
    for (size_t i = 0; i < lists.size(); ++i) {
        if (lists[i].size() != 2)
            throw ParseError(where + ".edges[" + std::to_string(i) + "]: expected [u, v]");
        edges.emplace_back(lists[i][0], lists[i][1]);
    }
    return Graph::make(n, std::move(edges));
}

inline std::vector<ZVector> zvectors_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of lattice points");
    std::vector<ZVector> out;
    out.reserve(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        const json& row = j[i];
        std::string at = where + "[" + std::to_string(i) + "]";
        if (!row.is_array()) throw ParseError(at + ": expected an array");
        ZVector v(row.size());
        for (size_t k = 0; k < row.size(); ++k)
            v[k] = integer_from_json(row[k], at + "[" + std::to_string(k) + "]");
        out.push_back(std::move(v));
    }
    return out;
}

inline json zvectors_to_json(const std::vector<ZVector>& pts) {
    json out = json::array();
    for (const auto& p : pts) {
        json row = json::array();
        for (const auto& c : p) row.push_back(integer_to_json(c));
        out.push_back(std::move(row));
    }
    return out;
}

// {"vertices": [[int, ...]]}
inline LatticePolytope polytope_from_json(const json& j, const std::string& where = "polytope") {
    return build_polytope(zvectors_from_json(require(j, "vertices", where), where + ".vertices"));
}

inline json polytope_to_json(const LatticePolytope& p) {
    return json{{"vertices", zvectors_to_json(p.vertices())}};
}

// {"points": [[int, ...]], "simplices": [[int indices]]}
inline Triangulation triangulation_from_json(const json& j,
                                             const std::string& where = "triangulation") {
    Triangulation t;
    t.points = zvectors_from_json(require(j, "points", where), where + ".points");
    t.simplices = int_lists_from_json(require(j, "simplices", where), where + ".simplices");
    detail::validate_triangulation_shape(t);
    return t;
}

// ---------------------------------------------------------------------------
// reports

inline json notes_to_json(const std::vector<std::string>& notes) {
    json out = json::array();
    for (const auto& n : notes) out.push_back(n);
    return out;
}

inline json report_to_json(const VerificationReport& r) {
    return json{{"identity", r.identity},
                {"hypotheses_ok", r.hypotheses_ok},
                {"lhs", ratfun_to_json(r.lhs)},
                {"rhs", ratfun_to_json(r.rhs)},
                {"pass", r.pass},
                {"notes", notes_to_json(r.notes)}};
}

inline json tri_report_to_json(const TriangulationReport& r) {
    return json{{"valid", r.valid},
                {"points_ok", r.points_ok},
                {"simplices_ok", r.simplices_ok},
                {"covering_ok", r.covering_ok},
                {"proper_ok", r.proper_ok},
                {"covered", integer_to_json(r.covered)},
                {"target", integer_to_json(r.target)},
                {"notes", notes_to_json(r.notes)}};
}

inline json compressed_report_to_json(const CompressedReport& r) {
    return json{{"definition_check", r.definition_check},
                {"h_equals_delta", r.h_equals_delta},
                {"delta_geq_h", r.delta_geq_h},
                {"h", integers_to_json(r.h)},
                {"delta", integers_to_json(r.delta)},
                {"notes", notes_to_json(r.notes)}};
}

inline json hstar_report_to_json(const HstarReport& r) {
    return json{{"pass", r.pass},
                {"hstar_unimodal", r.hstar_unimodal},
                {"hstar", integers_to_json(r.hstar)},
                {"h", integers_to_json(r.h)},
                {"notes", notes_to_json(r.notes)}};
}

inline json polar_dual_to_json(const PolarDualResult& r) {
    json duals = json::array();
    for (const auto& v : r.dual_vertices) {
        json row = json::array();
        for (const auto& c : v) row.push_back(rational_to_json(c));
        duals.push_back(std::move(row));
    }
    json out{{"standard_type", r.standard_type},
             {"in_Cstar", r.in_Cstar},
             {"dual_vertices", std::move(duals)}};
    out["dual"] = r.dual ? polytope_to_json(*r.dual) : json(nullptr);
    out["roundtrip_ok"] = r.roundtrip_ok ? json(*r.roundtrip_ok) : json(nullptr);
    return out;
}

inline json hodge_dims_to_json(const HodgeDims& d) {
    return json{{"N", d.N},
                {"full", integers_to_json(d.full)},
                {"primitive", integers_to_json(d.primitive)}};
}

inline json hodge_report_to_json(const HodgeChromaticReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"i", row.i},
                            {"coefficient", integer_to_json(row.coefficient)},
                            {"level", row.level},
                            {"primitive_dim", integer_to_json(row.primitive_dim)},
                            {"equal", row.equal}});
    return json{{"hypotheses_ok", r.hypotheses_ok},
                {"part2_ok", r.part2_ok},
                {"compressed_ok", r.compressed_ok},
                {"complexes_match", r.complexes_match},
                {"polynomial", polynomial_to_json(r.polynomial)},
                {"equals_h", r.equals_h},
                {"equals_delta", r.equals_delta},
                {"delta", integers_to_json(r.delta)},
                {"dims", hodge_dims_to_json(r.dims)},
                {"rows", std::move(rows)},
                {"pass", r.pass},
                {"notes", notes_to_json(r.notes)}};
}

inline json chain_report_to_json(const ChainReport& r) {
    return json{{"hypotheses_ok", r.hypotheses_ok},
                {"compressed_ok", r.compressed_ok},
                {"complexes_match", r.complexes_match},
                {"part2", report_to_json(r.part2)},
                {"h_eq_delta", report_to_json(r.h_eq_delta)},
                {"etilde", report_to_json(r.etilde)},
                {"corrected", report_to_json(r.corrected)},
                {"displayed_form", report_to_json(r.displayed_form)},
                {"proof_variant", report_to_json(r.proof_variant)},
                {"pass", r.pass},
                {"notes", notes_to_json(r.notes)}};
}

inline json latcoh_report_to_json(const LatticeCohReport& r) {
    return json{{"hypotheses_ok", r.hypotheses_ok},
                {"hstar_ok", r.hstar_ok},
                {"complexes_match", r.complexes_match},
                {"exact", report_to_json(r.exact)},
                {"series_ok", r.series_ok},
                {"series_lhs", rationals_to_json(r.series_lhs)},
                {"series_rhs", rationals_to_json(r.series_rhs)},
                {"pass", r.pass},
                {"notes", notes_to_json(r.notes)}};
}

// ---------------------------------------------------------------------------
// files and bundles

inline json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const nlohmann::detail::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

// A bundle field is either an inline JSON value or a string naming a file
// relative to the bundle's own directory.
inline json bundle_value(const json& bundle, const char* key,
                         const std::filesystem::path& bundle_dir) {
    const json& v = require(bundle, key, "bundle");
    if (v.is_string()) return load_json_file(bundle_dir / v.get_ref<const std::string&>());
    return v;
}

inline std::optional<json> bundle_value_opt(const json& bundle, const char* key,
                                            const std::filesystem::path& bundle_dir) {
    if (!bundle.is_object() || !bundle.contains(key) || bundle[key].is_null())
        return std::nullopt;
    return bundle_value(bundle, key, bundle_dir);
}

// Complex + witness for the verifiers that need an apex structure. Accepts
// either "t_complex" (apex augmentation is applied here) or an explicit
// "complex" + "witness" pair; chain/lattice verifiers fall back to the
// triangulation's abstract complex when neither is present.
struct ApexInput {
    SimplicialComplex s;
    PropertyIWitness w;
};

inline ApexInput apex_input_from_bundle(const json& bundle,
                                        const std::filesystem::path& bundle_dir,
                                        const Triangulation* fallback) {
    if (auto t = bundle_value_opt(bundle, "t_complex", bundle_dir)) {
        auto aug = apex_augment(complex_from_json(*t, "t_complex"));
        return {std::move(aug.s), std::move(aug.witness)};
    }
    auto c = bundle_value_opt(bundle, "complex", bundle_dir);
    if (c) {
        auto wj = bundle_value_opt(bundle, "witness", bundle_dir);
        if (!wj) throw ParseError("bundle: 'complex' requires a 'witness'");
        return {complex_from_json(*c, "complex"), witness_from_json(*wj, "witness")};
    }
    if (fallback) {
        auto aug = apex_augment(triangulation_complex(*fallback));
        return {std::move(aug.s), std::move(aug.witness)};
    }
    throw ParseError("bundle: need 't_complex' or 'complex'+'witness'");
}

}  // namespace simpchrom::io
