#include "cliffpair/json_io.hpp"

#include "cliffpair/catalog.hpp"
#include "cliffpair/hc.hpp"
#include "cliffpair/transgress.hpp"

#include <json.hpp>

#include <bit>
#include <stdexcept>

namespace cliffpair {

namespace {

using Json = nlohmann::ordered_json;

Json doc(const char* kind) {
    Json j;
    j["schema"] = kJsonSchema;
    j["kind"] = kind;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    Matrix m(rows, cols);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            m.at(r, c) = Scalar::parse(j[r][c].get<std::string>());
    return m;
}

Json terms_json(const Multivector& v) {
    Json terms = Json::array();
    for (const auto& [mask, coeff] : v.terms()) {
        Json mono = Json::array();
        for (size_t i = 0; i < 64; ++i)
            if (mask >> i & 1) mono.push_back(v.space()->labels()[i]);
        terms.push_back(Json{{"monomial", std::move(mono)}, {"coeff", coeff.str()}});
    }
    return terms;
}

Json scalar_vec_json(const std::vector<Scalar>& v) {
    Json out = Json::array();
    for (const Scalar& c : v) out.push_back(c.str());
    return out;
}

Json index_json(const std::vector<uint32_t>& v) { return Json(v); }

const char* family_name(PairFamily f) { return f == PairFamily::AI ? "AI" : "AII"; }

const char* flavor_name(InvariantFlavor f) {
    switch (f) {
    case InvariantFlavor::CL_K_LIE: return "cl_k_lie";
    case InvariantFlavor::CL_K_GROUP: return "cl_k_group";
    default: return "wedge_graded";
    }
}

} // namespace

std::string lie_algebra_to_json(const LieAlgebra& g) {
    Json j = doc("lie_algebra");
    j["name"] = g.name();
    j["labels"] = g.labels();
    Json rep = Json::array();
    for (size_t i = 0; i < g.dim(); ++i) rep.push_back(matrix_json(g.rep(i)));
    j["rep"] = std::move(rep);
    Json br = Json::array();
    for (size_t i = 0; i < g.dim(); ++i)
        for (size_t k = 0; k < g.dim(); ++k)
            for (const auto& [col, coeff] : g.bracket(i, k))
                br.push_back(Json::array({i, k, col, coeff.str()}));
    j["brackets"] = std::move(br);
    j["gram"] = matrix_json(g.gram());
    return dump(j);
}

LieAlgebra lie_algebra_from_json(const std::string& text) {
    Json j = Json::parse(text);
    if (j.value("schema", "") != kJsonSchema || j.value("kind", "") != "lie_algebra")
        throw std::runtime_error("lie_algebra_from_json: not a lie_algebra document");
    std::vector<Matrix> rep;
    for (const Json& m : j["rep"]) rep.push_back(matrix_from_json(m));
    LieAlgebra g = LieAlgebra::from_rep(j["name"].get<std::string>(),
                                        j["labels"].get<std::vector<std::string>>(),
                                        std::move(rep));
    if (!(g.gram() == matrix_from_json(j["gram"])))
        throw std::runtime_error("lie_algebra_from_json: Gram matrix mismatch");
    std::vector<SparseRow> brackets(g.dim() * g.dim());
    for (const Json& t : j["brackets"])
        brackets[t[0].get<size_t>() * g.dim() + t[1].get<size_t>()].emplace_back(
            t[2].get<uint32_t>(), Scalar::parse(t[3].get<std::string>()));
    for (size_t i = 0; i < g.dim(); ++i)
        for (size_t k = 0; k < g.dim(); ++k)
            if (g.bracket(i, k) != brackets[i * g.dim() + k])
                throw std::runtime_error("lie_algebra_from_json: bracket mismatch");
    return g;
}

std::string pair_to_json(const SymmetricPair& pair) {
    Json j = doc("symmetric_pair");
    j["id"] = pair_id(pair);
    j["family"] = family_name(pair.family());
    j["n"] = pair.rep_n();
    j["g"] = pair.g().name();
    j["dims"] = Json{{"g", pair.g().dim()},
                     {"k", pair.dim_k()},
                     {"p", pair.dim_p()},
                     {"t", pair.dim_t()},
                     {"a", pair.dim_a()}};
    j["kIdx"] = index_json(pair.kIdx());
    j["pIdx"] = index_json(pair.pIdx());
    j["tIdx"] = index_json(pair.tIdx());
    j["aIdx"] = index_json(pair.aIdx());
    j["labels"] = pair.g().labels();
    j["positive_systems"] = pair.pos_systems().size();
    return dump(j);
}

SymmetricPair pair_from_json(const std::string& text) {
    Json j = Json::parse(text);
    if (j.value("schema", "") != kJsonSchema || j.value("kind", "") != "symmetric_pair")
        throw std::runtime_error("pair_from_json: not a symmetric_pair document");
    PairFamily fam = j["family"].get<std::string>() == "AI" ? PairFamily::AI : PairFamily::AII;
    SymmetricPair pair = SymmetricPair::build(fam, j["n"].get<size_t>());
    if (index_json(pair.kIdx()) != j["kIdx"] || index_json(pair.pIdx()) != j["pIdx"] ||
        index_json(pair.tIdx()) != j["tIdx"] || index_json(pair.aIdx()) != j["aIdx"])
        throw std::runtime_error("pair_from_json: index sets do not match the rebuilt pair");
    return pair;
}

std::string multivector_to_json(const Multivector& v) {
    Json j = doc("multivector");
    j["degree"] = v.degree();
    j["terms"] = terms_json(v);
    return dump(j);
}

std::string info_json(const SymmetricPair& pair) {
    Json j = doc("info");
    j["pair"] = pair_id(pair);
    j["family"] = family_name(pair.family());
    j["dims"] = Json{{"g", pair.g().dim()},
                     {"k", pair.dim_k()},
                     {"p", pair.dim_p()},
                     {"t", pair.dim_t()},
                     {"a", pair.dim_a()}};
    j["rank_g"] = pair.rank_g();
    j["rank_k"] = pair.rank_k();
    j["positive_systems"] = pair.pos_systems().size();
    j["group_generators"] = pair.group_generators().size();
    return dump(j);
}

std::string primitives_json(const PairContext& ctx, const std::vector<Multivector>& prims) {
    Json j = doc("primitives");
    j["pair"] = pair_id(ctx.pair());
    Json list = Json::array();
    for (const Multivector& p : prims)
        list.push_back(Json{{"degree", p.degree()}, {"terms", terms_json(p)}});
    j["primitives"] = std::move(list);
    return dump(j);
}

std::string invariants_json(const PairContext& ctx, const InvariantBasis& basis) {
    Json j = doc("invariants");
    j["pair"] = pair_id(ctx.pair());
    j["flavor"] = flavor_name(basis.flavor);
    j["dim"] = basis.elements.size();
    j["graded_dims"] = basis.gradedDims;
    Json list = Json::array();
    for (const Multivector& b : basis.elements)
        list.push_back(Json{{"degree", b.degree()}, {"terms", terms_json(b)}});
    j["elements"] = std::move(list);
    return dump(j);
}

std::string projection_algebra_json(const PairContext& ctx, const ProjectionAlgebra& pa) {
    Json j = doc("projection_algebra");
    j["pair"] = pair_id(ctx.pair());
    Json list = Json::array();
    for (size_t i = 0; i < pa.idempotents.size(); ++i)
        list.push_back(Json{{"label", pa.labels[i]},
                            {"eigenvalue", pa.eigenvalues[i].str()},
                            {"terms", terms_json(pa.idempotents[i])}});
    j["idempotents"] = std::move(list);
    return dump(j);
}

std::string quotient_json(const SymmetricPair& pair, QuotientMode mode,
                          const PolyQuotientReport& rep) {
    Json j = doc("coinvariant_quotient");
    j["pair"] = pair_id(pair);
    j["mode"] = mode == QuotientMode::AT_RHO ? "at_rho" : "graded";
    j["generators"] = rep.generators;
    j["ideal_generators"] = rep.ideal_generators;
    j["dim"] = rep.dim;
    Json graded = Json::array();
    for (const auto& [deg, d] : rep.graded) graded.push_back(Json::array({deg, d}));
    j["graded"] = std::move(graded);
    return dump(j);
}

std::string hc_json(const PairContext& ctx) {
    Json j = doc("hc");
    const SymmetricPair& pair = ctx.pair();
    j["pair"] = pair_id(pair);
    std::vector<Multivector> prims = primitives_p(ctx);
    Json systems = Json::array();
    for (size_t w = 0; w < pair.pos_systems().size(); ++w) {
        HCMap hc = build_hc(ctx, w);
        Json sys;
        sys["w"] = w;
        sys["weight_shift"] = scalar_vec_json(pair.half_weight_sum(w));
        Json imgs = Json::array();
        for (const Multivector& p : prims) {
            bool exact = false;
            Multivector img = hc.apply(p, &exact);
            imgs.push_back(Json{{"degree", p.degree()},
                                {"exact", exact},
                                {"terms", terms_json(img)}});
        }
        sys["primitive_images"] = std::move(imgs);
        systems.push_back(std::move(sys));
    }
    j["systems"] = std::move(systems);
    return dump(j);
}

std::string main_theorem_json(const MainTheoremReport& rep) {
    Json j = doc("main_theorem");
    j["pair"] = rep.pair_id;
    j["parts"] = Json{{"a", Json{{"pass", rep.a_pass}}},
                      {"b", Json{{"pass", rep.b_pass}}},
                      {"c", Json{{"pass", rep.c_pass}}},
                      {"d", Json{{"pass", rep.d_pass}}}};
    j["all_pass"] = rep.all_pass();
    j["notes"] = rep.notes;
    return dump(j);
}

std::string filtration_json(const FiltrationReport& rep) {
    Json j = doc("kostant_filtration");
    j["id"] = rep.id;
    j["space"] = rep.space == FiltrationSpace::H ? "h" : "a";
    Json js = Json::array(), jf = Json::array();
    for (const auto& [m, d] : rep.jumpsScriptF) js.push_back(Json::array({m, d}));
    for (const auto& [m, d] : rep.jumpsF) jf.push_back(Json::array({m, d}));
    j["kernel_jumps"] = std::move(js);
    j["projection_jumps"] = std::move(jf);
    j["equal"] = rep.equal;
    return dump(j);
}

} // namespace cliffpair
