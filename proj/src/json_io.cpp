#include "qzero/json_io.hpp"

#include <sstream>

namespace qz {

namespace {

Json cplx_to_json(const Cplx& c) { return Json::array({c.real(), c.imag()}); }

Cplx cplx_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw Error("invalid-parameter", "complex values are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::string gen_key(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

Json shape_to_json(const SpaceShape& s) {
    Json out = Json::array();
    for (const auto& f : s.factors)
        out.push_back({{"kind", f.kind == FactorKind::half ? "half" : "line"}, {"dim", f.dim}});
    return out;
}

SpaceShape shape_from_json(const Json& j) {
    SpaceShape s;
    for (const auto& f : j) {
        const std::string kind = f.at("kind").get<std::string>();
        if (kind != "half" && kind != "line")
            throw Error("invalid-parameter", "factor kind must be half or line");
        s.factors.push_back(
            {kind == "half" ? FactorKind::half : FactorKind::line, f.at("dim").get<int>()});
    }
    s.validate();
    return s;
}

}  // namespace

Json matrix_to_json(const TruncatedOperator& op) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < op.entries.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < op.entries.cols(); ++c)
            row.push_back(cplx_to_json(op.entries(r, c)));
        entries.push_back(std::move(row));
    }
    return {{"shape", shape_to_json(op.shape)}, {"entries", std::move(entries)}};
}

TruncatedOperator matrix_from_json(const Json& j) {
    const SpaceShape shape = shape_from_json(j.at("shape"));
    const int d = shape.total_dim();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != d)
        throw Error("invalid-dimension", "entry rows do not match shape");
    CMat m(d, d);
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(entries[r].size()) != d)
            throw Error("invalid-dimension", "entry columns do not match shape");
        for (int c = 0; c < d; ++c) m(r, c) = cplx_from_json(entries[r][c]);
    }
    return TruncatedOperator(shape, std::move(m));
}

Json rep_to_json(const DenseRep& r) {
    Json gens = Json::object();
    for (int i = 1; i <= r.n + 1; ++i)
        for (int j = 1; j <= r.n + 1; ++j)
            gens[gen_key(i, j)] = matrix_to_json(TruncatedOperator(r.shape, r.z(i, j)));
    return {{"n", r.n}, {"shape", shape_to_json(r.shape)}, {"gens", std::move(gens)}};
}

DenseRep rep_from_json(const Json& j) {
    DenseRep r;
    r.n = j.at("n").get<int>();
    if (r.n < 1) throw Error("invalid-parameter", "rank must be >= 1");
    const auto& gens = j.at("gens");
    bool shape_set = false;
    if (j.contains("shape")) {
        r.shape = shape_from_json(j.at("shape"));
        shape_set = true;
    }
    for (int i = 1; i <= r.n + 1; ++i)
        for (int j2 = 1; j2 <= r.n + 1; ++j2) {
            const auto it = gens.find(gen_key(i, j2));
            if (it == gens.end())
                throw Error("malformed-representation", "missing generator " + gen_key(i, j2));
            TruncatedOperator op = matrix_from_json(*it);
            if (!shape_set) {
                r.shape = op.shape;
                shape_set = true;
            }
            if (op.shape != r.shape)
                throw Error("malformed-representation", "generators disagree on the space shape");
            r.gens.push_back(std::move(op.entries));
        }
    return r;
}

Json qrep_to_json(const QRep& r) {
    Json out = rep_to_json(materialize(r));
    if (r.q) out["q"] = *r.q;
    Json phases = Json::array();
    for (const Cplx& p : r.phases) phases.push_back(cplx_to_json(p));
    out["phases"] = std::move(phases);
    out["word"] = r.word.letters;
    return out;
}

Json canonical_to_json(const CanonicalModel& m) {
    Json out = rep_to_json(materialize(m.rep));
    out["lambda"] = cplx_to_json(m.lambda);
    out["mu"] = cplx_to_json(m.mu);
    out["word"] = word6_str(m.word);
    return out;
}

Json report_to_json(const RelationReport& r) {
    Json rels = Json::array();
    for (const auto& e : r.entries)
        rels.push_back({{"id", e.id}, {"indices", e.indices}, {"residual", e.residual}});
    return {{"relations", std::move(rels)},
            {"pass", r.pass},
            {"tol", r.tol},
            {"max_residual", r.max_residual}};
}

std::string report_to_csv(const RelationReport& r) {
    std::ostringstream os;
    os << "id,indices,residual\n";
    os.precision(17);
    for (const auto& e : r.entries) {
        os << e.id << ",\"";
        for (size_t k = 0; k < e.indices.size(); ++k) {
            if (k) os << " ";
            os << e.indices[k];
        }
        os << "\"," << e.residual << "\n";
    }
    return os.str();
}

Json limit_to_json(const LimitScanReport& r) {
    return {{"q", r.q_grid},
            {"deviation", r.deviations},
            {"slope", r.slopes},
            {"verdict", r.verdict}};
}

Json classification_to_json(const ClassificationReport& r) {
    return {{"case", r.case_id},
            {"word", word6_str(r.word)},
            {"extracted", Json::array({cplx_to_json(r.extracted_lambda),
                                       cplx_to_json(r.extracted_mu)})},
            {"canonical_params", Json::array({cplx_to_json(r.canon_lambda),
                                              cplx_to_json(r.canon_mu)})},
            {"norms",
             {{"z31", r.n31}, {"z32", r.n32}, {"z21", r.n21}, {"z21z32", r.n2132}}},
            {"decision_margin", r.decision_margin}};
}

Json bialg_to_json(const BialgebraReport& r) {
    auto entries = [](const std::vector<RelationEntry>& es) {
        Json out = Json::array();
        for (const auto& e : es)
            out.push_back({{"id", e.id}, {"indices", e.indices}, {"residual", e.residual}});
        return out;
    };
    return {{"relations", report_to_json(r.relations)},
            {"coassociativity", entries(r.coassociativity)},
            {"counit", entries(r.counit)},
            {"pass", r.pass},
            {"max_residual", r.max_residual}};
}

}  // namespace qz
