#include "triplekit/json_io.hpp"

#include <fstream>

namespace triplekit {

namespace {

njson complex_to_json(const cx& c) { return njson::array({c.real(), c.imag()}); }

cx complex_from_json(const njson& j) {
    if (!j.is_array() || j.size() != 2)
        throw triple_error("json: complex scalar must be a [re, im] pair");
    return cx(j[0].get<double>(), j[1].get<double>());
}

njson coords_to_json(const Vec& v) {
    njson a = njson::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
    return a;
}

Vec coords_from_json(const njson& j) {
    Vec v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
    return v;
}

njson matrix_to_json(const Mat& m) {
    njson rows = njson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        njson row = njson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat matrix_from_json(const njson& j) {
    if (!j.is_array() || j.empty()) throw triple_error("json: expected a complex matrix");
    Mat m(j.size(), j[0].size());
    for (size_t i = 0; i < j.size(); ++i)
        for (size_t k = 0; k < j[i].size(); ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                complex_from_json(j[i][k]);
    return m;
}

}  // namespace

njson to_json(const FactorDescriptor& f) {
    njson j;
    j["kind"] = to_string(f.kind);
    if (f.kind == FactorKind::type1) {
        j["m"] = f.m;
        j["n"] = f.n;
    } else {
        j["n"] = f.n;
    }
    return j;
}

FactorDescriptor factor_from_json(const njson& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "type1") return FactorDescriptor::type1(j.at("m").get<int>(), j.at("n").get<int>());
    if (kind == "type2") return FactorDescriptor::type2(j.at("n").get<int>());
    if (kind == "type3") return FactorDescriptor::type3(j.at("n").get<int>());
    if (kind == "type4" || kind == "spin" || kind == "type4spin")
        return FactorDescriptor::spin(j.at("n").get<int>());
    throw triple_error("json: unknown factor kind '" + kind + "'");
}

njson to_json(const AtomicTriple& t) {
    njson j;
    njson fs = njson::array();
    for (const auto& f : t.factors) fs.push_back(to_json(f));
    j["factors"] = fs;
    return j;
}

AtomicTriple triple_from_json(const njson& j) {
    std::vector<FactorDescriptor> fs;
    for (const auto& f : j.at("factors")) fs.push_back(factor_from_json(f));
    return AtomicTriple::of(std::move(fs));
}

njson to_json(const Element& e) {
    njson j;
    j["factor"] = to_json(e.factor);
    j["coords"] = coords_to_json(e.coords);
    return j;
}

Element element_from_json(const njson& j) {
    return Element(factor_from_json(j.at("factor")), coords_from_json(j.at("coords")));
}

njson to_json(const AtomicElement& e) {
    njson j;
    njson fs = njson::array();
    for (const auto& f : e.triple.factors) fs.push_back(to_json(f));
    j["factors"] = fs;
    njson parts = njson::array();
    for (int k = 0; k < e.triple.parts(); ++k) parts.push_back(coords_to_json(e.part(k).coords));
    j["parts"] = parts;
    return j;
}

AtomicElement atomic_element_from_json(const njson& j) {
    AtomicTriple t = triple_from_json(j);
    const njson& parts = j.at("parts");
    if (static_cast<int>(parts.size()) != t.parts())
        throw triple_error("json: part count does not match the factor list");
    std::vector<Element> elems;
    for (int k = 0; k < t.parts(); ++k)
        elems.emplace_back(t.factors[k], coords_from_json(parts[k]));
    return AtomicElement::from_parts(t, elems);
}

AtomicElement any_element_from_json(const njson& j) {
    if (j.contains("factor")) return AtomicElement::lift(element_from_json(j));
    return atomic_element_from_json(j);
}

njson to_json(const RealLinearOperator& op) {
    njson j;
    j["domain"] = to_json(op.domain);
    j["codomain"] = to_json(op.codomain);
    njson flat = njson::array();
    for (Eigen::Index r = 0; r < op.matrix.rows(); ++r)
        for (Eigen::Index c = 0; c < op.matrix.cols(); ++c) flat.push_back(op.matrix(r, c));
    j["matrix"] = flat;
    return j;
}

RealLinearOperator operator_from_json(const njson& j) {
    RealLinearOperator op;
    op.domain = triple_from_json(j.at("domain"));
    op.codomain = triple_from_json(j.at("codomain"));
    const njson& flat = j.at("matrix");
    const int rows = op.codomain.real_dim(), cols = op.domain.real_dim();
    if (static_cast<int>(flat.size()) != rows * cols)
        throw triple_error("json: operator matrix has wrong length");
    op.matrix.resize(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) op.matrix(r, c) = flat[r * cols + c].get<double>();
    op.tag = classify_linearity(op.matrix);
    return op;
}

namespace {

njson real_matrix_to_json(const RMat& m) {
    njson rows = njson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        njson row = njson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

RMat real_matrix_from_json(const njson& j) {
    RMat m(j.size(), j.empty() ? 0 : j[0].size());
    for (size_t i = 0; i < j.size(); ++i)
        for (size_t k = 0; k < j[i].size(); ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = j[i][k].get<double>();
    return m;
}

njson iso_to_json(const FactorIsomorphism& iso) {
    njson j;
    j["flag"] = to_string(iso.flag);
    if (iso.generators) {
        if (const auto* t1 = std::get_if<Type1Generators>(&*iso.generators)) {
            j["kind"] = "type1";
            j["u"] = matrix_to_json(t1->u);
            j["v"] = matrix_to_json(t1->v);
            j["transpose"] = t1->transpose;
        } else if (const auto* cg = std::get_if<CongruenceGenerators>(&*iso.generators)) {
            j["kind"] = to_string(iso.source.kind);
            j["u"] = matrix_to_json(cg->u);
        } else {
            const auto& sp = std::get<SpinGenerators>(*iso.generators);
            j["kind"] = "type4";
            j["phase"] = complex_to_json(sp.phase);
            j["orthogonal"] = real_matrix_to_json(sp.orthogonal);
        }
        j["source"] = to_json(iso.source);
    } else {
        j["source"] = to_json(iso.source);
        j["target"] = to_json(iso.target);
        njson flat = njson::array();
        for (Eigen::Index r = 0; r < iso.realization.matrix.rows(); ++r)
            for (Eigen::Index c = 0; c < iso.realization.matrix.cols(); ++c)
                flat.push_back(iso.realization.matrix(r, c));
        j["matrix"] = flat;
    }
    return j;
}

FactorIsomorphism iso_from_json(const njson& j, const FactorDescriptor& source) {
    const std::string flag_s = j.at("flag").get<std::string>();
    const IsoFlag flag =
        flag_s == "linear" ? IsoFlag::linear
                           : (flag_s == "conjugate_linear"
                                  ? IsoFlag::conjugate_linear
                                  : throw triple_error("json: bad isomorphism flag"));
    if (j.contains("matrix")) {
        const FactorDescriptor target = factor_from_json(j.at("target"));
        const AtomicTriple dom = AtomicTriple::single(source);
        const AtomicTriple cod = AtomicTriple::single(target);
        const njson& flat = j.at("matrix");
        RMat m(cod.real_dim(), dom.real_dim());
        if (static_cast<int>(flat.size()) != m.rows() * m.cols())
            throw triple_error("json: isomorphism matrix has wrong length");
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m(r, c) = flat[r * m.cols() + c].get<double>();
        return make_factor_isomorphism(source, target, flag,
                                       RealLinearOperator{dom, cod, std::move(m),
                                                          LinearityTag::general_real});
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "type1") {
        Type1Generators g{matrix_from_json(j.at("u")), matrix_from_json(j.at("v")),
                          j.value("transpose", false)};
        return make_factor_isomorphism(source, flag, g);
    }
    if (kind == "type2" || kind == "type3") {
        CongruenceGenerators g{matrix_from_json(j.at("u"))};
        return make_factor_isomorphism(source, flag, g);
    }
    if (kind == "type4" || kind == "spin") {
        SpinGenerators g{complex_from_json(j.at("phase")),
                         real_matrix_from_json(j.at("orthogonal"))};
        return make_factor_isomorphism(source, flag, g);
    }
    throw triple_error("json: unknown isomorphism kind '" + kind + "'");
}

}  // namespace

njson to_json(const PreserverSpec& spec) {
    njson j;
    j["source"] = to_json(spec.source);
    j["target"] = to_json(spec.target);
    j["sigma"] = spec.sigma;
    j["gammas"] = spec.gammas;
    njson isos = njson::array();
    for (const auto& iso : spec.isos) isos.push_back(iso_to_json(iso));
    j["isos"] = isos;
    return j;
}

PreserverSpec preserver_spec_from_json(const njson& j) {
    PreserverSpec spec;
    spec.source = triple_from_json(j.at("source"));
    spec.sigma = j.at("sigma").get<std::vector<int>>();
    spec.gammas = j.at("gammas").get<std::vector<double>>();
    const njson& isos = j.at("isos");
    if (static_cast<int>(isos.size()) != spec.source.parts())
        throw triple_error("json: isomorphism count does not match the source");
    for (int k = 0; k < spec.source.parts(); ++k)
        spec.isos.push_back(iso_from_json(isos[k], spec.source.factors[k]));
    if (j.contains("target")) {
        spec.target = triple_from_json(j.at("target"));
    } else {
        // derive the target from sigma and the isomorphism targets
        std::vector<FactorDescriptor> tf(spec.source.parts(), FactorDescriptor{});
        for (int k = 0; k < spec.source.parts(); ++k)
            tf[spec.sigma[k]] = spec.isos[k].target;
        spec.target = AtomicTriple::of(std::move(tf));
    }
    return spec;
}

njson to_json(const VerifyReport& rep) {
    njson j;
    j["positive_trials"] = rep.positive_trials;
    j["positive_failures"] = rep.positive_failures;
    j["inverse_trials"] = rep.inverse_trials;
    j["inverse_failures"] = rep.inverse_failures;
    j["negative_trials"] = rep.negative_trials;
    j["negative_failures"] = rep.negative_failures;
    j["max_residual"] = rep.max_residual;
    j["pass"] = rep.pass;
    if (!rep.witness.empty()) j["witness"] = rep.witness;
    return j;
}

njson to_json(const LemmaCertificate& cert) {
    njson j;
    j["lemma"] = cert.lemma;
    njson pts = njson::array();
    for (const auto& p : cert.points) {
        njson pj;
        njson cs = njson::array();
        for (const auto& c : p.coeffs) cs.push_back(to_string(c));
        pj["coeffs"] = cs;
        pj["cube_identity"] = p.cube_identity;
        pj["second_identity"] = p.second_identity;
        pts.push_back(pj);
    }
    j["points"] = pts;
    j["all_ok"] = cert.all_ok;
    return j;
}

njson to_json(const WildDemoReport& rep) {
    njson j;
    j["pairs_checked"] = rep.pairs_checked;
    j["preserved_both_directions"] = rep.preserved_both_directions;
    j["linearity_violation_found"] = rep.linearity_violation_found;
    j["violation"] = rep.violation;
    return j;
}

njson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw triple_error("cannot open input file '" + path + "'");
    njson j;
    in >> j;
    return j;
}

void save_json_file(const std::string& path, const njson& j) {
    std::ofstream out(path);
    if (!out) throw triple_error("cannot open output file '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace triplekit
