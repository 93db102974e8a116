#include "moorediag/jsonio.hpp"

namespace moorediag {

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) {
            const Int& v = m.at(i, j);
            if (v.is_small())
                row.push_back(v.to_ll());
            else
                row.push_back(v.to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    size_t rows = j.size();
    size_t cols = rows ? j[0].size() : 0;
    Mat m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix: ragged rows");
        for (size_t k = 0; k < cols; ++k) {
            const Json& v = j[i][k];
            if (v.is_number_integer())
                m.at(i, k) = Int(v.get<long long>());
            else if (v.is_string())
                m.at(i, k) = Int::from_string(v.get<std::string>());
            else
                throw ParseError("matrix: entries must be integers");
        }
    }
    return m;
}

namespace {

// matrices with a zero dimension serialize ambiguously ([] vs [[]]), so the
// expected shape from the group ranks settles them
Mat shaped_from_json(const Json& j, size_t rows, size_t cols) {
    Mat m = mat_from_json(j);
    if (m.rows() == rows && m.cols() == cols) return m;
    if ((rows == 0 || cols == 0) && m.rows() * m.cols() == 0) return Mat(rows, cols);
    throw ParseError("matrix: expected shape " + std::to_string(rows) + "x" +
                     std::to_string(cols));
}

}  // namespace

Json extension_to_json(const Extension& e) {
    Json j;
    j["V"] = e.V.to_string();
    j["M"] = e.M.to_string();
    j["U"] = e.U.to_string();
    j["i"] = mat_to_json(e.i.matrix());
    j["p"] = mat_to_json(e.p.matrix());
    return j;
}

Extension extension_from_json(const Json& j) {
    FgGroup v = FgGroup::parse(j.at("V").get<std::string>());
    FgGroup m = FgGroup::parse(j.at("M").get<std::string>());
    FgGroup u = FgGroup::parse(j.at("U").get<std::string>());
    Hom i = Hom::make(v, m, shaped_from_json(j.at("i"), m.rank(), v.rank()));
    Hom p = Hom::make(m, u, shaped_from_json(j.at("p"), u.rank(), m.rank()));
    return Extension{std::move(v), std::move(m), std::move(u), std::move(i), std::move(p)};
}

Json diagram_to_json(const MooreDiagram& d) {
    Json j;
    j["kind"] = "moore";
    j["A"] = d.A.to_string();
    j["B"] = d.B.to_string();
    j["phi"] = mat_to_json(d.phi.matrix());
    j["psi"] = mat_to_json(d.psi.matrix());
    return j;
}

Json diagram_to_json(const EtaDiagram& d) {
    Json j;
    j["kind"] = "eta";
    j["A"] = d.A.to_string();
    j["C"] = d.C.to_string();
    j["eta"] = mat_to_json(d.eta.matrix());
    return j;
}

Json diagram_to_json(const ExtEtaDiagram& d) {
    Json j;
    j["kind"] = "eed";
    j["A"] = d.A.to_string();
    j["B"] = d.B.to_string();
    j["C"] = d.C.to_string();
    j["eta"] = mat_to_json(d.eta.matrix());
    j["chi"] = mat_to_json(d.chi.matrix());
    j["psi"] = mat_to_json(d.psi.matrix());
    return j;
}

AnyDiagram diagram_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "moore") {
        FgGroup a = FgGroup::parse(j.at("A").get<std::string>());
        FgGroup b = FgGroup::parse(j.at("B").get<std::string>());
        return MooreDiagram{a, b, Hom::make(a, b, shaped_from_json(j.at("phi"), b.rank(), a.rank())),
                            Hom::make(b, a, shaped_from_json(j.at("psi"), a.rank(), b.rank()))};
    }
    if (kind == "eta") {
        FgGroup a = FgGroup::parse(j.at("A").get<std::string>());
        FgGroup c = FgGroup::parse(j.at("C").get<std::string>());
        return EtaDiagram{a, c, Hom::make(a, c, shaped_from_json(j.at("eta"), c.rank(), a.rank()))};
    }
    if (kind == "eed") {
        FgGroup a = FgGroup::parse(j.at("A").get<std::string>());
        FgGroup b = FgGroup::parse(j.at("B").get<std::string>());
        FgGroup c = FgGroup::parse(j.at("C").get<std::string>());
        return ExtEtaDiagram{a,
                             b,
                             c,
                             Hom::make(a, c, shaped_from_json(j.at("eta"), c.rank(), a.rank())),
                             Hom::make(c, b, shaped_from_json(j.at("chi"), b.rank(), c.rank())),
                             Hom::make(b, a, shaped_from_json(j.at("psi"), a.rank(), b.rank()))};
    }
    throw ParseError("diagram: unknown kind '" + kind + "'");
}

}  // namespace moorediag
