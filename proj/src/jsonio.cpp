#include "gln/jsonio.hpp"

#include <stdexcept>

namespace gln::jsonio {

json to_json(const partitions::Composition& alpha) { return json(alpha.parts()); }
json to_json(const partitions::Partition& lambda) { return json(lambda.parts()); }

json to_json(const orbits::NilpotentOrbit& o) {
    return json{{"n", o.ambient_n()}, {"partition", o.partition().parts()}};
}

json to_json(const AffineForm& f) {
    json params = json::object();
    for (const auto& [name, c] : f.coeffs()) params[name] = c.str();
    return json{{"const", f.constant().str()}, {"params", params}};
}

json to_json(const infchar::ExactScalar& z) {
    return json{{"re", to_json(z.re)}, {"im", to_json(z.im)}};
}

json to_json(const infchar::InfChar& xi) {
    json out = json::array();
    for (const auto& z : xi.entries()) out.push_back(to_json(z));
    return out;
}

json to_json(const reps::BasicRep& f) {
    json out;
    switch (f.kind) {
        case reps::FactorKind::Character:
            out = json{{"type", "character"}, {"m", f.m}, {"eps", f.eps}};
            break;
        case reps::FactorKind::Stein:
            out = json{{"type", "stein"}, {"m", f.m}, {"eps", f.eps}, {"s", to_json(f.s)}};
            break;
        case reps::FactorKind::Speh:
            out = json{{"type", "speh"}, {"m", f.m}, {"k", f.k}};
            break;
        case reps::FactorKind::SpehCS:
            out = json{{"type", "spehcs"}, {"m", f.m}, {"k", f.k}, {"s", to_json(f.s)}};
            break;
    }
    out["t"] = to_json(f.t);
    return out;
}

json to_json(const reps::UnitaryRep& pi) {
    json factors = json::array();
    for (const auto& f : pi.factors()) factors.push_back(to_json(f));
    return json{{"n", pi.n()}, {"factors", factors}};
}

json to_json(const segring::Segment& seg) {
    return json{{"label", seg.label}, {"d", seg.depth_d}, {"start", seg.start}, {"l", seg.length_l}};
}

json to_json(const segring::Monomial& mono) {
    json out = json::array();
    for (const auto& seg : mono) out.push_back(to_json(seg));
    return out;
}

json to_json(const segring::SegmentPoly& p) {
    json out = json::array();
    for (const auto& [mono, coeff] : p.terms())
        out.push_back(json{{"coeff", coeff}, {"monomial", to_json(mono)}});
    return out;
}

json to_json(const exactmat::RationalMatrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        out.push_back(row);
    }
    return out;
}

json to_json(const exactmat::GeoReport& r) {
    return json{{"trials", r.trials},
                {"u_hits", r.u_hits},
                {"violations", r.violations},
                {"seed", r.seed},
                {"trace_identity_ok", r.trace_identity_ok}};
}

exactmat::RationalMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nonempty array of rows");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    exactmat::RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("ragged matrix JSON");
        for (int c = 0; c < cols; ++c) {
            const auto& cell = j[i][c];
            if (cell.is_number_integer())
                m.at(i, c) = Rational(cell.get<long long>());
            else
                m.at(i, c) = Rational::parse(cell.get<std::string>());
        }
    }
    return m;
}

}  // namespace gln::jsonio
