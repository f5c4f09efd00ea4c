#pragma once

#include "json.hpp"

#include "gln/exactmat.hpp"
#include "gln/infchar.hpp"
#include "gln/orbits.hpp"
#include "gln/partitions.hpp"
#include "gln/reps.hpp"
#include "gln/segring.hpp"

namespace gln::jsonio {

using nlohmann::json;

json to_json(const partitions::Composition& alpha);
json to_json(const partitions::Partition& lambda);
json to_json(const orbits::NilpotentOrbit& o);
json to_json(const AffineForm& f);
json to_json(const infchar::ExactScalar& z);
json to_json(const infchar::InfChar& xi);
json to_json(const reps::BasicRep& f);
json to_json(const reps::UnitaryRep& pi);
json to_json(const segring::Segment& seg);
json to_json(const segring::Monomial& mono);
json to_json(const segring::SegmentPoly& p);
json to_json(const exactmat::RationalMatrix& m);
json to_json(const exactmat::GeoReport& r);

exactmat::RationalMatrix matrix_from_json(const json& j);

}  // namespace gln::jsonio
