#pragma once

#include <json.hpp>

#include "coxcat/catalan.hpp"
#include "coxcat/cluster.hpp"
#include "coxcat/complex.hpp"
#include "coxcat/group.hpp"
#include "coxcat/noncrossing.hpp"
#include "coxcat/parking.hpp"
#include "coxcat/polynomial.hpp"
#include "coxcat/typea.hpp"

namespace coxcat {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are numbers, larger ones decimal strings.
Json to_json(const BigInt& x);
Json to_json(const Rational& x);  // "p/q" or integer
Json to_json(const ExactScalar& x);
Json to_json(const Polynomial& p);  // coefficients, low degree first
Json to_json(const HomologyProfile& h);
Json to_json(const AbstractComplex& c);
Json to_json(const TypeCounts& counts);

// Roots as coordinate arrays, elements as permutations of the roots.
Json group_json(const Group& g, bool with_elements);
Json nc_json(const NoncrossingLattice& nc);
Json cluster_json(const ClusterComplex& d);
Json pf_json(const ParkingPoset& pf);
Json regions_json(const CatalanRegions& r);

}  // namespace coxcat
