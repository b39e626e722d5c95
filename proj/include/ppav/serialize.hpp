#pragma once

#include <json.hpp>
#include <string>

#include "ppav/comppair.hpp"
#include "ppav/moduli.hpp"

namespace ppav {

using Json = nlohmann::json;

inline const std::string schema_version = "ppav-lattice/1";

// Integers and rationals are written as decimal strings ("-3", "5/2").
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const RatMatrix& m); // array of rows
Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);
Json to_json(const Lattice& l);   // basis columns as rows of the array
Json to_json(const PolarizedLattice& p);
Json to_json(const RibbonGraph& r);
Json to_json(const VoltageAssignment& v);
Json to_json(const LocusReport& r);

/* Readers throw ValidationError on malformed input. */
Rational rational_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);
Lattice lattice_from_json(const Json& j);
PolarizedLattice polarized_from_json(const Json& j);
RibbonGraph ribbon_from_json(const Json& j);
VoltageAssignment voltage_from_json(const Json& j);

/* {"schema", "kind": "cover", "ribbon", "voltage", "total", "sigma", "pushforward", "transfer"} */
Json cover_fixture(const CoverHomology& cov);
/* Rebuilds the cover from ribbon and voltage and checks any stored matrices against it. */
CoverHomology cover_from_fixture(const Json& j);

/* Aligned two-column plain text. */
std::string locus_table(const LocusReport& r);

} // namespace ppav
