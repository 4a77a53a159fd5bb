#ifndef STRINGY_RESOLUTION_HPP
#define STRINGY_RESOLUTION_HPP

#include <map>
#include <string>
#include <vector>

#include "stringy/bipoly.hpp"
#include "stringy/stringy_rational.hpp"

namespace stringy::resolution {

enum class Mode { FullVariety, ExceptionalFiberOnly };

struct Component {
  std::string id;
  Rat discrepancy;  // > -1 (log terminal)
};

// Log-resolution stratification data: exceptional components with their
// discrepancies and Hodge-Deligne polynomials of the open strata D_J°,
// keyed by sorted component-id subsets. Absent subsets are empty strata.
struct ResolutionData {
  int dimension = 0;
  Mode mode = Mode::FullVariety;
  std::vector<Component> components;
  std::map<std::vector<std::string>, BiPoly> openStrata;

  // Checks ids, discrepancies and (in full-variety mode) the presence of the
  // empty stratum. Throws DomainError(MalformedInput) on violations.
  void validate() const;
};

// Closed strata H(D_J) = sum over J' >= J of H(D_{J'}°), for every subset in
// the downward closure of the open-stratum key set.
std::map<std::vector<std::string>, BiPoly> closedFromOpen(const ResolutionData& r);

// E_st = sum_J H(D_J°) prod_{i in J} (q-1)/(q^{a_i+1}-1). Requires
// full-variety mode and integer discrepancies; throws
// DomainError(NonGorensteinUnsupported) otherwise.
StringyRational stringyFromOpen(const ResolutionData& r);

// The closed-strata alternative
// E_st = sum_J H(D_J) prod_{i in J} (q - q^{a_i+1})/(q^{a_i+1}-1).
StringyRational stringyFromClosed(const ResolutionData& r);

// Contribution of an isolated singular point from the strata of its
// exceptional fiber: sum over nonempty J only. Requires
// exceptional-fiber-only mode.
StringyRational exceptionalContribution(const ResolutionData& r);

// lim_{u,v -> 1} stringyFromOpen(r).
Rat stringyEuler(const ResolutionData& r);

struct PropertyReport {
  bool dualityHolds = false;        // E(u,v) = (uv)^d E(1/u,1/v)
  bool constantTermIsOne = false;   // E(0,0) = 1
};

// The two projective-variety checks on a stringy E-function.
PropertyReport verifyProjectiveProperties(const StringyRational& e, int dim);

// JSON codec for the stratification-data file format:
// { "dimension": d, "mode": "fullVariety"|"exceptionalFiberOnly",
//   "components": [{"id": "...", "discrepancy": int|"p/q"}, ...],
//   "strata": [{"subset": ["id", ...],
//               "hodge": [{"i": int, "j": int, "coeff": int|"p/q"}, ...]}, ...] }
ResolutionData fromJson(const std::string& jsonText);
std::string toJson(const ResolutionData& r);
ResolutionData loadFile(const std::string& path);

}  // namespace stringy::resolution

#endif
