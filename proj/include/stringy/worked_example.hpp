#ifndef STRINGY_WORKED_EXAMPLE_HPP
#define STRINGY_WORKED_EXAMPLE_HPP

#include "stringy/bipoly.hpp"
#include "stringy/resolution.hpp"
#include "stringy/stringy_rational.hpp"

// Bundled worked example: the 6-dimensional projective hypersurface
//   x1^5 z + x2^5 z + x3^6 + x4^6 + x5^6 + x6^6 + x7^6 = 0
// with six isolated singular points, one of type (5,5,6,6,6,6,6) in the
// affine chart and five of type (2,2,6,6,6,6,6) on the hyperplane at
// infinity. Its stringy E-function is assembled from the two singular
// contributions A and B plus the smooth strata C (at infinity) and D (the
// affine chart).
namespace stringy::example {

// Reference values entered by hand, independent of the computing pipeline;
// the acceptance suite checks the pipeline against them.
StringyRational contributionATranscription();
StringyRational contributionBTranscription();
StringyRational stringyETranscription();

// Log-resolution stratification data for the two singularity types, in
// exceptional-fiber mode: a five-component chain for the (2,2,6,...) points
// and a fifteen-component configuration for the (5,5,6,...) point. Their
// exceptionalContribution must reproduce B and A.
resolution::ResolutionData infinityChainData();
resolution::ResolutionData bigDiagramData();

struct Assembly {
  StringyRational contributionA;  // singular point of the affine chart
  StringyRational contributionB;  // one singular point at infinity
  BiPoly smoothInfinity;          // C: hyperplane section minus 5 points
  BiPoly smoothAffine;            // D: affine hypersurface minus the origin
  StringyRational total;          // A + 5B + C + D
};

// Computes the stringy E-function of the example through the closed-form
// contribution pipeline.
Assembly assemble();

}  // namespace stringy::example

#endif
