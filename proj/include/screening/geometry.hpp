#pragma once

// Geometric constructions on the screening plane.
//
// The prevalence threshold phi_e splits the curve at the point where
// d rho / d phi = 1.  Two chords anchor there: one from the invariant
// origin (0,0), one to the invariant endpoint (1,1).  The positive
// likelihood ratio a/(1-b) can be recovered three ways:
//
//   direct        a / (1 - b)
//   angle         cot^2(beta), beta the angle between the origin chord and
//                 the vertical axis
//   chord ratio   slope(origin chord) / slope(endpoint chord), at any
//                 phi in (0,1), not only at phi_e
//
// All three are computed along independent numerical paths so that their
// agreement is a real check.

#include "screening/curve_core.hpp"

namespace screening {

struct ThresholdPoint {
    double phi_e;
    double rho_e;
};

// Both closed forms of phi_e:
//   difference_form  (sqrt(a(1-b)) + b - 1) / (epsilon - 1)
//   root_form        sqrt(1-b) / (sqrt(a) + sqrt(1-b))
struct ThresholdForms {
    double difference_form;
    double root_form;
};

struct BetaGeometry {
    double beta;          // radians, in (0, pi/2)
    double psi;           // tan(beta) = sqrt((1-b)/a)
    double origin_slope;  // slope of the origin chord, 1/psi
};

struct ChordPair {
    double slope_origin;    // chord (0,0) -> (phi, rho)
    double slope_endpoint;  // chord (phi, rho) -> (1,1)
    Prevalence at_phi;
};

struct Line {
    double slope;
    double intercept;

    double operator()(double x) const noexcept { return slope * x + intercept; }
};

// Throws DegenerateTestError when a = 0 or b = 1: phi_e then sits on an
// invariant point where rho is 0/0.
ThresholdPoint prevalence_threshold(const ScreeningTest& test);

// Throws EpsilonOneError when |epsilon - 1| < 1e-12.
ThresholdForms threshold_forms(const ScreeningTest& test);

// Throws DegenerateAngleError (limit pi/2 for a = 0, limit 0 for b = 1).
BetaGeometry beta_geometry(const ScreeningTest& test);

// a/(1-b). Throws ZeroLRError for a = 0, InfiniteLRError for b = 1.
double lr_positive_direct(const ScreeningTest& test);

// cot^2(beta), evaluated through atan and tan.
double lr_positive_from_beta(const ScreeningTest& test);

// Throws DomainError for phi in {0,1}; IndeterminateError/DegenerateTestError
// when a chord has zero length or zero slope.
ChordPair chords_at(const ScreeningTest& test, Prevalence phi);

double lr_positive_from_chords(const ScreeningTest& test, Prevalence phi);

// The chord from (phi_e, rho_e) to (1,1) as a full line.
Line endpoint_chord_line(const ScreeningTest& test);

// The chord from (0,0) to (phi_e, rho_e).
Line origin_chord_line(const ScreeningTest& test);

}  // namespace screening
