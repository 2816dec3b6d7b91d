// Closed-form generating functions of the comb walk from the origin and
// the large-deviation tooth-profile prediction.
//
// G(u,v|z) = sum_n p(u,v,n) z^n factorizes over |k| horizontal and |l|
// vertical displacements; the three base functions are evaluated in
// cancellation-free form. H(z) generates P(C_2(n)=0) and behaves like
// sqrt(2)/sqrt(1-z) near z=1.

#ifndef COMBWALK_GREENFN_HPP
#define COMBWALK_GREENFN_HPP

#include <cstdint>

namespace combwalk {

struct GenFnPoint {
    double z;
    double g;   // G(z)
    double f1;  // F1(z), horizontal decay factor, in [0,1)
    double f2;  // F2(z), vertical decay factor, in [0,1)
    double h;   // H(z) = G(z)(1+F1)/(1-F1)
};

/// Evaluates G, F1, F2, H at z in [0, 1); limits at z = 0 are taken
/// analytically (F1, F2 -> 0, G, H -> 1).
GenFnPoint generating_functions(double z);

/// G((0,0),(k,l) | z): (1/2) G F1^|k| F2^|l| off the backbone, G F1^|k|
/// on it.
double green_function_eval(std::int64_t k, std::int64_t l, double z);

/// H(z), the generating function of the backbone return probabilities.
double backbone_generating_fn(double z);

/// Exponential rate of the tooth profile: phi(kappa) =
/// (kappa-1) log(1-kappa) - (kappa+1) log(1+kappa); phi(0) = 0, strictly
/// decreasing on [0, 1).
double phi_rate(double kappa);

/// Asymptotic prediction sqrt(2) e^{n phi(k/n)} / (Gamma(1/4) n^{3/4})
/// for p((0,2k),(0,0),2n); kappa = k/n must satisfy 0 <= kappa < 1.
/// Gamma(1/4) is computed, not hard-coded.
double tooth_profile_prediction(std::int64_t n, std::int64_t k);

}  // namespace combwalk

#endif  // COMBWALK_GREENFN_HPP
