// sweep.hpp -- Monte-Carlo bit-error-rate sweep through the full chain.
#pragma once

#include <string>
#include <vector>

#include "sarcomm/config.hpp"

namespace sarcomm {

struct SweepPoint {
  double ebno_db = 0;
  int bits_per_pass = 0;
  int num_sublooks = 0;
  double empirical_ber = 0;
  double theoretical_ber = 0;
  long trials = 0;  // decoded symbols behind the empirical estimate
};

// Runs synthesize -> range-compress -> sublooks -> SCR -> decide chains for
// every (ebno, bits_per_pass) pair until `trials` symbols are decoded, and
// pairs each empirical estimate with the closed-form OOK value.
//
// Scene construction per point: one on/off target (off-state RCS zero) whose
// per-sublook image SNR realizes the requested E_b/N_o, co-located with a
// much stronger static reference scatterer. Riding on the reference makes the
// measured window power linear in the target amplitude with state-independent
// Gaussian noise, which is the signal model behind the closed-form error rate
// (a constant in-cell return cancels out of the bit decisions). Static
// reference scatterers also fill the clutter window so its estimate stays
// nearly deterministic. The decision threshold comes from two training passes
// with known alternating patterns; the blind min/max estimator in decide_bits
// systematically inflates low-SNR error rates and is reserved for blind
// demodulation of unknown data.
std::vector<SweepPoint> run_ber_sweep(const ScenarioConfig& cfg, int threads = 0);

void write_sweep_csv(const std::string& path, const std::vector<SweepPoint>& points);

}  // namespace sarcomm
