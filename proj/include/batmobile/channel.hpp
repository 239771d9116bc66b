#pragma once

// Radio channel: received power under a free-space (rural) or Nakagami
// fading (urban) model, per-packet delivery against receiver sensitivity,
// and the maximum communication range used by the routing metric.

#include "batmobile/rng.hpp"

namespace batmobile {

enum class ChannelModel { Friis, Nakagami };

struct ChannelParams {
  ChannelModel model = ChannelModel::Friis;
  double tx_power_dbm = 20.0;       // 100 mW
  double frequency_hz = 2.4e9;
  double sensitivity_dbm = -83.0;   // minimal acceptable received power
  double path_loss_exponent = 2.75; // Nakagami mean path loss
  double nakagami_m = 2.0;          // fading shape
  double phy_bitrate = 24e6;        // serialization delay only, no MAC model
};

// Throws ConfigError naming the offending field.
void validate(const ChannelParams& params);

// Free-space received power in dBm. Throws std::domain_error for d <= 0.
double friis_rx_power_dbm(const ChannelParams& params, double distance_m);

// Mean received power of the active model. For Nakagami this is a
// log-distance curve with the configured exponent, anchored to the
// free-space value at 1 m.
double mean_rx_power_dbm(const ChannelParams& params, double distance_m);

// One fading draw: mean power (mW) scaled by a unit-mean gamma variate of
// shape m. Throws std::domain_error for d <= 0.
double nakagami_rx_power_dbm(const ChannelParams& params, double distance_m, Rng& rng);

// Distance at which the mean received power equals the sensitivity.
// Throws ConfigError when the curve is already below sensitivity at 1 m.
double max_range_m(const ChannelParams& params);

// Per-packet delivery decision for one receiver. Deterministic threshold
// under Friis; one independent fade draw per call under Nakagami.
bool delivered(const ChannelParams& params, double distance_m, Rng& rng);

}  // namespace batmobile
