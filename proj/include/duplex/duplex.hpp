#pragma once

// Umbrella header for the full-duplex self-interference analysis library.

#include "duplex/capacity.hpp"
#include "duplex/csv.hpp"
#include "duplex/error.hpp"
#include "duplex/fft.hpp"
#include "duplex/frequency_response.hpp"
#include "duplex/mc.hpp"
#include "duplex/pdp_model.hpp"
#include "duplex/rates.hpp"
#include "duplex/rng.hpp"
#include "duplex/run_config.hpp"
#include "duplex/si_metrics.hpp"
#include "duplex/sweep_table.hpp"
#include "duplex/touchstone.hpp"
#include "duplex/units.hpp"
