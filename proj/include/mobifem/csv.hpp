#pragma once

#include "mobifem/simengine.hpp"

#include <string>

namespace mobifem {

/// Value formatting shared by all CSV output: 6 significant digits.
std::string format_csv_value(double value);

/// Sweep CSV, one row per grid point:
///   distance_m,snir_db_direct,snir_db_femto_access,snir_db_backhaul,
///   ce_bpshz_direct,ce_bpshz_relayed,outage_direct,outage_relayed
std::string sweep_to_csv(const SweepResult& result);

/// Trace CSV, one row per sample:
///   time_s,backhaul,snir_db,ce_bpshz,outage
/// followed by a summary line with the backhaul switch count.
std::string trace_to_csv(const TraceResult& result);

} // namespace mobifem
