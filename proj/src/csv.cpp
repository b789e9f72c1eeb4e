#include "mobifem/csv.hpp"

#include <cstdio>

namespace mobifem {

std::string format_csv_value(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out = "distance_m,snir_db_direct,snir_db_femto_access,snir_db_backhaul,"
                      "ce_bpshz_direct,ce_bpshz_relayed,outage_direct,outage_relayed\n";
    for (std::size_t i = 0; i < result.distance_m.size(); ++i) {
        out += format_csv_value(result.distance_m[i]);
        out += ',';
        out += format_csv_value(result.snir_db_direct[i]);
        out += ',';
        out += format_csv_value(result.snir_db_femto_access[i]);
        out += ',';
        out += format_csv_value(result.snir_db_backhaul[i]);
        out += ',';
        out += format_csv_value(result.ce_bpshz_direct[i]);
        out += ',';
        out += format_csv_value(result.ce_bpshz_relayed[i]);
        out += ',';
        out += format_csv_value(result.outage_direct[i]);
        out += ',';
        out += format_csv_value(result.outage_relayed[i]);
        out += '\n';
    }
    return out;
}

std::string trace_to_csv(const TraceResult& result) {
    std::string out = "time_s,backhaul,snir_db,ce_bpshz,outage\n";
    for (const auto& rec : result.records) {
        out += format_csv_value(rec.time_s);
        out += ',';
        out += to_string(rec.decision.choice);
        out += ',';
        out += format_csv_value(rec.snir_db);
        out += ',';
        out += format_csv_value(rec.ce_bpshz);
        out += ',';
        out += format_csv_value(rec.outage);
        out += '\n';
    }
    out += "# backhaul_switches=" + std::to_string(result.backhaul_switches) + "\n";
    return out;
}

} // namespace mobifem
