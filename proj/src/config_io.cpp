#include "mobifem/config_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace mobifem {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

struct KeyBinding {
    std::function<void(ScenarioConfig&, const json&)> set;
    std::function<json(const ScenarioConfig&)> get;
};

json height_to_json(const std::optional<double>& h) {
    return h ? json(*h) : json();
}

// One binding per scalar config key. The same table backs the JSON file,
// --set overrides, and the documented key list, so they cannot drift.
const std::map<std::string, KeyBinding>& key_table() {
    static const std::map<std::string, KeyBinding> table = [] {
        std::map<std::string, KeyBinding> t;

        t["macro_carrier_freq_mhz"] = {
            [](ScenarioConfig& c, const json& v) { c.macro.carrier_freq_mhz = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.macro.carrier_freq_mhz); }};
        t["bs_height_m"] = {
            [](ScenarioConfig& c, const json& v) { c.macro.bs_height_m = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.macro.bs_height_m); }};
        t["ms_height_m"] = {
            [](ScenarioConfig& c, const json& v) { c.macro.ms_height_m = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.macro.ms_height_m); }};
        t["shadowing_sigma_db"] = {
            [](ScenarioConfig& c, const json& v) { c.macro.shadowing_sigma_db = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.macro.shadowing_sigma_db); }};
        t["penetration_loss_db"] = {
            [](ScenarioConfig& c, const json& v) {
                c.macro.penetration_loss_db = v.get<double>();
            },
            [](const ScenarioConfig& c) { return json(c.macro.penetration_loss_db); }};

        t["femto_carrier_freq_mhz"] = {
            [](ScenarioConfig& c, const json& v) { c.femto.carrier_freq_mhz = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.femto.carrier_freq_mhz); }};
        t["distance_decay_coeff"] = {
            [](ScenarioConfig& c, const json& v) {
                c.femto.distance_decay_coeff = v.get<double>();
            },
            [](const ScenarioConfig& c) { return json(c.femto.distance_decay_coeff); }};
        t["wall_count"] = {
            [](ScenarioConfig& c, const json& v) { c.femto.wall_count = v.get<int>(); },
            [](const ScenarioConfig& c) { return json(c.femto.wall_count); }};
        t["fap_ms_distance_m"] = {
            [](ScenarioConfig& c, const json& v) { c.fap_ms_distance_m = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.fap_ms_distance_m); }};

        t["macro_tx_power_dbm"] = {
            [](ScenarioConfig& c, const json& v) { c.macro_bs.tx_power_dbm = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.macro_bs.tx_power_dbm); }};
        t["macro_antenna_gain_dbi"] = {
            [](ScenarioConfig& c, const json& v) {
                c.macro_bs.antenna_gain_dbi = v.get<double>();
            },
            [](const ScenarioConfig& c) { return json(c.macro_bs.antenna_gain_dbi); }};
        t["transceiver_tx_power_dbm"] = {
            [](ScenarioConfig& c, const json& v) {
                c.outside_transceiver.tx_power_dbm = v.get<double>();
            },
            [](const ScenarioConfig& c) { return json(c.outside_transceiver.tx_power_dbm); }};
        t["transceiver_antenna_gain_dbi"] = {
            [](ScenarioConfig& c, const json& v) {
                c.outside_transceiver.antenna_gain_dbi = v.get<double>();
            },
            [](const ScenarioConfig& c) {
                return json(c.outside_transceiver.antenna_gain_dbi);
            }};
        t["transceiver_height_m"] = {
            [](ScenarioConfig& c, const json& v) {
                c.outside_transceiver.height_m = v.get<double>();
            },
            [](const ScenarioConfig& c) {
                return height_to_json(c.outside_transceiver.height_m);
            }};
        t["fap_tx_power_dbm"] = {
            [](ScenarioConfig& c, const json& v) { c.fap.tx_power_dbm = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.fap.tx_power_dbm); }};
        t["fap_antenna_gain_dbi"] = {
            [](ScenarioConfig& c, const json& v) { c.fap.antenna_gain_dbi = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.fap.antenna_gain_dbi); }};
        t["fap_height_m"] = {
            [](ScenarioConfig& c, const json& v) { c.fap.height_m = v.get<double>(); },
            [](const ScenarioConfig& c) { return height_to_json(c.fap.height_m); }};
        t["ms_tx_power_dbm"] = {
            [](ScenarioConfig& c, const json& v) { c.ms.tx_power_dbm = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.ms.tx_power_dbm); }};
        t["ms_antenna_gain_dbi"] = {
            [](ScenarioConfig& c, const json& v) { c.ms.antenna_gain_dbi = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.ms.antenna_gain_dbi); }};

        t["noise_bandwidth_hz"] = {
            [](ScenarioConfig& c, const json& v) { c.noise.bandwidth_hz = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.noise.bandwidth_hz); }};
        t["noise_figure_db"] = {
            [](ScenarioConfig& c, const json& v) { c.noise.noise_figure_db = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.noise.noise_figure_db); }};

        t["gamma_ms"] = {
            [](ScenarioConfig& c, const json& v) { c.gamma_ms = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.gamma_ms); }};
        t["gamma_transceiver"] = {
            [](ScenarioConfig& c, const json& v) { c.gamma_transceiver = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.gamma_transceiver); }};

        t["satellite_outage"] = {
            [](ScenarioConfig& c, const json& v) { c.satellite.outage = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.satellite.outage); }};
        t["satellite_spectral_efficiency_bpshz"] = {
            [](ScenarioConfig& c, const json& v) {
                c.satellite.spectral_efficiency_bpshz = v.get<double>();
            },
            [](const ScenarioConfig& c) {
                return json(c.satellite.spectral_efficiency_bpshz);
            }};

        t["shadowing_correlation"] = {
            [](ScenarioConfig& c, const json& v) {
                c.shadowing_correlation = v.get<double>();
            },
            [](const ScenarioConfig& c) { return json(c.shadowing_correlation); }};

        t["vehicle_class"] = {
            [](ScenarioConfig& c, const json& v) {
                const auto name = v.get<std::string>();
                const auto parsed = vehicle_class_from_string(name);
                if (!parsed) {
                    throw ParseError("vehicle_class must be one of ship, slow_medium, "
                                     "high_speed; got \"" + name + "\"");
                }
                c.vehicle_class = *parsed;
            },
            [](const ScenarioConfig& c) { return json(to_string(c.vehicle_class)); }};
        t["speed_threshold_kmh"] = {
            [](ScenarioConfig& c, const json& v) { c.speed_threshold_kmh = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.speed_threshold_kmh); }};
        t["hysteresis_kmh"] = {
            [](ScenarioConfig& c, const json& v) { c.hysteresis_kmh = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.hysteresis_kmh); }};

        t["trials"] = {
            [](ScenarioConfig& c, const json& v) { c.trials = v.get<int>(); },
            [](const ScenarioConfig& c) { return json(c.trials); }};
        t["seed"] = {
            [](ScenarioConfig& c, const json& v) { c.seed = v.get<std::uint64_t>(); },
            [](const ScenarioConfig& c) { return json(c.seed); }};

        t["sweep_distance_min_m"] = {
            [](ScenarioConfig& c, const json& v) {
                c.sweep_distance_min_m = v.get<double>();
            },
            [](const ScenarioConfig& c) { return json(c.sweep_distance_min_m); }};
        t["sweep_distance_max_m"] = {
            [](ScenarioConfig& c, const json& v) {
                c.sweep_distance_max_m = v.get<double>();
            },
            [](const ScenarioConfig& c) { return json(c.sweep_distance_max_m); }};
        t["sweep_step_m"] = {
            [](ScenarioConfig& c, const json& v) { c.sweep_step_m = v.get<double>(); },
            [](const ScenarioConfig& c) { return json(c.sweep_step_m); }};

        return t;
    }();
    return table;
}

json interferers_to_json(const ScenarioConfig& c) {
    json arr = json::array();
    for (const auto& itf : c.interferers) {
        arr.push_back({{"position_m", itf.position_m},
                       {"tx_power_dbm", itf.tx_power_dbm},
                       {"height_m", itf.height_m}});
    }
    return arr;
}

void interferers_from_json(ScenarioConfig& c, const json& arr) {
    if (!arr.is_array()) {
        throw ParseError("interferers must be an array");
    }
    c.interferers.clear();
    for (const auto& e : arr) {
        MacroInterferer itf;
        itf.position_m = e.at("position_m").get<double>();
        itf.tx_power_dbm = e.at("tx_power_dbm").get<double>();
        itf.height_m = e.value("height_m", 100.0);
        for (const auto& [k, _] : e.items()) {
            if (k != "position_m" && k != "tx_power_dbm" && k != "height_m") {
                throw ParseError("unknown interferer key \"" + k + "\"");
            }
        }
        c.interferers.push_back(itf);
    }
}

} // namespace

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::system_error(errno, std::generic_category(),
                                "cannot open config file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("config " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("config " + path.string() + ": top level must be an object");
    }

    ScenarioConfig config = default_config();
    const auto& table = key_table();
    for (const auto& [key, value] : doc.items()) {
        if (key == "interferers") {
            interferers_from_json(config, value);
            continue;
        }
        const auto it = table.find(key);
        if (it == table.end()) {
            throw ParseError("config " + path.string() + ": unknown key \"" + key + "\"");
        }
        try {
            it->second.set(config, value);
        } catch (const json::exception& e) {
            throw ParseError("config " + path.string() + ": key \"" + key + "\": " + e.what());
        }
    }
    return config;
}

std::string config_to_json(const ScenarioConfig& config) {
    ordered_json doc;
    for (const auto& [key, binding] : key_table()) {
        const json v = binding.get(config);
        if (!v.is_null()) {
            doc[key] = v;
        }
    }
    doc["interferers"] = interferers_to_json(config);
    return doc.dump(2) + "\n";
}

void save_config(const ScenarioConfig& config, const std::filesystem::path& path) {
    write_file_atomic(path, config_to_json(config));
}

void apply_override(ScenarioConfig& config, const std::string& key_equals_value) {
    const auto eq = key_equals_value.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ParseError("override \"" + key_equals_value + "\" is not of the form key=value");
    }
    const std::string key = key_equals_value.substr(0, eq);
    const std::string value = key_equals_value.substr(eq + 1);

    const auto& table = key_table();
    const auto it = table.find(key);
    if (it == table.end()) {
        throw ParseError("unknown config key \"" + key + "\"");
    }

    json parsed;
    if (key == "vehicle_class") {
        parsed = value;
    } else {
        try {
            parsed = json::parse(value);
        } catch (const json::parse_error&) {
            throw ParseError("value for \"" + key + "\" is not a number: \"" + value + "\"");
        }
    }
    try {
        it->second.set(config, parsed);
    } catch (const json::exception& e) {
        throw ParseError("override \"" + key_equals_value + "\": " + e.what());
    }
}

std::vector<std::string> config_keys() {
    std::vector<std::string> keys;
    keys.reserve(key_table().size());
    for (const auto& [key, _] : key_table()) {
        keys.push_back(key);
    }
    return keys;
}

MobilityTrace load_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::system_error(errno, std::generic_category(),
                                "cannot open trace file " + path.string());
    }

    static const std::string expected_header =
        "time_s,distance_m,speed_kmh,macro_available,satellite_available,at_port";

    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("trace " + path.string() + ": empty file");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != expected_header) {
        throw ParseError("trace " + path.string() + " line 1: header must be \"" +
                         expected_header + "\"");
    }

    auto parse_bool = [&](const std::string& field, int line_no) {
        if (field == "0") return false;
        if (field == "1") return true;
        throw ParseError("trace " + path.string() + " line " + std::to_string(line_no) +
                         ": boolean fields must be 0 or 1, got \"" + field + "\"");
    };
    auto parse_number = [&](const std::string& field, int line_no) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != field.size() || field.empty()) {
            throw ParseError("trace " + path.string() + " line " + std::to_string(line_no) +
                             ": not a number: \"" + field + "\"");
        }
        return value;
    };

    MobilityTrace trace;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }

        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 6) {
            throw ParseError("trace " + path.string() + " line " + std::to_string(line_no) +
                             ": expected 6 fields, got " + std::to_string(fields.size()));
        }

        TraceSample s;
        s.time_s = parse_number(fields[0], line_no);
        s.distance_m = parse_number(fields[1], line_no);
        s.speed_kmh = parse_number(fields[2], line_no);
        s.macro_available = parse_bool(fields[3], line_no);
        s.satellite_available = parse_bool(fields[4], line_no);
        s.at_port = parse_bool(fields[5], line_no);

        if (!trace.samples.empty() && !(s.time_s > trace.samples.back().time_s)) {
            throw ParseError("trace " + path.string() + " line " + std::to_string(line_no) +
                             ": time_s must be strictly increasing");
        }
        if (!(s.distance_m > 0.0)) {
            throw ParseError("trace " + path.string() + " line " + std::to_string(line_no) +
                             ": distance_m must be > 0");
        }
        trace.samples.push_back(s);
    }

    if (trace.samples.empty()) {
        throw ParseError("trace " + path.string() + ": no data rows");
    }
    return trace;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::system_error(errno, std::generic_category(),
                                    "cannot open " + tmp.string() + " for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::system_error(EIO, std::generic_category(),
                                    "failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::system_error(ec, "cannot rename " + tmp.string() + " to " + path.string());
    }
}

} // namespace mobifem
