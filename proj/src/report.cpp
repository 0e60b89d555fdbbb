#include "rds/report.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rds/errors.hpp"

namespace rds {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

}  // namespace

void write_loads_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "city,mode,reflectance,heating_kwh,cooling_kwh,lighting_kwh,"
           "total_kwh";
    for (const char* kind : {"heating", "cooling", "lighting"})
        for (int m = 1; m <= 12; ++m) out << ',' << kind << '_' << m;
    out << '\n';
    for (const auto& row : rows) {
        out << row.city << ',' << to_string(row.mode) << ','
            << fmt(row.reflectance) << ','
            << fmt(row.loads.annual_heating_kwh()) << ','
            << fmt(row.loads.annual_cooling_kwh()) << ','
            << fmt(row.loads.annual_lighting_kwh()) << ','
            << fmt(row.loads.annual_total_kwh());
        for (const auto& m : row.loads.monthly) out << ',' << fmt(m.heating_kwh);
        for (const auto& m : row.loads.monthly) out << ',' << fmt(m.cooling_kwh);
        for (const auto& m : row.loads.monthly) out << ',' << fmt(m.lighting_kwh);
        out << '\n';
    }
}

std::vector<SweepRow> read_loads_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty loads CSV");
    std::vector<SweepRow> rows;
    int line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        auto fields = split_line(line);
        if (fields.size() < 7 + 36)
            throw ConfigError("loads CSV line " + std::to_string(line_number) +
                              " has too few fields");
        SweepRow row;
        row.city = fields[0];
        row.mode = blind_mode_from_string(fields[1]);
        try {
            row.reflectance = std::stod(fields[2]);
            for (int m = 0; m < 12; ++m) {
                row.loads.monthly[m].heating_kwh = std::stod(fields[7 + m]);
                row.loads.monthly[m].cooling_kwh = std::stod(fields[19 + m]);
                row.loads.monthly[m].lighting_kwh = std::stod(fields[31 + m]);
            }
        } catch (const std::exception&) {
            throw ConfigError("loads CSV line " + std::to_string(line_number) +
                              ": non-numeric field");
        }
        rows.push_back(row);
    }
    return rows;
}

void write_comparison_csv(const std::vector<ComparisonRow>& rows,
                          std::ostream& out) {
    out << "city,reflectance,total_interior_kwh,total_exterior_kwh,"
           "total_rds_kwh,efficiency_vs_interior,efficiency_vs_exterior\n";
    for (const auto& row : rows) {
        out << row.city << ',' << fmt(row.reflectance) << ','
            << fmt(row.total_interior_kwh) << ',' << fmt(row.total_exterior_kwh)
            << ',' << fmt(row.total_rds_kwh) << ','
            << fmt(row.efficiency_vs_interior) << ','
            << fmt(row.efficiency_vs_exterior) << '\n';
    }
}

void write_trace_csv(const std::vector<HourTrace>& trace, std::ostream& out) {
    out << "month,day,hour,t_out_c,poa_beam_wm2,poa_sky_diffuse_wm2,"
           "poa_ground_wm2,blind_location,slat_angle_deg,window_q_total_w,"
           "illuminance_lux,lighting_w,heating_wh,cooling_wh\n";
    for (const auto& tr : trace) {
        const char* loc = tr.blind_location == BlindLocation::Interior
                              ? "interior"
                          : tr.blind_location == BlindLocation::Exterior
                              ? "exterior"
                              : "none";
        out << tr.time.month << ',' << tr.time.day << ',' << tr.time.hour << ','
            << fmt(tr.t_out_c) << ',' << fmt(tr.poa_beam_wm2) << ','
            << fmt(tr.poa_sky_diffuse_wm2) << ',' << fmt(tr.poa_ground_wm2)
            << ',' << loc << ',' << fmt(tr.slat_angle_deg) << ','
            << fmt(tr.window_q_total_w) << ',' << fmt(tr.illuminance_lux) << ','
            << fmt(tr.lighting_w) << ',' << fmt(tr.heating_wh) << ','
            << fmt(tr.cooling_wh) << '\n';
    }
}

void write_window_gains_csv(const std::vector<WindowHeatGainBreakdown>& gains,
                            std::ostream& out) {
    out << "hour_of_year,q_solartrans,q_conv_air,q_conv_blind,q_conv_win,"
           "q_rad_win,q_rad_blind,q_rad_out,q_cond_frame,q_total\n";
    int h = 0;
    for (const auto& q : gains) {
        out << h++ << ',' << fmt(q.q_solartrans) << ',' << fmt(q.q_conv_air)
            << ',' << fmt(q.q_conv_blind) << ',' << fmt(q.q_conv_win) << ','
            << fmt(q.q_rad_win) << ',' << fmt(q.q_rad_blind) << ','
            << fmt(q.q_rad_out) << ',' << fmt(q.q_cond_frame) << ','
            << fmt(q.q_total) << '\n';
    }
}

void write_blind_table_csv(const SlatGeometry& geometry, std::ostream& out) {
    out << "slat_angle_deg,profile_angle_deg,tau_beam_beam,tau_beam_diffuse,"
           "rho_beam,alpha_beam,tau_diffuse,rho_diffuse_front,"
           "rho_diffuse_back,alpha_diffuse\n";
    for (int psi = 0; psi <= 180; psi += 15) {
        auto diff = diffuse_exchange(geometry, psi);
        for (int p = 0; p <= 75; p += 15) {
            double tau_bb = beam_beam_transmittance(geometry, psi, p);
            auto split = beam_diffuse_split(geometry, psi, p);
            out << psi << ',' << p << ',' << fmt(tau_bb) << ','
                << fmt(split.tau_beam_diffuse) << ',' << fmt(split.rho_beam)
                << ',' << fmt(split.alpha_beam) << ',' << fmt(diff.tau_diffuse)
                << ',' << fmt(diff.rho_front) << ',' << fmt(diff.rho_back)
                << ',' << fmt(diff.alpha) << '\n';
        }
    }
}

}  // namespace rds
