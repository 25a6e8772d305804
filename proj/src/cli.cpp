#include "uavbs/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uavbs/config.hpp"
#include "uavbs/error.hpp"
#include "uavbs/io.hpp"
#include "uavbs/svg.hpp"

namespace uavbs::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct ResolvedRun {
    config::ScenarioConfig cfg;
    std::map<Season, fs::path> weather_files;
    std::map<Season, std::vector<atmosphere::WeatherSample>> weather;
    std::vector<Platform> platforms;
    std::vector<EquipmentCase> cases;
    std::vector<Season> seasons;
};

template <typename Enum, typename Parse>
std::vector<Enum> parse_list(const std::vector<std::string>& items, Parse parse) {
    std::vector<Enum> out;
    for (const auto& s : items) out.push_back(parse(s));
    return out;
}

std::map<Season, fs::path> collect_weather(const RunManifest& m, const config::ScenarioConfig& cfg) {
    std::map<Season, fs::path> files = cfg.run.weather;
    for (const auto& entry : m.weather) {
        const auto eq = entry.find('=');
        if (eq != std::string::npos) {
            files[parse_season(entry.substr(0, eq))] = entry.substr(eq + 1);
            continue;
        }
        if (!fs::is_directory(entry)) {
            throw ConfigError("--weather expects season=path or a directory, got '" + entry + "'");
        }
        for (auto s : kAllSeasons) {
            const fs::path candidate = fs::path(entry) / (std::string(to_string(s)) + ".csv");
            if (fs::exists(candidate)) files[s] = candidate;
        }
    }
    return files;
}

ResolvedRun resolve(const RunManifest& m, bool require_weather) {
    ResolvedRun r;
    r.cfg = m.scenario.empty() ? config::table1_preset() : config::load_scenario(m.scenario);
    if (m.step) r.cfg.run.step = config::parse_step(*m.step);

    r.platforms = m.platforms.empty() ? r.cfg.run.platforms : parse_list<Platform>(m.platforms, parse_platform);
    r.cases = m.cases.empty() ? r.cfg.run.cases : parse_list<EquipmentCase>(m.cases, parse_case);
    r.weather_files = collect_weather(m, r.cfg);

    if (!m.seasons.empty()) {
        r.seasons = parse_list<Season>(m.seasons, parse_season);
    } else if (!r.cfg.run.seasons.empty()) {
        r.seasons = r.cfg.run.seasons;
    } else {
        for (const auto& [season, _] : r.weather_files) r.seasons.push_back(season);
    }
    if (require_weather && r.seasons.empty()) {
        throw ConfigError("no weather supplied; use --weather season=path or a directory");
    }
    for (auto s : r.seasons) {
        const auto it = r.weather_files.find(s);
        if (it == r.weather_files.end()) {
            throw ConfigError("no weather file for season '" + std::string(to_string(s)) + "'");
        }
        r.weather[s] = io::parse_weather_csv(it->second);
    }
    return r;
}

std::string season_color(Season s) {
    switch (s) {
        case Season::VernalEquinox: return "#1f77b4";
        case Season::SummerSolstice: return "#e6b800";
        case Season::AutumnEquinox: return "#2ca02c";
        case Season::WinterSolstice: return "#d62728";
    }
    return "";
}

std::string ledger_name(Platform p, EquipmentCase c, Season s) {
    return "ledger_" + std::string(to_string(p)) + "_" + std::string(to_string(c)) + "_" +
           std::string(to_string(s)) + ".csv";
}

struct RunResult {
    Platform platform;
    EquipmentCase equipment;
    Season season;
    EnergyLedger ledger;
};

enum class Flow { Consumption, Pv, Wt };

// Energy per step (Wh) for one flow of the ledger.
std::vector<double> step_energies(const EnergyLedger& ledger, Flow flow) {
    std::vector<double> out;
    out.reserve(ledger.records.size());
    for (const auto& r : ledger.records) {
        const double p = flow == Flow::Consumption ? r.power.total_consumption
                         : flow == Flow::Pv        ? r.harvest.pv
                                                   : r.harvest.wt;
        out.push_back(p * ledger.step_hours());
    }
    return out;
}

int guarded(std::ostream& err, auto&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const WeatherError& e) {
        err << "weather error: " << e.what() << '\n';
        return kWeatherError;
    } catch (const ModelPreconditionError& e) {
        err << "model precondition violated: " << e.what() << '\n';
        return kModelError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace

int run(const RunManifest& manifest, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const ResolvedRun r = resolve(manifest, true);

        // Check every combination before producing any output.
        for (auto p : r.platforms) {
            for (auto c : r.cases) {
                for (auto s : r.seasons) {
                    check_simulation_inputs(config::make_setup(r.cfg, p, c), r.weather.at(s));
                }
            }
        }

        std::error_code ec;
        fs::create_directories(manifest.out_dir, ec);
        if (ec) throw Error("cannot create output directory " + manifest.out_dir.string());

        ordered_json summary;
        summary["step_s"] = r.cfg.run.step.count();
        summary["runs"] = ordered_json::array();
        summary["normalized"] = ordered_json::array();
        summary["svg"] = ordered_json::array();

        std::vector<RunResult> results;
        for (auto p : r.platforms) {
            for (auto c : r.cases) {
                for (auto s : r.seasons) {
                    auto ledger = simulate(config::make_setup(r.cfg, p, c), r.weather.at(s));
                    std::ostringstream csv;
                    io::write_ledger_csv(csv, ledger);
                    const auto name = ledger_name(p, c, s);
                    io::write_file(manifest.out_dir / name, csv.str());

                    const auto& last = ledger.records.back();
                    summary["runs"].push_back({
                        {"platform", to_string(p)},
                        {"case", to_string(c)},
                        {"season", to_string(s)},
                        {"samples", ledger.records.size()},
                        {"e_consumed_wh", last.cumulative_consumed_wh},
                        {"e_harvested_wh", last.cumulative_harvested_wh},
                        {"net_wh", last.cumulative_harvested_wh - last.cumulative_consumed_wh},
                        {"ledger", name},
                    });
                    results.push_back({p, c, s, std::move(ledger)});
                }
            }
        }

        // Consumption per platform: each case is scaled by its own maximum
        // across all seasons and steps.
        for (auto p : r.platforms) {
            std::ostringstream csv;
            csv << "case,season,step,timestamp,energy_wh,normalized\n";
            for (auto c : r.cases) {
                std::vector<const RunResult*> group;
                std::vector<double> energies;
                for (const auto& res : results) {
                    if (res.platform != p || res.equipment != c) continue;
                    group.push_back(&res);
                    const auto e = step_energies(res.ledger, Flow::Consumption);
                    energies.insert(energies.end(), e.begin(), e.end());
                }
                const auto norm = normalize_series(energies);
                std::vector<svg::Series> chart;
                std::size_t k = 0;
                for (const auto* res : group) {
                    svg::Series series{std::string(to_string(res->season)), season_color(res->season), {}};
                    for (std::size_t i = 0; i < res->ledger.records.size(); ++i, ++k) {
                        csv << to_string(c) << ',' << to_string(res->season) << ',' << i << ','
                            << format_timestamp(res->ledger.records[i].timestamp) << ','
                            << io::format_number(energies[k]) << ',' << io::format_number(norm[k]) << '\n';
                        series.values.push_back(norm[k]);
                    }
                    chart.push_back(std::move(series));
                }
                if (manifest.emit_svg) {
                    const std::string svg_name = "consumption_" + std::string(to_string(p)) + "_" +
                                                 std::string(to_string(c)) + ".svg";
                    svg::emit_svg(chart,
                                  "Normalized energy consumption: " + std::string(to_string(p)) + ", " +
                                      std::string(to_string(c)),
                                  "time step", manifest.out_dir / svg_name);
                    summary["svg"].push_back(svg_name);
                }
            }
            const std::string name = "normalized_consumption_" + std::string(to_string(p)) + ".csv";
            io::write_file(manifest.out_dir / name, csv.str());
            summary["normalized"].push_back(name);
        }

        // Harvest per generator, taken from the first selected run that carries it.
        for (const bool pv : {true, false}) {
            const std::string gen = pv ? "pv" : "wt";
            std::vector<const RunResult*> group;
            for (auto s : r.seasons) {
                for (const auto& res : results) {
                    if (res.season == s && (pv ? has_pv(res.equipment) : has_wt(res.equipment))) {
                        group.push_back(&res);
                        break;
                    }
                }
            }
            if (group.empty()) continue;
            std::vector<double> energies;
            for (const auto* res : group) {
                const auto e = step_energies(res->ledger, pv ? Flow::Pv : Flow::Wt);
                energies.insert(energies.end(), e.begin(), e.end());
            }
            const auto norm = normalize_series(energies);
            std::ostringstream csv;
            csv << "season,step,timestamp,energy_wh,normalized\n";
            std::vector<svg::Series> chart;
            std::size_t k = 0;
            for (const auto* res : group) {
                svg::Series series{std::string(to_string(res->season)), season_color(res->season), {}};
                for (std::size_t i = 0; i < res->ledger.records.size(); ++i, ++k) {
                    csv << to_string(res->season) << ',' << i << ','
                        << format_timestamp(res->ledger.records[i].timestamp) << ','
                        << io::format_number(energies[k]) << ',' << io::format_number(norm[k]) << '\n';
                    series.values.push_back(norm[k]);
                }
                chart.push_back(std::move(series));
            }
            const std::string name = "normalized_harvest_" + gen + ".csv";
            io::write_file(manifest.out_dir / name, csv.str());
            summary["normalized"].push_back(name);
            if (manifest.emit_svg) {
                const std::string svg_name = "harvest_" + gen + ".svg";
                svg::emit_svg(chart, std::string("Normalized energy generation: ") + (pv ? "PV panel" : "wind turbine"),
                              "time step", manifest.out_dir / svg_name);
                summary["svg"].push_back(svg_name);
            }
        }

        io::write_file(manifest.out_dir / "summary.json", summary.dump(2) + "\n");
        log << "wrote " << results.size() << " ledgers to " << manifest.out_dir.string() << '\n';
        return static_cast<int>(kOk);
    });
}

int validate(const RunManifest& manifest, std::ostream& log, std::ostream& err) {
    return guarded(err, [&] {
        const ResolvedRun r = resolve(manifest, false);
        std::size_t checked = 0;
        for (auto p : r.platforms) {
            for (auto c : r.cases) {
                for (auto s : r.seasons) {
                    check_simulation_inputs(config::make_setup(r.cfg, p, c), r.weather.at(s));
                    ++checked;
                }
            }
        }
        log << "ok: configuration valid";
        if (checked) log << ", " << checked << " runs checked against " << r.seasons.size() << " weather file(s)";
        log << '\n';
        return static_cast<int>(kOk);
    });
}

std::string presets_json() {
    ordered_json j;
    j["seasons"] = ordered_json::array();
    for (const auto& preset : seasonal_presets()) {
        const auto off = preset.utc_offset.count();
        char date[32];
        std::snprintf(date, sizeof date, "%04d-%02u-%02u", static_cast<int>(preset.date.year()),
                      static_cast<unsigned>(preset.date.month()), static_cast<unsigned>(preset.date.day()));
        char offset[32];
        std::snprintf(offset, sizeof offset, "%c%02lld:%02lld", off < 0 ? '-' : '+',
                      static_cast<long long>(std::abs(off) / 60), static_cast<long long>(std::abs(off) % 60));
        ordered_json grid = ordered_json::array();
        for (const auto& [p, c] : preset.grid) grid.push_back({{"platform", to_string(p)}, {"case", to_string(c)}});
        j["seasons"].push_back({{"name", to_string(preset.season)},
                                {"date", date},
                                {"utc_offset", offset},
                                {"site",
                                 {{"latitude_deg", preset.site.latitude_deg},
                                  {"longitude_deg", preset.site.longitude_deg}}},
                                {"grid", grid}});
    }
    j["table1"] = config::to_json(config::table1_preset());
    return j.dump(2) + "\n";
}

}  // namespace uavbs::cli
