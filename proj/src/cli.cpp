#include "agtrace/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "agtrace/bombieri.hpp"

namespace agtrace {

namespace {

std::vector<std::string> split_list(const std::string& s, char sep = ';') {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::array<int, 3> parse_tower_triple(const std::string& s) {
    const auto parts = split_list(s, ',');
    if (parts.size() != 3) throw ParseError("tower must be p,r,m: " + s);
    try {
        return {std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2])};
    } catch (const std::logic_error&) {
        throw ParseError("bad tower triple: " + s);
    }
}

bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ParseError("bad boolean value: " + v);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct GoppaSample {
    Poly g;
    std::vector<std::pair<Poly, int>> factors;
};

GoppaSample sample_goppa(const FieldTower& t, int deg_min, int deg_max, int power_max,
                         std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg_dist(deg_min, deg_max);
    std::uniform_int_distribution<int> pow_dist(1, power_max);
    while (true) {
        const int d = deg_dist(rng);
        const int e = pow_dist(rng);
        const Poly pi = poly_random_monic_irreducible(t, d, rng);
        if (poly_deg(pi) < 2) continue;  // rejection: a linear factor is a rational zero
        GoppaSample s;
        s.factors = {{pi, e}};
        s.g = poly_pow(t, pi, e);
        return s;
    }
}

void emit_rows(const std::string& format, const std::vector<TheoremReport>& rows,
               std::ostream& out) {
    if (format == "json") {
        out << '[';
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i) out << ',';
            out << report_json(rows[i]);
        }
        out << "]\n";
        return;
    }
    out << report_csv_header() << '\n';
    for (const auto& r : rows) out << report_csv_row(r) << '\n';
}

void tally(const TheoremReport& rep, SweepSummary& sum) {
    ++sum.instances;
    if (!rep.invariants_ok() || (rep.hypotheses_held() && !rep.k_equals_e))
        sum.invariant_failure = true;
    if (rep.boundary) ++sum.boundary_flagged;
    if (rep.hypotheses_held()) {
        ++sum.hypotheses_held;
        if (rep.match)
            ++sum.matched;
        else if (!rep.boundary)
            ++sum.mismatched_with_hypotheses;
    } else if (!rep.match) {
        ++sum.mismatched_without_hypotheses;
    }
}

}  // namespace

void apply_config_line(SweepConfig& cfg, const std::string& raw) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') return;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("config line needs key=value: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "towers") {
        cfg.towers.clear();
        for (const auto& s : split_list(val)) cfg.towers.push_back(parse_tower_triple(s));
    } else if (key == "curve" || key == "curves") {
        cfg.curves = split_list(val);
    } else if (key == "family") {
        if (val == "corollary")
            cfg.family = SweepConfig::Family::Corollary;
        else if (val == "explicit")
            cfg.family = SweepConfig::Family::Explicit;
        else if (val == "goppa")
            cfg.family = SweepConfig::Family::Goppa;
        else
            throw ParseError("unknown family: " + val);
    } else if (key == "divisors") {
        cfg.divisors = split_list(val);
    } else if (key == "goppa_count") {
        cfg.goppa_count = std::stoi(val);
    } else if (key == "goppa_deg_min") {
        cfg.goppa_deg_min = std::stoi(val);
    } else if (key == "goppa_deg_max") {
        cfg.goppa_deg_max = std::stoi(val);
    } else if (key == "goppa_power_max") {
        cfg.goppa_power_max = std::stoi(val);
    } else if (key == "seed") {
        cfg.seed = std::stoull(val);
    } else if (key == "format") {
        if (val != "csv" && val != "json") throw ParseError("format must be csv or json");
        cfg.format = val;
    } else if (key == "drop_zero_columns") {
        cfg.drop_zero_columns = parse_bool(val);
    } else if (key == "include_failing_hypotheses") {
        cfg.include_failing_hypotheses = parse_bool(val);
    } else {
        throw ParseError("unknown config key: " + key);
    }
}

SweepConfig parse_sweep_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    SweepConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        try {
            apply_config_line(cfg, line);
        } catch (const std::logic_error& e) {
            throw ParseError(std::string("bad config line '") + trim(line) + "': " + e.what());
        }
    }
    return cfg;
}

SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.towers.empty()) throw ParseError("sweep needs at least one tower");
    SweepSummary sum;
    std::vector<TheoremReport> rows;
    std::mt19937_64 rng(cfg.seed);

    for (const auto& [p, r, m] : cfg.towers) {
        const TowerPtr tower = build_tower(p, r, m);
        for (const auto& curve_spec : cfg.curves) {
            const CurveModel curve = parse_curve(tower, curve_spec);
            std::vector<Divisor> divisors;
            switch (cfg.family) {
                case SweepConfig::Family::Corollary: {
                    const KRange range = corollary_k_range(curve.genus(), *tower);
                    for (long long k = range.lo; k <= range.hi; ++k)
                        divisors.push_back(one_point_divisor(curve, static_cast<int>(k)));
                    break;
                }
                case SweepConfig::Family::Explicit: {
                    for (const auto& d : cfg.divisors)
                        divisors.push_back(parse_divisor(curve, d));
                    break;
                }
                case SweepConfig::Family::Goppa: {
                    if (curve.kind() != CurveModel::Kind::ProjectiveLine)
                        throw ParseError("Goppa sweeps require the projective line");
                    for (int i = 0; i < cfg.goppa_count; ++i) {
                        const auto s = sample_goppa(*tower, cfg.goppa_deg_min,
                                                    cfg.goppa_deg_max, cfg.goppa_power_max,
                                                    rng);
                        divisors.push_back(goppa_divisor(curve, s.factors));
                    }
                    break;
                }
            }
            for (const auto& g : divisors) {
                const TheoremReport rep = verify(curve, g, cfg.drop_zero_columns);
                tally(rep, sum);
                if (cfg.include_failing_hypotheses || rep.hypotheses_held())
                    rows.push_back(rep);
            }
        }
    }

    emit_rows(cfg.format, rows, out);
    err << "# summary: instances=" << sum.instances
        << " hypotheses-held=" << sum.hypotheses_held << " matched=" << sum.matched
        << " mismatched-with-hypotheses=" << sum.mismatched_with_hypotheses
        << " mismatched-without-hypotheses=" << sum.mismatched_without_hypotheses
        << " boundary-flagged=" << sum.boundary_flagged << "\n";
    return sum;
}

namespace {

int run_verify_cmd(const std::string& tower_s, const std::string& curve_s,
                   const std::string& divisor_s, bool drop_zero, const std::string& format,
                   std::ostream& out) {
    const auto [p, r, m] = parse_tower_triple(tower_s);
    const TowerPtr tower = build_tower(p, r, m);
    const CurveModel curve = parse_curve(tower, curve_s);
    const Divisor g = parse_divisor(curve, divisor_s);
    const TheoremReport rep = verify(curve, g, drop_zero);
    if (format == "csv")
        out << report_csv_header() << '\n' << report_csv_row(rep) << '\n';
    else if (format == "json")
        out << report_json(rep) << '\n';
    else
        out << report_text(rep);
    return rep.ok() ? 0 : 1;
}

int run_goppa_cmd(const std::string& tower_s, int count, std::uint64_t seed, int deg_min,
                  int deg_max, int power_max, const std::string& format, bool details,
                  std::ostream& out, std::ostream& err) {
    const auto [p, r, m] = parse_tower_triple(tower_s);
    const TowerPtr tower = build_tower(p, r, m);
    const CurveModel curve = parse_curve(tower, "p1");
    std::mt19937_64 rng(seed);

    SweepSummary sum;
    std::vector<TheoremReport> rows;
    for (int i = 0; i < count; ++i) {
        const auto s = sample_goppa(*tower, deg_min, deg_max, power_max, rng);
        const GoppaCase gc = goppa_case(s.g, *tower);
        const Divisor g = goppa_divisor(curve, s.factors);
        const TheoremReport rep = verify(curve, g);
        if (gc.predicted != rep.predicted)
            throw InternalError("Goppa formula disagrees with the divisor prediction");
        tally(rep, sum);
        rows.push_back(rep);
        if (details)
            err << "# g=" << poly_to_string(s.g) << " r1=" << gc.r1 << " r2=" << gc.r2
                << " s=" << gc.s << " valid=" << gc.valid << " predicted=" << gc.predicted
                << " computed=" << rep.computed << "\n";
    }
    emit_rows(format, rows, out);
    err << "# summary: instances=" << sum.instances
        << " hypotheses-held=" << sum.hypotheses_held << " matched=" << sum.matched
        << " mismatched-with-hypotheses=" << sum.mismatched_with_hypotheses
        << " mismatched-without-hypotheses=" << sum.mismatched_without_hypotheses
        << " boundary-flagged=" << sum.boundary_flagged << "\n";
    return sum.ok() ? 0 : 1;
}

int run_bombieri_cmd(const std::string& tower_s, int count, std::uint64_t seed, int deg_max,
                     const std::string& format, std::ostream& out) {
    const auto [p, r, m] = parse_tower_triple(tower_s);
    const TowerPtr tower = build_tower(p, r, m);
    const CurveModel curve = parse_curve(tower, "p1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg_dist(1, deg_max);
    std::uniform_int_distribution<std::uint32_t> elem_dist(0, tower->size() - 1);

    bool all_pass = true;
    nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
    std::ostringstream csv;
    csv << "p,q,m,f,t,d_inf,n_points,sum_abs_sq,bound_sq,pass\n";
    int accepted = 0;
    while (accepted < count) {
        const int d = deg_dist(rng);
        Poly f(static_cast<size_t>(d) + 1);
        for (int i = 0; i < d; ++i) f[i] = elem_dist(rng);
        do {
            f[d] = elem_dist(rng);
        } while (f[d] == 0);
        const RationalFunction rf = rf_p1(*tower, f, {1});
        if (is_artin_schreier_degenerate(curve, rf)) continue;
        const CharSumResult res = char_sum_check(curve, rf);
        ++accepted;
        all_pass = all_pass && res.pass;
        std::ostringstream sum_s;
        if (tower->p() == 2)
            sum_s << res.sum_sq_exact;
        else {
            sum_s.setf(std::ios::fixed);
            sum_s.precision(6);
            sum_s << res.sum_abs * res.sum_abs;
        }
        if (format == "json") {
            nlohmann::ordered_json j;
            j["p"] = tower->p();
            j["q"] = tower->q();
            j["m"] = tower->m();
            j["f"] = poly_to_string(f);
            j["t"] = res.t_poles;
            j["d_inf"] = res.d_inf;
            j["n_points"] = res.n_points;
            j["sum_abs_sq"] = sum_s.str();
            j["bound_sq"] = res.bound_sq;
            j["pass"] = res.pass;
            jrows.push_back(j);
        } else {
            csv << tower->p() << ',' << tower->q() << ',' << tower->m() << ",\""
                << poly_to_string(f) << "\"," << res.t_poles << ',' << res.d_inf << ','
                << res.n_points << ',' << sum_s.str() << ',' << res.bound_sq << ','
                << res.pass << '\n';
        }
    }
    if (format == "json")
        out << jrows.dump() << '\n';
    else
        out << csv.str();
    return all_pass ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"AG trace code toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verify one instance");
    std::string v_tower, v_curve = "p1", v_divisor = "0", v_format = "text";
    bool v_drop = false;
    verify_cmd->add_option("--tower", v_tower, "tower p,r,m")->required();
    verify_cmd->add_option("--curve", v_curve, "curve spec (p1 | weierstrass:a1,a3,a2,a4,a6)");
    verify_cmd->add_option("--divisor", v_divisor, "divisor spec");
    verify_cmd->add_flag("--drop-zero-columns", v_drop,
                         "drop Supp(G-) points from D_max");
    verify_cmd->add_option("--format", v_format, "text | csv | json");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "verify a family of instances");
    std::string s_config, s_towers, s_curve = "p1", s_family = "corollary", s_divisors,
                s_format = "csv";
    std::uint64_t s_seed = 0;
    int s_gcount = 20, s_gdmin = 2, s_gdmax = 3, s_gpmax = 1;
    bool s_drop = false, s_include = false;
    sweep_cmd->add_option("--config", s_config, "key=value config file");
    sweep_cmd->add_option("--towers", s_towers, "semicolon-separated p,r,m triples");
    sweep_cmd->add_option("--curve", s_curve, "curve spec");
    sweep_cmd->add_option("--family", s_family, "corollary | explicit | goppa");
    sweep_cmd->add_option("--divisors", s_divisors, "semicolon-separated divisor specs");
    sweep_cmd->add_option("--goppa-count", s_gcount, "samples per tower");
    sweep_cmd->add_option("--goppa-deg-min", s_gdmin, "");
    sweep_cmd->add_option("--goppa-deg-max", s_gdmax, "");
    sweep_cmd->add_option("--goppa-power-max", s_gpmax, "");
    sweep_cmd->add_option("--seed", s_seed, "rng seed");
    sweep_cmd->add_option("--format", s_format, "csv | json");
    sweep_cmd->add_flag("--drop-zero-columns", s_drop, "");
    sweep_cmd->add_flag("--include-failing-hypotheses", s_include,
                        "also report rows whose hypotheses fail");

    // goppa
    auto* goppa_cmd = app.add_subcommand("goppa", "seeded Goppa polynomial study");
    std::string g_tower, g_format = "csv";
    std::uint64_t g_seed = 0;
    int g_count = 20, g_dmin = 2, g_dmax = 3, g_pmax = 1;
    bool g_details = false;
    goppa_cmd->add_option("--tower", g_tower, "tower p,r,m")->required();
    goppa_cmd->add_option("--count", g_count, "number of samples");
    goppa_cmd->add_option("--seed", g_seed, "rng seed");
    goppa_cmd->add_option("--deg-min", g_dmin, "");
    goppa_cmd->add_option("--deg-max", g_dmax, "");
    goppa_cmd->add_option("--power-max", g_pmax, "");
    goppa_cmd->add_option("--format", g_format, "csv | json");
    goppa_cmd->add_flag("--details", g_details, "per-sample factorization data on stderr");

    // bombieri
    auto* bomb_cmd = app.add_subcommand("bombieri", "character-sum bound sampling");
    std::string b_tower, b_format = "csv";
    std::uint64_t b_seed = 0;
    int b_count = 50, b_dmax = 5;
    bomb_cmd->add_option("--tower", b_tower, "tower p,r,m")->required();
    bomb_cmd->add_option("--count", b_count, "non-degenerate samples to accept");
    bomb_cmd->add_option("--seed", b_seed, "rng seed");
    bomb_cmd->add_option("--deg-max", b_dmax, "maximum degree");
    bomb_cmd->add_option("--format", b_format, "csv | json");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify_cmd->parsed())
            return run_verify_cmd(v_tower, v_curve, v_divisor, v_drop, v_format, out);
        if (sweep_cmd->parsed()) {
            SweepConfig cfg;
            if (!s_config.empty()) cfg = parse_sweep_config_file(s_config);
            if (!s_towers.empty()) {
                cfg.towers.clear();
                for (const auto& s : split_list(s_towers))
                    cfg.towers.push_back(parse_tower_triple(s));
            }
            if (sweep_cmd->count("--curve")) cfg.curves = {s_curve};
            if (sweep_cmd->count("--family")) {
                apply_config_line(cfg, "family=" + s_family);
            }
            if (!s_divisors.empty()) cfg.divisors = split_list(s_divisors);
            if (sweep_cmd->count("--goppa-count")) cfg.goppa_count = s_gcount;
            if (sweep_cmd->count("--goppa-deg-min")) cfg.goppa_deg_min = s_gdmin;
            if (sweep_cmd->count("--goppa-deg-max")) cfg.goppa_deg_max = s_gdmax;
            if (sweep_cmd->count("--goppa-power-max")) cfg.goppa_power_max = s_gpmax;
            if (sweep_cmd->count("--seed")) cfg.seed = s_seed;
            if (sweep_cmd->count("--format")) cfg.format = s_format;
            if (s_drop) cfg.drop_zero_columns = true;
            if (s_include) cfg.include_failing_hypotheses = true;
            return run_sweep(cfg, out, err).ok() ? 0 : 1;
        }
        if (goppa_cmd->parsed())
            return run_goppa_cmd(g_tower, g_count, g_seed, g_dmin, g_dmax, g_pmax, g_format,
                                 g_details, out, err);
        if (bomb_cmd->parsed())
            return run_bombieri_cmd(b_tower, b_count, b_seed, b_dmax, b_format, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace agtrace
