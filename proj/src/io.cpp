#include "ppc/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace ppc {

namespace {

std::vector<std::vector<elt>> parse_csv_grid(const FieldCtx& F, const std::string& text) {
    std::vector<std::vector<elt>> grid;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<elt> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                unsigned long v = std::stoul(cell);
                require(v < F.q(), errc::bad_input,
                        "value " + cell + " outside [0, q)");
                row.push_back(elt(v));
            } catch (const std::logic_error&) {
                fail(errc::bad_input, "not a field element: \"" + cell + "\"");
            }
        }
        grid.push_back(std::move(row));
    }
    require(!grid.empty(), errc::bad_input, "empty CSV grid");
    for (const auto& row : grid)
        require(row.size() == grid[0].size(), errc::bad_input, "ragged CSV grid");
    return grid;
}

std::string grid_to_csv(std::size_t rows, std::size_t cols,
                        const std::function<elt(std::size_t, std::size_t)>& at) {
    std::string out;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (j) out.push_back(',');
            out += std::to_string(at(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace

std::string matrix_to_csv(const CodeMatrix& c) {
    return grid_to_csv(c.m, c.n, [&](std::size_t i, std::size_t j) { return c.at(i, j); });
}

CodeMatrix matrix_from_csv(const FieldCtx& F, const std::string& text) {
    auto grid = parse_csv_grid(F, text);
    CodeMatrix c(grid.size(), grid[0].size());
    for (std::size_t i = 0; i < c.m; ++i)
        for (std::size_t j = 0; j < c.n; ++j) c.ref(i, j) = grid[i][j];
    return c;
}

std::string bipoly_to_csv(const BiPoly& f, std::size_t s, std::size_t t) {
    return grid_to_csv(s, t, [&](std::size_t i, std::size_t j) { return f.at(i, j); });
}

BiPoly bipoly_from_csv(const FieldCtx& F, const std::string& text) {
    auto grid = parse_csv_grid(F, text);
    BiPoly f(grid.size(), grid[0].size());
    for (std::size_t i = 0; i < f.nx; ++i)
        for (std::size_t j = 0; j < f.ny; ++j) f.ref(i, j) = grid[i][j];
    return f;
}

ExperimentConfig config_from_json(const json& j) {
    ExperimentConfig cfg;
    require(j.contains("p"), errc::bad_input, "config needs \"p\"");
    cfg.p = j.at("p").get<std::uint32_t>();
    cfg.r = j.value("r", 1u);
    if (j.contains("modulus") && !j.at("modulus").is_null())
        cfg.modulus = j.at("modulus").get<std::vector<elt>>();
    cfg.s = j.value("s", 1u);
    cfg.t = j.value("t", 1u);
    cfg.w = j.value("w", 1u);
    cfg.errors = j.value("errors", 0u);
    cfg.trials = j.value("trials", 0u);
    cfg.seed = j.value("seed", std::uint64_t(0));
    if (j.contains("threshold_override") && !j.at("threshold_override").is_null())
        cfg.threshold_override = j.at("threshold_override").get<std::size_t>();
    cfg.enumeration_cap = j.value("enumeration_cap", std::uint64_t(1000000));
    if (j.contains("l1") && !j.at("l1").is_null()) cfg.l1_text = j.at("l1").get<std::string>();
    if (j.contains("l2") && !j.at("l2").is_null()) cfg.l2_text = j.at("l2").get<std::string>();
    if (j.contains("alpha") && !j.at("alpha").is_null())
        cfg.alpha = j.at("alpha").get<elt>();
    if (j.contains("beta") && !j.at("beta").is_null()) cfg.beta = j.at("beta").get<elt>();
    return cfg;
}

json config_to_json(const ExperimentConfig& cfg) {
    json j;
    j["p"] = cfg.p;
    j["r"] = cfg.r;
    if (cfg.modulus) j["modulus"] = *cfg.modulus;
    j["s"] = cfg.s;
    j["t"] = cfg.t;
    j["w"] = cfg.w;
    j["errors"] = cfg.errors;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    if (cfg.threshold_override) j["threshold_override"] = *cfg.threshold_override;
    j["enumeration_cap"] = cfg.enumeration_cap;
    if (cfg.l1_text) j["l1"] = *cfg.l1_text;
    if (cfg.l2_text) j["l2"] = *cfg.l2_text;
    if (cfg.alpha) j["alpha"] = *cfg.alpha;
    if (cfg.beta) j["beta"] = *cfg.beta;
    return j;
}

json bipoly_to_json(const BiPoly& f, std::size_t s, std::size_t t) {
    json grid = json::array();
    for (std::size_t i = 0; i < s; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < t; ++j) row.push_back(f.at(i, j));
        grid.push_back(std::move(row));
    }
    return grid;
}

namespace {

json stats_to_json(const DecodeStats& st, bool with_timings) {
    json j;
    j["w"] = st.w;
    j["D"] = st.D;
    j["constraints"] = st.constraints;
    j["variables"] = st.variables;
    j["dimension"] = st.dimension;
    j["threshold_num"] = st.threshold_num;
    j["threshold_den"] = st.threshold_den;
    j["threshold_vacuous"] = st.threshold_vacuous;
    j["interpolation_verified"] = st.interpolation_verified;
    j["coprime_after_reduction"] = st.coprime_after_reduction;
    j["enumerated"] = st.enumerated;
    if (with_timings) {
        j["t_interpolate"] = st.t_interpolate;
        j["t_reduce"] = st.t_reduce;
        j["t_subspace"] = st.t_subspace;
        j["t_filter"] = st.t_filter;
    }
    return j;
}

}  // namespace

json decode_to_json(const PpcCode& C, const DecodeOutput& out, bool with_timings) {
    json j;
    j["threshold"] = out.threshold;
    j["dimension"] = out.basis.size();
    json basis = json::array();
    for (const auto& b : out.basis) basis.push_back(bipoly_to_json(b, C.s(), C.t()));
    j["basis"] = std::move(basis);
    j["enumerated"] = out.stats.enumerated;
    json list = json::array();
    for (const auto& f : out.list) list.push_back(bipoly_to_json(f, C.s(), C.t()));
    j["list"] = std::move(list);
    j["stats"] = stats_to_json(out.stats, with_timings);
    return j;
}

json trial_to_json(const TrialRecord& rec, bool with_timings) {
    json j;
    j["trial"] = rec.trial;
    j["digest"] = rec.digest;
    j["agreement"] = rec.agreement;
    j["threshold"] = rec.threshold;
    j["dimension"] = rec.dimension;
    j["enumerated"] = rec.enumerated;
    j["list_size"] = rec.list_size;
    j["in_subspace"] = rec.in_subspace;
    j["in_list"] = rec.in_list;
    j["planted_found"] = rec.planted_found;
    j["asserted"] = rec.asserted;
    if (!rec.err.empty()) j["error"] = rec.err;
    if (with_timings) j["stats"] = stats_to_json(rec.stats, true);
    return j;
}

json summary_to_json(const std::vector<TrialRecord>& records) {
    std::size_t asserted = 0, found = 0, max_dim = 0, errors = 0;
    for (const auto& rec : records) {
        asserted += rec.asserted;
        found += rec.asserted && rec.planted_found;
        max_dim = std::max(max_dim, rec.dimension);
        errors += !rec.err.empty();
    }
    json j;
    j["trials"] = records.size();
    j["asserted"] = asserted;
    j["asserted_found"] = found;
    j["max_dimension"] = max_dim;
    j["trial_errors"] = errors;
    j["all_invariants_held"] = all_invariants_held(records);
    return j;
}

json report_to_json(const CyclicReport& rep) {
    json arr = json::array();
    for (const auto& c : rep.clauses) {
        json j;
        j["clause"] = c.name;
        j["pass"] = c.pass;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(bool(in), errc::bad_input, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    require(bool(out), errc::bad_input, "cannot write " + path);
    out << content;
}

}  // namespace ppc
