#include "fockdyn/scenario/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <utility>

#include <yaml-cpp/yaml.h>

#include "fockdyn/errors.hpp"

namespace fockdyn::scenario {

namespace {

using std::numbers::pi;

struct Context {
    std::string origin;
    std::filesystem::path base_dir;

    [[noreturn]] void fail(const YAML::Mark& m, const std::string& msg) const {
        if (m.is_null()) throw ConfigError(origin + ": " + msg);
        throw ConfigError(origin + ":" + std::to_string(m.line + 1) + ":" + std::to_string(m.column + 1) + ": " + msg);
    }
};

double scalar_number(const Context& ctx, const YAML::Node& n, const std::string& key) {
    if (!n.IsScalar()) ctx.fail(n.Mark(), "key '" + key + "' must be a number");
    double v = 0.0;
    try {
        v = n.as<double>();
    } catch (const YAML::Exception&) {
        ctx.fail(n.Mark(), "key '" + key + "' must be a number, got '" + n.Scalar() + "'");
    }
    if (!std::isfinite(v)) ctx.fail(n.Mark(), "key '" + key + "' must be finite");
    return v;
}

// A mapping whose keys are checked against the ones actually read. finish()
// reports the first key nobody asked for, and duplicate keys.
class Section {
public:
    Section(const Context& ctx, const YAML::Node& node, std::string name) : ctx_(ctx), node_(node), name_(std::move(name)) {
        if (!node_.IsMap()) ctx_.fail(node_.Mark(), "section '" + name_ + "' must be a mapping");
        std::set<std::string> seen;
        for (const auto& kv : node_) {
            const auto key = kv.first.as<std::string>();
            if (!seen.insert(key).second) ctx_.fail(kv.first.Mark(), "duplicate key '" + key + "' in '" + name_ + "'");
        }
    }

    const Context& ctx() const { return ctx_; }
    const std::string& name() const { return name_; }
    YAML::Mark mark() const { return node_.Mark(); }

    bool has(const std::string& key) {
        used_.insert(key);
        return static_cast<bool>(std::as_const(node_)[key]);
    }

    YAML::Node get(const std::string& key) {
        if (!has(key)) ctx_.fail(node_.Mark(), "missing required key '" + key + "' in '" + name_ + "'");
        return std::as_const(node_)[key];
    }

    double number(const std::string& key) { return scalar_number(ctx_, get(key), key); }
    double number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }
    std::optional<double> opt_number(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return number(key);
    }

    std::size_t count(const std::string& key, std::size_t fallback, std::size_t minimum = 0) {
        if (!has(key)) return fallback;
        return count_required(key, minimum);
    }

    std::size_t count_required(const std::string& key, std::size_t minimum = 0) {
        const YAML::Node n = get(key);
        const double v = scalar_number(ctx_, n, key);
        if (v != std::floor(v) || v < static_cast<double>(minimum) || v > 1e15) {
            ctx_.fail(n.Mark(), "key '" + key + "' must be an integer >= " + std::to_string(minimum));
        }
        return static_cast<std::size_t>(v);
    }

    bool flag(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const YAML::Node n = std::as_const(node_)[key];
        try {
            if (n.IsScalar()) return n.as<bool>();
        } catch (const YAML::Exception&) {
        }
        ctx_.fail(n.Mark(), "key '" + key + "' must be true or false");
    }

    std::string text(const std::string& key) {
        const YAML::Node n = get(key);
        if (!n.IsScalar()) ctx_.fail(n.Mark(), "key '" + key + "' must be a string");
        return n.Scalar();
    }

    std::optional<std::string> opt_text(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return text(key);
    }

    std::vector<double> numbers(const std::string& key) {
        const YAML::Node n = get(key);
        return number_list(n, key);
    }

    std::vector<double> number_list(const YAML::Node& n, const std::string& key) const {
        if (!n.IsSequence()) ctx_.fail(n.Mark(), "key '" + key + "' must be a list of numbers");
        std::vector<double> out;
        for (const auto& item : n) out.push_back(scalar_number(ctx_, item, key));
        return out;
    }

    Section child(const std::string& key) { return Section(ctx_, get(key), name_ + "." + key); }

    void finish() const {
        for (const auto& kv : node_) {
            const auto key = kv.first.as<std::string>();
            if (!used_.count(key)) ctx_.fail(kv.first.Mark(), "unknown key '" + key + "' in '" + name_ + "'");
        }
    }

private:
    const Context& ctx_;
    YAML::Node node_;
    std::string name_;
    std::set<std::string> used_;
};

Sampling read_sampling(Section& top) {
    Sampling s;
    if (!top.has("sampling")) return s;
    Section sec = top.child("sampling");
    s.t_min = sec.number("t_min", 0.0);
    s.t_max = sec.opt_number("t_max");
    s.points = sec.count("points", s.points, 1);
    if (s.t_max && !(*s.t_max >= s.t_min)) sec.ctx().fail(sec.mark(), "sampling.t_max must be >= t_min");
    sec.finish();
    return s;
}

ChooserScenario read_chooser(Section& top) {
    Section sec = top.child("chooser");
    ChooserScenario s;
    auto& p = s.params;
    p.U = sec.number("U");
    p.V = sec.number("V", 0.0);
    p.N = sec.count("N", 0);
    p.alpha = sec.number("alpha", 0.0);
    const bool has_w = sec.has("W");
    const bool has_ratio = sec.has("W_over_U");
    if (has_w && has_ratio) sec.ctx().fail(sec.mark(), "give either W or W_over_U in 'chooser', not both");
    p.W = has_ratio ? sec.number("W_over_U") * p.U : sec.number("W", 0.0);
    if (sec.has("delta")) {
        const YAML::Node d = sec.get("delta");
        if (d.IsScalar() && d.Scalar() == "self_consistent") {
            s.delta_self_consistent = true;
        } else {
            p.delta = scalar_number(sec.ctx(), d, "delta");
        }
    } else {
        s.delta_self_consistent = true;
    }
    if (auto init = sec.opt_text("initial")) {
        static const std::map<std::string, ChooserInitial> names{{"zero_state", ChooserInitial::zero_state},
                                                                 {"Q0", ChooserInitial::q0},
                                                                 {"R0", ChooserInitial::r0},
                                                                 {"Kproj", ChooserInitial::kproj}};
        const auto it = names.find(*init);
        if (it == names.end()) {
            sec.ctx().fail(sec.get("initial").Mark(),
                           "chooser.initial must be one of zero_state, Q0, R0, Kproj; got '" + *init + "'");
        }
        s.initial = it->second;
    }
    sec.finish();
    return s;
}

std::vector<double> read_band(Section& site) {
    const YAML::Node b = site.get("band");
    if (b.IsSequence()) return site.number_list(b, "band");
    Section band(site.ctx(), b, site.name() + ".band");
    const double center = band.number("center", 0.0);
    const double half = band.number("half_width");
    const std::size_t levels = band.count_required("levels", 0);
    band.finish();
    std::vector<double> out;
    for (std::size_t i = 0; i < levels; ++i) {
        const double f = levels == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(levels - 1);
        out.push_back(center - half + 2.0 * half * f);
    }
    return out;
}

TelegraphScenario read_telegraph(Section& top) {
    Section sec = top.child("telegraph");
    TelegraphScenario s;
    s.params.hop = sec.number("hop", 0.0);
    s.initial_site = static_cast<int>(sec.count("initial_site", 1, 1));
    if (s.initial_site > 2) sec.ctx().fail(sec.get("initial_site").Mark(), "telegraph.initial_site must be 1 or 2");
    const YAML::Node sites = sec.get("sites");
    if (!sites.IsSequence() || sites.size() != 2) {
        sec.ctx().fail(sites.Mark(), "telegraph.sites must be a list of exactly two site mappings");
    }
    for (std::size_t i = 0; i < 2; ++i) {
        Section site(sec.ctx(), sites[i], "telegraph.sites[" + std::to_string(i) + "]");
        auto& t = s.params.sites[i];
        t.E_g = site.number("E_g", 0.0);
        t.E_w = site.number("E_w", 0.0);
        t.V_loc = site.number("V_loc", 0.0);
        t.eps_grav = site.number("eps_grav", 0.0);
        t.V_gw = site.number("V_gw", 0.0);
        t.band = site.has("band") ? read_band(site) : std::vector<double>{};
        site.finish();
    }
    sec.finish();
    return s;
}

GravononScenario read_gravonon(Section& top) {
    Section sec = top.child("gravonon");
    GravononScenario s;
    auto& b = s.basis;
    const bool has_positions = sec.has("positions");
    const bool has_chain = sec.has("chain");
    if (has_positions == has_chain) sec.ctx().fail(sec.mark(), "gravonon needs exactly one of 'positions' or 'chain'");
    if (has_positions) {
        b.positions = sec.numbers("positions");
    } else {
        Section chain = sec.child("chain");
        const std::size_t n = chain.count_required("sites", 1);
        const double spacing = chain.number("spacing");
        const double start = chain.number("start", 0.0);
        chain.finish();
        for (std::size_t i = 0; i < n; ++i) b.positions.push_back(start + spacing * static_cast<double>(i));
    }
    b.envelope_width = sec.number("sigma");
    const YAML::Node vg = sec.get("vgrav");
    if (vg.IsSequence()) {
        b.vgrav_values = sec.number_list(vg, "vgrav");
    } else {
        b.vgrav_values.assign(b.positions.size(), scalar_number(sec.ctx(), vg, "vgrav"));
    }
    b.theta = sec.number("theta", 1.0);
    if (sec.has("from_graviton")) {
        if (sec.has("m_g") || sec.has("v_o")) {
            sec.ctx().fail(sec.mark(), "gravonon: 'from_graviton' replaces 'm_g' and 'v_o'; give one form only");
        }
        Section g = sec.child("from_graviton");
        const double k = g.number("k");
        const double c = g.number("c", 137.036);
        g.finish();
        const auto gm = dimensional::gravonon_mass(k, c);
        b.m_g = gm.m_g;
        b.v_o = gm.v_o;
    } else {
        b.m_g = sec.number("m_g");
        b.v_o = sec.number("v_o", 0.0);
    }
    sec.finish();
    return s;
}

Eigen::VectorXcd read_field(Section& sec, const std::string& key, const meanfield::GridState& st,
                            const Eigen::VectorXd& newton) {
    const auto n = static_cast<Eigen::Index>(st.grid.n_points);
    if (!sec.has(key)) return Eigen::VectorXcd::Zero(n);
    const YAML::Node node = sec.get(key);
    const Context& ctx = sec.ctx();
    if (node.IsScalar()) {
        if (node.Scalar() == "zero") return Eigen::VectorXcd::Zero(n);
        if (node.Scalar() == "ground_state") {
            // Lowest eigenvector of the discretized Hamiltonian in the static Newtonian well.
            const Eigen::VectorXd v = -newton;
            const double mass = key == "psi" ? st.params.m : st.params.m_g;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(meanfield::grid_hamiltonian(st.grid, v, mass));
            Eigen::VectorXd g = es.eigenvectors().col(0);
            if (g.sum() < 0.0) g = -g;
            Eigen::VectorXcd f = g.cast<std::complex<double>>();
            return f / std::sqrt(meanfield::norm(st.grid, f));
        }
        ctx.fail(node.Mark(), "meanfield." + key + " must be zero, ground_state, or a mapping with gaussian or file");
    }
    Section f(ctx, node, "meanfield." + key);
    Eigen::VectorXcd out;
    if (f.has("gaussian")) {
        Section g = f.child("gaussian");
        const double x0 = g.number("x0", 0.0);
        const double sigma = g.number("sigma");
        const double p0 = g.number("p0", 0.0);
        const double norm = g.number("norm", 1.0);
        g.finish();
        out = meanfield::gaussian_packet(st.grid, x0, sigma, p0) * std::sqrt(norm);
    } else if (f.has("file")) {
        out = meanfield::load_field_csv(ctx.base_dir / f.text("file"), st.grid);
    } else {
        ctx.fail(node.Mark(), "meanfield." + key + " mapping needs 'gaussian' or 'file'");
    }
    f.finish();
    return out;
}

MeanFieldScenario read_meanfield(Section& top) {
    Section sec = top.child("meanfield");
    MeanFieldScenario s;
    auto& st = s.state;
    {
        Section g = sec.child("grid");
        st.grid.x_min = g.number("x_min");
        st.grid.x_max = g.number("x_max");
        st.grid.n_points = g.count_required("points", 16);
        g.finish();
    }
    auto& p = st.params;
    p.m = sec.number("m", 1.0);
    p.m_g = sec.number("m_g", 1.0);
    p.g_newton = sec.number("g_newton", 0.0);
    p.d_spatial = sec.number("d_spatial", 3.0);
    p.v_o = sec.number("v_o", 0.0);
    p.k = sec.number("k", 0.0);
    p.c = sec.number("c", 137.036);
    p.softening = sec.opt_number("softening");
    p.source_position = sec.number("source_position", 0.0);
    p.graviton_term = sec.flag("graviton_term", false);
    try {
        st.grid.validate();
        p.validate();
    } catch (const ParameterError& e) {
        sec.ctx().fail(sec.mark(), e.what());
    }
    if (sec.has("h00")) {
        Section h = sec.child("h00");
        st.h00 = meanfield::load_profile_csv(sec.ctx().base_dir / h.text("file"), st.grid);
        h.finish();
    }
    const Eigen::VectorXd newton = meanfield::newton_profile(st.grid, p);
    st.psi = read_field(sec, "psi", st, newton);
    st.zeta = read_field(sec, "zeta", st, newton);
    s.dt = sec.number("dt");
    s.steps = sec.count_required("steps", 0);
    s.sample_every = sec.count("sample_every", 1, 1);
    sec.finish();
    return s;
}

DimensionalScenario read_dimensional(Section& top) {
    DimensionalScenario s;
    if (!top.has("dimensional")) return s;
    Section sec = top.child("dimensional");
    s.constants.G = sec.number("G", s.constants.G);
    s.constants.c = sec.number("c", s.constants.c);
    if (sec.has("radii")) s.radii = sec.numbers("radii");
    s.probe_mass = sec.number("probe_mass", s.probe_mass);
    s.probe_distance = sec.number("probe_distance", s.probe_distance);
    s.compactification = sec.number("a", s.compactification);
    s.kappa = sec.number("kappa", s.kappa);
    s.box_length = sec.number("L", s.box_length);
    s.adparticle_mass = sec.number("M", s.adparticle_mass);
    s.graviton_k = sec.number("graviton_k", s.graviton_k);
    s.energy_spread_ev = sec.number("energy_spread_ev", s.energy_spread_ev);
    s.geometry_spread = sec.number("geometry_spread", s.geometry_spread);
    s.n_sites = sec.number("n_sites", s.n_sites);
    s.geometry_resolution = sec.number("geometry_resolution", s.geometry_resolution);
    sec.finish();
    return s;
}

SweepScenario read_sweep(Section& top) {
    Section sec = top.child("sweep");
    SweepScenario s;
    const std::string model = sec.text("model");
    if (model == "chooser") {
        s.model = SweepModel::chooser;
    } else if (model == "telegraph") {
        s.model = SweepModel::telegraph;
    } else {
        sec.ctx().fail(sec.get("model").Mark(), "sweep.model must be chooser or telegraph, got '" + model + "'");
    }
    s.max_points = sec.count("max_points", s.max_points, 1);
    if (sec.has("vary")) {
        const YAML::Node vary = sec.get("vary");
        if (vary.IsMap()) {
            const auto& allowed = sweep_keys(s.model);
            std::set<std::string> seen;
            for (const auto& kv : vary) {
                const auto key = kv.first.as<std::string>();
                if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                    sec.ctx().fail(kv.first.Mark(), "unknown sweep key '" + key + "' for model " + model);
                }
                if (!seen.insert(key).second) sec.ctx().fail(kv.first.Mark(), "duplicate sweep key '" + key + "'");
                s.vary.emplace_back(key, sec.number_list(kv.second, key));
            }
        } else if (!vary.IsNull()) {
            sec.ctx().fail(vary.Mark(), "sweep.vary must be a mapping of key: [values]");
        }
    }
    sec.finish();
    return s;
}

}  // namespace

void ChooserScenario::finalize() {
    if (delta_self_consistent) params.delta = pi * std::abs(params.U);
    params.validate();
}

const std::vector<std::string>& sweep_keys(SweepModel model) {
    static const std::vector<std::string> chooser{"V", "W", "U", "N", "delta", "alpha", "W_over_U", "V_over_U"};
    static const std::vector<std::string> telegraph{"hop", "V_loc", "V_gw", "E_w", "eps_grav", "band_half_width"};
    return model == SweepModel::chooser ? chooser : telegraph;
}

void apply_sweep_values(ChooserScenario& s, const std::vector<std::pair<std::string, double>>& values) {
    auto& p = s.params;
    for (const auto& [key, v] : values) {
        if (key == "V") {
            p.V = v;
        } else if (key == "W") {
            p.W = v;
        } else if (key == "U") {
            p.U = v;
        } else if (key == "N") {
            if (v < 0.0 || v != std::floor(v)) throw ParameterError("sweep: N must be a non-negative integer");
            p.N = static_cast<std::size_t>(v);
        } else if (key == "delta") {
            p.delta = v;
            s.delta_self_consistent = false;
        } else if (key == "alpha") {
            p.alpha = v;
        }
    }
    for (const auto& [key, v] : values) {
        if (key == "W_over_U") p.W = v * p.U;
        if (key == "V_over_U") p.V = v * p.U;
    }
    s.finalize();
}

void apply_sweep_values(TelegraphScenario& s, const std::vector<std::pair<std::string, double>>& values) {
    for (const auto& [key, v] : values) {
        if (key == "hop") {
            s.params.hop = v;
            continue;
        }
        for (auto& site : s.params.sites) {
            if (key == "V_loc") {
                site.V_loc = v;
            } else if (key == "V_gw") {
                site.V_gw = v;
            } else if (key == "E_w") {
                site.E_w = v;
            } else if (key == "eps_grav") {
                site.eps_grav = v;
            } else if (key == "band_half_width" && !site.band.empty()) {
                const std::size_t n = site.band.size();
                const double center = 0.5 * (site.band.front() + site.band.back());
                for (std::size_t i = 0; i < n; ++i) {
                    const double f = n == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(n - 1);
                    site.band[i] = center - v + 2.0 * v * f;
                }
            }
        }
    }
    s.params.validate();
}

ScenarioConfig parse_config(const std::string& text, const std::string& origin, const std::filesystem::path& base_dir) {
    const Context ctx{origin, base_dir};
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::ParserException& e) {
        ctx.fail(e.mark, "YAML syntax error: " + e.msg);
    }
    if (!root || root.IsNull()) throw ConfigError(origin + ": empty configuration");
    Section top(ctx, root, "<top>");
    ScenarioConfig cfg;
    cfg.scenario = top.text("scenario");
    cfg.output = top.opt_text("output");

    static const std::map<std::string, std::set<std::string>> sections{
        {"chooser", {"chooser", "sampling"}},
        {"telegraph", {"telegraph", "sampling"}},
        {"gravonon-modes", {"gravonon"}},
        {"meanfield", {"meanfield"}},
        {"dimensional", {"dimensional"}},
        {"sweep", {"sweep", "chooser", "telegraph", "sampling"}},
    };
    const auto it = sections.find(cfg.scenario);
    if (it == sections.end()) {
        ctx.fail(top.get("scenario").Mark(),
                 "unknown scenario '" + cfg.scenario +
                     "' (expected chooser, telegraph, gravonon-modes, meanfield, dimensional or sweep)");
    }
    for (const char* known : {"chooser", "telegraph", "gravonon", "meanfield", "dimensional", "sweep", "sampling"}) {
        if (!it->second.count(known) && top.has(known)) {
            ctx.fail(top.get(known).Mark(), "section '" + std::string(known) + "' is not used by scenario '" +
                                                cfg.scenario + "'");
        }
    }

    try {
        if (cfg.scenario == "chooser") {
            auto s = read_chooser(top);
            s.sampling = read_sampling(top);
            s.finalize();
            cfg.body = std::move(s);
        } else if (cfg.scenario == "telegraph") {
            auto s = read_telegraph(top);
            s.sampling = read_sampling(top);
            s.params.validate();
            cfg.body = std::move(s);
        } else if (cfg.scenario == "gravonon-modes") {
            auto s = read_gravonon(top);
            s.basis.validate();
            cfg.body = std::move(s);
        } else if (cfg.scenario == "meanfield") {
            cfg.body = read_meanfield(top);
        } else if (cfg.scenario == "dimensional") {
            auto s = read_dimensional(top);
            s.constants.validate();
            cfg.body = std::move(s);
        } else {
            auto s = read_sweep(top);
            const Sampling sampling = read_sampling(top);
            const char* other = s.model == SweepModel::chooser ? "telegraph" : "chooser";
            if (top.has(other)) {
                ctx.fail(top.get(other).Mark(), "section '" + std::string(other) + "' is not used by this sweep model");
            }
            if (s.model == SweepModel::chooser) {
                s.chooser = read_chooser(top);
                s.chooser.sampling = sampling;
                s.chooser.finalize();
            } else {
                s.telegraph = read_telegraph(top);
                s.telegraph.sampling = sampling;
                s.telegraph.params.validate();
            }
            cfg.body = std::move(s);
        }
    } catch (const ParameterError& e) {
        throw ConfigError(origin + ": " + e.what());
    } catch (const DimensionError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    top.finish();
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.string(), path.parent_path());
}

}  // namespace fockdyn::scenario
