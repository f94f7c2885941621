#include "gf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "gf/blowup.hpp"
#include "gf/cmfields.hpp"
#include "gf/drinfeld.hpp"
#include "gf/errors.hpp"
#include "gf/ffpoly.hpp"

namespace gf
{

using nlohmann::ordered_json;

// --- RunConfig ----------------------------------------------------------------------

namespace
{

long parse_long(const std::string &key, const std::string &v)
{
    try {
        std::size_t used = 0;
        long x = std::stol(v, &used);
        if (used != v.size()) {
            throw std::invalid_argument(v);
        }
        return x;
    } catch (const std::exception &) {
        throw SyntaxError("config: " + key + " expects an integer, got '" + v + "'", 0);
    }
}

bool parse_bool(const std::string &key, const std::string &v)
{
    if (v == "true" || v == "1" || v == "yes") {
        return true;
    }
    if (v == "false" || v == "0" || v == "no") {
        return false;
    }
    throw SyntaxError("config: " + key + " expects true or false, got '" + v + "'", 0);
}

std::string trim_ws(const std::string &s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) {
        return "";
    }
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

std::vector<std::string> RunConfig::keys() const
{
    return {"precision", "extra_degree", "seed", "format", "output", "max_steps",
            "unit_order", "max_field_degree", "include_infinity", "twist"};
}

std::string RunConfig::to_kv() const
{
    std::ostringstream os;
    os << "precision=" << precision << "\n";
    os << "extra_degree=" << extra_degree << "\n";
    os << "seed=" << seed << "\n";
    os << "format=" << format << "\n";
    os << "output=" << output << "\n";
    os << "max_steps=" << max_steps << "\n";
    os << "unit_order=" << unit_order << "\n";
    os << "max_field_degree=" << max_field_degree << "\n";
    os << "include_infinity=" << (include_infinity ? "true" : "false") << "\n";
    os << "twist=" << twist << "\n";
    return os.str();
}

void RunConfig::set(const std::string &key, const std::string &value)
{
    if (key == "precision") {
        precision = parse_long(key, value);
        if (precision < 64 || precision > (1L << 20)) {
            throw SyntaxError("config: precision must be in [64, 2^20] bits", 0);
        }
    } else if (key == "extra_degree") {
        extra_degree = static_cast<int>(parse_long(key, value));
        if (extra_degree < 0 || extra_degree > 64) {
            throw SyntaxError("config: extra_degree must be in [0, 64]", 0);
        }
    } else if (key == "seed") {
        const long s = parse_long(key, value);
        if (s < 0) {
            throw SyntaxError("config: seed must be nonnegative", 0);
        }
        seed = static_cast<std::uint64_t>(s);
    } else if (key == "format") {
        if (value != "json" && value != "csv" && value != "text") {
            throw SyntaxError("config: format must be json, csv or text", 0);
        }
        format = value;
    } else if (key == "output") {
        output = value;
    } else if (key == "max_steps") {
        const long s = parse_long(key, value);
        if (s < 0) {
            throw SyntaxError("config: max_steps must be nonnegative", 0);
        }
        max_steps = static_cast<std::size_t>(s);
    } else if (key == "unit_order") {
        if (value != "maximal" && value != "pell") {
            throw SyntaxError("config: unit_order must be maximal or pell", 0);
        }
        unit_order = value;
    } else if (key == "max_field_degree") {
        max_field_degree = static_cast<int>(parse_long(key, value));
    } else if (key == "include_infinity") {
        include_infinity = parse_bool(key, value);
    } else if (key == "twist") {
        const long t = parse_long(key, value);
        if (t < 0) {
            throw SyntaxError("config: twist must be nonnegative", 0);
        }
        twist = static_cast<std::uint64_t>(t);
    } else {
        throw SyntaxError("config: unknown key '" + key + "'", 0);
    }
}

void RunConfig::load_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw SyntaxError("config: cannot open " + path, 0);
    }
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim_ws(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw SyntaxError("config: expected key=value, got '" + line + "'", 0);
        }
        set(trim_ws(line.substr(0, eq)), trim_ws(line.substr(eq + 1)));
    }
}

RunConfig default_config()
{
    RunConfig c;
    if (const char *env = std::getenv("GF_PRECISION")) {
        c.set("precision", env);
    }
    return c;
}

// --- helpers --------------------------------------------------------------------------

namespace
{

std::string str(const BigInt &x)
{
    return x.get_str();
}

std::string str(long x)
{
    return std::to_string(x);
}

std::string sci(double x)
{
    if (x == 0.0) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

ordered_json complex_json(const Complex &z, long digits = 0)
{
    ordered_json j;
    j["re"] = z.real().to_decimal(digits);
    j["im"] = z.imag().to_decimal(digits);
    return j;
}

FqConfig field_for(const BigInt &q)
{
    if (q < 2 || q > BigInt(1L << 20)) {
        throw DomainError("q must be a prime power in [2, 2^20]");
    }
    unsigned long n = q.get_ui();
    unsigned long p = 2;
    while (n % p != 0) {
        ++p;
    }
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) {
        throw DomainError("q = " + q.get_str() + " is not a prime power");
    }
    return e == 1 ? FqConfig::prime(static_cast<std::uint32_t>(p)) : FqConfig::make(static_cast<std::uint32_t>(p), e);
}

std::pair<long, long> parse_range(const std::string &text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw SyntaxError("range must look like a..b", 0);
    }
    try {
        std::size_t u1 = 0, u2 = 0;
        const std::string a = text.substr(0, dots);
        const std::string b = text.substr(dots + 2);
        long lo = std::stol(a, &u1);
        long hi = std::stol(b, &u2);
        if (u1 != a.size() || u2 != b.size()) {
            throw std::invalid_argument(text);
        }
        if (hi < lo) {
            throw SyntaxError("range " + text + " is empty", 0);
        }
        return {lo, hi};
    } catch (const SyntaxError &) {
        throw;
    } catch (const std::exception &) {
        throw SyntaxError("range must look like a..b with integers, got '" + text + "'", 0);
    }
}

std::vector<BigInt> parse_int_list(const std::string &text)
{
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    std::size_t offset = 0;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim_ws(item);
        BigInt v;
        if (t.empty() || v.set_str(t, 10) != 0) {
            throw SyntaxError("expected a comma-separated integer list", offset);
        }
        out.push_back(v);
        offset += item.size() + 1;
    }
    if (out.empty()) {
        throw SyntaxError("empty coefficient list", 0);
    }
    return out;
}

Complex parse_tau(const std::string &text, Precision prec)
{
    const std::string t = trim_ws(text);
    if (t.rfind("sqrt(-", 0) == 0 && t.back() == ')') {
        const std::string d = t.substr(6, t.size() - 7);
        long v = 0;
        try {
            std::size_t used = 0;
            v = std::stol(d, &used);
            if (used != d.size()) {
                throw std::invalid_argument(d);
            }
        } catch (const std::exception &) {
            throw SyntaxError("expected sqrt(-d) with an integer d", 6);
        }
        if (v <= 0) {
            throw DomainError("sqrt(-d) needs d > 0");
        }
        return Complex(Real(0L, prec), sqrt(Real(v, prec)));
    }
    const auto comma = t.find(',');
    if (comma == std::string::npos) {
        throw SyntaxError("tau must be 're,im' or 'sqrt(-d)'", 0);
    }
    try {
        return Complex(Real(trim_ws(t.substr(0, comma)), prec), Real(trim_ws(t.substr(comma + 1)), prec));
    } catch (const DomainError &e) {
        throw SyntaxError(e.what(), 0);
    }
}

// --- report builders -------------------------------------------------------------------

ordered_json relation_json(const RelationSearch &rs, const std::string &var)
{
    ordered_json j;
    j["relation_found"] = rs.relation.has_value();
    if (rs.relation) {
        j["candidate_polynomial"] = format_integer_poly(rs.relation->coefficients, var);
        j["residual"] = rs.relation->residual.to_decimal(6);
        j["relation_degree"] = str(static_cast<long>(rs.relation->degree()));
    } else {
        const RelationAttempt *best = nullptr;
        for (const auto &a : rs.attempts) {
            if (!a.candidate.empty() && (!best || a.residual < best->residual)) {
                best = &a;
            }
        }
        j["candidate_polynomial"] = best ? ordered_json(format_integer_poly(best->candidate, var)) : ordered_json();
        j["residual"] = best ? ordered_json(best->residual.to_decimal(6)) : ordered_json();
        j["relation_degree"] = ordered_json();
    }
    ordered_json attempts = ordered_json::array();
    for (const auto &a : rs.attempts) {
        ordered_json x;
        x["degree"] = str(static_cast<long>(a.degree));
        x["candidate"] = a.candidate.empty() ? ordered_json() : ordered_json(format_integer_poly(a.candidate, var));
        x["residual"] = a.residual.to_decimal(6);
        x["accepted"] = a.accepted;
        x["reason"] = a.reason;
        attempts.push_back(std::move(x));
    }
    j["attempts"] = std::move(attempts);
    return j;
}

ordered_json unit_json(const QuadraticUnit &u)
{
    ordered_json j;
    j["x"] = str(u.x);
    j["y"] = str(u.y);
    j["z"] = str(u.z);
    j["text"] = u.to_string();
    j["norm"] = str(u.norm());
    j["order"] = u.order == UnitOrder::Maximal ? "maximal" : "pell";
    return j;
}

ordered_json generator_json(const GeneratorCandidate &g, Precision prec)
{
    ordered_json j;
    j["command"] = "gen";
    j["formula"] = formula_tag(g.formula);
    j["d"] = str(static_cast<long>(g.field.d));
    j["D"] = str(static_cast<long>(g.field.discriminant));
    j["h"] = g.field.h ? ordered_json(str(static_cast<long>(*g.field.h))) : ordered_json();
    j["epsilon"] = g.field.epsilon ? unit_json(*g.field.epsilon) : ordered_json();
    j["regulator"] = g.field.regulator ? ordered_json(g.field.regulator->to_decimal()) : ordered_json();
    j["theta"] = g.theta;
    j["precision_bits"] = str(prec.bits);
    j["value"] = complex_json(g.value);
    j["abs_value"] = abs(g.value).to_decimal();
    j["max_degree"] = str(static_cast<long>(g.max_degree));
    const ordered_json rel = relation_json(g.algebraicity, "x");
    for (auto it = rel.begin(); it != rel.end(); ++it) {
        j[it.key()] = it.value();
    }
    j["warning"] = g.warning ? ordered_json(*g.warning) : ordered_json();
    return j;
}

ordered_json point_json(const Point &p)
{
    return ordered_json::array({p.x.get_str(), p.y.get_str()});
}

ordered_json nonrational_json(const NonRationalPoints &n)
{
    ordered_json j;
    j["x_poly"] = n.x_poly.to_string("x");
    j["y_poly"] = BiPoly::from_y_coefficients(n.y_poly).to_string();
    j["degree_bound"] = str(static_cast<long>(n.degree_bound));
    return j;
}

ordered_json resolve_json(const ResolutionReport &r)
{
    ordered_json j;
    j["command"] = "resolve";
    j["curve"] = r.curve.to_string();
    j["p"] = r.curve.p ? ordered_json(std::to_string(*r.curve.p)) : ordered_json();
    ordered_json steps = ordered_json::array();
    for (const auto &s : r.steps) {
        ordered_json x;
        x["chart"] = s.chart;
        x["center"] = point_json(s.center);
        x["multiplicity"] = str(static_cast<long>(s.multiplicity));
        x["curve"] = s.before.to_string();
        x["chart1"] = s.chart1.to_string();
        x["chart2"] = s.chart2.to_string();
        x["delta_before"] = str(s.delta_before);
        x["delta_after"] = str(s.delta_after);
        x["proxy_before"] = str(s.proxy_before);
        x["proxy_after"] = str(s.proxy_after);
        steps.push_back(std::move(x));
    }
    j["steps"] = std::move(steps);
    j["count"] = str(static_cast<long>(r.count));
    j["status"] = to_string(r.status);
    j["multiplicity_prediction"] = str(static_cast<long>(r.multiplicity_prediction));
    j["prediction_matches"] = r.multiplicity_prediction == r.count;
    ordered_json tower = ordered_json::array();
    for (const auto &t : r.tower) {
        tower.push_back(str(t));
    }
    j["tower"] = std::move(tower);
    j["q"] = r.field_size ? ordered_json(str(*r.field_size)) : ordered_json();
    ordered_json certs = ordered_json::array();
    for (const auto &c : r.certificates) {
        ordered_json x;
        x["chart"] = c.chart;
        x["curve"] = c.curve.to_string();
        x["locus"] = c.locus;
        x["smooth"] = c.smooth;
        certs.push_back(std::move(x));
    }
    j["certificates"] = std::move(certs);
    ordered_json un = ordered_json::array();
    for (const auto &n : r.unsupported) {
        un.push_back(nonrational_json(n));
    }
    j["unsupported"] = std::move(un);
    j["diagnostic"] = r.diagnostic;
    return j;
}

// --- output --------------------------------------------------------------------------

void flatten(const ordered_json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (j.is_array()) {
        out.emplace_back(prefix, j.dump());
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else if (j.is_null()) {
        out.emplace_back(prefix, "");
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

class Emitter
{
public:
    Emitter(const RunConfig &cfg, std::ostream &out, bool stream) : m_cfg(cfg), m_out(out), m_stream(stream) {}

    void emit(const ordered_json &j)
    {
        if (m_cfg.format == "json") {
            m_out << (m_stream ? j.dump() : j.dump(2)) << "\n";
        } else {
            std::vector<std::pair<std::string, std::string>> kv;
            flatten(j, "", kv);
            if (m_cfg.format == "csv") {
                if (!m_header_done) {
                    for (std::size_t i = 0; i < kv.size(); ++i) {
                        m_out << (i ? "," : "") << csv_field(kv[i].first);
                    }
                    m_out << "\n";
                    m_header_done = true;
                }
                for (std::size_t i = 0; i < kv.size(); ++i) {
                    m_out << (i ? "," : "") << csv_field(kv[i].second);
                }
                m_out << "\n";
            } else {
                if (m_count > 0) {
                    m_out << "\n";
                }
                for (const auto &[k, v] : kv) {
                    m_out << k << ": " << v << "\n";
                }
            }
        }
        ++m_count;
        m_out.flush();
    }

    void mark_header_done()
    {
        m_header_done = true;
    }

private:
    const RunConfig &m_cfg;
    std::ostream &m_out;
    bool m_stream;
    bool m_header_done = false;
    std::size_t m_count = 0;
};

// --- commands ----------------------------------------------------------------------------

struct Inputs {
    std::string q, g, a, place, D, range, d, tau, formula, coeffs, d_range, curve, p, order;
    bool fundamental_only = false;
};

GeneratorOptions generator_options(const RunConfig &cfg)
{
    GeneratorOptions o;
    o.precision = Precision{cfg.precision};
    o.extra_degree = cfg.extra_degree;
    o.order = cfg.unit_order == "pell" ? UnitOrder::Pell : UnitOrder::Maximal;
    return o;
}

BigInt parse_big(const std::string &name, const std::string &text)
{
    BigInt v;
    if (text.empty() || v.set_str(trim_ws(text), 10) != 0) {
        throw SyntaxError("--" + name + " expects an integer, got '" + text + "'", 0);
    }
    return v;
}

long parse_small(const std::string &name, const std::string &text)
{
    const BigInt v = parse_big(name, text);
    if (!v.fits_slong_p() || abs(v) > BigInt(1L << 40)) {
        throw DomainError("--" + name + " is out of range");
    }
    return v.get_si();
}

void cmd_residue(const Inputs &in, const RunConfig &, Emitter &em)
{
    const FqConfig f = field_for(parse_big("q", in.q));
    const FqPoly g = parse_fqpoly(in.g, f);
    ordered_json j;
    j["command"] = "residue";
    j["q"] = str(f.q());
    j["modulus"] = f.modulus_string();
    j["g"] = g.to_string();
    j["residue_count"] = str(residue_count(g));
    em.emit(j);
}

void cmd_torsion(const Inputs &in, const RunConfig &cfg, Emitter &em)
{
    const FqConfig f = field_for(parse_big("q", in.q));
    std::optional<TwistSpec> twist;
    if (cfg.twist != 0) {
        twist = TwistSpec{cfg.twist};
        twist->validate(f.p());
    }
    const DrinfeldModule mod = DrinfeldModule::carlitz(f, twist);
    const FqPoly a = parse_fqpoly(in.a, f);
    std::optional<FqPoly> place;
    if (!in.place.empty()) {
        place = parse_fqpoly(in.place, f);
    }
    TorsionOptions opts;
    opts.max_field_degree = cfg.max_field_degree;
    opts.seed = cfg.seed;
    const TorsionSet ts = torsion(a, mod, place, opts);

    ordered_json j;
    j["command"] = "torsion";
    j["q"] = str(f.q());
    j["modulus"] = f.modulus_string();
    j["twist"] = std::to_string(mod.twist().exponent);
    j["rho_T"] = mod.rho_T().to_string();
    j["a"] = a.to_string();
    j["rho_a"] = mod.rho(a).to_string();
    j["place"] = place ? ordered_json(place->monic().to_string()) : ordered_json();
    j["mode"] = ts.symbolic ? "symbolic" : "specialized";
    j["field"] = ts.field_description();
    j["extension_degree"] = str(static_cast<long>(ts.extension_degree));
    j["size"] = str(static_cast<long>(ts.size()));
    j["expected"] = str(ts.expected_cardinality);
    j["complete"] = ts.complete;
    j["separable"] = ts.separable;
    ordered_json roots = ordered_json::array();
    if (ts.symbolic) {
        for (const auto &r : ts.symbolic_roots) {
            roots.push_back(r.to_string());
        }
    } else {
        for (const auto &r : ts.roots) {
            roots.push_back(r.to_string());
        }
    }
    j["roots"] = std::move(roots);
    ordered_json cyc;
    if (is_irreducible(a) && ts.complete) {
        const CyclicReport cr = check_cyclic_module(ts, a, mod);
        cyc["checked"] = true;
        cyc["cyclic"] = cr.cyclic;
        cyc["unit_orbit_size"] = str(static_cast<long>(cr.unit_orbit_size));
        cyc["generator"] = cr.generator;
        cyc["detail"] = cr.detail;
    } else {
        cyc["checked"] = false;
        cyc["cyclic"] = ordered_json();
        cyc["unit_orbit_size"] = ordered_json();
        cyc["generator"] = ordered_json();
        cyc["detail"] = is_irreducible(a) ? "torsion set incomplete" : "a is not irreducible";
    }
    j["cyclic_check"] = std::move(cyc);
    em.emit(j);
}

ordered_json classnum_record(std::int64_t D)
{
    const ClassNumber cn = class_number(D);
    ordered_json j;
    j["command"] = "classnum";
    j["D"] = str(static_cast<long>(D));
    j["fundamental"] = is_fundamental_discriminant(D);
    j["h"] = str(static_cast<long>(cn.h));
    ordered_json forms = ordered_json::array();
    for (const auto &f : cn.forms) {
        forms.push_back(ordered_json::array({str(f.a), str(f.b), str(f.c)}));
    }
    j["forms"] = std::move(forms);
    return j;
}

void cmd_classnum(const Inputs &in, const RunConfig &, Emitter &em)
{
    if (!in.range.empty()) {
        const auto [lo, hi] = parse_range(in.range);
        if (hi >= 0 || lo < -(1L << 24)) {
            throw DomainError("classnum range must lie in [-2^24, -1]");
        }
        for (long D = hi; D >= lo; --D) {
            const long r = ((D % 4) + 4) % 4;
            if (r != 0 && r != 1) {
                continue;
            }
            if (in.fundamental_only && !is_fundamental_discriminant(D)) {
                continue;
            }
            em.emit(classnum_record(D));
        }
        return;
    }
    if (in.D.empty()) {
        throw SyntaxError("classnum needs --D or --range", 0);
    }
    em.emit(classnum_record(parse_small("D", in.D)));
}

void cmd_unit(const Inputs &in, const RunConfig &cfg, Emitter &em)
{
    const long d = parse_small("d", in.d);
    const UnitOrder order = cfg.unit_order == "pell" ? UnitOrder::Pell : UnitOrder::Maximal;
    const QuadraticUnit u = fundamental_unit(d, order);
    ordered_json j;
    j["command"] = "unit";
    j["d"] = str(d);
    j["epsilon"] = unit_json(u);
    j["regulator"] = u.log(Precision{cfg.precision}).to_decimal();
    em.emit(j);
}

void cmd_j(const Inputs &in, const RunConfig &cfg, Emitter &em)
{
    const Precision prec{cfg.precision};
    const Complex tau = parse_tau(in.tau, prec);
    const JValue v = j_invariant(tau, prec);
    ordered_json j;
    j["command"] = "j";
    j["tau"] = complex_json(tau);
    j["precision_bits"] = str(prec.bits);
    j["j"] = complex_json(v.value);
    j["terms"] = str(static_cast<long>(v.terms));
    j["tail_log2"] = str(static_cast<long>(std::floor(v.tail_log2)));
    j["warning"] = v.warning ? ordered_json(*v.warning) : ordered_json();
    em.emit(j);
}

void cmd_hcp(const Inputs &in, const RunConfig &, Emitter &em)
{
    const long D = parse_small("D", in.D);
    const ClassPolynomial hp = hilbert_class_polynomial(D);
    ordered_json j;
    j["command"] = "hcp";
    j["D"] = str(D);
    j["h"] = str(static_cast<long>(hp.forms.size()));
    j["polynomial"] = format_integer_poly(hp.coefficients, "X");
    ordered_json coeffs = ordered_json::array();
    for (const auto &c : hp.coefficients) {
        coeffs.push_back(str(c));
    }
    j["coefficients_ascending"] = std::move(coeffs);
    j["precision_bits"] = str(hp.precision.bits);
    j["max_rounding_distance"] = sci(hp.max_rounding_distance);
    em.emit(j);
}

Formula parse_formula(const std::string &f)
{
    if (f == "4.0" || f == "cm") {
        return Formula::CmJ;
    }
    if (f == "4.3" || f == "exp") {
        return Formula::Exponential;
    }
    if (f == "4.4" || f == "conj") {
        return Formula::Conjecture;
    }
    throw SyntaxError("--formula must be one of 4.0, 4.3, 4.4 (or cm, exp, conj)", 0);
}

ordered_json gen_record(Formula formula, long d, const std::vector<BigInt> &coeffs, const RunConfig &cfg)
{
    const GeneratorOptions opts = generator_options(cfg);
    GeneratorCandidate g = formula == Formula::CmJ           ? cm_generator(d, opts)
                           : formula == Formula::Exponential ? exp_generator(d, opts)
                                                             : conjecture_generator(coeffs, opts);
    ordered_json j = generator_json(g, opts.precision);
    if (formula == Formula::Conjecture) {
        ordered_json c = ordered_json::array();
        for (const auto &x : coeffs) {
            c.push_back(str(x));
        }
        j["p_coeffs"] = std::move(c);
    }
    return j;
}

// Values of "d" already present in a JSON-lines file. Anything after the last
// complete record (an interrupted write) is cut off so the sweep appends cleanly.
std::set<long> completed_d(const std::string &path)
{
    std::set<long> done;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return done;
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    std::size_t keep = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            break;
        }
        try {
            const auto j = ordered_json::parse(text.substr(pos, nl - pos));
            done.insert(std::stol(j.at("d").get<std::string>()));
        } catch (const std::exception &) {
            break;
        }
        pos = nl + 1;
        keep = pos;
    }
    if (keep != text.size()) {
        std::filesystem::resize_file(path, keep);
    }
    return done;
}

void cmd_gen(const Inputs &in, const RunConfig &cfg, Emitter &em, bool resuming, const std::set<long> &done)
{
    const Formula formula = parse_formula(in.formula);
    if (!in.d_range.empty()) {
        if (formula == Formula::Conjecture) {
            throw SyntaxError("--d-range applies to formulas 4.0 and 4.3", 0);
        }
        const auto [lo, hi] = parse_range(in.d_range);
        if (lo < 1 || hi > 100000) {
            throw DomainError("--d-range must lie in [1, 100000]");
        }
        for (long d = lo; d <= hi; ++d) {
            if (!is_squarefree(d) || (formula == Formula::Exponential && d < 2)) {
                continue;
            }
            if (resuming && done.count(d)) {
                continue;
            }
            em.emit(gen_record(formula, d, {}, cfg));
        }
        return;
    }
    if (formula == Formula::Conjecture) {
        if (in.coeffs.empty()) {
            throw SyntaxError("formula 4.4 needs --coeffs (high to low, e.g. 1,0,2)", 0);
        }
        em.emit(gen_record(formula, 0, parse_int_list(in.coeffs), cfg));
        return;
    }
    if (in.d.empty()) {
        throw SyntaxError("gen needs --d or --d-range", 0);
    }
    em.emit(gen_record(formula, parse_small("d", in.d), {}, cfg));
}

void cmd_resolve(const Inputs &in, const RunConfig &cfg, Emitter &em)
{
    std::optional<std::uint32_t> p;
    if (!in.p.empty()) {
        const BigInt pv = parse_big("p", in.p);
        if (pv < 2 || pv > BigInt(1L << 31) || !is_probable_prime(pv)) {
            throw DomainError("--p must be a prime below 2^31");
        }
        p = static_cast<std::uint32_t>(pv.get_ui());
    }
    const PlaneCurve c = parse_curve(in.curve, p);
    ResolveOptions opts;
    opts.max_steps = cfg.max_steps;
    opts.include_infinity = cfg.include_infinity;
    em.emit(resolve_json(resolve(c, opts)));
}

} // namespace

// --- entry point -------------------------------------------------------------------------

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Finite fields, Drinfeld modules, CM fields and curve resolution", "gf"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all", "Expand all help");

    std::string config_path, format, output, precision, seed, extra_degree, max_steps, order, twist, max_field_degree;
    bool infinity = false;
    app.add_option("--config", config_path, "key=value file overriding the defaults");
    app.add_option("--format", format, "json | csv | text");
    app.add_option("--output,-o", output, "write the report to this file");
    app.add_option("--precision", precision, "working precision in bits (default GF_PRECISION or 256)");
    app.add_option("--seed", seed, "seed for randomized factorization");
    app.add_option("--extra-degree", extra_degree, "raise the relation search degree by this much");

    Inputs in;
    auto *residue = app.add_subcommand("residue", "count residues of F_q[T] modulo g");
    residue->add_option("--q", in.q, "field size")->required();
    residue->add_option("--g", in.g, "modulus g in T")->required();

    auto *tors = app.add_subcommand("torsion", "torsion points of the Carlitz module");
    tors->add_option("--q", in.q, "field size")->required();
    tors->add_option("--a", in.a, "a in F_q[T]")->required();
    tors->add_option("--place", in.place, "monic irreducible P; omit for roots in F_q(T)");
    tors->add_option("--twist", twist, "twist exponent e (tau c = c^e tau); default q");
    tors->add_option("--max-field-degree", max_field_degree, "cap on [F : F_p] in the root search");

    auto *classnum = app.add_subcommand("classnum", "class numbers from reduced forms");
    classnum->add_option("--D", in.D, "negative discriminant");
    classnum->add_option("--range", in.range, "a..b, every valid D in the range");
    classnum->add_flag("--fundamental-only", in.fundamental_only, "skip non-fundamental discriminants");

    auto *unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt d)");
    unit->add_option("--d", in.d, "squarefree d >= 2")->required();
    unit->add_option("--order", order, "maximal | pell");

    auto *jcmd = app.add_subcommand("j", "the j-invariant");
    jcmd->add_option("--tau", in.tau, "'re,im' or 'sqrt(-d)'")->required();

    auto *hcp = app.add_subcommand("hcp", "Hilbert class polynomial");
    hcp->add_option("--D", in.D, "negative discriminant")->required();

    auto *gen = app.add_subcommand("gen", "explicit generator candidates with an algebraicity report");
    gen->add_option("--formula", in.formula, "4.0 (cm), 4.3 (exp) or 4.4 (conj)")->required();
    gen->add_option("--d", in.d, "squarefree d");
    gen->add_option("--coeffs", in.coeffs, "p(x) coefficients high to low, for 4.4");
    gen->add_option("--d-range", in.d_range, "a..b sweep, one JSON line per squarefree d");
    gen->add_option("--order", order, "maximal | pell");

    auto *res = app.add_subcommand("resolve", "blow-up resolution of a plane curve");
    res->add_option("--curve", in.curve, "f(x, y)")->required();
    res->add_option("--p", in.p, "prime attached to the report");
    res->add_option("--max-steps", max_steps, "blow-up budget");
    res->add_flag("--infinity", infinity, "also search the points at infinity");

    auto *cfgcmd = app.add_subcommand("config", "print the effective run configuration");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        RunConfig cfg = default_config();
        if (!config_path.empty()) {
            cfg.load_file(config_path);
        }
        const std::pair<const std::string *, const char *> overrides[] = {
            {&format, "format"},       {&output, "output"},     {&precision, "precision"},
            {&seed, "seed"},           {&extra_degree, "extra_degree"}, {&max_steps, "max_steps"},
            {&order, "unit_order"},    {&twist, "twist"},       {&max_field_degree, "max_field_degree"},
        };
        for (const auto &[value, key] : overrides) {
            if (!value->empty()) {
                cfg.set(key, *value);
            }
        }
        if (infinity) {
            cfg.include_infinity = true;
        }

        std::ofstream file;
        bool resuming = false;
        std::set<long> done;
        if (!cfg.output.empty()) {
            const bool sweep = gen->parsed() && !in.d_range.empty() && cfg.format == "json";
            if (sweep) {
                done = completed_d(cfg.output);
                resuming = !done.empty();
            }
            file.open(cfg.output, resuming ? std::ios::app : std::ios::trunc);
            if (!file) {
                throw DomainError("cannot write " + cfg.output);
            }
        }
        std::ostream &sink = cfg.output.empty() ? out : file;
        const bool stream = gen->parsed() && !in.d_range.empty();
        Emitter em(cfg, sink, stream || (classnum->parsed() && !in.range.empty()));

        if (residue->parsed()) {
            cmd_residue(in, cfg, em);
        } else if (tors->parsed()) {
            cmd_torsion(in, cfg, em);
        } else if (classnum->parsed()) {
            cmd_classnum(in, cfg, em);
        } else if (unit->parsed()) {
            cmd_unit(in, cfg, em);
        } else if (jcmd->parsed()) {
            cmd_j(in, cfg, em);
        } else if (hcp->parsed()) {
            cmd_hcp(in, cfg, em);
        } else if (gen->parsed()) {
            cmd_gen(in, cfg, em, resuming, done);
        } else if (res->parsed()) {
            cmd_resolve(in, cfg, em);
        } else if (cfgcmd->parsed()) {
            if (cfg.format == "json") {
                ordered_json j;
                j["command"] = "config";
                std::istringstream kv(cfg.to_kv());
                std::string line;
                while (std::getline(kv, line)) {
                    const auto eq = line.find('=');
                    j[line.substr(0, eq)] = line.substr(eq + 1);
                }
                em.emit(j);
            } else {
                sink << cfg.to_kv();
            }
        }
        return 0;
    } catch (const SyntaxError &e) {
        err << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gf
