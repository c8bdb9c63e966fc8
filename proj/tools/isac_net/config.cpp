// SPDX-License-Identifier: Apache-2.0
//
// isac-net: analysis of cooperative sensing and communication networks
// Copyright (C) 2026 The isac-net authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "config.hpp"

#include "isac/errors.hpp"
#include "isac/validation.hpp"

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace isac::cli {

namespace {

struct Value {
    enum class Kind { number, boolean, string, array } kind = Kind::number;
    double number = 0.0;
    bool is_integer = false;
    bool boolean = false;
    std::string text;
    std::vector<Value> items;
};

std::string trim(const std::string& s)
{
    std::size_t lo = 0;
    std::size_t hi = s.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) {
        ++lo;
    }
    while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) {
        --hi;
    }
    return s.substr(lo, hi - lo);
}

class LineParser {
public:
    LineParser(std::string where) : where_(std::move(where)) {}

    [[noreturn]] void fail(const std::string& what) const { throw ConfigError(where_ + ": " + what); }

    Value parse(const std::string& raw)
    {
        text_ = raw;
        pos_ = 0;
        Value v = value();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing characters '" + text_.substr(pos_) + "'");
        }
        return v;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    Value value()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("missing value");
        }
        const char c = text_[pos_];
        if (c == '"') {
            return string_value();
        }
        if (c == '[') {
            return array_value();
        }
        return scalar_value();
    }

    Value string_value()
    {
        Value v;
        v.kind = Value::Kind::string;
        ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
                ++pos_;
            }
            v.text.push_back(text_[pos_++]);
        }
        if (pos_ >= text_.size()) {
            fail("unterminated string");
        }
        ++pos_;
        return v;
    }

    Value array_value()
    {
        Value v;
        v.kind = Value::Kind::array;
        ++pos_;
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ']') {
            ++pos_;
            return v;
        }
        for (;;) {
            v.items.push_back(value());
            if (v.items.back().kind == Value::Kind::array) {
                fail("nested arrays are not supported");
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            if (pos_ < text_.size() && text_[pos_] == ']') {
                ++pos_;
                return v;
            }
            fail("expected ',' or ']' in array");
        }
    }

    Value scalar_value()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string token = text_.substr(start, pos_ - start);
        Value v;
        if (token == "true" || token == "false") {
            v.kind = Value::Kind::boolean;
            v.boolean = token == "true";
            return v;
        }
        std::string digits;
        for (const char ch : token) {
            if (ch != '_') {
                digits.push_back(ch);
            }
        }
        char* end = nullptr;
        v.number = std::strtod(digits.c_str(), &end);
        if (digits.empty() || end != digits.c_str() + digits.size()) {
            fail("cannot parse value '" + token + "'");
        }
        v.is_integer = digits.find_first_of(".eEnN") == std::string::npos;
        v.text = digits;
        return v;
    }

    std::string where_;
    std::string text_;
    std::size_t pos_ = 0;
};

using Setter = std::function<void(ExperimentConfig&, const Value&, const LineParser&)>;

double as_number(const Value& v, const LineParser& p)
{
    if (v.kind != Value::Kind::number) {
        p.fail("expected a number");
    }
    return v.number;
}

long long as_integer(const Value& v, const LineParser& p)
{
    as_number(v, p);
    if (!v.is_integer) {
        p.fail("expected an integer");
    }
    errno = 0;
    const long long x = std::strtoll(v.text.c_str(), nullptr, 10);
    if (errno == ERANGE) {
        p.fail("integer out of range");
    }
    return x;
}

std::uint64_t as_count(const Value& v, const LineParser& p)
{
    as_number(v, p);
    if (!v.is_integer || v.text.front() == '-') {
        p.fail("expected a non-negative integer");
    }
    errno = 0;
    const unsigned long long x = std::strtoull(v.text.c_str(), nullptr, 10);
    if (errno == ERANGE) {
        p.fail("integer out of range");
    }
    return x;
}

bool as_bool(const Value& v, const LineParser& p)
{
    if (v.kind != Value::Kind::boolean) {
        p.fail("expected true or false");
    }
    return v.boolean;
}

const std::string& as_string(const Value& v, const LineParser& p)
{
    if (v.kind != Value::Kind::string) {
        p.fail("expected a quoted string");
    }
    return v.text;
}

template <class T, class Convert>
std::vector<T> as_list(const Value& v, const LineParser& p, Convert convert)
{
    std::vector<T> out;
    if (v.kind != Value::Kind::array) {
        out.push_back(static_cast<T>(convert(v, p)));
        return out;
    }
    for (const auto& item : v.items) {
        out.push_back(static_cast<T>(convert(item, p)));
    }
    return out;
}

template <class E>
E as_enum(const Value& v, const LineParser& p, const std::map<std::string, E>& names)
{
    const std::string& s = as_string(v, p);
    const auto it = names.find(s);
    if (it == names.end()) {
        std::vector<std::string> known;
        for (const auto& [k, _] : names) {
            known.push_back(k);
        }
        p.fail(fmt::format("unknown value \"{}\" (expected one of: {})", s, fmt::join(known, ", ")));
    }
    return it->second;
}

const std::map<std::string, sensing::AcceptanceForm> kKappaForms{
    {"poisson_sum", sensing::AcceptanceForm::poisson_sum},
    {"q_psi", sensing::AcceptanceForm::q_psi},
    {"q_psi_over_psi", sensing::AcceptanceForm::q_psi_over_psi},
};
const std::map<std::string, sensing::CrlbaVariant> kVariants{
    {"ln_squared", sensing::CrlbaVariant::ln_squared},
    {"consistent", sensing::CrlbaVariant::consistent},
};
const std::map<std::string, tradeoff::Interpolation> kInterpolations{
    {"inverse_time", tradeoff::Interpolation::inverse_time},
    {"linear", tradeoff::Interpolation::linear},
};
const std::map<std::string, Format> kFormats{{"csv", Format::csv}, {"json", Format::json}};
const std::map<std::string, ZetaMode> kZetaModes{{"normalized", ZetaMode::normalized},
                                                 {"physical", ZetaMode::physical}};
const std::map<std::string, bool> kUnits{{"nats", false}, {"bits", true}};

template <class E>
std::string name_of(const std::map<std::string, E>& names, E value)
{
    for (const auto& [k, v] : names) {
        if (v == value) {
            return k;
        }
    }
    return "?";
}

const std::map<std::string, Setter>& setters()
{
    using C = ExperimentConfig;
    using P = LineParser;
    static const std::map<std::string, Setter> table{
        {"experiment",
         [](C& c, const Value& v, const P& p) {
             if (as_string(v, p) != c.experiment) {
                 p.fail("file is for experiment '" + v.text + "', not '" + c.experiment + "'");
             }
         }},
        {"seed", [](C& c, const Value& v, const P& p) { c.seed = as_count(v, p); }},
        {"realizations", [](C& c, const Value& v, const P& p) { c.realizations = as_count(v, p); }},
        {"format", [](C& c, const Value& v, const P& p) { c.format = as_enum(v, p, kFormats); }},
        {"output", [](C& c, const Value& v, const P& p) { c.output = as_string(v, p); }},

        {"params.m_t", [](C& c, const Value& v, const P& p) { c.params.m_t = static_cast<int>(as_integer(v, p)); }},
        {"params.m_r", [](C& c, const Value& v, const P& p) { c.params.m_r = static_cast<int>(as_integer(v, p)); }},
        {"params.lambda_b", [](C& c, const Value& v, const P& p) { c.params.lambda_b = as_number(v, p); }},
        {"params.lambda_u", [](C& c, const Value& v, const P& p) { c.params.lambda_u = as_number(v, p); }},
        {"params.lambda_s", [](C& c, const Value& v, const P& p) { c.params.lambda_s = as_number(v, p); }},
        {"params.alpha", [](C& c, const Value& v, const P& p) { c.params.alpha = as_number(v, p); }},
        {"params.beta", [](C& c, const Value& v, const P& p) { c.params.beta = as_number(v, p); }},
        {"params.p_c", [](C& c, const Value& v, const P& p) { c.params.p_c = as_number(v, p); }},
        {"params.sigma_rcs", [](C& c, const Value& v, const P& p) { c.params.sigma_rcs = as_number(v, p); }},
        {"params.sigma_s_sq", [](C& c, const Value& v, const P& p) { c.params.sigma_s_sq = as_number(v, p); }},
        {"params.b_eff", [](C& c, const Value& v, const P& p) { c.params.b_eff = as_number(v, p); }},
        {"params.f_c", [](C& c, const Value& v, const P& p) { c.params.f_c = as_number(v, p); }},
        {"params.psi", [](C& c, const Value& v, const P& p) { c.params.psi = static_cast<int>(as_integer(v, p)); }},
        {"params.c_backhaul", [](C& c, const Value& v, const P& p) { c.params.c_backhaul = as_number(v, p); }},
        {"params.e_sense", [](C& c, const Value& v, const P& p) { c.params.e_sense = as_number(v, p); }},
        {"params.zeta_mode", [](C& c, const Value& v, const P& p) { c.params.zeta_mode = as_enum(v, p, kZetaModes); }},
        {"params.zeta_sq_unit", [](C& c, const Value& v, const P& p) { c.params.zeta_sq_unit = as_number(v, p); }},
        {"params.g_r", [](C& c, const Value& v, const P& p) { c.params.g_r_override = as_number(v, p); }},

        {"grid.n", [](C& c, const Value& v, const P& p) { c.grids.n = as_list<std::size_t>(v, p, as_count); }},
        {"grid.l", [](C& c, const Value& v, const P& p) { c.grids.l = as_list<std::size_t>(v, p, as_count); }},
        {"grid.p_c", [](C& c, const Value& v, const P& p) { c.grids.p_c = as_list<double>(v, p, as_number); }},
        {"grid.mu", [](C& c, const Value& v, const P& p) { c.grids.mu = as_list<double>(v, p, as_number); }},
        {"grid.psi", [](C& c, const Value& v, const P& p) { c.grids.psi = as_list<int>(v, p, as_integer); }},
        {"grid.tau", [](C& c, const Value& v, const P& p) { c.grids.tau = as_list<double>(v, p, as_number); }},

        {"options.kappa_form",
         [](C& c, const Value& v, const P& p) { c.options.kappa_form = as_enum(v, p, kKappaForms); }},
        {"options.crlba_variant",
         [](C& c, const Value& v, const P& p) { c.options.crlba_variant = as_enum(v, p, kVariants); }},
        {"options.interpolation",
         [](C& c, const Value& v, const P& p) { c.options.interpolation = as_enum(v, p, kInterpolations); }},
        {"options.units", [](C& c, const Value& v, const P& p) { c.options.bits = as_enum(v, p, kUnits); }},
        {"options.monte_carlo", [](C& c, const Value& v, const P& p) { c.options.monte_carlo = as_bool(v, p); }},
        {"options.checks",
         [](C& c, const Value& v, const P& p) {
             c.options.checks = as_list<std::string>(v, p, [](const Value& x, const P& q) { return as_string(x, q); });
         }},
    };
    return table;
}

std::vector<std::size_t> span_of(std::size_t lo, std::size_t hi)
{
    std::vector<std::size_t> out;
    for (std::size_t i = lo; i <= hi; ++i) {
        out.push_back(i);
    }
    return out;
}

} // namespace

void ExperimentConfig::validate() const
{
    try {
        params.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    auto require = [](bool ok, const std::string& what) {
        if (!ok) {
            throw ConfigError("invalid configuration: " + what);
        }
    };
    require(realizations >= 1, "realizations must be >= 1");
    const auto all_at_least = [](const std::vector<std::size_t>& v, std::size_t lo) {
        for (const auto x : v) {
            if (x < lo) {
                return false;
            }
        }
        return true;
    };
    const auto all_in_unit = [](const std::vector<double>& v) {
        for (const auto x : v) {
            if (!(x >= 0.0 && x <= 1.0)) {
                return false;
            }
        }
        return true;
    };
    if (experiment == "sensing-crlb") {
        require(!grids.n.empty() && all_at_least(grids.n, 2), "grid.n must be nonempty with n >= 2");
    } else if (experiment == "acceptance") {
        require(!grids.n.empty() && all_at_least(grids.n, 1), "grid.n must be nonempty with n >= 1");
        require(!grids.psi.empty(), "grid.psi must be nonempty");
        for (const int psi : grids.psi) {
            require(psi >= 1, "grid.psi entries must be >= 1");
        }
        require(!grids.mu.empty(), "grid.mu must be nonempty");
        for (const double mu : grids.mu) {
            require(mu >= 0.0, "grid.mu entries must be >= 0");
        }
    } else if (experiment == "comm-rate") {
        require(!grids.l.empty() && all_at_least(grids.l, 1), "grid.l must be nonempty with l >= 1");
        require(!grids.p_c.empty() && all_in_unit(grids.p_c), "grid.p_c must be nonempty within [0, 1]");
    } else if (experiment == "tradeoff") {
        require(!grids.n.empty() && all_at_least(grids.n, 2), "grid.n must be nonempty with n >= 2");
        require(!grids.l.empty() && all_at_least(grids.l, 1), "grid.l must be nonempty with l >= 1");
        require(!grids.p_c.empty() && all_in_unit(grids.p_c), "grid.p_c must be nonempty within [0, 1]");
        require(!grids.tau.empty() && all_in_unit(grids.tau), "grid.tau must be nonempty within [0, 1]");
        require(params.beta == 2.0, "tradeoff requires beta = 2 (CRLB_a is defined for beta = 2 only)");
    } else if (experiment == "validate") {
        for (const auto& id : options.checks) {
            bool known = false;
            for (const auto& k : validation::check_ids()) {
                known = known || k == id;
            }
            require(known, "unknown check id '" + id + "'");
        }
    } else {
        throw ConfigError("unknown experiment '" + experiment + "'");
    }
}

ExperimentConfig preset(const std::string& name, const std::string& experiment)
{
    if (name != "default") {
        throw ConfigError("unknown preset '" + name + "' (known: default)");
    }
    ExperimentConfig config;
    config.experiment = experiment;
    config.grids.psi = {5, 15};
    config.grids.mu = {0.5, 1.0, 2.0};
    config.grids.p_c = {0.3, 0.6, 0.9};
    config.grids.tau = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    if (experiment == "sensing-crlb") {
        config.params.p_c = 0.0;
        config.grids.n = span_of(2, 20);
    } else if (experiment == "acceptance") {
        config.params.p_c = 0.0;
        config.grids.n = span_of(1, 30);
    } else if (experiment == "comm-rate") {
        config.grids.l = span_of(1, 10);
        config.realizations = 20000;
    } else if (experiment == "tradeoff") {
        config.params.e_sense = 0.5;
        config.grids.n = span_of(2, 12);
        config.grids.l = span_of(1, 8);
        config.grids.p_c = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    }
    return config;
}

void apply_config_text(ExperimentConfig& config, const std::string& text, const std::string& source)
{
    std::istringstream in(text);
    std::string line;
    std::string section;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const LineParser parser(fmt::format("{}:{}", source, number));
        // strip comments outside strings
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') {
                quoted = !quoted;
            } else if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                parser.fail("malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "params" && section != "grid" && section != "options") {
                parser.fail("unknown section [" + section + "] (known: params, grid, options)");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            parser.fail("expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string full = section.empty() ? key : section + "." + key;
        const auto it = setters().find(full);
        if (it == setters().end()) {
            parser.fail("unknown key '" + full + "'");
        }
        LineParser value_parser = parser;
        it->second(config, value_parser.parse(line.substr(eq + 1)), parser);
    }
}

nlohmann::ordered_json config_json(const ExperimentConfig& c)
{
    const auto& p = c.params;
    nlohmann::ordered_json out;
    out["experiment"] = c.experiment;
    out["seed"] = c.seed;
    out["realizations"] = c.realizations;
    out["format"] = c.format == Format::csv ? "csv" : "json";

    auto& params = out["params"];
    params["m_t"] = p.m_t;
    params["m_r"] = p.m_r;
    params["lambda_b"] = p.lambda_b;
    params["lambda_u"] = p.lambda_u;
    params["lambda_s"] = p.lambda_s;
    params["alpha"] = p.alpha;
    params["beta"] = p.beta;
    params["p_c"] = p.p_c;
    params["sigma_rcs"] = p.sigma_rcs;
    params["sigma_s_sq"] = p.sigma_s_sq;
    params["b_eff"] = p.b_eff;
    params["f_c"] = p.f_c;
    params["psi"] = p.psi;
    params["c_backhaul"] = p.c_backhaul;
    params["e_sense"] = p.e_sense;
    params["zeta_mode"] = name_of(kZetaModes, p.zeta_mode);
    params["zeta_sq_unit"] = p.zeta_sq_unit;
    if (p.g_r_override) {
        params["g_r"] = *p.g_r_override;
    }

    auto& grid = out["grid"];
    grid["n"] = c.grids.n;
    grid["l"] = c.grids.l;
    grid["p_c"] = c.grids.p_c;
    grid["mu"] = c.grids.mu;
    grid["psi"] = c.grids.psi;
    grid["tau"] = c.grids.tau;

    auto& options = out["options"];
    options["kappa_form"] = name_of(kKappaForms, c.options.kappa_form);
    options["crlba_variant"] = name_of(kVariants, c.options.crlba_variant);
    options["interpolation"] = name_of(kInterpolations, c.options.interpolation);
    options["units"] = c.options.bits ? "bits" : "nats";
    options["monte_carlo"] = c.options.monte_carlo;
    options["checks"] = c.options.checks;
    return out;
}

std::string render_config(const ExperimentConfig& config)
{
    const nlohmann::ordered_json tree = config_json(config);
    std::string head;
    std::string sections;
    for (const auto& [key, value] : tree.items()) {
        if (value.is_object()) {
            sections += "\n[" + key + "]\n";
            for (const auto& [sub, item] : value.items()) {
                sections += sub + " = " + item.dump() + "\n";
            }
        } else {
            head += key + " = " + value.dump() + "\n";
        }
    }
    return head + sections;
}

} // namespace isac::cli
