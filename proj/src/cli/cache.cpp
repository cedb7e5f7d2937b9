#include "fzzt/cli/cache.hpp"

#include "fzzt/quad/quad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace fzzt::cli {

namespace {

using nlohmann::json;

json coeff_list(const std::vector<xi::CoeffValue>& v) {
    json values = json::array(), errors = json::array();
    for (const auto& c : v) {
        values.push_back(c.value);
        errors.push_back(c.error);
    }
    return json{{"values", values}, {"errors", errors}};
}

std::optional<std::vector<xi::CoeffValue>> read_list(const json& j) {
    if (!j.is_object() || !j.contains("values") || !j.contains("errors")) return std::nullopt;
    const auto& v = j["values"];
    const auto& e = j["errors"];
    if (!v.is_array() || !e.is_array() || v.size() != e.size()) return std::nullopt;
    std::vector<xi::CoeffValue> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number() || !e[i].is_number()) return std::nullopt;
        out.push_back({v[i].get<double>(), e[i].get<double>()});
    }
    return out;
}

std::vector<xi::CoeffValue> compute_i_n(int nmax) {
    std::vector<xi::CoeffValue> out;
    for (int k = 0; k <= nmax; ++k) {
        const auto r = quad::i_n_integral(k);
        out.push_back({r.value.real(), r.est_error});
    }
    return out;
}

json expansion_json(const xi::PotentialExpansion& p) {
    return json{{"u0", p.u0}, {"coeffs", p.coeffs}, {"errors", p.errors}, {"order", p.order}, {"fit_residual", p.fit_residual}};
}

json mp_json(const xi::MpExpansion& e) {
    json ij = coeff_list(e.i_n);
    return json{{"b", e.b}, {"residual", e.residual}, {"condition", e.condition}, {"ill_conditioned", e.ill_conditioned},
                {"i_n", ij}};
}

}  // namespace

CoeffCache::CoeffCache(std::string path) : path_(std::move(path)) {
    data_ = json{{"version", kCacheVersion}};
    std::ifstream in(path_);
    if (!in) return;
    try {
        json j = json::parse(in);
        if (j.is_object() && j.value("version", "") == kCacheVersion) {
            data_ = std::move(j);
            loaded_ = true;
        }
    } catch (const json::exception&) {
        // corrupt cache: start over
    }
}

std::string CoeffCache::default_path() {
    if (const char* env = std::getenv("MM_CACHE"); env && *env) return env;
    return "./.mmcache.json";
}

std::vector<xi::CoeffValue> CoeffCache::a2n(int nmax) {
    if (nmax < 0 || nmax > 25) throw std::domain_error("a2n: nmax must be in 0..25");
    if (data_.contains("a2n"))
        if (auto v = read_list(data_["a2n"]); v && static_cast<int>(v->size()) > nmax)
            return {v->begin(), v->begin() + nmax + 1};
    std::vector<xi::CoeffValue> all = xi::a_coeffs_cached(25);
    data_["a2n"] = coeff_list(all);
    dirty_ = true;
    return {all.begin(), all.begin() + nmax + 1};
}

std::vector<xi::CoeffValue> CoeffCache::i_n(int nmax) {
    if (nmax < 0 || nmax > 20) throw std::domain_error("i_n: nmax must be in 0..20");
    if (data_.contains("In"))
        if (auto v = read_list(data_["In"]); v && static_cast<int>(v->size()) > nmax)
            return {v->begin(), v->begin() + nmax + 1};
    auto all = compute_i_n(20);
    data_["In"] = coeff_list(all);
    dirty_ = true;
    return {all.begin(), all.begin() + nmax + 1};
}

xi::MpExpansion CoeffCache::mp_b(int nmax) {
    const std::string key = std::to_string(nmax);
    try {
        if (data_.contains("b") && data_["b"].contains(key)) {
            const json& j = data_["b"][key];
            xi::MpExpansion e;
            e.b = j.at("b").get<std::vector<double>>();
            e.residual = j.at("residual").get<double>();
            e.condition = j.at("condition").get<double>();
            e.ill_conditioned = j.at("ill_conditioned").get<bool>();
            if (auto v = read_list(j.at("i_n"))) e.i_n = *v;
            if (static_cast<int>(e.b.size()) == nmax + 1) return e;
        }
    } catch (const json::exception&) {
    }
    xi::MpExpansion e = xi::mp_expand(nmax, false);
    e.i_n = i_n(std::min(nmax, 20));
    data_["b"][key] = mp_json(e);
    dirty_ = true;
    return e;
}

xi::PotentialExpansion CoeffCache::u(int order) {
    const std::string key = std::to_string(order);
    try {
        if (data_.contains("u") && data_["u"].contains(key)) {
            const json& j = data_["u"][key];
            xi::PotentialExpansion p;
            p.u0 = j.at("u0").get<double>();
            p.coeffs = j.at("coeffs").get<std::vector<double>>();
            p.errors = j.at("errors").get<std::vector<double>>();
            p.order = j.at("order").get<int>();
            p.fit_residual = j.at("fit_residual").get<double>();
            if (p.order == order && static_cast<int>(p.coeffs.size()) == order / 2) return p;
        }
    } catch (const json::exception&) {
    }
    xi::PotentialExpansion p = xi::u_taylor(order);
    data_["u"][key] = expansion_json(p);
    dirty_ = true;
    return p;
}

bool CoeffCache::save() {
    if (!dirty_) return true;
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return false;
        out << data_.dump(1) << '\n';
        if (!out) return false;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) return false;
    dirty_ = false;
    return true;
}

bool CoeffCache::audit(double* worst) {
    double w = -INFINITY;
    auto compare = [&w](const std::vector<xi::CoeffValue>& cached, const std::vector<xi::CoeffValue>& fresh) {
        for (std::size_t i = 0; i < cached.size() && i < fresh.size(); ++i)
            w = std::max(w, std::abs(cached[i].value - fresh[i].value) - cached[i].error);
    };
    if (data_.contains("a2n"))
        if (auto v = read_list(data_["a2n"])) compare(*v, xi::a_coeffs_cached(25));
    if (data_.contains("In"))
        if (auto v = read_list(data_["In"])) compare(*v, compute_i_n(static_cast<int>(v->size()) - 1));
    if (data_.contains("b") && data_["b"].is_object()) {
        for (auto it = data_["b"].begin(); it != data_["b"].end(); ++it) {
            const auto cached = it.value().value("b", std::vector<double>{});
            const auto fresh = xi::mp_expand(static_cast<int>(cached.size()) - 1, false).b;
            for (std::size_t i = 0; i < cached.size(); ++i) w = std::max(w, std::abs(cached[i] - fresh[i]));
        }
    }
    if (data_.contains("u") && data_["u"].is_object()) {
        for (auto it = data_["u"].begin(); it != data_["u"].end(); ++it) {
            const auto cached = it.value().value("coeffs", std::vector<double>{});
            const auto errs = it.value().value("errors", std::vector<double>{});
            const auto fresh = xi::u_taylor(it.value().value("order", 0));
            for (std::size_t i = 0; i < cached.size() && i < errs.size(); ++i)
                w = std::max(w, std::abs(cached[i] - fresh.coeffs[i]) - errs[i]);
        }
    }
    if (worst) *worst = w;
    return w <= 0.0;
}

}  // namespace fzzt::cli
