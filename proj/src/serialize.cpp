#include "qmordell/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>

namespace qmordell {

namespace fs = std::filesystem;
using nlohmann::json;

json to_json(const QSeries& s) {
    json coeffs = json::array();
    for (long n = s.valuation(); n < s.order(); ++n) coeffs.push_back(s.coefficient(n).str());
    return json{{"valuation", s.valuation()}, {"order", s.order()}, {"coefficients", coeffs}};
}

QSeries qseries_from_json(const json& j) {
    if (!j.is_object() || !j.contains("valuation") || !j.contains("order") || !j.contains("coefficients"))
        throw std::invalid_argument("QSeries JSON must have valuation, order, coefficients");
    const long val = j.at("valuation").get<long>();
    const long order = j.at("order").get<long>();
    std::vector<Rational> c;
    for (const auto& x : j.at("coefficients")) c.push_back(Rational::from_string(x.get<std::string>()));
    return QSeries::from_coefficients(val, std::move(c), order);
}

json to_json(const SolveResult& r) {
    json constants = json::array();
    for (const auto& [jj, c] : r.constants) constants.push_back(json{{"j", jj}, {"value", c.str()}});
    json out{{"p", r.p_label},
             {"k", r.k},
             {"tilde", r.tilde},
             {"constants", constants},
             {"verified_depth", r.verified_depth},
             {"residual_ok", r.residual_ok}};
    if (r.tilde) out["relation_ok"] = r.relation_ok;
    return out;
}

std::string results_key(const std::string& p_label, long k, bool tilde) {
    std::string key = p_label + ":" + std::to_string(k);
    if (tilde) key += ":tilde";
    return key;
}

std::string results_key(const SolveResult& r) { return results_key(r.p_label, r.k, r.tilde); }

std::optional<std::string> results_cache_dir() {
    if (const char* env = std::getenv("QMORDELL_CACHE_DIR"); env && *env) return std::string(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::string(xdg) + "/qmordell";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/qmordell";
    return std::nullopt;
}

std::optional<std::string> results_file_path() {
    const auto dir = results_cache_dir();
    if (!dir) return std::nullopt;
    return *dir + "/results.json";
}

namespace {

std::mutex cache_mutex;

json load_results_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return json::object();
    try {
        json j;
        in >> j;
        return j.is_object() ? j : json::object();
    } catch (const json::exception&) {
        return json::object();  // corrupt cache is treated as empty
    }
}

}  // namespace

std::optional<SolveResult> cache_lookup(const std::string& p_label, long k, bool tilde, long depth) {
    const auto path = results_file_path();
    if (!path) return std::nullopt;
    std::lock_guard<std::mutex> lock(cache_mutex);
    const json all = load_results_file(*path);
    const auto it = all.find(results_key(p_label, k, tilde));
    if (it == all.end()) return std::nullopt;
    try {
        if (it->at("verified_depth").get<long>() != depth) return std::nullopt;  // exact-match reuse only
        SolveResult r;
        r.p_label = p_label;
        r.p = p_label == "classical" ? 0 : std::stol(p_label);
        r.k = k;
        r.tilde = tilde;
        r.arg_mult = tilde && (r.p == 3 || r.p == 11) ? 2 : 1;
        for (const auto& c : it->at("constants"))
            r.constants.emplace_back(c.at("j").get<long>(), Rational::from_string(c.at("value").get<std::string>()));
        r.verified_depth = depth;
        r.residual_ok = true;  // only verified results are stored
        return r;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void cache_store(const SolveResult& r) {
    if (!r.residual_ok || !r.relation_ok) return;  // never persist a failed solve
    const auto dir = results_cache_dir();
    if (!dir) return;
    std::lock_guard<std::mutex> lock(cache_mutex);
    std::error_code ec;
    fs::create_directories(*dir, ec);
    if (ec) return;
    const std::string path = *dir + "/results.json";
    json all = load_results_file(path);
    json constants = json::array();
    for (const auto& [jj, c] : r.constants) constants.push_back(json{{"j", jj}, {"value", c.str()}});
    all[results_key(r)] = json{{"constants", constants}, {"verified_depth", r.verified_depth}};
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) return;
        out << all.dump(2) << "\n";
    }
    fs::rename(tmp, path, ec);  // atomic on POSIX
}

}  // namespace qmordell
