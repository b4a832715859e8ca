// JSON serialization (nlohmann) for the CLI and the results cache.
//
// QSeries schema: {"valuation": int, "order": int, "coefficients": ["num/den", ...]}
// with coefficients starting at the valuation. Emission is canonical (sorted
// keys, lowest-terms rationals), so parse -> serialize round-trips to
// identical bytes.
//
// Results file schema: {"p:k": {"constants": [{"j": int, "value": "num/den"}],
// "verified_depth": int}, ...}; tilde and classical solves use the key
// extensions "p:k:tilde" and "classical:k". A cached entry is reused only
// when its verified_depth matches the requested depth exactly.
#pragma once

#include "qmordell/qseries.hpp"
#include "qmordell/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace qmordell {

nlohmann::json to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolveResult& r);

std::string results_key(const SolveResult& r);
std::string results_key(const std::string& p_label, long k, bool tilde);

// cache directory: $QMORDELL_CACHE_DIR, else $XDG_CACHE_HOME/qmordell, else
// $HOME/.cache/qmordell, else disabled
std::optional<std::string> results_cache_dir();
std::optional<std::string> results_file_path();

std::optional<SolveResult> cache_lookup(const std::string& p_label, long k, bool tilde, long depth);
void cache_store(const SolveResult& r);  // merge + atomic rewrite; no-op when disabled

}  // namespace qmordell
