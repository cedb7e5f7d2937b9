#pragma once

#include "fzzt/xi/mpexpand.hpp"
#include "fzzt/xi/potential.hpp"
#include "fzzt/xi/xi.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fzzt::cli {

inline constexpr const char* kCacheVersion = "fzzt-coeff-cache/1";

/// Optional on-disk store for the slow coefficient families: a_{2n}, I_n,
/// least-squares b and potential expansions. Missing, corrupt or
/// stale-version files are ignored and rebuilt on the next save.
class CoeffCache {
public:
    explicit CoeffCache(std::string path);

    /// MM_CACHE if set, else ./.mmcache.json.
    static std::string default_path();

    const std::string& path() const { return path_; }
    bool loaded() const { return loaded_; }

    std::vector<xi::CoeffValue> a2n(int nmax);
    std::vector<xi::CoeffValue> i_n(int nmax);
    xi::MpExpansion mp_b(int nmax);
    xi::PotentialExpansion u(int order);

    /// Writes the file if anything was added; returns false on io failure.
    bool save();

    /// Recomputes every stored entry; true when each cached value is within
    /// its stored error bound of the recomputed one. `worst` receives the
    /// largest |cached - recomputed| - bound.
    bool audit(double* worst = nullptr);

private:
    std::string path_;
    nlohmann::json data_;
    bool loaded_ = false;
    bool dirty_ = false;
};

}  // namespace fzzt::cli
