#include "motivic/hilb.hpp"

#include "motivic/qseries.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace motivic {

std::vector<LPoly> hilb_classes_up_to(int max_n) {
    if (max_n < 0) throw std::invalid_argument("hilb_classes_up_to requires n >= 0");
    std::vector<std::pair<long, int>> factors;
    for (int k = 1; k <= max_n; ++k) {
        factors.emplace_back(k - 1, k);
        factors.emplace_back(k, k);
        factors.emplace_back(k + 1, k);
    }
    QSeries s = product(std::move(factors), max_n);
    std::vector<LPoly> out;
    out.reserve(max_n + 1);
    for (int n = 0; n <= max_n; ++n) out.push_back(s.coefficient(n));
    return out;
}

LPoly hilb_class(int n) {
    if (n < 0) throw std::invalid_argument("hilb_class requires n >= 0");
    return hilb_classes_up_to(n).back();
}

namespace {

// p(0..n) by Euler's pentagonal-number recurrence.
std::vector<mpz_class> partition_counts(int n) {
    std::vector<mpz_class> p(n + 1);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mpz_class s = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            if (k % 2 == 1) {
                if (g1 <= m) s += p[m - g1];
                if (g2 <= m) s += p[m - g2];
            } else {
                if (g1 <= m) s -= p[m - g1];
                if (g2 <= m) s -= p[m - g2];
            }
        }
        p[m] = s;
    }
    return p;
}

std::vector<mpz_class> convolve(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

mpz_class euler_oracle(int n) {
    if (n < 0) throw std::invalid_argument("euler_oracle requires n >= 0");
    auto p = partition_counts(n);
    return convolve(convolve(p, p), p)[n];
}

mpz_class betti_hilb(int n, long i) {
    if (n < 0) throw std::invalid_argument("betti_hilb requires n >= 0");
    if (i < 0 || i % 2 != 0 || i > 4L * n) return 0;
    return hilb_class(n).coefficient(i / 2);
}

HilbCache::HilbCache(std::filesystem::path dir) {
    std::filesystem::create_directories(dir);
    file_ = dir / "hilb_classes.json";
    load();
}

std::optional<LPoly> HilbCache::lookup(int n) const {
    std::lock_guard lock(mu_);
    if (n < 0 || n >= static_cast<int>(classes_.size())) return std::nullopt;
    return classes_[n];
}

LPoly HilbCache::get(int n) {
    if (n < 0) throw std::invalid_argument("HilbCache::get requires n >= 0");
    if (auto hit = lookup(n)) return *hit;
    fill_up_to(n);
    return *lookup(n);
}

void HilbCache::fill_up_to(int max_n) {
    auto fresh = hilb_classes_up_to(max_n);
    std::lock_guard lock(mu_);
    if (fresh.size() > classes_.size()) {
        classes_ = std::move(fresh);
        save();
    }
}

int HilbCache::max_cached() const {
    std::lock_guard lock(mu_);
    return static_cast<int>(classes_.size()) - 1;
}

void HilbCache::clear() {
    std::lock_guard lock(mu_);
    classes_.clear();
    std::error_code ec;
    std::filesystem::remove(file_, ec);
}

void HilbCache::load() {
    std::ifstream in(file_);
    if (!in) return;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception&) {
        return;  // corrupt file: recompute
    }
    if (!j.is_object() || j.value("version", "") != kHilbCacheVersion) return;
    if (!j.contains("classes") || !j["classes"].is_object()) return;
    std::vector<LPoly> loaded;
    for (int n = 0;; ++n) {
        auto it = j["classes"].find(std::to_string(n));
        if (it == j["classes"].end()) break;
        try {
            loaded.push_back(lpoly_from_json_text(it->dump()));
        } catch (const std::exception&) {
            return;
        }
    }
    classes_ = std::move(loaded);
}

void HilbCache::save() const {
    nlohmann::ordered_json j;
    j["version"] = kHilbCacheVersion;
    auto& cl = j["classes"] = nlohmann::ordered_json::object();
    for (size_t n = 0; n < classes_.size(); ++n)
        cl[std::to_string(n)] = nlohmann::ordered_json::parse(classes_[n].to_json_text());
    auto tmp = file_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << "\n";
    }
    std::filesystem::rename(tmp, file_);
}

std::filesystem::path resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("MOTIVIC_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "motivic";
    return std::filesystem::temp_directory_path() / "motivic-cache";
}

}  // namespace motivic
