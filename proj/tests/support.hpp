#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

#include "wall/gateway.hpp"
#include "wall/mock_provider.hpp"
#include "wall/prompt.hpp"
#include "wall/text.hpp"

namespace wall::test {

inline const std::filesystem::path kFixtures = WALL_FIXTURE_DIR;
inline const std::filesystem::path kData = WALL_DATA_DIR;

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("wall-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

private:
    std::filesystem::path path_;
};

/// Copies a directory tree (fixtures are never written to in place).
inline void copy_tree(const std::filesystem::path& from, const std::filesystem::path& to) {
    std::filesystem::create_directories(to);
    std::filesystem::copy(from, to, std::filesystem::copy_options::recursive);
}

/// Every regular file under `root` mapped to its bytes, keyed by relative path.
inline std::map<std::string, std::string> snapshot(const std::filesystem::path& root) {
    std::map<std::string, std::string> out;
    if (!std::filesystem::exists(root)) return out;
    for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
        if (e.is_regular_file()) out[e.path().lexically_relative(root).generic_string()] = read_file(e.path());
    }
    return out;
}

/// Gateway backed by `provider`, with bundled pricing and no retry sleeps.
inline std::unique_ptr<Gateway> make_gateway(std::shared_ptr<Provider> provider, RetryPolicy retry = {}) {
    auto gw = std::make_unique<Gateway>(PricingTable::load(kData / "pricing.csv"), retry);
    gw->set_sleeper([](std::chrono::milliseconds) {});
    const std::string name(provider->name());
    gw->register_provider(provider);
    for (const auto& m : gw->pricing().model_ids()) gw->register_model(m, name);
    return gw;
}

inline PromptBuilder bundled_prompts(std::size_t budget = PromptBuilder::kDefaultBudgetTokens) {
    return PromptBuilder::from_data_dir(kData, budget);
}

/// Deterministic generator helpers for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(between(0, static_cast<int>(v.size()) - 1))];
    }
    std::string from_alphabet(std::string_view alphabet, int lo, int hi) {
        std::string s;
        const int n = between(lo, hi);
        for (int i = 0; i < n; ++i) s += alphabet[static_cast<std::size_t>(between(0, static_cast<int>(alphabet.size()) - 1))];
        return s;
    }
    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace wall::test
