#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "wall/gateway.hpp"

namespace wall {

/// Deterministic rule-driven provider for tests and fixture replays.
///
/// Rules are tried in order; the first whose path glob, message substring
/// (searched in the prompt's user text) and tier all match decides the
/// reply. Without a matching rule the original file is echoed back.
///
/// Fixture file (JSON):
///
///     {"tiers": {"gpt-3.5-turbo": "cheap"},
///      "fence": true,
///      "rules": [{"path": "client/**", "message": "redundant", "tier": "cheap",
///                 "action": "fix", "content_file": "fixed/App.jsx"},
///                {"action": "replace", "edits": [{"pattern": "BUG-A-\\d+", "replacement": "ok"}]},
///                {"action": "fail", "error": "rate_limit", "times": 2},
///                {"action": "refuse"}]}
class MockProvider : public Provider {
public:
    enum class Action { Fix, Refuse, Replace, Fail };
    enum class FailKind { RateLimit, Server, Auth };

    struct Edit {
        std::string pattern;
        std::regex regex;
        std::string replacement;
    };

    struct Rule {
        std::string path_glob = "**";
        std::string message_substring;
        std::string tier = "*";
        Action action = Action::Refuse;
        std::string content;        // Fix
        std::vector<Edit> edits;    // Replace
        FailKind fail_kind = FailKind::Server;
        int fail_times = -1;        // Fail; -1 = always
    };

    MockProvider() = default;
    static MockProvider from_json(const std::string& json_text, const std::filesystem::path& base_dir = {});
    static MockProvider load(const std::filesystem::path& fixture);

    MockProvider(const MockProvider& other);

    std::string_view name() const override { return "mock"; }
    ProviderReply complete(const PromptSpec& prompt, std::string_view model_id,
                           const SamplingParams& params) override;

    void add_rule(Rule rule);
    void set_tier(const std::string& model_id, const std::string& tier) { tiers_[model_id] = tier; }
    void set_fence(bool fence) { fence_ = fence; }
    std::string tier_of(std::string_view model_id) const;
    const std::map<std::string, std::string>& tiers() const { return tiers_; }

    std::size_t calls() const { return calls_.load(); }

private:
    std::map<std::string, std::string> tiers_;
    std::vector<Rule> rules_;
    std::vector<int> fails_used_;
    bool fence_ = true;
    std::mutex mu_;
    std::atomic<std::size_t> calls_{0};
};

}  // namespace wall
