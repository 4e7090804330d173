#include "wall/mock_provider.hpp"

#include <nlohmann/json.hpp>

#include "wall/text.hpp"

namespace wall {

MockProvider::MockProvider(const MockProvider& other)
    : tiers_(other.tiers_), rules_(other.rules_), fails_used_(other.fails_used_), fence_(other.fence_) {}

MockProvider MockProvider::from_json(const std::string& json_text, const std::filesystem::path& base_dir) {
    MockProvider p;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
        const nlohmann::json tiers = j.value("tiers", nlohmann::json::object());
        const nlohmann::json rules = j.value("rules", nlohmann::json::array());
        for (const auto& [model, tier] : tiers.items()) {
            p.set_tier(model, tier.get<std::string>());
        }
        p.fence_ = j.value("fence", true);
        for (const auto& r : rules) {
            Rule rule;
            rule.path_glob = r.value("path", "**");
            rule.message_substring = r.value("message", "");
            rule.tier = r.value("tier", "*");
            const std::string action = r.value("action", "refuse");
            if (action == "fix") {
                rule.action = Action::Fix;
                if (r.contains("content_file")) {
                    rule.content = read_file(base_dir / r["content_file"].get<std::string>());
                } else {
                    rule.content = r.at("content").get<std::string>();
                }
            } else if (action == "refuse") {
                rule.action = Action::Refuse;
            } else if (action == "replace") {
                rule.action = Action::Replace;
                for (const auto& e : r.at("edits")) {
                    const std::string pattern = e.at("pattern").get<std::string>();
                    rule.edits.push_back({pattern, std::regex(pattern), e.value("replacement", "")});
                }
            } else if (action == "fail") {
                rule.action = Action::Fail;
                const std::string kind = r.value("error", "server");
                if (kind == "rate_limit") rule.fail_kind = FailKind::RateLimit;
                else if (kind == "auth") rule.fail_kind = FailKind::Auth;
                else if (kind == "server") rule.fail_kind = FailKind::Server;
                else throw InvalidArgument("mock fixture: unknown error kind '" + kind + "'");
                rule.fail_times = r.value("times", -1);
            } else {
                throw InvalidArgument("mock fixture: unknown action '" + action + "'");
            }
            p.add_rule(std::move(rule));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("mock fixture: ") + e.what());
    } catch (const std::regex_error& e) {
        throw InvalidArgument(std::string("mock fixture: bad pattern: ") + e.what());
    }
    return p;
}

MockProvider MockProvider::load(const std::filesystem::path& fixture) {
    return from_json(read_file(fixture), fixture.parent_path());
}

void MockProvider::add_rule(Rule rule) {
    std::lock_guard lock(mu_);
    rules_.push_back(std::move(rule));
    fails_used_.push_back(0);
}

std::string MockProvider::tier_of(std::string_view model_id) const {
    const auto it = tiers_.find(std::string(model_id));
    return it == tiers_.end() ? std::string(model_id) : it->second;
}

ProviderReply MockProvider::complete(const PromptSpec& prompt, std::string_view model_id, const SamplingParams&) {
    ++calls_;
    const std::string tier = tier_of(model_id);
    std::string body = prompt.file_content;
    {
        std::lock_guard lock(mu_);
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            const Rule& rule = rules_[i];
            if (rule.tier != "*" && rule.tier != tier) continue;
            if (!glob_match(rule.path_glob, prompt.file_location)) continue;
            if (!rule.message_substring.empty() && prompt.user_text.find(rule.message_substring) == std::string::npos) {
                continue;
            }
            if (rule.action == Action::Fail) {
                if (rule.fail_times >= 0 && fails_used_[i] >= rule.fail_times) continue;
                ++fails_used_[i];
                const std::string what = "mock provider injected failure for " + prompt.file_location;
                switch (rule.fail_kind) {
                    case FailKind::RateLimit: throw RateLimited(what + " (429)");
                    case FailKind::Auth: throw ProviderAuthError(what + " (401)");
                    case FailKind::Server: throw ProviderError(what + " (500)", true);
                }
            }
            if (rule.action == Action::Fix) {
                body = rule.content;
            } else if (rule.action == Action::Replace) {
                for (const auto& e : rule.edits) body = std::regex_replace(body, e.regex, e.replacement);
            }
            break;
        }
    }

    ProviderReply reply;
    if (fence_) {
        reply.text = "Here is the revised file:\n\n```" + prompt.language_tag + "\n" + body;
        if (!body.empty() && !ends_with_newline(body)) reply.text += '\n';
        reply.text += "```\n";
    } else {
        reply.text = body;
    }
    reply.usage.prompt_tokens =
        static_cast<std::int64_t>(estimate_tokens(prompt.system_text) + estimate_tokens(prompt.user_text));
    reply.usage.completion_tokens = static_cast<std::int64_t>(estimate_tokens(reply.text));
    return reply;
}

}  // namespace wall
