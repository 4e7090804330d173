#pragma once

#include <string>

#include "wall/gateway.hpp"

namespace wall {

/// Chat-completions client for OpenAI-compatible endpoints.
class OpenAiProvider : public Provider {
public:
    /// `base_url` like "https://api.openai.com"; requests go to
    /// `<base_url>/v1/chat/completions`.
    OpenAiProvider(std::string base_url, std::string api_key);

    /// Reads the key from `env_var`. Throws ProviderAuthError if unset.
    static OpenAiProvider from_env(std::string base_url, const std::string& env_var);

    std::string_view name() const override { return "openai"; }
    ProviderReply complete(const PromptSpec& prompt, std::string_view model_id,
                           const SamplingParams& params) override;

    /// Request body sent for `prompt` (exposed for tests).
    static std::string request_body(const PromptSpec& prompt, std::string_view model_id,
                                    const SamplingParams& params);

private:
    std::string base_url_;
    std::string path_prefix_;
    std::string api_key_;
};

}  // namespace wall
