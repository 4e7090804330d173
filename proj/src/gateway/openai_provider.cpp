#include "wall/openai_provider.hpp"

#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace wall {

OpenAiProvider::OpenAiProvider(std::string base_url, std::string api_key) : api_key_(std::move(api_key)) {
    while (!base_url.empty() && base_url.back() == '/') base_url.pop_back();
    const auto scheme = base_url.find("://");
    if (scheme == std::string::npos) throw InvalidArgument("provider base URL must include a scheme: " + base_url);
    const auto path = base_url.find('/', scheme + 3);
    if (path != std::string::npos) {
        path_prefix_ = base_url.substr(path);
        base_url.resize(path);
    }
    base_url_ = std::move(base_url);
}

OpenAiProvider OpenAiProvider::from_env(std::string base_url, const std::string& env_var) {
    const char* key = std::getenv(env_var.c_str());
    if (!key || !*key) throw ProviderAuthError("environment variable " + env_var + " is not set");
    return OpenAiProvider(std::move(base_url), key);
}

std::string OpenAiProvider::request_body(const PromptSpec& prompt, std::string_view model_id,
                                         const SamplingParams& params) {
    nlohmann::json body;
    body["model"] = model_id;
    body["temperature"] = params.temperature;
    if (params.seed) body["seed"] = *params.seed;
    body["messages"] = nlohmann::json::array({
        {{"role", "system"}, {"content", prompt.system_text}},
        {{"role", "user"}, {"content", prompt.user_text}},
    });
    return body.dump();
}

ProviderReply OpenAiProvider::complete(const PromptSpec& prompt, std::string_view model_id,
                                       const SamplingParams& params) {
    httplib::Client client(base_url_);
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(params.timeout).count();
    client.set_connection_timeout(std::max<long long>(1, std::min<long long>(seconds, 30)));
    client.set_read_timeout(std::max<long long>(1, seconds));
    client.set_write_timeout(std::max<long long>(1, seconds));
    client.set_bearer_token_auth(api_key_);

    auto res = client.Post(path_prefix_ + "/v1/chat/completions", request_body(prompt, model_id, params),
                           "application/json");
    if (!res) throw ProviderError("chat completion request failed: " + httplib::to_string(res.error()), true);

    const int status = res->status;
    if (status == 401 || status == 403) throw ProviderAuthError("provider rejected API key (HTTP " + std::to_string(status) + ")");
    if (status == 429) throw RateLimited("provider rate limit (HTTP 429)");
    if (status >= 500) throw ProviderError("provider HTTP " + std::to_string(status), true);
    if (status != 200) {
        throw ProviderError("provider HTTP " + std::to_string(status) + ": " + res->body.substr(0, 300), false);
    }

    try {
        const auto j = nlohmann::json::parse(res->body);
        ProviderReply reply;
        const auto& content = j.at("choices").at(0).at("message").at("content");
        reply.text = content.is_string() ? content.get<std::string>() : std::string{};
        if (j.contains("usage")) {
            reply.usage.prompt_tokens = j["usage"].value("prompt_tokens", 0LL);
            reply.usage.completion_tokens = j["usage"].value("completion_tokens", 0LL);
        }
        return reply;
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("malformed completion response: ") + e.what(), false);
    }
}

}  // namespace wall
