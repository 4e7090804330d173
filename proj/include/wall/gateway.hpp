#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wall/decimal.hpp"
#include "wall/errors.hpp"
#include "wall/prompt.hpp"

namespace wall {

struct TokenUsage {
    std::int64_t prompt_tokens = 0;
    std::int64_t completion_tokens = 0;

    TokenUsage& operator+=(const TokenUsage& o) {
        prompt_tokens += o.prompt_tokens;
        completion_tokens += o.completion_tokens;
        return *this;
    }
    friend TokenUsage operator+(TokenUsage a, const TokenUsage& b) { return a += b; }
    friend bool operator==(const TokenUsage&, const TokenUsage&) = default;
};

struct ModelPricing {
    std::string model_id;
    UnitPrice input_price_per_1k;
    UnitPrice output_price_per_1k;
};

/// prompt/1000 * input + completion/1000 * output, rounded half-up to
/// four decimal places.
Money compute_cost(const TokenUsage& usage, const ModelPricing& pricing);

/// Per-model prices, loaded from `model_id,input_price_per_1k,output_price_per_1k` rows.
class PricingTable {
public:
    static PricingTable parse(std::string_view csv);
    static PricingTable load(const std::filesystem::path& path);

    void set(ModelPricing pricing);
    const ModelPricing* find(std::string_view model_id) const;
    std::vector<std::string> model_ids() const;

private:
    std::map<std::string, ModelPricing, std::less<>> prices_;
};

// ---- errors -----------------------------------------------------------------

/// Base for completion failures. Carries the attempt count and the tokens
/// the provider billed before giving up.
class GatewayError : public Error {
public:
    GatewayError(const std::string& what, bool transient = false) : Error(what), transient_(transient) {}
    bool transient() const noexcept { return transient_; }
    int attempts() const noexcept { return attempts_; }
    const TokenUsage& billed() const noexcept { return billed_; }
    void set_attempts(int n) { attempts_ = n; }
    void set_billed(TokenUsage u) { billed_ = u; }

private:
    bool transient_;
    int attempts_ = 1;
    TokenUsage billed_;
};

class ProviderAuthError : public GatewayError {
public:
    explicit ProviderAuthError(const std::string& what) : GatewayError(what, false) {}
};

class RateLimited : public GatewayError {
public:
    explicit RateLimited(const std::string& what) : GatewayError(what, true) {}
};

class ProviderError : public GatewayError {
public:
    using GatewayError::GatewayError;
};

class UnknownModel : public GatewayError {
public:
    explicit UnknownModel(const std::string& what) : GatewayError(what, false) {}
};

// ---- providers --------------------------------------------------------------

struct SamplingParams {
    double temperature = 0.0;
    std::optional<std::int64_t> seed = 0;
    std::chrono::milliseconds timeout{120'000};
};

struct ProviderReply {
    std::string text;
    TokenUsage usage;
};

class Provider {
public:
    virtual ~Provider() = default;
    virtual std::string_view name() const = 0;
    /// One request, no retries. Throws GatewayError subclasses.
    virtual ProviderReply complete(const PromptSpec& prompt, std::string_view model_id,
                                   const SamplingParams& params) = 0;
};

struct CompletionResult {
    std::string text;
    TokenUsage usage;
    std::string model_id;
    std::int64_t latency_ms = 0;
    int attempts = 1;
};

struct RetryPolicy {
    int max_attempts = 3;
    std::chrono::milliseconds base_delay{500};
    double multiplier = 2.0;
    std::chrono::milliseconds max_delay{8'000};
};

struct ProviderLimits {
    int max_in_flight = 4;
    double requests_per_second = 0.0;  // 0 disables the token bucket
    double burst = 1.0;
};

/// Blocking counting limiter plus token bucket, shared by every request
/// that goes to one provider.
class RequestLimiter {
public:
    explicit RequestLimiter(ProviderLimits limits);

    class Permit {
    public:
        explicit Permit(RequestLimiter* owner) : owner_(owner) {}
        Permit(Permit&& o) noexcept : owner_(std::exchange(o.owner_, nullptr)) {}
        Permit(const Permit&) = delete;
        Permit& operator=(const Permit&) = delete;
        Permit& operator=(Permit&&) = delete;
        ~Permit() {
            if (owner_) owner_->release();
        }

    private:
        RequestLimiter* owner_;
    };

    Permit acquire();
    int in_flight() const;
    int peak_in_flight() const;

private:
    void release();

    ProviderLimits limits_;
    mutable std::mutex mu_;
    std::condition_variable cv_;
    int in_flight_ = 0;
    int peak_ = 0;
    double tokens_;
    std::chrono::steady_clock::time_point last_refill_;
};

/// Routes completion requests to registered providers with retry,
/// concurrency limits, and cost lookup. Safe to share across threads once
/// configured.
class Gateway {
public:
    explicit Gateway(PricingTable pricing = {}, RetryPolicy retry = {}, SamplingParams sampling = {});

    void register_provider(std::shared_ptr<Provider> provider, ProviderLimits limits = {});
    /// Routes `model_id` to a previously registered provider.
    void register_model(const std::string& model_id, std::string_view provider_name);

    bool has_model(std::string_view model_id) const;
    std::vector<std::string> models() const;
    const PricingTable& pricing() const { return pricing_; }
    const RetryPolicy& retry_policy() const { return retry_; }

    /// Throws UnknownModel, ProviderAuthError, RateLimited, ProviderError.
    CompletionResult complete(const PromptSpec& prompt, std::string_view model_id);

    /// Cost of `usage` at `model_id`'s price; zero for unpriced models.
    Money cost_of(const TokenUsage& usage, std::string_view model_id) const;

    /// Replaces the sleep used between retries (tests inject a recorder).
    void set_sleeper(std::function<void(std::chrono::milliseconds)> sleeper) { sleeper_ = std::move(sleeper); }

private:
    struct Route {
        std::shared_ptr<Provider> provider;
        std::shared_ptr<RequestLimiter> limiter;
    };

    PricingTable pricing_;
    RetryPolicy retry_;
    SamplingParams sampling_;
    std::map<std::string, Route, std::less<>> providers_;
    std::map<std::string, std::string, std::less<>> models_;
    std::function<void(std::chrono::milliseconds)> sleeper_;
};

/// Pulls the code out of a model response. A single fenced block yields its
/// interior, several yield the longest (by line count, first on ties), none
/// yields the text itself. The result ends in exactly one line terminator
/// (empty stays empty).
std::string extract_code(std::string_view response_text);

}  // namespace wall
