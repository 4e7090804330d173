#include "wall/gateway.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "wall/log.hpp"
#include "wall/text.hpp"

namespace wall {

Money compute_cost(const TokenUsage& usage, const ModelPricing& pricing) {
    // prices are 1e-9 USD per 1k tokens; tokens * price is in 1e-12 USD.
    const __int128 exact = static_cast<__int128>(usage.prompt_tokens) * pricing.input_price_per_1k.units() +
                           static_cast<__int128>(usage.completion_tokens) * pricing.output_price_per_1k.units();
    constexpr __int128 kToMoneyUnits = static_cast<__int128>(1000) * (UnitPrice::kScale / Money::kScale);
    return Money::from_units(detail::round_half_up_div(exact, kToMoneyUnits));
}

// ---- pricing ---------------------------------------------------------------

PricingTable PricingTable::parse(std::string_view csv) {
    PricingTable table;
    std::istringstream in{std::string(csv)};
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view row = trim(line);
        if (row.empty() || row.starts_with('#')) continue;
        if (!header_seen) {
            header_seen = true;
            if (row != "model_id,input_price_per_1k,output_price_per_1k") {
                throw InvalidArgument("pricing file: unexpected header '" + std::string(row) + "'");
            }
            continue;
        }
        std::vector<std::string_view> cells;
        std::size_t start = 0;
        while (true) {
            const auto comma = row.find(',', start);
            cells.push_back(trim(row.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        const auto where = "pricing file line " + std::to_string(line_no);
        if (cells.size() != 3 || cells[0].empty()) throw InvalidArgument(where + ": expected 3 fields");
        ModelPricing p{std::string(cells[0]), UnitPrice::parse(cells[1]), UnitPrice::parse(cells[2])};
        if (p.input_price_per_1k < UnitPrice{} || p.output_price_per_1k < UnitPrice{}) {
            throw InvalidArgument(where + ": prices must be non-negative");
        }
        table.set(std::move(p));
    }
    return table;
}

PricingTable PricingTable::load(const std::filesystem::path& path) { return parse(read_file(path)); }

void PricingTable::set(ModelPricing pricing) {
    if (pricing.model_id.empty()) throw InvalidArgument("pricing model_id must not be empty");
    std::string key = pricing.model_id;
    prices_.insert_or_assign(std::move(key), std::move(pricing));
}

const ModelPricing* PricingTable::find(std::string_view model_id) const {
    const auto it = prices_.find(model_id);
    return it == prices_.end() ? nullptr : &it->second;
}

std::vector<std::string> PricingTable::model_ids() const {
    std::vector<std::string> out;
    for (const auto& [id, _] : prices_) out.push_back(id);
    return out;
}

// ---- limiter ---------------------------------------------------------------

RequestLimiter::RequestLimiter(ProviderLimits limits)
    : limits_(limits), tokens_(std::max(1.0, limits.burst)), last_refill_(std::chrono::steady_clock::now()) {
    if (limits_.max_in_flight < 1) limits_.max_in_flight = 1;
}

RequestLimiter::Permit RequestLimiter::acquire() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return in_flight_ < limits_.max_in_flight; });
    if (limits_.requests_per_second > 0.0) {
        const double capacity = std::max(1.0, limits_.burst);
        while (true) {
            const auto now = std::chrono::steady_clock::now();
            const std::chrono::duration<double> elapsed = now - last_refill_;
            tokens_ = std::min(capacity, tokens_ + elapsed.count() * limits_.requests_per_second);
            last_refill_ = now;
            if (tokens_ >= 1.0) break;
            const auto wait = std::chrono::duration<double>((1.0 - tokens_) / limits_.requests_per_second);
            cv_.wait_for(lock, wait);
        }
        tokens_ -= 1.0;
    }
    ++in_flight_;
    peak_ = std::max(peak_, in_flight_);
    return Permit(this);
}

void RequestLimiter::release() {
    {
        std::lock_guard lock(mu_);
        --in_flight_;
    }
    cv_.notify_all();
}

int RequestLimiter::in_flight() const {
    std::lock_guard lock(mu_);
    return in_flight_;
}

int RequestLimiter::peak_in_flight() const {
    std::lock_guard lock(mu_);
    return peak_;
}

// ---- gateway ---------------------------------------------------------------

Gateway::Gateway(PricingTable pricing, RetryPolicy retry, SamplingParams sampling)
    : pricing_(std::move(pricing)),
      retry_(retry),
      sampling_(sampling),
      sleeper_([](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); }) {
    if (retry_.max_attempts < 1) retry_.max_attempts = 1;
}

void Gateway::register_provider(std::shared_ptr<Provider> provider, ProviderLimits limits) {
    if (!provider) throw InvalidArgument("null provider");
    std::string name(provider->name());
    providers_.insert_or_assign(std::move(name), Route{std::move(provider), std::make_shared<RequestLimiter>(limits)});
}

void Gateway::register_model(const std::string& model_id, std::string_view provider_name) {
    if (providers_.find(provider_name) == providers_.end()) {
        throw InvalidArgument("model '" + model_id + "' routed to unknown provider '" + std::string(provider_name) + "'");
    }
    models_.insert_or_assign(model_id, std::string(provider_name));
}

bool Gateway::has_model(std::string_view model_id) const { return models_.find(model_id) != models_.end(); }

std::vector<std::string> Gateway::models() const {
    std::vector<std::string> out;
    for (const auto& [id, _] : models_) out.push_back(id);
    return out;
}

Money Gateway::cost_of(const TokenUsage& usage, std::string_view model_id) const {
    const auto* p = pricing_.find(model_id);
    return p ? compute_cost(usage, *p) : Money{};
}

CompletionResult Gateway::complete(const PromptSpec& prompt, std::string_view model_id) {
    const auto model = models_.find(model_id);
    if (model == models_.end()) throw UnknownModel("model '" + std::string(model_id) + "' is not registered");
    const Route& route = providers_.find(model->second)->second;

    const auto started = std::chrono::steady_clock::now();
    TokenUsage billed;
    auto delay = retry_.base_delay;
    for (int attempt = 1;; ++attempt) {
        try {
            ProviderReply reply;
            {
                auto permit = route.limiter->acquire();
                reply = route.provider->complete(prompt, model_id, sampling_);
            }
            CompletionResult result;
            result.text = std::move(reply.text);
            result.usage = billed + reply.usage;
            result.model_id = std::string(model_id);
            result.attempts = attempt;
            result.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - started)
                                    .count();
            return result;
        } catch (GatewayError& e) {
            billed += e.billed();
            if (!e.transient() || attempt >= retry_.max_attempts) {
                e.set_attempts(attempt);
                e.set_billed(billed);
                throw;
            }
            log().warn("{} attempt {}/{} failed: {}", model_id, attempt, retry_.max_attempts, e.what());
            sleeper_(delay);
            delay = std::min(retry_.max_delay,
                             std::chrono::milliseconds(static_cast<std::int64_t>(delay.count() * retry_.multiplier)));
        }
    }
}

}  // namespace wall
