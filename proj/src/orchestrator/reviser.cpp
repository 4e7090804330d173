#include "wall/orchestrator.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <tuple>

#include "wall/errors.hpp"
#include "wall/log.hpp"
#include "wall/text.hpp"

namespace wall {

namespace fs = std::filesystem;

std::size_t RevisionRun::count(RevisionStatus s) const {
    return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [&](const auto& r) { return r.status == s; }));
}

Money RevisionRun::total_cost() const {
    Money total;
    for (const auto& r : results) total += r.cost;
    return total;
}

std::vector<std::pair<std::string, std::vector<IssueRecord>>> group_by_file(std::span<const IssueRecord> issues) {
    std::map<std::string, std::vector<IssueRecord>> grouped;
    for (const auto& i : issues) grouped[i.file_location].push_back(i);
    std::vector<std::pair<std::string, std::vector<IssueRecord>>> out;
    for (auto& [loc, list] : grouped) {
        sort_issues(list);
        out.emplace_back(loc, std::move(list));
    }
    return out;
}

std::map<IssueType, Money> apportion_cost(Money cost, std::span<const IssueRecord> issues) {
    std::map<IssueType, std::int64_t> counts;
    for (const auto& i : issues) ++counts[i.type];
    std::map<IssueType, Money> out;
    if (issues.empty()) return out;
    const auto n = static_cast<std::int64_t>(issues.size());
    std::int64_t assigned = 0;
    std::vector<std::tuple<std::int64_t, int, IssueType>> remainders;
    for (const auto& [type, count] : counts) {
        const __int128 share = static_cast<__int128>(cost.units()) * count;
        const auto base = static_cast<std::int64_t>(share / n);
        const auto rem = static_cast<std::int64_t>(share % n);
        out[type] = Money::from_units(base);
        assigned += base;
        remainders.emplace_back(-rem, static_cast<int>(type), type);
    }
    std::sort(remainders.begin(), remainders.end());
    std::int64_t left = cost.units() - assigned;
    for (std::size_t i = 0; left > 0; i = (i + 1) % remainders.size(), --left) {
        out[std::get<2>(remainders[i])] += Money::from_units(1);
    }
    return out;
}

Reviser::Reviser(Gateway& gateway, const PromptBuilder& prompts, ReviserOptions options)
    : gateway_(gateway), prompts_(prompts), options_(options) {
    if (options_.workers < 1) options_.workers = 1;
}

namespace {

/// Gives the extracted code the original's line-terminator conventions.
std::string conform_to_original(std::string code, std::string_view original) {
    if (original.empty() || code.empty()) return code;
    if (detect_terminator(original) == "\r\n" && code.find('\r') == std::string::npos) {
        std::string converted;
        converted.reserve(code.size() + code.size() / 16);
        for (char c : code) {
            if (c == '\n') converted += '\r';
            converted += c;
        }
        code = std::move(converted);
    }
    if (!ends_with_newline(original)) {
        while (!code.empty() && (code.back() == '\n' || code.back() == '\r')) code.pop_back();
    }
    return code;
}

RevisionResult failed_result(const std::string& location, std::string_view model_id,
                             std::span<const IssueRecord> issues, FailureKind failure, std::string diagnostic) {
    RevisionResult r;
    r.file_location = location;
    r.model_id = std::string(model_id);
    r.status = RevisionStatus::Failed;
    r.failure = failure;
    r.diagnostic = std::move(diagnostic);
    r.issues_targeted.assign(issues.begin(), issues.end());
    return r;
}

}  // namespace

RevisionResult Reviser::revise_content(std::string_view original, std::span<const IssueRecord> issues,
                                       std::string_view model_id, RevisionMode mode,
                                       const std::optional<std::string>& override) const {
    RevisionResult result;
    result.model_id = std::string(model_id);
    result.issues_targeted.assign(issues.begin(), issues.end());
    PromptSpec prompt;
    try {
        prompt = prompts_.build(original, issues, mode, override);
    } catch (const PromptTooLarge& e) {
        return failed_result(issues.empty() ? std::string() : issues.front().file_location, model_id, issues,
                             FailureKind::PromptTooLarge, e.what());
    }
    result.file_location = prompt.file_location;

    try {
        const CompletionResult completion = gateway_.complete(prompt, model_id);
        result.usage = completion.usage;
        result.cost = gateway_.cost_of(completion.usage, model_id);
        result.attempts = completion.attempts;
        std::string code = conform_to_original(extract_code(completion.text), original);
        if (code.empty() && !original.empty()) {
            result.status = RevisionStatus::Failed;
            result.failure = FailureKind::Provider;
            result.diagnostic = "model returned an empty file";
            return result;
        }
        result.status = code == original ? RevisionStatus::Unchanged : RevisionStatus::Revised;
        result.revised_content = std::move(code);
    } catch (const GatewayError& e) {
        result.status = RevisionStatus::Failed;
        result.failure = FailureKind::Provider;
        result.diagnostic = e.what();
        result.attempts = e.attempts();
        result.usage = e.billed();
        result.cost = gateway_.cost_of(e.billed(), model_id);
    }
    return result;
}

RevisionResult Reviser::revise_file(const fs::path& project_root, std::string_view file_location,
                                    std::span<const IssueRecord> issues, std::string_view model_id, RevisionMode mode,
                                    const std::optional<std::string>& override) const {
    if (issues.empty()) throw EmptyIssueList("no issues for " + std::string(file_location));
    const std::string location = normalize_location(file_location);
    for (const auto& i : issues) {
        if (i.file_location != location) throw MixedFiles("issue for '" + i.file_location + "' passed for '" + location + "'");
    }
    const fs::path path = project_root / location;
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        return failed_result(location, model_id, issues, FailureKind::MissingFile,
                             "file not found under project root: " + location);
    }
    std::string content;
    try {
        content = read_file(path);
    } catch (const IoError& e) {
        return failed_result(location, model_id, issues, FailureKind::Io, e.what());
    }
    return revise_content(content, issues, model_id, mode, override);
}

std::vector<RevisionResult> Reviser::run_files(
    const std::vector<std::pair<std::string, std::vector<IssueRecord>>>& groups, const ContentReader& read,
    std::string_view model_id) const {
    std::vector<RevisionResult> results(groups.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < groups.size(); i = next++) {
            const auto& [location, issues] = groups[i];
            RevisionResult r;
            try {
                const auto content = read(location);
                r = content ? revise_content(*content, issues, model_id, RevisionMode::Batch)
                            : failed_result(location, model_id, issues, FailureKind::MissingFile,
                                            "file not found under project root: " + location);
            } catch (const PromptTooLarge& e) {
                r = failed_result(location, model_id, issues, FailureKind::PromptTooLarge, e.what());
            } catch (const IoError& e) {
                r = failed_result(location, model_id, issues, FailureKind::Io, e.what());
            }
            if (r.failure == FailureKind::MissingFile || r.failure == FailureKind::PromptTooLarge ||
                r.failure == FailureKind::Io) {
                log().warn("{}: {}", location, r.diagnostic);
            }
            results[i] = std::move(r);
        }
    };
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(options_.workers), groups.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return results;
}

namespace {

/// Prepares an output root for a fresh run. Only directories named
/// `*.Revised` are cleared; anything else must be empty or absent.
void reset_output_root(const fs::path& root) {
    std::error_code ec;
    if (!fs::exists(root, ec)) return;
    if (root.filename().string().ends_with(".Revised")) {
        fs::remove_all(root, ec);
        if (ec) throw IoError("cannot clear " + root.string() + ": " + ec.message());
        return;
    }
    if (!fs::is_directory(root, ec) || !fs::is_empty(root, ec)) {
        throw IoError("output directory " + root.string() + " exists and is not an empty directory");
    }
}

std::size_t write_results(const std::vector<RevisionResult>& results, const fs::path& output_root) {
    std::size_t written = 0;
    for (const auto& r : results) {
        if (r.status == RevisionStatus::Failed) continue;
        write_file(revised_output_path(output_root, r.file_location), r.revised_content);
        ++written;
    }
    return written;
}

std::optional<std::string> read_project_file(const fs::path& root, const std::string& location) {
    const fs::path path = root / location;
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) return std::nullopt;
    return read_file(path);
}

}  // namespace

RevisionRun Reviser::revise_all(std::span<const IssueRecord> issues, const fs::path& project_root,
                                std::string_view model_id, const fs::path& output_root) const {
    RevisionRun run;
    run.output_root = output_root.empty() ? default_revised_root(project_root) : output_root;
    if (issues.empty()) return run;
    const auto groups = group_by_file(issues);
    run.results = run_files(groups, [&](const std::string& loc) { return read_project_file(project_root, loc); },
                            model_id);
    reset_output_root(run.output_root);
    run.files_written = write_results(run.results, run.output_root);
    return run;
}

namespace {

using IssueKey = std::tuple<std::string, std::string, IssueType>;

std::map<IssueKey, std::int64_t> count_keys(std::span<const IssueRecord> issues) {
    std::map<IssueKey, std::int64_t> out;
    for (const auto& i : issues) ++out[{i.file_location, i.message, i.type}];
    return out;
}

struct RescanDir {
    fs::path path;
    ~RescanDir() {
        std::error_code ec;
        if (!path.empty()) fs::remove_all(path, ec);
    }
};

std::vector<IssueRecord> rescan(AnalysisProvider& analyzer, const fs::path& project_root,
                                const std::map<std::string, std::string>& overlay, const fs::path& output_root) {
    RescanDir dir{output_root.parent_path() / ("." + output_root.filename().string() + ".rescan")};
    std::error_code ec;
    fs::remove_all(dir.path, ec);
    materialize_overlay(project_root, overlay, dir.path);
    return analyzer.analyze(dir.path);
}

}  // namespace

HybridOutcome Reviser::hybrid_pipeline(std::span<const IssueRecord> issues, const fs::path& project_root,
                                       std::string_view cheap_model, std::string_view advanced_model,
                                       AnalysisProvider& analyzer, const fs::path& output_root) const {
    HybridOutcome out;
    const fs::path out_root = output_root.empty() ? default_revised_root(project_root) : output_root;
    out.stage1.output_root = out_root;
    out.stage2.output_root = out_root;

    for (const auto& i : issues) ++out.per_type[i.type].total;
    if (issues.empty()) return out;

    // Stage 1: cheap model over every file with issues.
    const auto groups = group_by_file(issues);
    out.stage1.results = run_files(
        groups, [&](const std::string& loc) { return read_project_file(project_root, loc); }, cheap_model);
    reset_output_root(out_root);
    out.stage1.files_written = write_results(out.stage1.results, out_root);

    std::map<std::string, std::string> overlay;
    std::set<std::string> missing;
    for (const auto& r : out.stage1.results) {
        if (r.status != RevisionStatus::Failed) overlay[r.file_location] = r.revised_content;
        if (r.failure == FailureKind::MissingFile) missing.insert(r.file_location);
    }
    out.rescan = rescan(analyzer, project_root, overlay, out_root);

    // Remaining original issues, matched by (file, message, type).
    const auto original = count_keys(issues);
    const auto after1 = count_keys(out.rescan);
    std::map<IssueKey, std::int64_t> remaining;
    for (const auto& [key, n0] : original) {
        std::int64_t n1 = 0;
        if (missing.count(std::get<0>(key))) {
            n1 = n0;
        } else if (const auto it = after1.find(key); it != after1.end()) {
            n1 = std::min(n0, it->second);
        }
        remaining[key] = n1;
        auto& t = out.per_type[std::get<2>(key)];
        t.resolved_stage1 += n0 - n1;
        t.remaining_after_stage1 += n1;
    }

    // Stage 2: advanced model over files whose original issues survived,
    // prompting with the rescan's current line numbers.
    std::vector<IssueRecord> stage2_issues;
    {
        auto budget = remaining;
        for (const auto& i : out.rescan) {
            if (missing.count(i.file_location)) continue;
            auto it = budget.find({i.file_location, i.message, i.type});
            if (it == budget.end() || it->second == 0) continue;
            --it->second;
            stage2_issues.push_back(i);
        }
    }
    const auto groups2 = group_by_file(stage2_issues);
    out.stage2.results = run_files(
        groups2,
        [&](const std::string& loc) -> std::optional<std::string> {
            if (const auto it = overlay.find(loc); it != overlay.end()) return it->second;
            return read_project_file(project_root, loc);
        },
        advanced_model);
    out.stage2.files_written = write_results(out.stage2.results, out_root);

    for (const auto& r : out.stage2.results) {
        if (r.status != RevisionStatus::Failed) overlay[r.file_location] = r.revised_content;
    }
    out.final_rescan = groups2.empty() ? out.rescan : rescan(analyzer, project_root, overlay, out_root);

    const auto after2 = count_keys(out.final_rescan);
    for (const auto& [key, n1] : remaining) {
        std::int64_t n2 = 0;
        if (missing.count(std::get<0>(key))) {
            n2 = n1;
        } else if (const auto it = after2.find(key); it != after2.end()) {
            n2 = std::min(n1, it->second);
        }
        auto& t = out.per_type[std::get<2>(key)];
        t.resolved_stage2 += n1 - n2;
        t.unresolved += n2;
    }

    for (const auto& r : out.stage1.results) {
        for (const auto& [type, cost] : apportion_cost(r.cost, r.issues_targeted)) out.per_type[type].cost_stage1 += cost;
    }
    for (const auto& r : out.stage2.results) {
        for (const auto& [type, cost] : apportion_cost(r.cost, r.issues_targeted)) out.per_type[type].cost_stage2 += cost;
    }

    for (const auto& [type, t] : out.per_type) {
        if (t.total == 0) continue;
        out.ledger.set(type, Strategy::CheapOnly, {t.total, t.resolved_stage1, t.cost_stage1});
        out.ledger.set(type, Strategy::AdvancedOnRemaining, {t.remaining_after_stage1, t.resolved_stage2, t.cost_stage2});
        out.ledger.set(type, Strategy::Hybrid,
                       {t.total, t.resolved_stage1 + t.resolved_stage2, hybrid_cost(t.cost_stage1, t.cost_stage2)});
    }
    out.ledger.validate();
    return out;
}

SingleModelOutcome Reviser::single_model(std::span<const IssueRecord> issues, const fs::path& project_root,
                                         std::string_view model_id, AnalysisProvider* analyzer,
                                         const fs::path& output_root) const {
    SingleModelOutcome out;
    out.run = revise_all(issues, project_root, model_id, output_root);
    for (const auto& i : issues) ++out.per_type[i.type].issues_total;

    std::set<std::string> missing;
    std::map<std::string, std::string> overlay;
    for (const auto& r : out.run.results) {
        if (r.failure == FailureKind::MissingFile) missing.insert(r.file_location);
        if (r.status != RevisionStatus::Failed) overlay[r.file_location] = r.revised_content;
        for (const auto& [type, cost] : apportion_cost(r.cost, r.issues_targeted)) out.per_type[type].cost += cost;
    }

    if (analyzer == nullptr) {
        for (const auto& r : out.run.results) {
            if (r.status != RevisionStatus::Revised) continue;
            for (const auto& i : r.issues_targeted) ++out.per_type[i.type].issues_resolved;
        }
        return out;
    }

    if (!issues.empty()) {
        out.rescan = rescan(*analyzer, project_root, overlay, out.run.output_root);
        out.rescanned = true;
    }
    const auto after = count_keys(out.rescan);
    for (const auto& [key, n0] : count_keys(issues)) {
        std::int64_t left = n0;
        if (!missing.count(std::get<0>(key))) {
            const auto it = after.find(key);
            left = it == after.end() ? 0 : std::min(n0, it->second);
        }
        out.per_type[std::get<2>(key)].issues_resolved += n0 - left;
    }
    return out;
}

}  // namespace wall
