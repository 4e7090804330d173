#include <nlohmann/json.hpp>

#include "wall/orchestrator.hpp"

namespace wall {

namespace {
constexpr auto kReplace = nlohmann::json::error_handler_t::replace;
}

nlohmann::json to_json(const RevisionResult& r, bool include_content) {
    nlohmann::json j;
    j["file_location"] = r.file_location;
    j["model_id"] = r.model_id;
    j["status"] = to_string(r.status);
    j["failure"] = r.failure == FailureKind::None ? nlohmann::json(nullptr) : nlohmann::json(to_string(r.failure));
    j["diagnostic"] = r.diagnostic;
    j["attempts"] = r.attempts;
    j["usage"] = {{"prompt_tokens", r.usage.prompt_tokens}, {"completion_tokens", r.usage.completion_tokens}};
    j["cost"] = r.cost.to_string();
    j["issues_targeted"] = r.issues_targeted.size();
    j["issues"] = nlohmann::json::array();
    for (const auto& i : r.issues_targeted) {
        j["issues"].push_back({{"line", i.line}, {"message", i.message}, {"type", to_string(i.type)}});
    }
    if (r.status != RevisionStatus::Failed) {
        j["output"] = revised_output_path("", r.file_location).generic_string();
    } else {
        j["output"] = nullptr;
    }
    if (include_content) j["revised_content"] = r.revised_content;
    return j;
}

namespace {

nlohmann::json run_json(const RevisionRun& run) {
    nlohmann::json j;
    j["output_root"] = run.output_root.filename().generic_string();
    j["files_written"] = run.files_written;
    j["total_cost"] = run.total_cost().to_string();
    j["counts"] = {{"Revised", run.count(RevisionStatus::Revised)},
                   {"Unchanged", run.count(RevisionStatus::Unchanged)},
                   {"Failed", run.count(RevisionStatus::Failed)}};
    j["results"] = nlohmann::json::array();
    for (const auto& r : run.results) j["results"].push_back(to_json(r));
    return j;
}

}  // namespace

std::string manifest_json(const RevisionRun& run, std::string_view stage) {
    nlohmann::json j;
    j["stage"] = stage;
    j["run"] = run_json(run);
    return j.dump(2, ' ', false, kReplace) + "\n";
}

std::string hybrid_manifest_json(const HybridOutcome& outcome) {
    nlohmann::json j;
    j["stage"] = "hybrid";
    j["stage1"] = run_json(outcome.stage1);
    j["rescan_issues"] = outcome.rescan.size();
    j["stage2"] = run_json(outcome.stage2);
    j["final_rescan_issues"] = outcome.final_rescan.size();
    j["per_type"] = nlohmann::json::object();
    for (const auto& [type, t] : outcome.per_type) {
        j["per_type"][std::string(to_string(type))] = {
            {"total", t.total},
            {"resolved_stage1", t.resolved_stage1},
            {"remaining_after_stage1", t.remaining_after_stage1},
            {"resolved_stage2", t.resolved_stage2},
            {"unresolved", t.unresolved},
            {"cost_stage1", t.cost_stage1.to_string()},
            {"cost_stage2", t.cost_stage2.to_string()},
        };
    }
    return j.dump(2, ' ', false, kReplace) + "\n";
}

}  // namespace wall
