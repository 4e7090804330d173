#include "wall/prompt.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <tuple>
#include <utility>

#include <nlohmann/json.hpp>

#include "wall/errors.hpp"
#include "wall/log.hpp"
#include "wall/text.hpp"

namespace wall {

std::string_view to_string(RevisionMode mode) { return mode == RevisionMode::Batch ? "batch" : "interactive"; }

std::optional<RevisionMode> parse_revision_mode(std::string_view token) {
    if (token == "batch") return RevisionMode::Batch;
    if (token == "interactive") return RevisionMode::Interactive;
    return std::nullopt;
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

constexpr std::array<std::pair<std::string_view, std::string_view>, 40> kExtensions{{
    {"py", "Python"},          {"pyi", "Python"},
    {"js", "JavaScript"},      {"mjs", "JavaScript"},
    {"cjs", "JavaScript"},     {"jsx", "JavaScript (React)"},
    {"ts", "TypeScript"},      {"tsx", "TypeScript (React)"},
    {"java", "Java"},          {"kt", "Kotlin"},
    {"scala", "Scala"},        {"cs", "C#"},
    {"c", "C"},                {"h", "C"},
    {"cc", "C++"},             {"cpp", "C++"},
    {"cxx", "C++"},            {"hpp", "C++"},
    {"hh", "C++"},             {"go", "Go"},
    {"rs", "Rust"},            {"rb", "Ruby"},
    {"php", "PHP"},            {"swift", "Swift"},
    {"yaml", "YAML"},          {"yml", "YAML"},
    {"json", "JSON"},          {"xml", "XML"},
    {"html", "HTML"},          {"htm", "HTML"},
    {"css", "CSS"},            {"scss", "SCSS"},
    {"sql", "SQL"},            {"sh", "Shell"},
    {"bash", "Shell"},         {"ps1", "PowerShell"},
    {"tf", "Terraform"},       {"bicep", "Bicep"},
    {"dockerfile", "Docker"},  {"vue", "Vue"},
}};

}  // namespace

std::string infer_language(std::string_view file_name) {
    const std::string base = lower(basename_of(file_name));
    if (base == "dockerfile" || base.starts_with("dockerfile.")) return "Docker";
    const auto dot = base.rfind('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == base.size()) return "plain text";
    const std::string_view ext = std::string_view(base).substr(dot + 1);
    for (const auto& [e, tag] : kExtensions) {
        if (e == ext) return std::string(tag);
    }
    return "plain text";
}

std::string language_family(std::string_view tag) {
    if (tag == "Python") return "Python";
    if (tag.starts_with("JavaScript") || tag.starts_with("TypeScript") || tag == "Vue") return "JavaScript";
    if (tag == "Java" || tag == "Kotlin" || tag == "Scala") return "Java";
    if (tag == "C" || tag == "C++" || tag == "C#") return "C-family";
    if (tag == "YAML" || tag == "JSON" || tag == "XML" || tag == "Docker" || tag == "Terraform" || tag == "Bicep") {
        return "Configuration";
    }
    return "generic";
}

// ---- template ------------------------------------------------------------

PromptTemplate PromptTemplate::parse(std::string_view text) {
    PromptTemplate t;
    enum class Section { None, System, User } section = Section::None;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        if (first) {
            first = false;
            if (line.starts_with("# wall-prompt-template ")) {
                t.version_ = std::string(trim(line.substr(23)));
                continue;
            }
        }
        if (line == "[system]") {
            section = Section::System;
            continue;
        }
        if (line == "[user]") {
            section = Section::User;
            continue;
        }
        std::string* target = section == Section::System ? &t.system_ : section == Section::User ? &t.user_ : nullptr;
        if (!target) {
            if (!trim(line).empty() && !line.starts_with('#')) {
                throw InvalidArgument("prompt template: text outside [system]/[user] sections");
            }
            continue;
        }
        target->append(line);
        target->push_back('\n');
    }
    // Trailing blank lines are layout, not content.
    for (std::string* s : {&t.system_, &t.user_}) {
        while (s->size() >= 2 && s->ends_with("\n\n")) s->pop_back();
    }
    for (std::string_view required : {"{{file_content}}", "{{issue_table}}", "{{language}}", "{{examples}}"}) {
        if (t.user_.find(required) == std::string::npos) {
            throw InvalidArgument("prompt template: [user] section lacks " + std::string(required));
        }
    }
    if (t.version_.empty()) throw InvalidArgument("prompt template: missing '# wall-prompt-template <version>' line");
    return t;
}

PromptTemplate PromptTemplate::load(const std::filesystem::path& path) { return parse(read_file(path)); }

// ---- few-shot registry ---------------------------------------------------

FewShotRegistry FewShotRegistry::parse(std::string_view jsonl) {
    FewShotRegistry reg;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < jsonl.size()) {
        auto nl = jsonl.find('\n', pos);
        const std::string_view line = trim(jsonl.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? jsonl.size() : nl + 1;
        ++line_no;
        if (line.empty() || line.starts_with('#')) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            reg.add(FewShotExample{j.at("family").get<std::string>(), j.at("flawed").get<std::string>(),
                                   j.at("message").get<std::string>(), j.at("fixed").get<std::string>()});
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument("few-shot registry line " + std::to_string(line_no) + ": " + e.what());
        } catch (const InvalidArgument& e) {
            throw InvalidArgument("few-shot registry line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return reg;
}

FewShotRegistry FewShotRegistry::load(const std::filesystem::path& path) { return parse(read_file(path)); }

void FewShotRegistry::add(FewShotExample example) {
    if (example.language_tag.empty() || example.flawed_snippet.empty() || example.issue_message.empty() ||
        example.fixed_snippet.empty()) {
        throw InvalidArgument("few-shot example fields must be non-empty");
    }
    examples_.push_back(std::move(example));
}

std::vector<FewShotExample> FewShotRegistry::examples_for(std::string_view language_tag) const {
    const std::string family = language_family(language_tag);
    std::vector<FewShotExample> out;
    for (const auto& e : examples_) {
        if (e.language_tag == family) out.push_back(e);
    }
    if (out.empty()) {
        for (const auto& e : examples_) {
            if (e.language_tag == "generic") out.push_back(e);
        }
    }
    return out;
}

// ---- builder ---------------------------------------------------------------

std::size_t estimate_tokens(std::string_view text) { return (text.size() + 3) / 4; }

std::string render_issue_table(std::span<const IssueRecord> issues) {
    std::vector<const IssueRecord*> sorted;
    for (const auto& i : issues) sorted.push_back(&i);
    std::stable_sort(sorted.begin(), sorted.end(), [](const IssueRecord* a, const IssueRecord* b) {
        return std::tie(a->line, a->message) < std::tie(b->line, b->message);
    });
    std::string out;
    for (const auto* i : sorted) {
        out += "- line " + std::to_string(i->line) + ": " + i->message + " (" + std::string(to_string(i->type)) + ")\n";
    }
    return out;
}

namespace {

std::string render_examples(const std::vector<FewShotExample>& examples) {
    if (examples.empty()) return "(no examples)\n";
    std::string out;
    int n = 0;
    for (const auto& e : examples) {
        out += "Example " + std::to_string(++n) + " - issue: " + e.issue_message + "\n";
        out += "Before:\n```\n" + e.flawed_snippet;
        if (!ends_with_newline(e.flawed_snippet)) out += '\n';
        out += "```\nAfter:\n```\n" + e.fixed_snippet;
        if (!ends_with_newline(e.fixed_snippet)) out += '\n';
        out += "```\n";
    }
    return out;
}

/// Single left-to-right pass, so placeholder-looking text inside the
/// substituted values is never expanded again.
std::string substitute(std::string_view tmpl, const std::vector<std::pair<std::string_view, std::string_view>>& vars) {
    std::string out;
    std::size_t pos = 0;
    while (pos < tmpl.size()) {
        const auto open = tmpl.find("{{", pos);
        if (open == std::string_view::npos) {
            out.append(tmpl.substr(pos));
            break;
        }
        out.append(tmpl.substr(pos, open - pos));
        const auto close = tmpl.find("}}", open + 2);
        if (close == std::string_view::npos) {
            out.append(tmpl.substr(open));
            break;
        }
        const std::string_view name = tmpl.substr(open + 2, close - open - 2);
        const auto it = std::find_if(vars.begin(), vars.end(), [&](const auto& v) { return v.first == name; });
        if (it == vars.end()) {
            out.append(tmpl.substr(open, close + 2 - open));
        } else {
            out.append(it->second);
        }
        pos = close + 2;
    }
    return out;
}

}  // namespace

PromptBuilder::PromptBuilder(PromptTemplate tmpl, FewShotRegistry registry, std::size_t budget_tokens)
    : template_(std::move(tmpl)), registry_(std::move(registry)), budget_(budget_tokens) {}

PromptBuilder PromptBuilder::from_data_dir(const std::filesystem::path& dir, std::size_t budget_tokens) {
    return PromptBuilder(PromptTemplate::load(dir / "prompt_template.txt"), FewShotRegistry::load(dir / "few_shots.jsonl"),
                         budget_tokens);
}

PromptSpec PromptBuilder::build(std::string_view file_content, std::span<const IssueRecord> issues, RevisionMode mode,
                                const std::optional<std::string>& override) const {
    if (issues.empty()) throw EmptyIssueList("no issues given for prompt");
    const std::string& location = issues.front().file_location;
    for (const auto& i : issues) {
        if (i.file_location != location) {
            throw MixedFiles("issues span multiple files: '" + location + "' and '" + i.file_location + "'");
        }
    }

    PromptSpec spec;
    spec.file_location = location;
    spec.file_content = std::string(file_content);
    if (!sanitize_utf8(spec.file_content)) {
        log().warn("{}: content is not valid UTF-8; invalid bytes replaced", location);
    }
    spec.language_tag = infer_language(issues.front().file_name);
    spec.examples = registry_.examples_for(spec.language_tag);
    spec.editable = mode == RevisionMode::Interactive;
    spec.system_text = template_.system_text();

    if (mode == RevisionMode::Interactive && override) {
        spec.user_text = *override;
    } else {
        std::string content = spec.file_content;
        if (!content.empty() && !ends_with_newline(content)) content += '\n';
        const std::string table = render_issue_table(issues);
        const std::string examples = render_examples(spec.examples);
        const std::string file_name = issues.front().file_name;
        spec.user_text = substitute(template_.user_text(), {{"language", spec.language_tag},
                                                           {"file_name", file_name},
                                                           {"file_content", content},
                                                           {"issue_table", table},
                                                           {"examples", examples}});
    }

    const std::size_t tokens = estimate_tokens(spec.system_text) + estimate_tokens(spec.user_text);
    if (tokens > budget_) {
        throw PromptTooLarge(location + ": prompt needs ~" + std::to_string(tokens) + " tokens, budget is " +
                                 std::to_string(budget_),
                             tokens, budget_);
    }
    return spec;
}

}  // namespace wall
