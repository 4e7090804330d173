#include "wall/cli.hpp"

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wall/diff.hpp"
#include "wall/errors.hpp"
#include "wall/issues_csv.hpp"
#include "wall/log.hpp"
#include "wall/mock_provider.hpp"
#include "wall/mock_sonar_server.hpp"
#include "wall/openai_provider.hpp"
#include "wall/orchestrator.hpp"
#include "wall/service.hpp"
#include "wall/sonar_client.hpp"
#include "wall/text.hpp"

namespace wall {

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
    std::string data_dir = WALL_DATA_DIR;
    std::string pricing;
    std::string prompt_template;
    std::string few_shots;
    std::string provider = "openai";
    std::string base_url = "https://api.openai.com";
    std::string key_env = "OPENAI_API_KEY";
    std::string cheap_model = "gpt-3.5-turbo";
    int workers = 4;
    std::size_t prompt_budget = PromptBuilder::kDefaultBudgetTokens;
    bool verbose = false;
};

struct AnalyzerOptions {
    std::string spec;  // mock:FIXTURE | sonar:URL
    std::string project_key;
    std::string token_env = "SONAR_TOKEN";
    std::string scanner_command;
    bool scanner_command_set = false;
};

std::string path_or(const std::string& explicit_path, const std::string& data_dir, const char* file) {
    return explicit_path.empty() ? (fs::path(data_dir) / file).string() : explicit_path;
}

/// Gateway, prompt builder and (for the mock) the provider they share.
struct Pipeline {
    std::unique_ptr<Gateway> gateway;
    std::unique_ptr<PromptBuilder> prompts;
};

Pipeline make_pipeline(const CommonOptions& o) {
    Pipeline p;
    PricingTable pricing = PricingTable::load(path_or(o.pricing, o.data_dir, "pricing.csv"));
    p.prompts = std::make_unique<PromptBuilder>(
        PromptTemplate::load(path_or(o.prompt_template, o.data_dir, "prompt_template.txt")),
        FewShotRegistry::load(path_or(o.few_shots, o.data_dir, "few_shots.jsonl")), o.prompt_budget);
    p.gateway = std::make_unique<Gateway>(pricing);

    ProviderLimits limits;
    limits.max_in_flight = std::max(1, o.workers);
    std::vector<std::string> models = pricing.model_ids();
    std::shared_ptr<Provider> provider;
    if (o.provider.rfind("mock:", 0) == 0) {
        auto mock = std::make_shared<MockProvider>(MockProvider::load(o.provider.substr(5)));
        for (const auto& [model, tier] : mock->tiers()) models.push_back(model);
        provider = mock;
    } else if (o.provider == "openai") {
        provider = std::make_shared<OpenAiProvider>(OpenAiProvider::from_env(o.base_url, o.key_env));
    } else {
        throw InvalidArgument("unknown provider: " + o.provider + " (expected openai or mock:FIXTURE)");
    }
    const std::string name(provider->name());
    p.gateway->register_provider(provider, limits);
    for (const auto& m : models) {
        if (!p.gateway->has_model(m)) p.gateway->register_model(m, name);
    }
    return p;
}

std::string env_or_empty(const std::string& name) {
    const char* v = std::getenv(name.c_str());
    return v == nullptr ? std::string() : std::string(v);
}

std::unique_ptr<AnalysisProvider> make_analyzer(const AnalyzerOptions& o) {
    if (o.spec.rfind("mock:", 0) == 0) return std::make_unique<MockAnalyzer>(MockAnalyzer::load(o.spec.substr(5)));
    if (o.spec.rfind("sonar:", 0) == 0) {
        SonarAnalyzer::Options opts;
        opts.server = {o.spec.substr(6), env_or_empty(o.token_env), o.project_key};
        if (opts.server.api_token.empty()) throw AuthError("environment variable " + o.token_env + " is not set");
        if (o.scanner_command_set) opts.scanner_command = o.scanner_command;
        return std::make_unique<SonarAnalyzer>(opts);
    }
    throw InvalidArgument("unknown analyzer: " + o.spec + " (expected mock:FIXTURE or sonar:URL)");
}

std::optional<ReportFormat> report_format(const std::string& token) {
    if (token == "text") return ReportFormat::Text;
    if (token == "structured") return ReportFormat::StructuredRows;
    if (token == "html") return ReportFormat::Html;
    return std::nullopt;
}

std::vector<IssueRecord> load_issues(const std::string& csv) {
    std::ifstream in(csv, std::ios::binary);
    if (!in) throw IoError("cannot read " + csv);
    return read_csv(in);
}

std::string type_summary(std::span<const IssueRecord> issues) {
    std::map<IssueType, std::size_t> counts;
    for (const auto& i : issues) ++counts[i.type];
    std::string out;
    for (IssueType t : kIssueTypes) {
        if (!out.empty()) out += ' ';
        out += std::string(to_string(t)) + "=" + std::to_string(counts[t]);
    }
    return out;
}

std::string run_summary(const RevisionRun& run) {
    return "revised " + std::to_string(run.count(RevisionStatus::Revised)) + "/" + std::to_string(run.results.size()) +
           " files (" + std::to_string(run.count(RevisionStatus::Unchanged)) + " unchanged, " +
           std::to_string(run.count(RevisionStatus::Failed)) + " failed), cost " + format_usd(run.total_cost());
}

fs::path sibling(const fs::path& tree, const std::string& suffix) {
    return tree.parent_path() / (tree.filename().string() + suffix);
}

void print_report(const CostLedger& ledger, ReportFormat format, std::ostream& out) { out << emit_report(ledger, format); }

fs::path output_tree(const std::string& out, const fs::path& root) {
    return out.empty() ? default_revised_root(root) : fs::path(out);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Revise code flagged by static analysis with language models, and measure the result."};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML config file; flags given on the command line take precedence");

    CommonOptions common;
    auto add_common = [&common](CLI::App* cmd) {
        cmd->add_option("--data-dir", common.data_dir, "Directory holding pricing, template and few-shot files");
        cmd->add_option("--pricing", common.pricing, "Model pricing CSV");
        cmd->add_option("--template", common.prompt_template, "Prompt template file");
        cmd->add_option("--few-shots", common.few_shots, "Few-shot examples (JSONL)");
        cmd->add_option("--provider", common.provider, "openai or mock:FIXTURE");
        cmd->add_option("--base-url", common.base_url, "Chat-completion endpoint base URL");
        cmd->add_option("--key-env", common.key_env, "Environment variable holding the provider key");
        cmd->add_option("--cheap-model", common.cheap_model, "Model reported as the cheap strategy");
        cmd->add_option("--workers", common.workers, "Concurrent revisions")->check(CLI::PositiveNumber);
        cmd->add_option("--prompt-budget", common.prompt_budget, "Prompt size limit in estimated tokens")
            ->check(CLI::PositiveNumber);
    };
    app.add_flag("-v,--verbose", common.verbose, "Log progress to stderr");

    // extract
    auto* extract = app.add_subcommand("extract", "Fetch open issues from the analysis server into a CSV");
    std::string server_url, token_env = "SONAR_TOKEN", project_key, extract_out = "-";
    int page_size = 500;
    extract->add_option("--server-url", server_url, "Analysis server URL")->required();
    extract->add_option("--token-env", token_env, "Environment variable holding the API token");
    extract->add_option("--project-key", project_key, "Project key")->required();
    extract->add_option("--out", extract_out, "Output CSV ('-' for stdout)");
    extract->add_option("--page-size", page_size, "Issues per request")->check(CLI::Range(1, 500));

    // revise-all
    auto* revise_all = app.add_subcommand("revise-all", "Revise every file listed in an issues CSV");
    std::string csv, root, model, out_dir, format = "text";
    AnalyzerOptions analyzer;
    add_common(revise_all);
    revise_all->add_option("--csv", csv, "Issues CSV")->required();
    revise_all->add_option("--root", root, "Project root")->required();
    revise_all->add_option("--model", model, "Model id")->required();
    revise_all->add_option("--out", out_dir, "Output tree (default: <root>.Revised)");
    revise_all->add_option("--analyzer", analyzer.spec, "Rescan with mock:FIXTURE or sonar:URL to judge resolution");
    revise_all->add_option("--format", format, "Report format: text, structured, html");

    // hybrid
    auto* hybrid = app.add_subcommand("hybrid", "Cheap model first, advanced model on what remains");
    std::string cheap, advanced;
    bool baseline = false;
    add_common(hybrid);
    hybrid->add_option("--csv", csv, "Issues CSV")->required();
    hybrid->add_option("--root", root, "Project root")->required();
    hybrid->add_option("--cheap", cheap, "Cheap model id")->required();
    hybrid->add_option("--advanced", advanced, "Advanced model id")->required();
    hybrid->add_option("--analyzer", analyzer.spec, "mock:FIXTURE or sonar:URL")->required();
    hybrid->add_option("--out", out_dir, "Output tree (default: <root>.Revised)");
    hybrid->add_flag("--baseline", baseline, "Also run the advanced model alone, for the savings comparison");
    hybrid->add_option("--format", format, "Report format: text, structured, html");
    for (auto* cmd : {revise_all, hybrid}) {
        cmd->add_option("--project-key", analyzer.project_key, "Project key for a sonar analyzer");
        cmd->add_option("--analyzer-token-env", analyzer.token_env, "Environment variable holding the analyzer token");
        cmd->add_option("--scanner-command", analyzer.scanner_command, "Scanner command for a sonar analyzer");
    }

    // compare
    auto* compare = app.add_subcommand("compare", "Line diff and precision/recall/F1 of two files");
    std::string original, revised, compare_format = "tty";
    bool trim = false, no_color = false;
    compare->add_option("--original", original)->required();
    compare->add_option("--revised", revised)->required();
    compare->add_option("--format", compare_format, "tty, html or structured");
    compare->add_flag("--ignore-trailing-whitespace", trim);
    compare->add_flag("--no-color", no_color);

    // report
    auto* report = app.add_subcommand("report", "Render a cost/success ledger");
    std::string ledger_path;
    report->add_option("--ledger", ledger_path, "Ledger CSV")->required();
    report->add_option("--format", format, "text, structured or html");

    // serve
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    std::string host = "127.0.0.1", static_dir;
    int port = 8080;
    add_common(serve);
    serve->add_option("--port", port)->check(CLI::Range(0, 65535));
    serve->add_option("--host", host);
    serve->add_option("--root", root, "Default project root for uploaded sessions");
    serve->add_option("--static-dir", static_dir, "Built UI bundle served at /");

    // mock-sonar
    auto* mock_sonar = app.add_subcommand("mock-sonar", "Serve a fixture as a stand-in analysis server");
    std::string fixture;
    mock_sonar->add_option("--fixture", fixture)->required();
    mock_sonar->add_option("--port", port)->check(CLI::Range(1, 65535));
    mock_sonar->add_option("--host", host);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    analyzer.scanner_command_set = !hybrid->get_option("--scanner-command")->empty() ||
                                   !revise_all->get_option("--scanner-command")->empty();
    log().set_level(common.verbose ? spdlog::level::info : spdlog::level::warn);

    try {
        if (*extract) {
            ServerConfig config{server_url, env_or_empty(token_env), project_key};
            if (config.api_token.empty()) {
                err << "error: environment variable " << token_env << " is not set\n";
                return kExitAuth;
            }
            const auto fetched = fetch_issues(config, page_size);
            if (extract_out == "-") {
                write_csv(fetched.issues, out);
            } else {
                write_file(extract_out, to_csv(fetched.issues));
                out << "wrote " << fetched.issues.size() << " issues to " << extract_out << "\n";
            }
            err << type_summary(fetched.issues) << "\n";
            if (fetched.skipped_unknown_type > 0) err << "skipped " << fetched.skipped_unknown_type << " issues of unknown type\n";
            return kExitOk;
        }

        if (*compare) {
            for (const auto& p : {original, revised}) {
                std::error_code ec;
                if (!fs::is_regular_file(p, ec)) {
                    err << "error: cannot read " << p << "\n";
                    return kExitFailure;
                }
            }
            DiffOptions options;
            options.trim_trailing_whitespace = trim;
            const DiffReport diff = compare_texts(read_file(original), read_file(revised), options);
            RenderOptions ro;
            ro.original_title = original;
            ro.revised_title = revised;
            ro.color = !no_color;
            ro.metrics = &diff.metrics;
            if (compare_format == "tty") {
                out << render_diff(diff.lines, RenderFormat::Terminal, ro) << diff.metrics.summary() << "\n";
            } else if (compare_format == "html") {
                out << render_diff(diff.lines, RenderFormat::SideBySideHtml, ro);
                err << diff.metrics.summary() << "\n";
            } else if (compare_format == "structured") {
                out << render_diff(diff.lines, RenderFormat::Structured, ro) << "\n";
                err << diff.metrics.summary() << "\n";
            } else {
                err << "error: unknown format " << compare_format << "\n";
                return kExitFailure;
            }
            return kExitOk;
        }

        if (*report) {
            const auto fmt = report_format(format);
            if (!fmt) {
                err << "error: unknown format " << format << "\n";
                return kExitFailure;
            }
            const CostLedger ledger = CostLedger::load(ledger_path);
            ledger.validate();
            print_report(ledger, *fmt, out);
            return kExitOk;
        }

        if (*mock_sonar) {
            MockAnalysisServer server(MockAnalysisServer::load_fixture(fixture));
            err << "mock analysis server on http://" << host << ":" << port << "\n";
            server.listen_blocking(host, port);
            return kExitOk;
        }

        if (*serve) {
            Pipeline p = make_pipeline(common);
            ServiceOptions so;
            so.default_root = root;
            so.cheap_model = common.cheap_model;
            so.static_dir = static_dir;
            so.workers = common.workers;
            Service service(*p.gateway, *p.prompts, so);
            err << "serving on http://" << host << ":" << port << "\n";
            service.listen_blocking(host, port);
            return kExitOk;
        }

        const auto fmt = report_format(format);
        if (!fmt) {
            err << "error: unknown format " << format << "\n";
            return kExitFailure;
        }
        std::ostream& human = *fmt == ReportFormat::StructuredRows ? err : out;

        if (*revise_all) {
            const auto issues = load_issues(csv);
            if (issues.empty()) {
                human << "nothing to do\n";
                return kExitOk;
            }
            Pipeline p = make_pipeline(common);
            if (!p.gateway->has_model(model)) throw InvalidArgument("unknown model: " + model);
            std::unique_ptr<AnalysisProvider> az = analyzer.spec.empty() ? nullptr : make_analyzer(analyzer);
            Reviser reviser(*p.gateway, *p.prompts, ReviserOptions{common.workers});
            const fs::path tree = output_tree(out_dir, root);
            const auto outcome = reviser.single_model(issues, root, model, az.get(), tree);

            CostLedger ledger;
            const Strategy strategy = model == common.cheap_model ? Strategy::CheapOnly : Strategy::AdvancedOnly;
            for (const auto& [type, entry] : outcome.per_type) ledger.set(type, strategy, entry);
            write_file(sibling(tree, ".manifest.json"), manifest_json(outcome.run));
            ledger.save(sibling(tree, ".ledger.csv"));

            for (const auto& r : outcome.run.results) {
                if (r.status == RevisionStatus::Failed) err << "failed: " << r.file_location << ": " << r.diagnostic << "\n";
            }
            human << run_summary(outcome.run) << "\n";
            print_report(ledger, *fmt, out);
            return outcome.run.count(RevisionStatus::Failed) > 0 ? kExitRevision : kExitOk;
        }

        if (*hybrid) {
            const auto issues = load_issues(csv);
            if (issues.empty()) {
                human << "nothing to do\n";
                return kExitOk;
            }
            Pipeline p = make_pipeline(common);
            for (const auto& m : {cheap, advanced}) {
                if (!p.gateway->has_model(m)) throw InvalidArgument("unknown model: " + m);
            }
            auto az = make_analyzer(analyzer);
            Reviser reviser(*p.gateway, *p.prompts, ReviserOptions{common.workers});
            const fs::path tree = output_tree(out_dir, root);
            auto outcome = reviser.hybrid_pipeline(issues, root, cheap, advanced, *az, tree);
            std::size_t failed =
                outcome.stage1.count(RevisionStatus::Failed) + outcome.stage2.count(RevisionStatus::Failed);

            CostLedger ledger = outcome.ledger;
            if (baseline) {
                const fs::path base_tree = sibling(fs::path(root).lexically_normal(), ".AdvancedOnly.Revised");
                const auto base = reviser.single_model(issues, root, advanced, az.get(), base_tree);
                for (const auto& [type, entry] : base.per_type) ledger.set(type, Strategy::AdvancedOnly, entry);
                failed += base.run.count(RevisionStatus::Failed);
                human << "advanced only: " << run_summary(base.run) << "\n";
            }
            ledger.validate();
            write_file(sibling(tree, ".manifest.json"), hybrid_manifest_json(outcome));
            ledger.save(sibling(tree, ".ledger.csv"));

            for (const auto* run : {&outcome.stage1, &outcome.stage2}) {
                for (const auto& r : run->results) {
                    if (r.status == RevisionStatus::Failed) err << "failed: " << r.file_location << ": " << r.diagnostic << "\n";
                }
            }
            human << "cheap stage: " << run_summary(outcome.stage1) << "\n";
            human << "advanced stage: " << run_summary(outcome.stage2) << "\n";
            print_report(ledger, *fmt, out);
            return failed > 0 ? kExitRevision : kExitOk;
        }
    } catch (const ProviderAuthError& e) {
        err << "error: " << e.what() << "\n";
        return kExitAuth;
    } catch (const AuthError& e) {
        err << "error: " << e.what() << "\n";
        return kExitAuth;
    } catch (const ProjectNotFound& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const TransportError& e) {
        err << "error: " << e.what() << "\n";
        return kExitTransport;
    } catch (const AnalyzerUnavailable& e) {
        err << "error: " << e.what() << "\n";
        return kExitTransport;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace wall
