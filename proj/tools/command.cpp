#include "command.hpp"

#include <charconv>
#include <iostream>

#include "CLI11.hpp"

namespace sfill::cli {

const char* to_string(Verb v) {
    switch (v) {
        case Verb::Classify: return "classify";
        case Verb::Realizable: return "realizable";
        case Verb::Witness: return "witness";
        case Verb::Plumbing: return "plumbing";
        case Verb::Embed: return "embed";
        case Verb::Cf: return "cf";
        case Verb::Dual: return "dual";
        case Verb::Farey: return "farey";
        case Verb::Crosscheck: return "crosscheck";
        case Verb::Batch: return "batch";
    }
    return "?";
}

CommandParser::CommandParser() = default;
CommandParser::~CommandParser() = default;

namespace {

void add_manifold(CLI::App* sub, std::vector<std::string>& args) {
    args.resize(1);
    sub->add_option("manifold", args[0], "Seifert invariants \"<e0>;<r1>,<r2>,...\"")->required();
}

void add_max_seconds(CLI::App* sub, std::optional<double>& out) {
    sub->add_option("--max-seconds", out, "embedding search time limit (default: $SFILL_MAX_SECONDS or 60)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

void CommandParser::build() {
    parsed_ = Command{};
    app_ = std::make_unique<CLI::App>("Stein fillability of Seifert fibered 3-manifolds", "sfill");
    app_->require_subcommand(1);
    app_->set_version_flag("--version", std::string(SFILL_CLI_VERSION));
    auto& c = parsed_;

    auto verb = [&](Verb v, const std::string& help) {
        auto* sub = app_->add_subcommand(to_string(v), help);
        sub->add_flag("--json", c.json, "emit JSON");
        sub->callback([&c, v] { c.verb = v; });
        return sub;
    };

    auto* classify = verb(Verb::Classify, "decide fillability with a certificate");
    add_manifold(classify, c.args);
    classify->add_flag("--certify", c.certify, "attach the embedding obstruction to special verdicts");
    add_max_seconds(classify, c.max_seconds);

    add_manifold(verb(Verb::Realizable, "search for a realizability witness (n,h)"), c.args);
    add_manifold(verb(Verb::Witness, "construct the Gompf map for a fillable Y(-1; ...)"), c.args);
    add_manifold(verb(Verb::Plumbing, "star-shaped plumbing graph and intersection form"), c.args);

    auto* embed = verb(Verb::Embed, "search for an embedding into (Z^d, -Id)");
    c.args.resize(1);
    embed->add_option("graph", c.args[0], "JSON file with {central,legs} or {matrix}; - for stdin")->required();
    add_max_seconds(embed, c.max_seconds);
    embed->add_option("--max-rank", c.max_rank, "ambient rank d (default: completeness bound)")
        ->check(CLI::PositiveNumber);

    auto* cf = verb(Verb::Cf, "negative continued fraction of a rational < -1");
    cf->add_option("value", c.args[0], "rational p/q, or a continued fraction with --eval")->required();
    cf->add_flag("--eval", c.eval, "evaluate a,b,c back to a rational");

    verb(Verb::Dual, "Riemenschneider dual of a continued fraction")
        ->add_option("cf", c.args[0], "comma-separated entries <= -2")
        ->required();

    auto* farey = verb(Verb::Farey, "Farey configurations for s < r2p < -1");
    farey->require_subcommand(1);
    for (const char* mode : {"config1", "config3"}) {
        auto* sub = farey->add_subcommand(
            mode, mode[6] == '1' ? "Farey triangle (alpha, beta, gamma) around r2p"
                                 : "four-point configuration with an extra arc");
        sub->add_option("s", c.args, "s and r2p")->expected(2)->required();
        sub->callback([&c, mode] { c.args.insert(c.args.begin(), mode); });
    }

    auto* crosscheck = verb(Verb::Crosscheck, "classify and check special verdicts against the embedding obstruction");
    add_manifold(crosscheck, c.args);
    add_max_seconds(crosscheck, c.max_seconds);

    auto* batch = verb(Verb::Batch, "classify one manifold per stdin line, JSON-lines output");
    batch->add_flag("--certify", c.certify, "attach the embedding obstruction to special verdicts");
    add_max_seconds(batch, c.max_seconds);
    batch->add_option("--jobs", c.jobs, "worker threads (default: hardware concurrency)");
}

Command CommandParser::parse(const std::vector<std::string>& args) {
    build();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app_->parse(reversed);
    Command out = parsed_;
    if (out.verb == Verb::Batch) out.args.clear();
    return out;
}

int CommandParser::report(const CLI::Error& e) {
    int code = app_ ? app_->exit(e) : (std::cerr << e.what() << "\n", 1);
    return code == 0 ? 0 : 1;
}

std::vector<std::string> render(const Command& cmd) {
    std::vector<std::string> out{to_string(cmd.verb)};
    if (cmd.json) out.emplace_back("--json");
    if (cmd.certify) out.emplace_back("--certify");
    if (cmd.eval) out.emplace_back("--eval");
    if (cmd.max_seconds) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof buf, *cmd.max_seconds);
        out.emplace_back("--max-seconds");
        out.emplace_back(buf, res.ptr);
    }
    if (cmd.max_rank) {
        out.emplace_back("--max-rank");
        out.push_back(std::to_string(*cmd.max_rank));
    }
    if (cmd.jobs != 0) {
        out.emplace_back("--jobs");
        out.push_back(std::to_string(cmd.jobs));
    }
    auto first = cmd.args.begin();
    if (cmd.verb == Verb::Farey && first != cmd.args.end()) out.push_back(*first++);
    if (first != cmd.args.end()) {
        out.emplace_back("--");
        out.insert(out.end(), first, cmd.args.end());
    }
    return out;
}

}  // namespace sfill::cli
