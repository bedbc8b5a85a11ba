#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace CLI {
class App;
class Error;
}  // namespace CLI

namespace sfill::cli {

enum class Verb { Classify, Realizable, Witness, Plumbing, Embed, Cf, Dual, Farey, Crosscheck, Batch };

const char* to_string(Verb v);

struct Command {
    Verb verb = Verb::Classify;
    // classify/realizable/witness/plumbing/crosscheck: {manifold}
    // embed: {graph path or "-"}; cf: {rational} (or {cf} with eval)
    // dual: {cf}; farey: {"config1"|"config3", s, r2p}; batch: {}
    std::vector<std::string> args;
    bool json = false;
    bool certify = false;  // classify, batch
    bool eval = false;     // cf
    std::optional<double> max_seconds;
    std::optional<std::size_t> max_rank;  // embed
    unsigned jobs = 0;                    // batch; 0 = hardware concurrency

    bool operator==(const Command&) const = default;
};

class CommandParser {
public:
    CommandParser();
    ~CommandParser();
    CommandParser(const CommandParser&) = delete;
    CommandParser& operator=(const CommandParser&) = delete;

    // args excludes the program name. Throws CLI::Error subclasses.
    Command parse(const std::vector<std::string>& args);
    // Prints help or the error and returns the process exit code (0 or 1).
    int report(const CLI::Error& e);

private:
    void build();

    std::unique_ptr<CLI::App> app_;
    Command parsed_;
};

// Argument vector that parses back to cmd.
std::vector<std::string> render(const Command& cmd);

}  // namespace sfill::cli
