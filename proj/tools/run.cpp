#include "run.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "sfill/sfill.h"

namespace sfill::cli {

namespace {

using Json = nlohmann::ordered_json;

struct CString {
    char* p = nullptr;
    ~CString() { sfill_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

template <typename T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { Free(p); }
};

using Manifold = Handle<sfill_manifold, sfill_manifold_free>;
using VerdictH = Handle<sfill_verdict, sfill_verdict_free>;
using Lattice = Handle<sfill_lattice, sfill_lattice_free>;
using Certificate = Handle<sfill_certificate, sfill_certificate_free>;

int exit_for(sfill_status s) {
    switch (s) {
        case SFILL_OK: return Success;
        case SFILL_INVALID_INPUT: return InvalidInput;
        case SFILL_TIMEOUT: return Timeout;
        case SFILL_INTERNAL: return Internal;
    }
    return Internal;
}

int fail(std::ostream& err, sfill_status s) {
    err << "sfill: error: " << sfill_last_error() << "\n";
    return exit_for(s);
}

sfill_format format_of(const Command& cmd) { return cmd.json ? SFILL_FORMAT_JSON : SFILL_FORMAT_TEXT; }

void print(std::ostream& out, const std::string& s) {
    out << s;
    if (s.empty() || s.back() != '\n') out << "\n";
}

// "-2,-2,-3" -> [-2,-2,-3]; entries beyond 64 bits stay strings.
Json cf_array(const std::string& cf) {
    Json arr = Json::array();
    std::stringstream ss(cf);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec == std::errc() && ptr == item.data() + item.size()) {
            arr.push_back(v);
        } else {
            arr.push_back(item);
        }
    }
    return arr;
}

using ManifoldFn = sfill_status (*)(const sfill_manifold*, sfill_format, char**);

int run_manifold_report(const Command& cmd, ManifoldFn fn, std::ostream& out, std::ostream& err) {
    Manifold m;
    if (auto s = sfill_manifold_parse(cmd.args.at(0).c_str(), &m.p); s != SFILL_OK) return fail(err, s);
    CString text;
    if (auto s = fn(m.p, format_of(cmd), &text.p); s != SFILL_OK) return fail(err, s);
    print(out, text.str());
    return Success;
}

sfill_classify_options classify_options(const Command& cmd) {
    sfill_classify_options o = sfill_classify_options_default();
    o.certify_obstruction = cmd.certify ? 1 : 0;
    o.max_seconds = cmd.max_seconds.value_or(default_max_seconds());
    return o;
}

int run_classify(const Command& cmd, std::ostream& out, std::ostream& err) {
    Manifold m;
    if (auto s = sfill_manifold_parse(cmd.args.at(0).c_str(), &m.p); s != SFILL_OK) return fail(err, s);
    sfill_classify_options o = classify_options(cmd);
    VerdictH v;
    if (auto s = sfill_classify(m.p, &o, &v.p); s != SFILL_OK) return fail(err, s);
    CString text;
    if (auto s = sfill_verdict_render(v.p, format_of(cmd), &text.p); s != SFILL_OK) return fail(err, s);
    print(out, text.str());
    if (sfill_verdict_obstruction(v.p) == SFILL_OUTCOME_TIMEOUT) {
        err << "sfill: embedding search timed out\n";
        return Timeout;
    }
    return Success;
}

int run_crosscheck(const Command& cmd, std::ostream& out, std::ostream& err) {
    Manifold m;
    if (auto s = sfill_manifold_parse(cmd.args.at(0).c_str(), &m.p); s != SFILL_OK) return fail(err, s);
    CString text;
    sfill_status s = sfill_crosscheck(m.p, cmd.max_seconds.value_or(default_max_seconds()), format_of(cmd), &text.p);
    if (text.p != nullptr) print(out, text.str());
    if (s != SFILL_OK) return fail(err, s);
    return Success;
}

int run_embed(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    const std::string& path = cmd.args.at(0);
    std::string doc;
    if (path == "-") {
        doc.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) {
            err << "sfill: error: cannot open " << path << "\n";
            return InvalidInput;
        }
        doc.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    Lattice l;
    if (auto s = sfill_lattice_from_json(doc.c_str(), &l.p); s != SFILL_OK) return fail(err, s);
    Certificate c;
    double seconds = cmd.max_seconds.value_or(default_max_seconds());
    if (auto s = sfill_embed(l.p, seconds, cmd.max_rank.value_or(0), &c.p); s != SFILL_OK) return fail(err, s);
    CString text;
    if (auto s = sfill_certificate_render(c.p, format_of(cmd), &text.p); s != SFILL_OK) return fail(err, s);
    print(out, text.str());
    if (sfill_certificate_outcome(c.p) == SFILL_OUTCOME_TIMEOUT) {
        err << "sfill: embedding search timed out\n";
        return Timeout;
    }
    return Success;
}

int run_cf(const Command& cmd, std::ostream& out, std::ostream& err) {
    const std::string& arg = cmd.args.at(0);
    CString res;
    auto s = cmd.eval ? sfill_cf_eval(arg.c_str(), &res.p) : sfill_cf_expand(arg.c_str(), &res.p);
    if (s != SFILL_OK) return fail(err, s);
    if (!cmd.json) {
        print(out, res.str());
    } else if (cmd.eval) {
        CString canon;
        sfill_cf_expand(res.p, &canon.p);
        out << Json{{"rational", res.str()}, {"cf", cf_array(canon.str())}}.dump() << "\n";
    } else {
        CString canon;
        sfill_cf_eval(res.p, &canon.p);
        out << Json{{"rational", canon.str()}, {"cf", cf_array(res.str())}}.dump() << "\n";
    }
    return Success;
}

int run_dual(const Command& cmd, std::ostream& out, std::ostream& err) {
    CString res;
    if (auto s = sfill_cf_dual(cmd.args.at(0).c_str(), &res.p); s != SFILL_OK) return fail(err, s);
    if (cmd.json) {
        CString value, canon, dual_value;
        sfill_cf_eval(cmd.args[0].c_str(), &value.p);
        sfill_cf_expand(value.p, &canon.p);
        sfill_cf_eval(res.p, &dual_value.p);
        Json j{{"cf", cf_array(canon.str())},
               {"value", value.str()},
               {"dual", cf_array(res.str())},
               {"dual_value", dual_value.str()}};
        out << j.dump() << "\n";
    } else {
        print(out, res.str());
    }
    return Success;
}

int run_farey(const Command& cmd, std::ostream& out, std::ostream& err) {
    CString res;
    const char* s_arg = cmd.args.at(1).c_str();
    const char* r_arg = cmd.args.at(2).c_str();
    auto s = cmd.args[0] == "config1" ? sfill_farey_config1(s_arg, r_arg, &res.p)
                                      : sfill_farey_config3(s_arg, r_arg, &res.p);
    if (s != SFILL_OK) return fail(err, s);
    print(out, res.str());
    return Success;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct BatchResult {
    std::string line;
    int code = Success;
};

BatchResult classify_line(const std::string& input, const sfill_classify_options& o) {
    BatchResult r;
    auto error = [&](sfill_status s) {
        r.line = Json{{"input", input}, {"error", sfill_last_error()}}.dump();
        r.code = exit_for(s);
        return r;
    };
    Manifold m;
    if (auto s = sfill_manifold_parse(input.c_str(), &m.p); s != SFILL_OK) return error(s);
    VerdictH v;
    if (auto s = sfill_classify(m.p, &o, &v.p); s != SFILL_OK) return error(s);
    CString text;
    if (auto s = sfill_verdict_render(v.p, SFILL_FORMAT_JSON, &text.p); s != SFILL_OK) return error(s);
    r.line = text.str();
    if (sfill_verdict_obstruction(v.p) == SFILL_OUTCOME_TIMEOUT) r.code = Timeout;
    return r;
}

int run_batch(const Command& cmd, std::istream& in, std::ostream& out) {
    std::vector<std::string> inputs;
    for (std::string line; std::getline(in, line);) {
        std::string t = trim(line);
        if (!t.empty() && t[0] != '#') inputs.push_back(t);
    }
    std::vector<BatchResult> results(inputs.size());
    sfill_classify_options o = classify_options(cmd);

    unsigned jobs = cmd.jobs != 0 ? cmd.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(inputs.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) results[i] = classify_line(inputs[i], o);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = Success;
    for (const auto& r : results) {
        out << r.line << "\n";
        code = std::max(code, r.code);
    }
    return code;
}

}  // namespace

double default_max_seconds() {
    if (const char* env = std::getenv("SFILL_MAX_SECONDS")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 60.0;
}

int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
    switch (cmd.verb) {
        case Verb::Classify: return run_classify(cmd, out, err);
        case Verb::Realizable: return run_manifold_report(cmd, sfill_realizability, out, err);
        case Verb::Witness: return run_manifold_report(cmd, sfill_witness, out, err);
        case Verb::Plumbing: return run_manifold_report(cmd, sfill_plumbing, out, err);
        case Verb::Embed: return run_embed(cmd, in, out, err);
        case Verb::Cf: return run_cf(cmd, out, err);
        case Verb::Dual: return run_dual(cmd, out, err);
        case Verb::Farey: return run_farey(cmd, out, err);
        case Verb::Crosscheck: return run_crosscheck(cmd, out, err);
        case Verb::Batch: return run_batch(cmd, in, out);
    }
    return Internal;
}

}  // namespace sfill::cli
