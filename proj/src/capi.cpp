#include "sfill/sfill.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "sfill/continued_fraction.hpp"
#include "sfill/crosscheck.hpp"
#include "sfill/errors.hpp"
#include "sfill/farey.hpp"
#include "sfill/plumbing.hpp"
#include "sfill/serialize.hpp"
#include "sfill/verify.hpp"

struct sfill_manifold {
    sfill::SeifertInvariants value;
};

struct sfill_verdict {
    sfill::Verdict value;
    std::string reason;
};

struct sfill_lattice {
    sfill::IntersectionLattice value;
};

struct sfill_certificate {
    sfill::SearchCertificate value;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
sfill_status guarded(Body&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const sfill::InternalError& e) {
        last_error = std::string("internal error: ") + e.what();
        return SFILL_INTERNAL;
    } catch (const std::invalid_argument& e) {
        last_error = e.what();
        return SFILL_INVALID_INPUT;
    } catch (const std::domain_error& e) {
        last_error = e.what();
        return SFILL_INVALID_INPUT;
    } catch (const nlohmann::json::exception& e) {
        last_error = std::string("JSON: ") + e.what();
        return SFILL_INVALID_INPUT;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return SFILL_INTERNAL;
    }
}

sfill_status null_argument(const char* what) {
    last_error = std::string("null argument: ") + what;
    return SFILL_INVALID_INPUT;
}

sfill_status emit(char** out, const std::string& s) {
    *out = dup_string(s);
    return SFILL_OK;
}

std::string render(const sfill::Json& j, sfill_format format, const std::string& text) {
    return format == SFILL_FORMAT_JSON ? j.dump() : text;
}

sfill::SearchLimits limits_from(double max_seconds, size_t max_rank) {
    sfill::SearchLimits limits;
    limits.max_seconds = max_seconds;
    if (max_rank > 0) limits.max_rank = max_rank;
    return limits;
}

}  // namespace

extern "C" {

const char* sfill_version(void) { return SFILL_VERSION; }

const char* sfill_last_error(void) { return last_error.c_str(); }

void sfill_string_free(char* s) { std::free(s); }

sfill_status sfill_manifold_parse(const char* text, sfill_manifold** out) {
    if (text == nullptr || out == nullptr) return null_argument("text/out");
    return guarded([&] {
        *out = new sfill_manifold{sfill::SeifertInvariants::parse(text)};
        return SFILL_OK;
    });
}

sfill_status sfill_manifold_reverse(const sfill_manifold* m, sfill_manifold** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] {
        *out = new sfill_manifold{sfill::reverse_orientation(m->value)};
        return SFILL_OK;
    });
}

sfill_status sfill_manifold_string(const sfill_manifold* m, char** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] { return emit(out, m->value.to_string()); });
}

sfill_status sfill_manifold_euler(const sfill_manifold* m, char** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] { return emit(out, sfill::euler_number(m->value).to_string()); });
}

void sfill_manifold_free(sfill_manifold* m) { delete m; }

sfill_classify_options sfill_classify_options_default(void) {
    sfill_classify_options o;
    o.certify_obstruction = 0;
    o.max_seconds = 60.0;
    o.max_rank = 0;
    return o;
}

sfill_status sfill_classify(const sfill_manifold* m, const sfill_classify_options* options, sfill_verdict** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] {
        sfill::ClassifyOptions opts;
        if (options != nullptr) {
            opts.certify_obstruction = options->certify_obstruction != 0;
            opts.limits = limits_from(options->max_seconds, options->max_rank);
        }
        sfill::Verdict v = sfill::classify(m->value, opts);
        std::string reason = sfill::to_string(v.reason);
        *out = new sfill_verdict{std::move(v), std::move(reason)};
        return SFILL_OK;
    });
}

int sfill_verdict_fillable(const sfill_verdict* v) { return v != nullptr && v->value.fillable ? 1 : 0; }

const char* sfill_verdict_reason(const sfill_verdict* v) { return v == nullptr ? "" : v->reason.c_str(); }

int sfill_verdict_recheck(const sfill_verdict* v) {
    if (v == nullptr) return 0;
    try {
        return sfill::recheck_verdict(v->value).ok ? 1 : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

int sfill_verdict_obstruction(const sfill_verdict* v) {
    if (v == nullptr) return -1;
    const auto* special = std::get_if<sfill::SpecialEvidence>(&v->value.evidence);
    if (special == nullptr || !special->embedding) return -1;
    sfill_certificate cert{*special->embedding};
    return sfill_certificate_outcome(&cert);
}

sfill_status sfill_verdict_render(const sfill_verdict* v, sfill_format format, char** out) {
    if (v == nullptr || out == nullptr) return null_argument("verdict/out");
    return guarded([&] { return emit(out, render(sfill::to_json(v->value), format, sfill::describe(v->value))); });
}

void sfill_verdict_free(sfill_verdict* v) { delete v; }

sfill_status sfill_realizability(const sfill_manifold* m, sfill_format format, char** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] {
        sfill::RealizabilitySearch s = sfill::search_realizability(m->value.rs());
        std::ostringstream text;
        if (s.witness) {
            text << "realizable: (n,h) = (" << s.witness->n << "," << s.witness->h << ")\n";
        } else {
            text << "not realizable: no (n,h) for n = 2.." << s.max_n << "\n";
        }
        sfill::Json j = sfill::to_json(s);
        j["manifold"] = m->value.to_string();
        return emit(out, render(j, format, text.str()));
    });
}

sfill_status sfill_witness(const sfill_manifold* m, sfill_format format, char** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] {
        const auto& y = m->value;
        if (y.e0() != -1 || y.k() < 3) {
            throw sfill::PreconditionError("Gompf maps apply to Y(-1; r1..rk) with k >= 3 only");
        }
        sfill::Json j{{"manifold", y.to_string()}};
        std::string text;
        if (auto w = sfill::find_realizability_witness(y.rs())) {
            sfill::RealizableConstruction c = sfill::witness_realizable(y.rs(), *w);
            j["construction"] = "realizable";
            j["witness"] = sfill::Json{{"n", sfill::to_json(w->n)}, {"h", sfill::to_json(w->h)}};
            j["seed"] = sfill::Json{{"n0", sfill::to_json(c.seed.n)}, {"h0", sfill::to_json(c.seed.h)}};
            j["bezout"] = sfill::Json{{"a", sfill::to_json(c.bezout_a)}, {"b", sfill::to_json(c.bezout_b)}};
            j.update(sfill::to_json(c.report));
            text = "realizable; minimal (n,h) = (" + c.n.str() + "," + c.h.str() + ")\n" + sfill::describe(c.report);
        } else {
            sfill::FareyConstruction c = sfill::witness_farey(y.rs());
            j["construction"] = "farey";
            j["configuration"] = sfill::to_json(c.config);
            j.update(sfill::to_json(c.report));
            text = "Farey configuration, extra arc " + sfill::to_string(c.config.extra_arc) + "\n" +
                   sfill::describe(c.report);
        }
        return emit(out, render(j, format, text));
    });
}

sfill_status sfill_crosscheck(const sfill_manifold* m, double max_seconds, sfill_format format, char** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] {
        sfill::CrosscheckResult r = sfill::crosscheck(m->value, limits_from(max_seconds, 0));
        sfill::Json j{{"manifold", m->value.to_string()}, {"verdict", sfill::to_json(r.verdict)}};
        j["evidence_recheck"] = r.evidence.ok;
        if (!r.evidence.ok) j["evidence_failure"] = r.evidence.failure;
        j["obstruction"] = r.obstruction ? sfill::to_json(*r.obstruction) : sfill::Json(nullptr);
        if (r.timed_out()) {
            j["agreement"] = nullptr;
        } else {
            j["agreement"] = r.agrees();
        }

        std::ostringstream text;
        text << sfill::describe(r.verdict);
        text << "evidence re-check: " << (r.evidence.ok ? "passed" : "FAILED: " + r.evidence.failure) << "\n";
        if (r.obstruction) text << "obstruction: " << sfill::describe(*r.obstruction);
        if (r.timed_out()) {
            text << "crosscheck: undecided (timeout)\n";
        } else {
            text << "crosscheck: " << (r.agrees() ? "agree" : "DISAGREE") << "\n";
        }
        emit(out, render(j, format, text.str()));
        if (r.timed_out()) {
            last_error = "embedding search timed out";
            return SFILL_TIMEOUT;
        }
        if (!r.agrees()) {
            last_error = "classifier and obstruction disagree on " + m->value.to_string();
            return SFILL_INTERNAL;
        }
        return SFILL_OK;
    });
}

sfill_status sfill_plumbing(const sfill_manifold* m, sfill_format format, char** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] {
        sfill::StarGraph g = sfill::build_plumbing(m->value);
        sfill::IntersectionLattice q = sfill::intersection_form(g);
        bool definite = sfill::is_negative_definite(q);
        sfill::BigInt det = sfill::determinant(q);
        sfill::Json j{{"manifold", m->value.to_string()},
                      {"graph", sfill::to_json(g)},
                      {"matrix", sfill::to_json(q)["matrix"]},
                      {"vertices", g.vertex_count()},
                      {"weight_sum", sfill::to_json(g.weight_sum())},
                      {"determinant", sfill::to_json(det)},
                      {"negative_definite", definite}};
        std::ostringstream text;
        text << "central " << g.central_weight << "\n";
        for (std::size_t i = 0; i < g.legs.size(); ++i) text << "leg " << i + 1 << ": " << g.legs[i].to_string() << "\n";
        for (const auto& row : q.rows()) {
            for (std::size_t c = 0; c < row.size(); ++c) text << (c ? " " : "") << row[c];
            text << "\n";
        }
        text << "determinant " << det << ", " << (definite ? "negative definite" : "not negative definite") << "\n";
        return emit(out, render(j, format, text.str()));
    });
}

sfill_status sfill_lattice_from_json(const char* json, sfill_lattice** out) {
    if (json == nullptr || out == nullptr) return null_argument("json/out");
    return guarded([&] {
        *out = new sfill_lattice{sfill::lattice_from_json(sfill::Json::parse(json))};
        return SFILL_OK;
    });
}

sfill_status sfill_lattice_from_manifold(const sfill_manifold* m, sfill_lattice** out) {
    if (m == nullptr || out == nullptr) return null_argument("manifold/out");
    return guarded([&] {
        *out = new sfill_lattice{sfill::intersection_form(sfill::build_plumbing(m->value))};
        return SFILL_OK;
    });
}

size_t sfill_lattice_dim(const sfill_lattice* l) { return l == nullptr ? 0 : l->value.dim(); }

void sfill_lattice_free(sfill_lattice* l) { delete l; }

sfill_status sfill_embed(const sfill_lattice* l, double max_seconds, size_t max_rank, sfill_certificate** out) {
    if (l == nullptr || out == nullptr) return null_argument("lattice/out");
    return guarded([&] {
        *out = new sfill_certificate{sfill::find_embedding(l->value, limits_from(max_seconds, max_rank))};
        return SFILL_OK;
    });
}

sfill_outcome sfill_certificate_outcome(const sfill_certificate* c) {
    if (c == nullptr) return SFILL_OUTCOME_TIMEOUT;
    switch (c->value.outcome) {
        case sfill::SearchOutcome::Found: return SFILL_OUTCOME_FOUND;
        case sfill::SearchOutcome::ExhaustedNoEmbedding: return SFILL_OUTCOME_NO_EMBEDDING;
        case sfill::SearchOutcome::Timeout: return SFILL_OUTCOME_TIMEOUT;
    }
    return SFILL_OUTCOME_TIMEOUT;
}

sfill_status sfill_certificate_render(const sfill_certificate* c, sfill_format format, char** out) {
    if (c == nullptr || out == nullptr) return null_argument("certificate/out");
    return guarded([&] { return emit(out, render(sfill::to_json(c->value), format, sfill::describe(c->value))); });
}

sfill_status sfill_certificate_from_json(const char* json, sfill_certificate** out) {
    if (json == nullptr || out == nullptr) return null_argument("json/out");
    return guarded([&] {
        *out = new sfill_certificate{sfill::certificate_from_json(sfill::Json::parse(json))};
        return SFILL_OK;
    });
}

int sfill_certificate_verify(const sfill_lattice* l, const sfill_certificate* c) {
    if (l == nullptr || c == nullptr || !c->value.embedding) return 0;
    return sfill::verify_embedding(l->value, *c->value.embedding) ? 1 : 0;
}

void sfill_certificate_free(sfill_certificate* c) { delete c; }

sfill_status sfill_cf_expand(const char* rational, char** out) {
    if (rational == nullptr || out == nullptr) return null_argument("rational/out");
    return guarded([&] { return emit(out, sfill::neg_cf_expand(sfill::Rational::parse(rational)).to_string()); });
}

sfill_status sfill_cf_eval(const char* cf, char** out) {
    if (cf == nullptr || out == nullptr) return null_argument("cf/out");
    return guarded([&] { return emit(out, sfill::neg_cf_eval(sfill::NegCF::parse(cf)).to_string()); });
}

sfill_status sfill_cf_dual(const char* cf, char** out) {
    if (cf == nullptr || out == nullptr) return null_argument("cf/out");
    return guarded([&] { return emit(out, sfill::riemenschneider_dual(sfill::NegCF::parse(cf)).to_string()); });
}

sfill_status sfill_farey_config3(const char* s, const char* r2p, char** out) {
    if (s == nullptr || r2p == nullptr || out == nullptr) return null_argument("s/r2p/out");
    return guarded([&] {
        auto c = sfill::find_config3(sfill::Rational::parse(s), sfill::Rational::parse(r2p));
        return emit(out, sfill::to_json(c).dump());
    });
}

sfill_status sfill_farey_config1(const char* s, const char* r2p, char** out) {
    if (s == nullptr || r2p == nullptr || out == nullptr) return null_argument("s/r2p/out");
    return guarded([&] {
        auto t = sfill::find_config1(sfill::Rational::parse(s), sfill::Rational::parse(r2p));
        sfill::Json j{{"alpha", t.alpha.to_string()}, {"beta", t.beta.to_string()}, {"gamma", t.gamma.to_string()}};
        return emit(out, j.dump());
    });
}

}  // extern "C"
