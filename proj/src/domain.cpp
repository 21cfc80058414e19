#include "mentioncast/domain.hpp"

#include <cmath>
#include <sstream>

#include "mentioncast/errors.hpp"

namespace mentioncast {

Probability::Probability(double value) : value_(value) {
    if (!std::isfinite(value)) {
        throw ValidationError("probability must be finite, got " + std::to_string(value));
    }
    if (value < 0.0 || value > 1.0) {
        std::ostringstream msg;
        msg << "probability out of range [0,1]: " << value;
        throw ValidationError(msg.str());
    }
}

Probability make_probability(double raw) {
    return Probability(raw);
}

Probability rescale_score(int score) {
    if (score < 0 || score > 100) {
        throw ValidationError("score out of range [0,100]: " + std::to_string(score));
    }
    return Probability(score / 100.0);
}

double outcome_value(Outcome o) {
    return o == Outcome::Yes ? 1.0 : 0.0;
}

std::string_view outcome_label(Outcome o) {
    return o == Outcome::Yes ? "YES" : "NO";
}

Outcome outcome_from_label(std::string_view label) {
    if (label == "YES") return Outcome::Yes;
    if (label == "NO") return Outcome::No;
    throw ValidationError("outcome must be \"YES\" or \"NO\", got \"" + std::string(label) + "\"");
}

std::string_view method_tag(Method m) {
    switch (m) {
        case Method::MarketBaseline: return "market_baseline";
        case Method::CtxNone: return "ctx_none";
        case Method::CtxNews: return "ctx_n";
        case Method::CtxTranscript: return "ctx_t";
        case Method::CtxTranscriptNews: return "ctx_tn";
        case Method::PlainMarket: return "plain_market";
        case Method::Mcp: return "mcp";
        case Method::MixMcp: return "mixmcp";
    }
    throw ValidationError("unknown method enum value");
}

Method method_from_tag(std::string_view tag) {
    for (Method m : kAllMethods) {
        if (method_tag(m) == tag) return m;
    }
    throw ValidationError("unknown method tag \"" + std::string(tag) + "\"");
}

std::string trim_copy(std::string_view text) {
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

void validate_instance(const MarketInstance& instance) {
    if (instance.instance_id.empty()) {
        throw ValidationError("instance_id must be non-empty");
    }
    if (trim_copy(instance.keyword).empty()) {
        throw ValidationError("instance " + instance.instance_id +
                              ": keyword is empty after trimming");
    }
    if (!(instance.cutoff_time < instance.resolution_time)) {
        throw ValidationError("instance " + instance.instance_id + ": cutoff_time " +
                              instance.cutoff_time.to_iso8601() +
                              " must precede resolution_time " +
                              instance.resolution_time.to_iso8601());
    }
    if (instance.market_prob_percent) {
        const int pct = *instance.market_prob_percent;
        if (pct < 0 || pct > 100) {
            throw ValidationError("instance " + instance.instance_id +
                                  ": market_prob percent out of range: " + std::to_string(pct));
        }
        if (instance.market_prob.value() != pct / 100.0) {
            throw ValidationError("instance " + instance.instance_id +
                                  ": market_prob disagrees with its recorded percent form");
        }
    }
}

void validate_forecast(const Forecast& forecast) {
    if (forecast.instance_id.empty()) {
        throw ValidationError("forecast instance_id must be non-empty");
    }
    if (forecast.raw_score) {
        const int score = *forecast.raw_score;
        if (score < 0 || score > 100) {
            throw ValidationError("forecast " + forecast.instance_id +
                                  ": raw_score out of range: " + std::to_string(score));
        }
        if (forecast.probability.value() != score / 100.0) {
            throw ValidationError("forecast " + forecast.instance_id +
                                  ": probability does not equal raw_score/100");
        }
    }
}

}  // namespace mentioncast
