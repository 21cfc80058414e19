#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mentioncast/time.hpp"

namespace mentioncast {

// A probability in [0,1]. Construction rejects anything outside the range or
// non-finite; nothing in the engine ever clamps silently.
class Probability {
public:
    Probability() = default;
    explicit Probability(double value);  // throws ValidationError

    double value() const { return value_; }

    auto operator<=>(const Probability&) const = default;

private:
    double value_ = 0.0;
};

// Validating constructor wrapper, kept as a free function so call sites read
// as an operation rather than a cast.
Probability make_probability(double raw);

// Map an integer backend score on the 0-100 scale to a probability.
// Strictly monotone; out-of-range scores are rejected.
Probability rescale_score(int score);

// Binary contract resolution. Serialized as "YES"/"NO"; arithmetic uses 1/0.
enum class Outcome { No = 0, Yes = 1 };

double outcome_value(Outcome o);
std::string_view outcome_label(Outcome o);
Outcome outcome_from_label(std::string_view label);  // throws ValidationError

// Every prediction method the engine produces, in canonical report order.
enum class Method {
    MarketBaseline,
    CtxNone,
    CtxNews,
    CtxTranscript,
    CtxTranscriptNews,
    PlainMarket,
    Mcp,
    MixMcp,
};

inline constexpr Method kAllMethods[] = {
    Method::MarketBaseline, Method::CtxNone,     Method::CtxNews, Method::CtxTranscriptNews,
    Method::CtxTranscript,  Method::PlainMarket, Method::Mcp,     Method::MixMcp,
};

std::string_view method_tag(Method m);
Method method_from_tag(std::string_view tag);  // throws ValidationError

// One mention contract: will `keyword` be said during the call that resolves
// at `resolution_time`? `market_prob` is the YES price observed at or before
// `cutoff_time`. `prior_event_id` names the previous call of the same company
// whose transcript may be used as evidence.
struct MarketInstance {
    std::string instance_id;
    std::string company;
    std::string event_id;
    std::optional<std::string> prior_event_id;
    std::string keyword;
    UtcTime cutoff_time;
    UtcTime resolution_time;
    Probability market_prob;
    // Original 0-100 dataset form, when the file gave an integer price.
    std::optional<int> market_prob_percent;
    std::optional<Outcome> outcome;

    bool operator==(const MarketInstance&) const = default;
};

// Throws ValidationError when an instance breaks its invariants:
// empty keyword (after trimming), cutoff not before resolution, or a recorded
// percent form that disagrees with market_prob.
void validate_instance(const MarketInstance& instance);

// One dated news item as it appears in a prompt: title, snippet, source, date.
struct NewsItem {
    std::string title;
    std::string snippet;
    std::string source;
    UtcTime published_at;

    bool operator==(const NewsItem&) const = default;
};

// The pre-cutoff text available for one instance: the prior-quarter
// transcript (if any) and the dated news list. Built by the evidence module,
// which guarantees no item postdates the owning instance's cutoff.
struct EvidenceBundle {
    std::optional<std::string> transcript;
    std::vector<NewsItem> news;
};

// A single probability forecast, tagged with the method that produced it and
// the raw 0-100 backend score it was parsed from (LLM methods only).
struct Forecast {
    std::string instance_id;
    Method method = Method::MarketBaseline;
    Probability probability;
    std::optional<int> raw_score;

    bool operator==(const Forecast&) const = default;
};

// raw_score present implies probability == raw_score/100 exactly.
void validate_forecast(const Forecast& forecast);

std::string trim_copy(std::string_view text);

}  // namespace mentioncast
