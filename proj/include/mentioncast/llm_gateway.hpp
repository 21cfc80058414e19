#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "mentioncast/domain.hpp"
#include "mentioncast/evidence.hpp"

namespace mentioncast {

// Version stamp of the prompt templates below. Recorded in every run
// manifest so metric changes across template edits stay attributable.
inline constexpr std::string_view kPromptTemplateVersion = "v1";

// Marker separating the shared evidence section from the per-regime
// instruction section of a rendered prompt. The evidence section of a
// plain-market prompt and an MCP prompt for the same inputs is byte-identical;
// the two regimes differ only below this line.
inline constexpr std::string_view kInstructionMarker = "--- INSTRUCTIONS ---";

// The three prompting regimes. ContextOnly carries one of the four context
// variants; PlainMarket and Mcp always use the transcript+news context plus
// the market probability.
struct PromptRegime {
    enum class Kind { ContextOnly, PlainMarket, Mcp };

    Kind kind = Kind::ContextOnly;
    ContextVariant variant = ContextVariant::Empty;

    static PromptRegime context_only(ContextVariant v) { return {Kind::ContextOnly, v}; }
    static PromptRegime plain_market() {
        return {Kind::PlainMarket, ContextVariant::TranscriptAndNews};
    }
    static PromptRegime mcp() { return {Kind::Mcp, ContextVariant::TranscriptAndNews}; }

    bool uses_market_prob() const { return kind != Kind::ContextOnly; }

    bool operator==(const PromptRegime&) const = default;
};

// The forecast method tag a regime produces.
Method method_for(const PromptRegime& regime);

// The regime behind an LLM method tag. Throws ValidationError for
// market_baseline and mixmcp, which are not backend-driven.
PromptRegime regime_for(Method method);

// Probability as a whole percent, rounding halves up: 0.555 -> 56.
int percent_round_half_up(Probability p);

// Deterministic textual rendering of the market probability; byte-identical
// output for equal inputs.
std::string render_market_text(Probability p);

struct PromptOptions {
    // Transcript blocks are tail-truncated to this many bytes so the newest
    // remarks survive; recorded in the run manifest.
    std::size_t transcript_budget = 20000;
};

// Render the full prompt for one instance under one regime. ContextOnly and
// PlainMarket share the question and output-format instruction; PlainMarket
// adds the market figure as one more evidence block with no updating
// instruction, while Mcp keeps the identical evidence blocks and instead
// instructs the model to treat the market figure as a prior to revise.
// Throws ConfigError when market_prob is missing for a regime that needs it
// (or supplied for one that does not).
std::string render_prompt(const PromptRegime& regime, const std::string& keyword,
                          const std::string& company, const ContextBundle& context,
                          std::optional<Probability> market_prob,
                          const PromptOptions& options = {});

struct BackendRequest {
    std::string instance_id;
    Method method = Method::Mcp;
    std::string prompt;
};

struct BackendReply {
    std::string text;
};

// A chat-style completion backend. Implementations throw TransportError for
// retryable failures and BackendError otherwise.
class Backend {
public:
    virtual ~Backend() = default;
    virtual BackendReply complete(const BackendRequest& request) = 0;
    virtual std::string describe() const = 0;
};

struct BackendConfig {
    std::string endpoint;  // e.g. https://api.example.com/v1/chat/completions
    std::string model_name;
    std::chrono::milliseconds timeout{30000};
    int max_retries = 2;
    std::chrono::milliseconds backoff_base{250};
    std::string api_key_env = "MENTIONCAST_API_KEY";
    bool verbose = false;
};

struct RetryPolicy {
    int max_retries = 2;
    std::chrono::milliseconds backoff_base{250};
};

// Extract the integer score from a backend reply. Accepts a JSON object with
// an integer "score" field, or a bare integer line. Throws ParseError
// (carrying the raw reply) on anything else or out-of-range values.
int parse_score_reply(const std::string& reply);

// Ask the backend for a 0-100 score, retrying transport failures with
// exponential backoff up to policy.max_retries. Parse failures are never
// retried. Throws BackendError once retries are exhausted.
int query_forecast(const BackendRequest& request, Backend& backend,
                   const RetryPolicy& policy = {});

// Offline backend: a fixed (method, instance_id) -> score table loaded from a
// JSONL fixture ({"instance_id":..., "method":..., "score":...} per line).
// Replies are rendered as {"score": N} so the parse path stays exercised.
class MockBackend : public Backend {
public:
    static MockBackend from_file(const std::string& path);

    void set_score(const std::string& instance_id, Method method, int score);

    BackendReply complete(const BackendRequest& request) override;
    std::string describe() const override { return "mock"; }

    // Content hash of the loaded fixture; folded into run ids.
    uint64_t table_hash() const { return table_hash_; }

private:
    std::map<std::pair<std::string, std::string>, int> table_;
    uint64_t table_hash_ = 0;
};

// Chat-completions HTTP backend. Reads the API key from config.api_key_env;
// requests deterministic decoding (temperature 0). With config.verbose,
// request and response bodies are logged to stderr with the key redacted.
std::unique_ptr<Backend> make_http_backend(const BackendConfig& config);

}  // namespace mentioncast
