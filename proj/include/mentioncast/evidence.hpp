#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mentioncast/domain.hpp"

namespace mentioncast {

// The four evidence configurations: nothing, news only, prior transcript
// only, or both.
enum class ContextVariant { Empty, NewsOnly, TranscriptOnly, TranscriptAndNews };

bool variant_needs_transcript(ContextVariant v);
bool variant_needs_news(ContextVariant v);
std::string_view variant_tag(ContextVariant v);

// Hard cap on news items per prompt.
inline constexpr std::size_t kNewsCap = 100;

// The per-instance, per-variant evidence selection handed to the prompt
// renderer. Invariants (enforced by build_context): transcript present iff
// the variant carries one, news present only for news variants, at most
// kNewsCap items, none dated after cutoff_time.
struct ContextBundle {
    ContextVariant variant = ContextVariant::Empty;
    std::optional<std::string> transcript_text;
    std::vector<NewsItem> news_items;
    UtcTime cutoff_time;
};

// Keep items dated at or before `cutoff`, newest first (input order preserved
// among equal timestamps), truncated to `cap`.
std::vector<NewsItem> filter_news(std::vector<NewsItem> items, UtcTime cutoff, std::size_t cap);

// Assemble a bundle for one variant. The transcript passed in must be the
// prior call's, never the target call's; callers go through the pipeline's
// leakage audit before anything here is queried.
// Throws ConfigError when a transcript-bearing variant has no transcript.
ContextBundle build_context(ContextVariant variant,
                            const std::optional<std::string>& prior_transcript,
                            const std::vector<NewsItem>& items, UtcTime cutoff);

// Raw pre-cutoff material for one instance: time-filters the news (no cap).
EvidenceBundle make_evidence(std::optional<std::string> transcript, std::vector<NewsItem> items,
                             UtcTime cutoff);

// Source of company-related news. The engine only ever sees the returned
// list; ordering and time filtering happen downstream, so providers just
// deliver everything they know for a company.
class NewsProvider {
public:
    virtual ~NewsProvider() = default;
    virtual std::vector<NewsItem> fetch(const std::string& company) = 0;
};

// Offline provider reading a JSONL fixture: one object per line with
// title, snippet, source, published_at, company.
class FixtureNewsProvider : public NewsProvider {
public:
    explicit FixtureNewsProvider(const std::string& path);
    std::vector<NewsItem> fetch(const std::string& company) override;

private:
    std::vector<std::pair<std::string, NewsItem>> items_;  // (company, item)
};

// Live HTTP search provider. GETs {endpoint}?q=<company>&page=<n>&page_size=<k>
// expecting a JSON array of {title, snippet, source, published_at}; results
// from all pages are merged and sorted newest first so callers see one
// deterministic list.
struct LiveNewsConfig {
    std::string endpoint;
    int page_size = 50;
    int max_requests = 2;
    std::string api_key_env = "MENTIONCAST_NEWS_API_KEY";
};

std::unique_ptr<NewsProvider> make_http_news_provider(const LiveNewsConfig& config);

}  // namespace mentioncast
