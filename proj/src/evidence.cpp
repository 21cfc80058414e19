#include "mentioncast/evidence.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "mentioncast/errors.hpp"

namespace mentioncast {

bool variant_needs_transcript(ContextVariant v) {
    return v == ContextVariant::TranscriptOnly || v == ContextVariant::TranscriptAndNews;
}

bool variant_needs_news(ContextVariant v) {
    return v == ContextVariant::NewsOnly || v == ContextVariant::TranscriptAndNews;
}

std::string_view variant_tag(ContextVariant v) {
    switch (v) {
        case ContextVariant::Empty: return "empty";
        case ContextVariant::NewsOnly: return "news";
        case ContextVariant::TranscriptOnly: return "transcript";
        case ContextVariant::TranscriptAndNews: return "transcript_news";
    }
    throw ValidationError("unknown context variant");
}

std::vector<NewsItem> filter_news(std::vector<NewsItem> items, UtcTime cutoff, std::size_t cap) {
    if (cap < 1) {
        throw ValidationError("news cap must be at least 1");
    }
    std::erase_if(items, [&](const NewsItem& item) { return item.published_at > cutoff; });
    std::stable_sort(items.begin(), items.end(), [](const NewsItem& a, const NewsItem& b) {
        return a.published_at > b.published_at;
    });
    if (items.size() > cap) items.resize(cap);
    return items;
}

ContextBundle build_context(ContextVariant variant,
                            const std::optional<std::string>& prior_transcript,
                            const std::vector<NewsItem>& items, UtcTime cutoff) {
    ContextBundle bundle;
    bundle.variant = variant;
    bundle.cutoff_time = cutoff;
    if (variant_needs_transcript(variant)) {
        if (!prior_transcript) {
            throw ConfigError(std::string("context variant '") + std::string(variant_tag(variant)) +
                              "' requires a prior transcript but none was supplied");
        }
        bundle.transcript_text = *prior_transcript;
    }
    if (variant_needs_news(variant)) {
        bundle.news_items = filter_news(items, cutoff, kNewsCap);
    }
    return bundle;
}

EvidenceBundle make_evidence(std::optional<std::string> transcript, std::vector<NewsItem> items,
                             UtcTime cutoff) {
    EvidenceBundle bundle;
    bundle.transcript = std::move(transcript);
    std::erase_if(items, [&](const NewsItem& item) { return item.published_at > cutoff; });
    bundle.news = std::move(items);
    return bundle;
}

FixtureNewsProvider::FixtureNewsProvider(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open news fixture: " + path);
    }
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim_copy(line).empty()) continue;
        nlohmann::json row;
        try {
            row = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(path + ":" + std::to_string(lineno) +
                                  ": invalid JSON: " + e.what());
        }
        try {
            NewsItem item;
            item.title = row.at("title").get<std::string>();
            item.snippet = row.at("snippet").get<std::string>();
            item.source = row.at("source").get<std::string>();
            item.published_at = UtcTime::parse(row.at("published_at").get<std::string>());
            items_.emplace_back(row.at("company").get<std::string>(), std::move(item));
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(path + ":" + std::to_string(lineno) + ": " + e.what());
        } catch (const ValidationError& e) {
            throw ValidationError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

std::vector<NewsItem> FixtureNewsProvider::fetch(const std::string& company) {
    std::vector<NewsItem> out;
    for (const auto& [item_company, item] : items_) {
        if (item_company == company) out.push_back(item);
    }
    return out;
}

namespace {

class HttpNewsProvider : public NewsProvider {
public:
    explicit HttpNewsProvider(LiveNewsConfig config) : config_(std::move(config)) {
        if (config_.endpoint.empty()) {
            throw ConfigError("live news provider requires an endpoint URL");
        }
    }

    std::vector<NewsItem> fetch(const std::string& company) override {
        httplib::Client client(config_.endpoint);
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(30, 0);
        httplib::Headers headers;
        if (const char* key = std::getenv(config_.api_key_env.c_str())) {
            headers.emplace("Authorization", std::string("Bearer ") + key);
        }

        std::vector<NewsItem> out;
        for (int page = 1; page <= config_.max_requests; ++page) {
            httplib::Params params{{"q", company},
                                   {"page", std::to_string(page)},
                                   {"page_size", std::to_string(config_.page_size)}};
            auto res = client.Get("/", params, headers);
            if (!res) {
                throw TransportError("news request failed: " + httplib::to_string(res.error()));
            }
            if (res->status != 200) {
                throw BackendError("news request returned HTTP " + std::to_string(res->status));
            }
            nlohmann::json body = nlohmann::json::parse(res->body, nullptr, false);
            if (!body.is_array()) {
                throw BackendError("news response is not a JSON array");
            }
            for (const auto& row : body) {
                NewsItem item;
                item.title = row.value("title", "");
                item.snippet = row.value("snippet", "");
                item.source = row.value("source", "");
                item.published_at = UtcTime::parse(row.at("published_at").get<std::string>());
                out.push_back(std::move(item));
            }
            if (body.size() < static_cast<size_t>(config_.page_size)) break;
        }
        std::stable_sort(out.begin(), out.end(), [](const NewsItem& a, const NewsItem& b) {
            return a.published_at > b.published_at;
        });
        return out;
    }

private:
    LiveNewsConfig config_;
};

}  // namespace

std::unique_ptr<NewsProvider> make_http_news_provider(const LiveNewsConfig& config) {
    return std::make_unique<HttpNewsProvider>(config);
}

}  // namespace mentioncast
