// featrate: feature-level product ratings from review text and review votes.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "featrate/ingest.hpp"
#include "featrate/rankeval.hpp"
#include "featrate/ratings.hpp"
#include "featrate/report.hpp"
#include "featrate/resources.hpp"

namespace fs = std::filesystem;
using namespace featrate;

namespace {

struct RunConfig {
  std::string input;
  std::vector<std::string> column_overrides;  // key=Header
  std::string lexicon;
  std::string sent_lexicon;
  std::string dict;
  bool strict_periods = false;
  std::string gt_weights = "votes-plus-one";
  std::string format = "csv";
  std::string out;
  unsigned workers = 1;
  std::string cache;
  double min_fraction = 0.0002;
  std::string feature;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ColumnMapping parse_columns(const std::vector<std::string>& overrides) {
  ColumnMapping m;
  const std::map<std::string, std::string*> slots = {
      {"product", &m.product}, {"brand", &m.brand}, {"price", &m.price},
      {"rating", &m.rating},   {"review", &m.review}, {"votes", &m.votes}};
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("--column expects key=Header, got: " + o);
    const auto it = slots.find(o.substr(0, eq));
    if (it == slots.end()) throw ConfigError("unknown column key: " + o.substr(0, eq));
    *it->second = o.substr(eq + 1);
  }
  return m;
}

void require_file(const std::string& path, const char* what) {
  if (!fs::is_regular_file(path)) throw ConfigError(std::string(what) + " not found: " + path);
}

// Resolves defaults and checks every path before any corpus work starts.
ResourcePaths validate(const RunConfig& cfg, bool needs_resources) {
  require_file(cfg.input, "input CSV");
  if (cfg.workers < 1) throw ConfigError("--workers must be at least 1");
  if (!(cfg.min_fraction >= 0.0 && cfg.min_fraction <= 1.0)) {
    throw ConfigError("--min-fraction must lie in [0, 1]");
  }
  parse_columns(cfg.column_overrides);

  ResourcePaths paths = ResourcePaths::bundled();
  if (!cfg.lexicon.empty()) paths.feature_lexicon = cfg.lexicon;
  if (!cfg.dict.empty()) paths.spell_dictionary = cfg.dict;
  if (!cfg.sent_lexicon.empty()) paths.valences = cfg.sent_lexicon;
  require_file(paths.emoticons.string(), "emoticon list");
  if (needs_resources) {
    require_file(paths.feature_lexicon.string(), "feature lexicon");
    require_file(paths.spell_dictionary.string(), "spell dictionary");
    require_file(paths.valences.string(), "sentiment lexicon");
    require_file(paths.boosters.string(), "booster list");
    require_file(paths.negators.string(), "negator list");
  }
  if (!cfg.out.empty()) {
    const auto parent = fs::path(cfg.out).parent_path();
    if (!parent.empty() && !fs::is_directory(parent)) {
      throw ConfigError("output directory does not exist: " + parent.string());
    }
  }
  return paths;
}

OutputFormat output_format(const RunConfig& cfg) {
  return cfg.format == "json" ? OutputFormat::json : OutputFormat::csv;
}

GroundTruthWeights gt_weights(const RunConfig& cfg) {
  return cfg.gt_weights == "votes" ? GroundTruthWeights::votes : GroundTruthWeights::votes_plus_one;
}

LoadResult load_input(const RunConfig& cfg) {
  auto result = load_csv(cfg.input, parse_columns(cfg.column_overrides));
  const auto& r = result.report;
  std::cerr << "loaded " << r.kept << " reviews of " << result.corpus.product_count()
            << " products (" << r.data_rows << " rows; dropped " << r.dropped_empty_text
            << " empty, " << r.dropped_bad_rating << " bad rating, " << r.dropped_malformed
            << " malformed)\n";
  return result;
}

// Writes to --out when given, stdout otherwise.
template <typename Fn>
void emit(const RunConfig& cfg, Fn&& write) {
  if (cfg.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + cfg.out);
  write(out);
}

struct RatedCorpus {
  LoadResult loaded;
  CorpusRatings ratings;
};

RatedCorpus rate(const RunConfig& cfg, const ResourcePaths& paths) {
  Resources res = Resources::load(paths);
  RatedCorpus rc{load_input(cfg), {}};

  SpellCorrector speller(res.dictionary);
  if (!cfg.cache.empty() && fs::exists(cfg.cache)) {
    std::ifstream in(cfg.cache);
    speller.load_cache(in);
  }
  RatingPipeline pipeline{TextPipeline{res.lexicon, res.emoticons, speller}, res.sentiment, {},
                          cfg.strict_periods ? SentenceSplit::period_only : SentenceSplit::lenient};
  rc.ratings = rate_corpus(rc.loaded.corpus, pipeline, cfg.workers);
  if (!cfg.cache.empty()) {
    std::ofstream out(cfg.cache, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write spell cache: " + cfg.cache);
    speller.save_cache(out);
  }
  return rc;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool rating_flags) {
  sub->add_option("--input", cfg.input, "Review CSV file")->required();
  sub->add_option("--column", cfg.column_overrides,
                  "Column mapping override key=Header (keys: product, brand, price, rating, "
                  "review, votes)");
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "Output file (default: stdout)");
  if (!rating_flags) return;
  sub->add_option("--lexicon", cfg.lexicon, "Feature lexicon file");
  sub->add_option("--sent-lexicon", cfg.sent_lexicon, "Sentiment valence lexicon file");
  sub->add_option("--dict", cfg.dict, "Spell dictionary file");
  sub->add_flag("--strict-periods", cfg.strict_periods,
                "Split sentences at periods only and drop an unterminated tail");
  sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--cache", cfg.cache, "Spell-correction memo file (read and updated)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feature-level product ratings from reviews and review votes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* freq = app.add_subcommand("freq-table", "Token frequency table over all reviews");
  add_common(freq, cfg, false);
  freq->add_option("--min-fraction", cfg.min_fraction,
                   "Keep tokens whose count is at least this fraction of the review count");

  auto* rate_cmd = app.add_subcommand("rate", "Per-product, per-feature ratings");
  add_common(rate_cmd, cfg, true);

  auto* rank_cmd = app.add_subcommand("rank", "Rank products by number of best features");
  add_common(rank_cmd, cfg, true);

  auto* rec_cmd = app.add_subcommand("recommend", "Best product per feature");
  add_common(rec_cmd, cfg, true);
  rec_cmd->add_option("--feature", cfg.feature, "Feature keyword (default: every rated feature)");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the phone feature against customer ratings");
  add_common(eval_cmd, cfg, true);
  eval_cmd->add_option("--gt-weights", cfg.gt_weights, "Ground-truth weights")
      ->check(CLI::IsMember({"votes", "votes-plus-one"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (freq->parsed()) {
      const auto paths = validate(cfg, false);
      const auto emoticons = load_emoticons(paths.emoticons);
      const auto loaded = load_input(cfg);
      const auto report = frequency_table(loaded.corpus, cfg.min_fraction, emoticons);
      emit(cfg, [&](std::ostream& out) { write_frequency(out, report, output_format(cfg)); });
      return 0;
    }

    const auto paths = validate(cfg, true);
    auto rc = rate(cfg, paths);

    if (rate_cmd->parsed()) {
      emit(cfg, [&](std::ostream& out) { write_ratings(out, rc.ratings, output_format(cfg)); });
    } else if (rank_cmd->parsed()) {
      const auto ranking = rank_products(rc.ratings);
      emit(cfg, [&](std::ostream& out) { write_ranking(out, ranking, output_format(cfg)); });
    } else if (rec_cmd->parsed()) {
      const auto ranking = rank_products(rc.ratings);
      std::vector<Recommendation> recs;
      if (cfg.feature.empty()) {
        recs = recommend_all(rc.ratings, ranking);
      } else {
        recs.push_back(recommend(cfg.feature, rc.ratings, ranking));
      }
      emit(cfg, [&](std::ostream& out) { write_recommendations(out, recs, output_format(cfg)); });
    } else if (eval_cmd->parsed()) {
      const auto report = evaluate_phone_feature(rc.loaded.corpus, rc.ratings, gt_weights(cfg));
      emit(cfg, [&](std::ostream& out) {
        if (output_format(cfg) == OutputFormat::json) {
          write_eval_json(out, report);
        } else {
          write_eval_text(out, report);
        }
      });
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "featrate: " << e.what() << '\n';
    return 1;
  }
}
