#include "skillsim/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "skillsim/errors.hpp"
#include "skillsim/rng.hpp"
#include "skillsim/svd.hpp"

namespace skillsim {

PresenceRule default_presence_rule(Channel channel) {
  switch (channel) {
    case Channel::Yaml: return {1};  // counted in YAML fields, not tokens
    case Channel::Nl: return {5};
    case Channel::Code: return {5};
    case Channel::Flat: return {1};
  }
  return {1};
}

bool channel_present(const SkillDocument& doc, Channel channel) {
  PresenceRule rule = default_presence_rule(channel);
  if (channel == Channel::Yaml) return doc.yaml.size() >= rule.min_tokens;
  return channel_tokens(doc, channel).size() >= rule.min_tokens;
}

ChannelIndex fit_channel_index(const std::vector<SkillDocument>& docs,
                               Channel channel, const EncoderConfig& cfg) {
  ChannelIndex index;
  index.channel = channel;

  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(docs.size());
  index.presence.reserve(docs.size());
  for (const auto& doc : docs) {
    tokens.push_back(channel_tokens(doc, channel));
    bool present = channel == Channel::Yaml
                       ? doc.yaml.size() >= default_presence_rule(channel).min_tokens
                       : tokens.back().size() >= default_presence_rule(channel).min_tokens;
    index.presence.push_back(present ? 1 : 0);
  }

  index.vocab = build_vocabulary(tokens, cfg.vocab_cap);
  SparseMatrix m = tfidf_matrix(tokens, index.vocab);

  if (channel == Channel::Flat) {
    index.tfidf = std::move(m);
    return index;
  }

  uint64_t seed = derive_seed(cfg.seed, std::string("index.") + channel_name(channel));
  TruncatedSvd svd = randomized_svd(m, cfg.d, seed);
  index.d_eff = svd.d;
  index.projection = std::move(svd.projection);
  index.embeddings = sparse_times_dense(m, index.projection);
  return index;
}

namespace {

double dense_cosine(const Eigen::MatrixXd& rows, std::size_t i, std::size_t j) {
  double dot = 0.0, ni = 0.0, nj = 0.0;
  for (int c = 0; c < rows.cols(); ++c) {
    double a = rows(static_cast<int>(i), c);
    double b = rows(static_cast<int>(j), c);
    dot += a * b;
    ni += a * a;
    nj += b * b;
  }
  if (ni == 0.0 || nj == 0.0) return 0.0;
  return dot / (std::sqrt(ni) * std::sqrt(nj));
}

}  // namespace

ChannelSim channel_similarity(const ChannelIndex& index, std::size_t i, std::size_t j) {
  if (i >= index.n_docs() || j >= index.n_docs())
    throw ConfigError("channel_similarity: row out of range");
  if (!index.presence[i] || !index.presence[j]) return {0.0, false};
  double value = index.channel == Channel::Flat
                     ? sparse_cosine(index.tfidf.rows[i], index.tfidf.rows[j])
                     : dense_cosine(index.embeddings, i, j);
  return {value, true};
}

double structural_similarity(const StructuralFeatures& a, const StructuralFeatures& b) {
  double l1 = 0.0;
  for (std::size_t k = 0; k < kFeatureCount; ++k) l1 += std::abs(a[k] - b[k]);
  return 1.0 - l1 / static_cast<double>(kFeatureCount);
}

long IndexSet::index_of(const std::string& id) const {
  auto it = id_lookup_.find(id);
  return it == id_lookup_.end() ? -1 : static_cast<long>(it->second);
}

void IndexSet::rebuild_id_lookup() {
  id_lookup_.clear();
  for (std::size_t i = 0; i < ids.size(); ++i) id_lookup_.emplace(ids[i], i);
}

IndexSet fit_indexes(const std::vector<SkillDocument>& docs, const EncoderConfig& cfg) {
  IndexSet set;
  set.config = cfg;
  set.ids.reserve(docs.size());
  for (const auto& doc : docs) set.ids.push_back(doc.record.id);
  set.yaml = fit_channel_index(docs, Channel::Yaml, cfg);
  set.nl = fit_channel_index(docs, Channel::Nl, cfg);
  set.code = fit_channel_index(docs, Channel::Code, cfg);
  set.flat = fit_channel_index(docs, Channel::Flat, cfg);
  set.features = normalize_features(docs);
  return set;
}

}  // namespace skillsim
