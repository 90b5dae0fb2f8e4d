#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "skillsim/parser.hpp"
#include "skillsim/sparse.hpp"
#include "skillsim/tfidf.hpp"
#include "skillsim/tokenize.hpp"

namespace skillsim {

// "Non-trivially present": at least one YAML field for the YAML channel,
// at least five tokens for NL and code, at least one token for flat.
struct PresenceRule {
  std::size_t min_tokens = 1;
};

PresenceRule default_presence_rule(Channel channel);

bool channel_present(const SkillDocument& doc, Channel channel);

struct EncoderConfig {
  int d = 256;
  std::size_t vocab_cap = 50000;
  uint64_t seed = 42;
};

// Fitted vectorizer + latent projection for one channel over one corpus.
// The flat channel keeps its sparse rows and skips the SVD: flat similarity
// is the exact sparse TF-IDF cosine.
struct ChannelIndex {
  Channel channel = Channel::Nl;
  Vocabulary vocab;
  Eigen::MatrixXd projection;  // vocab x d_eff (empty for flat)
  Eigen::MatrixXd embeddings;  // n_docs x d_eff (empty for flat)
  SparseMatrix tfidf;          // populated for flat only
  std::vector<uint8_t> presence;
  int d_eff = 0;

  std::size_t n_docs() const { return presence.size(); }
};

ChannelIndex fit_channel_index(const std::vector<SkillDocument>& docs,
                               Channel channel, const EncoderConfig& cfg);

struct ChannelSim {
  double value = 0.0;  // cosine, 0 when either side is absent
  bool present = false;
};

// Cosine of the embedding rows (flat: sparse rows); (0, false) when either
// presence bit is off.
ChannelSim channel_similarity(const ChannelIndex& index, std::size_t i, std::size_t j);

// sim_f = 1 - ||f_i - f_j||_1 / 8, on corpus-normalized features.
double structural_similarity(const StructuralFeatures& a, const StructuralFeatures& b);

// Everything detection needs for one corpus: the four channel indexes plus
// normalized structural features, aligned by record index.
struct IndexSet {
  std::vector<std::string> ids;
  ChannelIndex yaml;
  ChannelIndex nl;
  ChannelIndex code;
  ChannelIndex flat;
  std::vector<StructuralFeatures> features;
  EncoderConfig config;

  std::size_t size() const { return ids.size(); }
  long index_of(const std::string& id) const;
  void rebuild_id_lookup();

 private:
  std::unordered_map<std::string, std::size_t> id_lookup_;
};

IndexSet fit_indexes(const std::vector<SkillDocument>& docs, const EncoderConfig& cfg);

// Versioned binary container (see docs/FORMATS.md). Round-trips exactly.
void save_index_set(const IndexSet& set, const std::string& path);
IndexSet load_index_set(const std::string& path);

}  // namespace skillsim
